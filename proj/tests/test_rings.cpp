#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "maxspec/duality.hpp"
#include "maxspec/rings.hpp"
#include "maxspec/wallman.hpp"

using namespace maxspec;

namespace {

RingIdeal ideal_of(const FiniteCommRing& r, int generator) {
  return principal_ring_ideal(r, r.index_of(std::to_string(generator)));
}

}  // namespace

TEST_CASE("ring constructors and validation") {
  CHECK(zmod(1).size() == 1);
  CHECK(zmod(12).size() == 12);
  const FiniteCommRing z6 = zmod(6);
  const FiniteCommRing z2x3 = ring_product(zmod(2), zmod(3));
  CHECK(ring_isomorphic(z6, z2x3));
  CHECK_FALSE(ring_isomorphic(zmod(4), ring_product(zmod(2), zmod(2))));

  // a non-associative multiplication table is rejected with witnesses
  std::vector<std::string> ids{"0", "1", "2"};
  std::vector<int> add(9), mul(9);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      add[a * 3 + b] = (a + b) % 3;
      mul[a * 3 + b] = (a * b) % 3;
    }
  }
  mul[2 * 3 + 2] = 2;  // 2*2 = 2 breaks associativity/distributivity
  CHECK_THROWS_AS(FiniteCommRing(ids, add, mul, 0, 1), StructureError);
}

TEST_CASE("ideals of zmod(12) per the spec example") {
  const FiniteCommRing z12 = zmod(12);
  const auto ideals = enumerate_ring_ideals(z12);
  CHECK(ideals.size() == 6);  // (0),(6),(4),(3),(2),(1)
  std::vector<std::string> labels;
  for (const RingIdeal& i : ideals) labels.push_back(i.label());
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"(0)", "(1)", "(2)", "(3)", "(4)", "(6)"});

  std::vector<std::string> primes, maxes;
  for (const RingIdeal& i : ideals) {
    if (is_prime_ring_ideal(i)) primes.push_back(i.label());
    if (is_maximal_ring_ideal(i)) maxes.push_back(i.label());
  }
  std::sort(primes.begin(), primes.end());
  std::sort(maxes.begin(), maxes.end());
  CHECK(primes == std::vector<std::string>{"(2)", "(3)"});
  CHECK(maxes == primes);

  CHECK(radical(ideal_of(z12, 0)).members == ideal_of(z12, 6).members);
  CHECK(radical(ideal_of(z12, 1)).members == z12.all());
  const FiniteCommRing z4 = zmod(4);
  CHECK(radical(ideal_of(z4, 0)).members == ideal_of(z4, 2).members);
}

TEST_CASE("zariski and maximal spectra of the spec examples") {
  CHECK(zariski_spec(zmod(12)).space.size() == 2);
  CHECK(zariski_spec(zmod(12)).space.opens().size() == 4);  // discrete pair
  CHECK(zariski_spec(zmod(4)).space.size() == 1);
  CHECK(zariski_spec(zmod(1)).space.size() == 0);
  CHECK(max_spec_ring(zmod(30)).space.size() == 3);
}

TEST_CASE("reticulation of the spec examples") {
  const Reticulation l12 = reticulation(zmod(12));
  CHECK(l12.lattice.size() == 4);
  CHECK(l12.lattice.isomorphic_to(fixtures::b2()));

  const Reticulation l4 = reticulation(zmod(4));
  CHECK(l4.lattice.size() == 2);

  // [P_2] = [P_8] in zmod(12)
  const FiniteCommRing z12 = zmod(12);
  CHECK(l12.class_map[z12.index_of("2")] == l12.class_map[z12.index_of("8")]);
  CHECK(reticulation_order_witness(z12, z12.index_of("2"), z12.index_of("8")));
  CHECK(reticulation_order_witness(z12, z12.index_of("8"), z12.index_of("2")));
}

TEST_CASE("reticulation order agrees with the power-witness oracle") {
  for (int n : {2, 4, 6, 8, 12, 18, 30}) {
    const FiniteCommRing r = zmod(n);
    const Reticulation l = reticulation(r);
    for (int a = 0; a < r.size(); ++a) {
      for (int b = 0; b < r.size(); ++b) {
        const bool lattice_leq = l.lattice.leq(l.class_map[a], l.class_map[b]);
        CHECK(lattice_leq == reticulation_order_witness(r, a, b));
      }
    }
  }
}

TEST_CASE("reticulation join and meet match radical arithmetic") {
  const FiniteCommRing r = zmod(12);
  const Reticulation l = reticulation(r);
  for (int a = 0; a < l.lattice.size(); ++a) {
    for (int b = 0; b < l.lattice.size(); ++b) {
      const Mask join_ideal = l.element_ideal[l.lattice.join(a, b)];
      const Mask meet_ideal = l.element_ideal[l.lattice.meet(a, b)];
      const RingIdeal ia(r, l.element_ideal[a]);
      const RingIdeal ib(r, l.element_ideal[b]);
      CHECK(join_ideal == radical(ideal_sum(ia, ib)).members);
      CHECK(meet_ideal == (l.element_ideal[a] & l.element_ideal[b]));
    }
  }
}

TEST_CASE("jacobson radical formula on the spec examples") {
  const FiniteCommRing z12 = zmod(12);
  CHECK(jacobson_radical_ring(z12, ideal_of(z12, 0)).members ==
        ideal_of(z12, 6).members);
  const FiniteCommRing z4 = zmod(4);
  CHECK(jacobson_radical_ring(z4, ideal_of(z4, 0)).members == ideal_of(z4, 2).members);
  CHECK(jacobson_radical_ring(z12, ideal_of(z12, 1)).members == z12.all());
}

TEST_CASE("jacobson radical equals the intersection-of-maximals oracle") {
  for (int n : {2, 3, 4, 6, 8, 9, 12, 16, 24, 30, 36}) {
    const FiniteCommRing r = zmod(n);
    for (const RingIdeal& i : enumerate_ring_ideals(r)) {
      CHECK(jacobson_radical_ring(r, i).members ==
            intersection_of_maximals_ring(r, i).members);
    }
  }
}

TEST_CASE("almost-maximality on the spec examples") {
  const FiniteCommRing z12 = zmod(12);
  CHECK(is_almost_maximal(z12, ideal_of(z12, 2)));
  CHECK(is_almost_maximal(z12, ideal_of(z12, 3)));
  CHECK_THROWS_AS(is_almost_maximal(z12, ideal_of(z12, 0)), StructureError);  // not prime
}

TEST_CASE("almost-maximal equals maximal on primes; the monotone reduction matches brute force") {
  for (int n = 2; n <= 8; ++n) {
    const FiniteCommRing r = zmod(n);
    for (const RingIdeal& p : enumerate_ring_ideals(r)) {
      if (!is_prime_ring_ideal(p)) continue;
      const bool almost = is_almost_maximal(r, p);
      CHECK(almost == is_maximal_ring_ideal(p));
      CHECK(almost == is_almost_maximal_bruteforce(r, p));
    }
  }
  const FiniteCommRing z2x2 = ring_product(zmod(2), zmod(2));
  for (const RingIdeal& p : enumerate_ring_ideals(z2x2)) {
    if (!is_prime_ring_ideal(p)) continue;
    CHECK(is_almost_maximal(z2x2, p) == is_almost_maximal_bruteforce(z2x2, p));
  }
}

TEST_CASE("ring homomorphisms on the spec examples") {
  const FiniteCommRing z12 = zmod(12);
  const FiniteCommRing z4 = zmod(4);
  std::vector<int> quotient12_4;
  for (int a = 0; a < 12; ++a) quotient12_4.push_back(a % 4);
  const RingHom q(z12, z4, quotient12_4);
  CHECK(is_maximal_ring_hom(q));

  const FiniteCommRing z6 = zmod(6);
  const FiniteCommRing z2 = zmod(2);
  std::vector<int> quotient6_2;
  for (int a = 0; a < 6; ++a) quotient6_2.push_back(a % 2);
  const RingHom p(z6, z2, quotient6_2);
  CHECK(is_maximal_ring_hom(p));

  std::vector<int> identity;
  for (int a = 0; a < 12; ++a) identity.push_back(a);
  CHECK(is_maximal_ring_hom(RingHom(z12, z12, identity)));

  // a non-unital map is rejected
  std::vector<int> zero_map(12, 0);
  CHECK_THROWS_WITH_AS(RingHom(z12, z4, zero_map), doctest::Contains("one"),
                       StructureError);
}

TEST_CASE("the preimage test agrees with the covering-family criterion on corpus homs") {
  struct Case {
    FiniteCommRing src, dst;
    std::vector<int> map;
  };
  std::vector<Case> cases;
  auto quotient = [](int n, int m) {
    std::vector<int> map;
    for (int a = 0; a < n; ++a) map.push_back(a % m);
    return map;
  };
  cases.push_back({zmod(12), zmod(4), quotient(12, 4)});
  cases.push_back({zmod(12), zmod(3), quotient(12, 3)});
  cases.push_back({zmod(6), zmod(2), quotient(6, 2)});
  cases.push_back({zmod(30), zmod(6), quotient(30, 6)});
  cases.push_back({zmod(8), zmod(2), quotient(8, 2)});
  {
    std::vector<int> diag;
    for (int a = 0; a < 6; ++a) diag.push_back((a % 2) * 3 + (a % 3));
    cases.push_back({zmod(6), ring_product(zmod(2), zmod(3)), diag});
  }
  for (const Case& c : cases) {
    const RingHom f(c.src, c.dst, c.map);
    CHECK(is_maximal_ring_hom(f) == ring_hom_family_criterion(f));
    CHECK(is_maximal_ring_hom(f));  // all of these are maximal
    // the induced map of reticulations is a lattice hom whose maximality
    // matches the ring-level one
    const Reticulation ls = reticulation(c.src);
    const Reticulation lt = reticulation(c.dst);
    const LatticeHom lf = induced_reticulation_hom(f, ls, lt);
    CHECK(is_lattice_hom(lf));
    CHECK(is_maximal_hom(lf) == is_maximal_ring_hom(f));
  }
}

TEST_CASE("conjunctive ring criteria on the spec examples") {
  CHECK(is_conjunctive_ring(zmod(12)));
  CHECK(is_conjunctive_ring(zmod(1)));
  for (int n = 2; n <= 20; ++n) CHECK(is_conjunctive_ring(zmod(n)));
}

TEST_CASE("reticulation conjunctivity matches injectivity into the maximal opens") {
  for (int n : {2, 4, 6, 12, 16, 30}) {
    const FiniteCommRing r = zmod(n);
    CHECK(is_conjunctive_ring_reticulation_form(r) ==
          reticulation_to_max_opens_injective(r));
  }
}

TEST_CASE("spec agrees with the reticulation spectrum on the spec examples") {
  CHECK(spec_reticulation_agreement(zmod(12)));
  CHECK(spec_reticulation_agreement(zmod(4)));
  CHECK(spec_reticulation_agreement(zmod(30)));
  CHECK(spec_reticulation_agreement(ring_product(zmod(2), zmod(2))));
}

TEST_CASE("reticulation of zmod(30) is the Boolean cube") {
  CHECK(reticulation(zmod(30)).lattice.isomorphic_to(fixtures::b3()));
  CHECK(zariski_spec(zmod(30)).space.size() == 3);
}
