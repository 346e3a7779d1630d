#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "maxspec/coverage.hpp"
#include "maxspec/wallman.hpp"

using namespace maxspec;

namespace {

Mask members_of(const FiniteLattice& l, std::initializer_list<const char*> ids) {
  Mask m = 0;
  for (const char* id : ids) {
    REQUIRE(l.index_of(id) >= 0);
    m |= bit(l.index_of(id));
  }
  return m;
}

}  // namespace

TEST_CASE("sieve validation") {
  const FiniteLattice c3 = fixtures::c3();
  const int m = c3.index_of("m");
  CHECK_NOTHROW(Sieve(c3, m, members_of(c3, {"0"})));
  CHECK_THROWS_AS(Sieve(c3, m, members_of(c3, {"1"})), StructureError);
  const FiniteLattice b2 = fixtures::b2();
  // {a} on top is not down-closed (misses 0)
  CHECK_THROWS_AS(Sieve(b2, b2.top(), members_of(b2, {"{a}"})), StructureError);
}

TEST_CASE("coherent topology on the spec examples") {
  const FiniteLattice b2 = fixtures::b2();
  const GrothendieckTopology coh_b2 = coherent_topology(b2);
  CHECK(coh_b2.covers(b2.top(), members_of(b2, {"{}", "{a}", "{b}"})));
  const FiniteLattice c3 = fixtures::c3();
  const GrothendieckTopology coh_c3 = coherent_topology(c3);
  CHECK_FALSE(coh_c3.covers(c3.index_of("m"), members_of(c3, {"0"})));
  for (const FiniteLattice& d : enumerate_corpus(6)) {
    const GrothendieckTopology coh = coherent_topology(d);
    for (int c = 0; c < d.size(); ++c) CHECK(coh.covers(c, d.downset(c)));
  }
}

TEST_CASE("maximal topology on the spec examples") {
  const FiniteLattice c3 = fixtures::c3();
  const GrothendieckTopology jm_c3 = maximal_topology(c3);
  CHECK(jm_c3.covers(c3.index_of("m"), members_of(c3, {"0"})));
  const FiniteLattice b2 = fixtures::b2();
  const GrothendieckTopology jm_b2 = maximal_topology(b2);
  CHECK_FALSE(jm_b2.covers(b2.index_of("{a}"), members_of(b2, {"{}"})));
  // coherent covers are maximal covers
  for (const FiniteLattice& d : enumerate_corpus(8)) {
    CHECK(topology_finer_or_equal(coherent_topology(d), maximal_topology(d)));
  }
}

TEST_CASE("maximal topology: join reformulation equals the finite-subset one") {
  // brute force over all sieves: the original condition asks for a finite
  // subfamily of the sieve whose join completes every co-cover of the anchor
  for (const FiniteLattice& d : enumerate_corpus(8)) {
    const GrothendieckTopology jm = maximal_topology(d);
    for (int c = 0; c < d.size(); ++c) {
      for (const Mask s : sieves_on(d, c)) {
        bool literal = true;
        for (int e = 0; e < d.size() && literal; ++e) {
          if (d.join(c, e) != d.top()) continue;
          bool completed = false;
          for (Mask sub = s;; sub = (sub - 1) & s) {
            if (d.join(d.join_of(sub), e) == d.top()) {
              completed = true;
              break;
            }
            if (sub == 0) break;
          }
          literal = completed;
        }
        CHECK(jm.covers(c, s) == literal);
      }
    }
  }
}

TEST_CASE("induced canonical topology on the spec examples") {
  const FiniteLattice b2 = fixtures::b2();
  const Sublattice full_b2 = sublattice_closure(b2, b2.all());
  const GrothendieckTopology can_b2 = induced_canonical(full_b2);
  CHECK(can_b2.covers(full_b2.lattice.top(),
                      members_of(full_b2.lattice, {"{}", "{a}", "{b}"})));

  const FiniteLattice c3 = fixtures::c3();
  const Sublattice full_c3 = sublattice_closure(c3, c3.all());
  const GrothendieckTopology can_c3 = induced_canonical(full_c3);
  CHECK_FALSE(can_c3.covers(full_c3.lattice.index_of("m"),
                            members_of(full_c3.lattice, {"0"})));

  // non-base sublattice is rejected with the missing element named
  const Sublattice bounds = sublattice_closure(c3, 0);
  CHECK_THROWS_WITH_AS(induced_canonical(bounds), doctest::Contains("'m'"),
                       StructureError);
}

TEST_CASE("countable topology is the canonical topology of the finite frame") {
  for (const FiniteLattice& d : enumerate_corpus(8)) {
    const GrothendieckTopology countable = countable_topology(d);
    const Sublattice full = sublattice_closure(d, d.all());
    const GrothendieckTopology can = induced_canonical(full);
    // same lattice up to the identity relabeling, so compare cover by cover
    for (int c = 0; c < d.size(); ++c) {
      for (const Mask s : sieves_on(d, c)) {
        CHECK(countable.covers(c, s) == can.covers(c, s));
      }
    }
  }
  const FiniteLattice b2 = fixtures::b2();
  CHECK(countable_topology(b2).covers(
      b2.top(), members_of(b2, {"{}", "{a}", "{b}"})));
  const FiniteLattice c3 = fixtures::c3();
  CHECK_FALSE(countable_topology(c3).covers(c3.index_of("m"), members_of(c3, {"0"})));
}

TEST_CASE("topology axioms hold for every built-in on the corpus") {
  for (const FiniteLattice& d : enumerate_corpus(6)) {
    CHECK(verify_topology_axioms(coherent_topology(d)));
    CHECK(verify_topology_axioms(maximal_topology(d)));
    CHECK(verify_topology_axioms(countable_topology(d)));
    CHECK(verify_topology_axioms(cr_topology(d)));
    const Sublattice full = sublattice_closure(d, d.all());
    CHECK(verify_topology_axioms(induced_canonical(full)));
  }
}

TEST_CASE("cr topology on the spec examples") {
  const FiniteLattice b2 = fixtures::b2();
  const GrothendieckTopology cr_b2 = cr_topology(b2);
  const int a = b2.index_of("{a}");
  CHECK_FALSE(cr_b2.covers(a, members_of(b2, {"{}"})));
  CHECK(cr_b2.covers(a, members_of(b2, {"{}", "{a}"})));
  const FiniteLattice c3 = fixtures::c3();
  const GrothendieckTopology cr_c3 = cr_topology(c3);
  CHECK(cr_c3.covers(c3.index_of("m"), members_of(c3, {"0"})));
  for (int c = 0; c < c3.size(); ++c) CHECK(cr_c3.covers(c, c3.downset(c)));
}

TEST_CASE("topology equality on the spec examples") {
  const FiniteLattice b2 = fixtures::b2();
  CHECK(topology_equal(coherent_topology(b2), maximal_topology(b2)));
  const FiniteLattice c3 = fixtures::c3();
  CHECK_FALSE(topology_equal(coherent_topology(c3), maximal_topology(c3)));
}

TEST_CASE("j_closure on the spec examples and against the nucleus") {
  const FiniteLattice c3 = fixtures::c3();
  const GrothendieckTopology jm = maximal_topology(c3);
  const Ideal zero(c3, members_of(c3, {"0"}));
  CHECK(j_closure(jm, zero).members == members_of(c3, {"0", "m"}));
  for (const FiniteLattice& d : enumerate_corpus(8)) {
    const GrothendieckTopology j = maximal_topology(d);
    for (const Ideal& i : all_ideals(d)) {
      CHECK(j_closure(j, i).members == jacobson_closure(d, i).members);
    }
  }
}

TEST_CASE("subcanonicity on the spec examples") {
  CHECK_FALSE(is_subcanonical(maximal_topology(fixtures::c3())));
  CHECK(is_subcanonical(maximal_topology(fixtures::b2())));
  // the coherent topology is always subcanonical
  for (const FiniteLattice& d : enumerate_corpus(8)) {
    CHECK(is_subcanonical(coherent_topology(d)));
  }
}

TEST_CASE("j_prime_filters on the spec examples") {
  const FiniteLattice b2 = fixtures::b2();
  const auto coh_filters = j_prime_filters(coherent_topology(b2));
  REQUIRE(coh_filters.size() == 2);
  CHECK(coh_filters[0].members == b2.upset(b2.index_of("{a}")));
  CHECK(coh_filters[1].members == b2.upset(b2.index_of("{b}")));

  const FiniteLattice c3 = fixtures::c3();
  const auto jm_filters = j_prime_filters(maximal_topology(c3));
  REQUIRE(jm_filters.size() == 1);
  CHECK(jm_filters[0].members == members_of(c3, {"1"}));

  CHECK(j_prime_filters(maximal_topology(fixtures::one_element())).empty());
}

TEST_CASE("union criterion for Wallman objects: joins are detected by co-covers") {
  // over the full base of a discrete space, a subfamily of opens below U has
  // union U exactly when every co-cover of U is completed by finitely many
  // of them
  for (int n = 1; n <= 3; ++n) {
    const FiniteSpace x = FiniteSpace::discrete(n);
    const FiniteLattice opens = x.opens_lattice();
    const GrothendieckTopology jm = maximal_topology(opens);
    const Sublattice full = sublattice_closure(opens, opens.all());
    const GrothendieckTopology can = induced_canonical(full);
    CHECK(topology_equal(jm, can));
  }
  // the same statement quantified literally over families of opens
  const FiniteSpace x = FiniteSpace::discrete(3);
  const Mask all_points = x.all_points();
  const auto& opens = x.opens();
  const int m = static_cast<int>(opens.size());
  for (int u = 0; u < m; ++u) {
    std::vector<int> below;
    for (int i = 0; i < m; ++i) {
      if (subset(opens[i], opens[u])) below.push_back(i);
    }
    const int k = static_cast<int>(below.size());
    for (Mask family = 0; family < (Mask{1} << k); ++family) {
      Mask the_union = 0;
      for_each_bit(family, [&](int idx) { the_union |= opens[below[idx]]; });
      const bool union_is_u = the_union == opens[u];
      bool subcover_condition = true;
      for (int v = 0; v < m && subcover_condition; ++v) {
        if ((opens[v] | opens[u]) != all_points) continue;
        bool completed = false;
        for (Mask sub = family;; sub = (sub - 1) & family) {
          Mask partial = opens[v];
          for_each_bit(sub, [&](int idx) { partial |= opens[below[idx]]; });
          if (partial == all_points) {
            completed = true;
            break;
          }
          if (sub == 0) break;
        }
        subcover_condition = completed;
      }
      CHECK(union_is_u == subcover_condition);
    }
  }
}
