#include "maxspec/rings.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "maxspec/coverage.hpp"
#include "maxspec/ideals.hpp"
#include "maxspec/wallman.hpp"

namespace maxspec {

namespace {

std::string witness2(const FiniteCommRing& r, int a, int b) {
  return "('" + r.id(a) + "','" + r.id(b) + "')";
}

}  // namespace

FiniteCommRing::FiniteCommRing(std::vector<std::string> ids, std::vector<int> add,
                               std::vector<int> mul, int zero, int one)
    : ids_(std::move(ids)), add_(std::move(add)), mul_(std::move(mul)),
      zero_(zero), one_(one) {
  const int n = size();
  if (n == 0) throw StructureError("a ring needs at least one element");
  if (n > kMaxElements) throw StructureError("ring too large");
  if (static_cast<int>(add_.size()) != n * n || static_cast<int>(mul_.size()) != n * n) {
    throw StructureError("operation tables must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  for (int v : add_) {
    if (v < 0 || v >= n) throw StructureError("add table entry out of range");
  }
  for (int v : mul_) {
    if (v < 0 || v >= n) throw StructureError("mul table entry out of range");
  }
  if (zero_ < 0 || zero_ >= n || one_ < 0 || one_ >= n) {
    throw StructureError("zero/one out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (this->add(a, zero_) != a) {
      throw StructureError("zero is not an additive identity at '" + ids_[a] + "'");
    }
    if (this->mul(a, one_) != a) {
      throw StructureError("one is not a multiplicative identity at '" + ids_[a] + "'");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (this->add(a, b) != this->add(b, a)) {
        throw StructureError("addition not commutative at " + witness2(*this, a, b));
      }
      if (this->mul(a, b) != this->mul(b, a)) {
        throw StructureError("multiplication not commutative at " + witness2(*this, a, b));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (this->add(this->add(a, b), c) != this->add(a, this->add(b, c))) {
          throw StructureError("addition not associative at ('" + ids_[a] + "','" +
                               ids_[b] + "','" + ids_[c] + "')");
        }
        if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c))) {
          throw StructureError("multiplication not associative at ('" + ids_[a] +
                               "','" + ids_[b] + "','" + ids_[c] + "')");
        }
        if (this->mul(a, this->add(b, c)) != this->add(this->mul(a, b), this->mul(a, c))) {
          throw StructureError("multiplication not distributive at ('" + ids_[a] +
                               "','" + ids_[b] + "','" + ids_[c] + "')");
        }
      }
    }
  }
  neg_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (this->add(a, b) == zero_) {
        neg_[a] = b;
        break;
      }
    }
    if (neg_[a] < 0) {
      throw StructureError("no additive inverse for '" + ids_[a] + "'");
    }
  }
}

int FiniteCommRing::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i) {
    if (ids_[i] == id) return i;
  }
  return -1;
}

int FiniteCommRing::power(int a, int n) const {
  int acc = a;
  for (int k = 1; k < n; ++k) acc = mul(acc, a);
  return acc;
}

FiniteCommRing zmod(int n) {
  if (n < 1) throw StructureError("zmod needs n >= 1");
  std::vector<std::string> ids;
  std::vector<int> add(n * n), mul(n * n);
  for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  }
  return FiniteCommRing(std::move(ids), std::move(add), std::move(mul), 0, 1 % n);
}

FiniteCommRing ring_product(const FiniteCommRing& r, const FiniteCommRing& s) {
  const int nr = r.size();
  const int ns = s.size();
  const int n = nr * ns;
  std::vector<std::string> ids;
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < ns; ++b) ids.push_back("(" + r.id(a) + "," + s.id(b) + ")");
  }
  auto pack = [&](int a, int b) { return a * ns + b; };
  std::vector<int> add(n * n), mul(n * n);
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < ns; ++b) {
      for (int c = 0; c < nr; ++c) {
        for (int d = 0; d < ns; ++d) {
          add[pack(a, b) * n + pack(c, d)] = pack(r.add(a, c), s.add(b, d));
          mul[pack(a, b) * n + pack(c, d)] = pack(r.mul(a, c), s.mul(b, d));
        }
      }
    }
  }
  return FiniteCommRing(std::move(ids), std::move(add), std::move(mul),
                        pack(r.zero(), s.zero()), pack(r.one(), s.one()));
}

bool ring_isomorphic(const FiniteCommRing& r, const FiniteCommRing& s) {
  const int n = r.size();
  if (n != s.size()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[r.zero()] != s.zero() || perm[r.one()] != s.one()) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n; ++b) {
        if (perm[r.add(a, b)] != s.add(perm[a], perm[b]) ||
            perm[r.mul(a, b)] != s.mul(perm[a], perm[b])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

RingIdeal::RingIdeal(const FiniteCommRing& r, Mask m) : ring(&r), members(m) {
  if (!has_bit(m, r.zero())) throw StructureError("ideal does not contain zero");
  bool ok = true;
  for_each_bit(m, [&](int a) {
    ok = ok && has_bit(m, r.neg(a));
    for_each_bit(m, [&](int b) { ok = ok && has_bit(m, r.add(a, b)); });
  });
  if (!ok) throw StructureError("ideal is not an additive subgroup");
  for_each_bit(m, [&](int a) {
    for (int x = 0; x < r.size(); ++x) {
      if (!has_bit(m, r.mul(a, x))) ok = false;
    }
  });
  if (!ok) throw StructureError("ideal does not absorb multiplication");
}

std::string RingIdeal::label() const {
  const FiniteCommRing& r = *ring;
  int best = -1;
  for_each_bit(members, [&](int g) {
    if (best >= 0) return;
    Mask gen = 0;
    for (int x = 0; x < r.size(); ++x) gen |= bit(r.mul(g, x));
    if (gen == members) best = g;
  });
  if (best >= 0) return "(" + r.id(best) + ")";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_bit(members, [&](int a) {
    if (!first) os << ',';
    os << r.id(a);
    first = false;
  });
  os << '}';
  return os.str();
}

RingIdeal principal_ring_ideal(const FiniteCommRing& r, int a) {
  Mask m = 0;
  for (int x = 0; x < r.size(); ++x) m |= bit(r.mul(a, x));
  return RingIdeal(r, m);
}

RingIdeal ring_ideal_generated_by(const FiniteCommRing& r, Mask gens) {
  Mask m = bit(r.zero());
  for_each_bit(gens, [&](int g) { m |= principal_ring_ideal(r, g).members; });
  // close under addition
  for (;;) {
    Mask grown = m;
    for_each_bit(m, [&](int a) {
      for_each_bit(m, [&](int b) { grown |= bit(r.add(a, b)); });
    });
    if (grown == m) break;
    m = grown;
  }
  return RingIdeal(r, m);
}

RingIdeal ideal_sum(const RingIdeal& i, const RingIdeal& j) {
  return ring_ideal_generated_by(*i.ring, i.members | j.members);
}

std::vector<RingIdeal> enumerate_ring_ideals(const FiniteCommRing& r) {
  std::vector<Mask> found;
  auto push = [&](Mask m) {
    if (std::find(found.begin(), found.end(), m) == found.end()) {
      found.push_back(m);
      return true;
    }
    return false;
  };
  for (int a = 0; a < r.size(); ++a) push(principal_ring_ideal(r, a).members);
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Mask> snapshot = found;
    for (const Mask a : snapshot) {
      for (const Mask b : snapshot) {
        const Mask s = ring_ideal_generated_by(r, a | b).members;
        if (push(s)) changed = true;
      }
    }
  }
  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  std::vector<RingIdeal> out;
  out.reserve(found.size());
  for (const Mask m : found) out.emplace_back(r, m);
  return out;
}

bool is_prime_ring_ideal(const RingIdeal& i) {
  const FiniteCommRing& r = *i.ring;
  if (!i.is_proper()) return false;
  for (int a = 0; a < r.size(); ++a) {
    for (int b = 0; b < r.size(); ++b) {
      if (i.contains(r.mul(a, b)) && !i.contains(a) && !i.contains(b)) return false;
    }
  }
  return true;
}

bool is_maximal_ring_ideal(const RingIdeal& i) {
  if (!i.is_proper()) return false;
  for (const RingIdeal& j : enumerate_ring_ideals(*i.ring)) {
    if (j.is_proper() && subset(i.members, j.members) && i.members != j.members) {
      return false;
    }
  }
  return true;
}

RingIdeal radical(const RingIdeal& i) {
  const FiniteCommRing& r = *i.ring;
  Mask m = 0;
  for (int a = 0; a < r.size(); ++a) {
    int p = a;
    for (int n = 1; n <= r.size(); ++n) {
      if (i.contains(p)) {
        m |= bit(a);
        break;
      }
      p = r.mul(p, a);
    }
  }
  return RingIdeal(r, m);
}

namespace {

RingSpectrum spectrum_from_ring_ideals(const FiniteCommRing& r,
                                       std::vector<RingIdeal> pts) {
  std::vector<std::string> ids;
  ids.reserve(pts.size());
  for (const RingIdeal& p : pts) ids.push_back(p.label());
  std::vector<Mask> basic(r.size(), 0);
  for (int a = 0; a < r.size(); ++a) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!pts[i].contains(a)) basic[a] |= bit(static_cast<int>(i));
    }
  }
  FiniteSpace space = FiniteSpace::from_basis(std::move(ids), basic);
  return RingSpectrum{std::move(space), std::move(pts), std::move(basic)};
}

}  // namespace

RingSpectrum zariski_spec(const FiniteCommRing& r) {
  std::vector<RingIdeal> primes;
  for (const RingIdeal& i : enumerate_ring_ideals(r)) {
    if (is_prime_ring_ideal(i)) primes.push_back(i);
  }
  return spectrum_from_ring_ideals(r, std::move(primes));
}

RingSpectrum max_spec_ring(const FiniteCommRing& r) {
  std::vector<RingIdeal> maxes;
  for (const RingIdeal& i : enumerate_ring_ideals(r)) {
    if (is_maximal_ring_ideal(i)) maxes.push_back(i);
  }
  return spectrum_from_ring_ideals(r, std::move(maxes));
}

Reticulation reticulation(const FiniteCommRing& r) {
  std::vector<Mask> rads;
  for (const RingIdeal& i : enumerate_ring_ideals(r)) {
    const Mask m = radical(i).members;
    if (std::find(rads.begin(), rads.end(), m) == rads.end()) rads.push_back(m);
  }
  std::sort(rads.begin(), rads.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  const int n = static_cast<int>(rads.size());
  std::vector<std::string> ids;
  for (const Mask m : rads) ids.push_back(RingIdeal(r, m).label());
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) rel[a][b] = subset(rads[a], rads[b]);
  }
  FiniteLattice lat = FiniteLattice::from_order(FinitePoset(std::move(ids), rel));
  std::vector<int> class_map(r.size(), -1);
  for (int a = 0; a < r.size(); ++a) {
    const Mask m = radical(principal_ring_ideal(r, a)).members;
    for (int i = 0; i < n; ++i) {
      if (rads[i] == m) {
        class_map[a] = i;
        break;
      }
    }
  }
  return Reticulation{std::move(lat), std::move(rads), std::move(class_map)};
}

bool reticulation_order_witness(const FiniteCommRing& r, int a, int b) {
  const Mask principal_b = principal_ring_ideal(r, b).members;
  int p = a;
  for (int n = 1; n <= r.size(); ++n) {
    if (has_bit(principal_b, p)) return true;  // a^n = b*c for some c
    p = r.mul(p, a);
  }
  return false;
}

RingIdeal jacobson_radical_ring(const FiniteCommRing& r, const RingIdeal& i) {
  Mask m = 0;
  for (int a = 0; a < r.size(); ++a) {
    bool in = true;
    for (int b = 0; b < r.size() && in; ++b) {
      const int ab = r.mul(a, b);
      bool witnessed = false;
      for (int c = 0; c < r.size(); ++c) {
        if (i.contains(r.add(r.add(ab, c), r.mul(ab, c)))) {
          witnessed = true;
          break;
        }
      }
      in = witnessed;
    }
    if (in) m |= bit(a);
  }
  return RingIdeal(r, m);
}

RingIdeal intersection_of_maximals_ring(const FiniteCommRing& r, const RingIdeal& i) {
  Mask acc = r.all();
  for (const RingIdeal& m : enumerate_ring_ideals(r)) {
    if (is_maximal_ring_ideal(m) && subset(i.members, m.members)) acc &= m.members;
  }
  return RingIdeal(r, acc);
}

namespace {

// Admissibility of a covering family for the anchor c, quantified over
// ideals: whenever (c) + I is everything, gen(family) + I is everything.
bool family_admissible(const FiniteCommRing& r, const std::vector<RingIdeal>& ideals,
                       int c, Mask family) {
  const Mask pc = principal_ring_ideal(r, c).members;
  const Mask gen = ring_ideal_generated_by(r, family).members;
  const Mask everything = r.all();
  for (const RingIdeal& i : ideals) {
    const Mask with_c = ring_ideal_generated_by(r, pc | i.members).members;
    if (with_c != everything) continue;
    const Mask with_fam = ring_ideal_generated_by(r, gen | i.members).members;
    if (with_fam != everything) return false;
  }
  return true;
}

}  // namespace

bool is_almost_maximal(const FiniteCommRing& r, const RingIdeal& p) {
  if (!is_prime_ring_ideal(p)) {
    throw StructureError("almost-maximality is defined for prime ideals");
  }
  const std::vector<RingIdeal> ideals = enumerate_ring_ideals(r);
  for (int c = 0; c < r.size(); ++c) {
    if (p.contains(c)) continue;
    // the largest family satisfying the membership condition and avoiding
    // the conclusion; the covering condition is monotone in the family
    const Mask family = radical(principal_ring_ideal(r, c)).members & p.members;
    if (family_admissible(r, ideals, c, family)) return false;
  }
  return true;
}

bool is_almost_maximal_bruteforce(const FiniteCommRing& r, const RingIdeal& p) {
  if (r.size() > 8) throw StructureError("brute-force family search needs |R| <= 8");
  const std::vector<RingIdeal> ideals = enumerate_ring_ideals(r);
  const Mask everything = r.all();
  for (int c = 0; c < r.size(); ++c) {
    const Mask sc = radical(principal_ring_ideal(r, c)).members;
    std::vector<int> sc_elems;
    for_each_bit(sc, [&](int x) { sc_elems.push_back(x); });
    const int k = static_cast<int>(sc_elems.size());
    for (Mask pick = 0; pick < (Mask{1} << k); ++pick) {
      Mask family = 0;
      for_each_bit(pick, [&](int idx) { family |= bit(sc_elems[idx]); });
      // literal admissibility: exists a subfamily completing every ideal
      const Mask pc = principal_ring_ideal(r, c).members;
      bool admissible = true;
      for (const RingIdeal& i : ideals) {
        if (ring_ideal_generated_by(r, pc | i.members).members != everything) continue;
        bool completed = false;
        for (Mask sub = family;; sub = (sub - 1) & family) {
          if (ring_ideal_generated_by(r, sub | i.members).members == everything) {
            completed = true;
            break;
          }
          if (sub == 0) break;
        }
        if (!completed) {
          admissible = false;
          break;
        }
      }
      if (admissible && !p.contains(c) && subset(family, p.members)) return false;
    }
  }
  return true;
}

RingHom::RingHom(const FiniteCommRing& src, const FiniteCommRing& dst,
                 std::vector<int> m)
    : source(&src), target(&dst), map(std::move(m)) {
  if (static_cast<int>(map.size()) != src.size()) {
    throw StructureError("ring map not total on the source");
  }
  for (int v : map) {
    if (v < 0 || v >= dst.size()) throw StructureError("ring map leaves the codomain");
  }
  if (map[src.one()] != dst.one()) throw StructureError("ring map does not preserve one");
  if (map[src.zero()] != dst.zero()) throw StructureError("ring map does not preserve zero");
  for (int a = 0; a < src.size(); ++a) {
    for (int b = 0; b < src.size(); ++b) {
      if (map[src.add(a, b)] != dst.add(map[a], map[b])) {
        throw StructureError("ring map not additive at " + witness2(src, a, b));
      }
      if (map[src.mul(a, b)] != dst.mul(map[a], map[b])) {
        throw StructureError("ring map not multiplicative at " + witness2(src, a, b));
      }
    }
  }
}

bool is_maximal_ring_hom(const RingHom& f) {
  const FiniteCommRing& s = *f.source;
  for (const RingIdeal& m : enumerate_ring_ideals(*f.target)) {
    if (!is_maximal_ring_ideal(m)) continue;
    Mask pre = 0;
    for (int a = 0; a < s.size(); ++a) {
      if (m.contains(f.map[a])) pre |= bit(a);
    }
    if (!is_maximal_ring_ideal(RingIdeal(s, pre))) return false;
  }
  return true;
}

LatticeHom induced_reticulation_hom(const RingHom& f, const Reticulation& ls,
                                    const Reticulation& lt) {
  const FiniteCommRing& dst = *f.target;
  std::vector<int> map;
  for (const Mask src_ideal : ls.element_ideal) {
    Mask image = 0;
    for_each_bit(src_ideal, [&](int a) { image |= bit(f.map[a]); });
    const Mask target_ideal =
        radical(ring_ideal_generated_by(dst, image)).members;
    int found = -1;
    for (std::size_t i = 0; i < lt.element_ideal.size(); ++i) {
      if (lt.element_ideal[i] == target_ideal) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) throw StructureError("image radical ideal missing from the reticulation");
    map.push_back(found);
  }
  return LatticeHom{&ls.lattice, &lt.lattice, std::move(map)};
}

bool ring_hom_family_criterion(const RingHom& f) {
  const Reticulation ls = reticulation(*f.source);
  const Reticulation lt = reticulation(*f.target);
  const LatticeHom lf = induced_reticulation_hom(f, ls, lt);
  const GrothendieckTopology jm_s = maximal_topology(ls.lattice);
  const GrothendieckTopology jm_t = maximal_topology(lt.lattice);
  for (int c = 0; c < ls.lattice.size(); ++c) {
    for (const Mask s : sieves_on(ls.lattice, c)) {
      if (!jm_s.covers(c, s)) continue;
      // sieve generated by the image family
      Mask image = 0;
      for_each_bit(s, [&](int e) { image |= lt.lattice.downset(lf.map[e]); });
      image &= lt.lattice.downset(lf.map[c]);
      if (!jm_t.covers(lf.map[c], image)) return false;
    }
  }
  return true;
}

bool is_conjunctive_ring_sober_form(const FiniteCommRing& r) {
  const std::vector<RingIdeal> ideals = enumerate_ring_ideals(r);
  std::vector<const RingIdeal*> primes, maxes;
  for (const RingIdeal& i : ideals) {
    if (is_prime_ring_ideal(i)) primes.push_back(&i);
    if (is_maximal_ring_ideal(i)) maxes.push_back(&i);
  }
  for (int a = 0; a < r.size(); ++a) {
    for (int b = 0; b < r.size(); ++b) {
      bool same_max = true;
      for (const RingIdeal* m : maxes) {
        if (m->contains(a) != m->contains(b)) {
          same_max = false;
          break;
        }
      }
      if (!same_max) continue;
      for (const RingIdeal* p : primes) {
        if (p->contains(a) != p->contains(b)) return false;
      }
    }
  }
  return true;
}

bool is_conjunctive_ring_reticulation_form(const FiniteCommRing& r) {
  return is_conjunctive(reticulation(r).lattice);
}

bool is_conjunctive_ring(const FiniteCommRing& r) {
  const bool sober_form = is_conjunctive_ring_sober_form(r);
  const bool lattice_form = is_conjunctive_ring_reticulation_form(r);
  if (sober_form != lattice_form) {
    throw StructureError("conjunctive-ring criteria disagree on a finite ring");
  }
  return sober_form;
}

bool reticulation_to_max_opens_injective(const FiniteCommRing& r) {
  const Reticulation l = reticulation(r);
  std::vector<RingIdeal> maxes;
  for (const RingIdeal& i : enumerate_ring_ideals(r)) {
    if (is_maximal_ring_ideal(i)) maxes.push_back(i);
  }
  std::vector<Mask> images;
  for (const Mask elem : l.element_ideal) {
    Mask img = 0;
    for (std::size_t i = 0; i < maxes.size(); ++i) {
      if (!subset(elem, maxes[i].members)) img |= bit(static_cast<int>(i));
    }
    images.push_back(img);
  }
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

bool spec_reticulation_agreement(const FiniteCommRing& r) {
  const RingSpectrum zar = zariski_spec(r);
  const Reticulation l = reticulation(r);
  const Spectrum sl = spec_space(l.lattice);
  if (zar.space.size() != sl.space.size()) return false;
  std::vector<int> map;
  for (const RingIdeal& p : zar.points) {
    Mask lattice_prime = 0;
    for (std::size_t e = 0; e < l.element_ideal.size(); ++e) {
      if (subset(l.element_ideal[e], p.members)) lattice_prime |= bit(static_cast<int>(e));
    }
    int found = -1;
    for (std::size_t i = 0; i < sl.points.size(); ++i) {
      if (sl.points[i].members == lattice_prime) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) return false;
    map.push_back(found);
  }
  try {
    return is_homeomorphism(ContinuousMap(zar.space, sl.space, std::move(map)));
  } catch (const StructureError&) {
    return false;
  }
}

}  // namespace maxspec
