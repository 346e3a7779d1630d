#include "maxspec/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace maxspec {

namespace {

std::string point_set_id(const std::vector<std::string>& point_ids, Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) os << ',';
    os << point_ids[i];
    first = false;
  });
  os << '}';
  return os.str();
}

void sort_opens(std::vector<Mask>& opens) {
  std::sort(opens.begin(), opens.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
}

std::vector<std::string> default_points(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  return ids;
}

FiniteLattice inclusion_lattice(const std::vector<std::string>& ids,
                                const std::vector<Mask>& sets) {
  const int n = static_cast<int>(sets.size());
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rel[i][j] = subset(sets[i], sets[j]);
  }
  return FiniteLattice::from_order(FinitePoset(ids, rel));
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> point_ids, std::vector<Mask> opens)
    : point_ids_(std::move(point_ids)), opens_(std::move(opens)) {
  if (size() > kMaxElements) throw StructureError("space too large");
  {
    std::set<std::string> seen;
    for (const auto& id : point_ids_) {
      if (!seen.insert(id).second) throw StructureError("duplicate point id '" + id + "'");
    }
  }
  sort_opens(opens_);
  const Mask all = all_points();
  for (const Mask o : opens_) {
    if (!subset(o, all)) throw StructureError("open set mentions unknown points");
  }
  if (!is_open(0)) throw StructureError("open family lacks the empty set");
  if (!is_open(all)) throw StructureError("open family lacks the full point set");
  for (const Mask a : opens_) {
    for (const Mask b : opens_) {
      if (!is_open(a | b)) {
        throw StructureError("open family not closed under union at " +
                             point_set_id(point_ids_, a) + " and " +
                             point_set_id(point_ids_, b));
      }
      if (!is_open(a & b)) {
        throw StructureError("open family not closed under intersection at " +
                             point_set_id(point_ids_, a) + " and " +
                             point_set_id(point_ids_, b));
      }
    }
  }
}

FiniteSpace FiniteSpace::from_basis(std::vector<std::string> point_ids,
                                    std::vector<Mask> family) {
  const Mask all = full_mask(static_cast<int>(point_ids.size()));
  family.push_back(0);
  family.push_back(all);
  sort_opens(family);
  for (;;) {
    const std::size_t before = family.size();
    std::vector<Mask> extra;
    for (const Mask a : family) {
      for (const Mask b : family) {
        extra.push_back(a | b);
        extra.push_back(a & b);
      }
    }
    family.insert(family.end(), extra.begin(), extra.end());
    sort_opens(family);
    if (family.size() == before) break;
  }
  return FiniteSpace(std::move(point_ids), std::move(family));
}

FiniteSpace FiniteSpace::discrete(int n) {
  std::vector<Mask> family;
  for (int i = 0; i < n; ++i) family.push_back(bit(i));
  return from_basis(default_points(n), std::move(family));
}

FiniteSpace FiniteSpace::indiscrete(int n) {
  return from_basis(default_points(n), {});
}

FiniteSpace FiniteSpace::sierpinski() {
  return FiniteSpace({"x", "y"}, {0, bit(0), bit(0) | bit(1)});
}

int FiniteSpace::point_index(const std::string& id) const {
  for (int i = 0; i < size(); ++i) {
    if (point_ids_[i] == id) return i;
  }
  return -1;
}

bool FiniteSpace::is_open(Mask s) const {
  return std::find(opens_.begin(), opens_.end(), s) != opens_.end();
}

Mask FiniteSpace::closure(Mask s) const {
  // smallest closed superset
  Mask best = all_points();
  for (const Mask o : opens_) {
    const Mask closed = all_points() & ~o;
    if (subset(s, closed) && subset(closed, best)) best = closed;
  }
  return best;
}

Mask FiniteSpace::interior(Mask s) const {
  Mask best = 0;
  for (const Mask o : opens_) {
    if (subset(o, s) && subset(best, o)) best = o;
  }
  return best;
}

FiniteLattice FiniteSpace::opens_lattice() const {
  std::vector<std::string> ids;
  ids.reserve(opens_.size());
  for (const Mask o : opens_) ids.push_back(point_set_id(point_ids_, o));
  return inclusion_lattice(ids, opens_);
}

ContinuousMap::ContinuousMap(const FiniteSpace& src, const FiniteSpace& dst,
                             std::vector<int> m)
    : source(&src), target(&dst), map(std::move(m)) {
  if (static_cast<int>(map.size()) != src.size()) {
    throw StructureError("point map not total on the source");
  }
  for (int p : map) {
    if (p < 0 || p >= dst.size()) throw StructureError("point map leaves the codomain");
  }
  for (const Mask o : dst.opens()) {
    if (!src.is_open(preimage(o))) {
      throw StructureError("map not continuous: preimage of an open is not open");
    }
  }
}

Mask ContinuousMap::preimage(Mask target_set) const {
  Mask out = 0;
  for (int p = 0; p < source->size(); ++p) {
    if (has_bit(target_set, map[p])) out |= bit(p);
  }
  return out;
}

bool is_t0(const FiniteSpace& x) {
  for (int p = 0; p < x.size(); ++p) {
    for (int q = p + 1; q < x.size(); ++q) {
      bool separated = false;
      for (const Mask o : x.opens()) {
        if (has_bit(o, p) != has_bit(o, q)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool is_t1(const FiniteSpace& x) {
  for (int p = 0; p < x.size(); ++p) {
    for (int q = 0; q < x.size(); ++q) {
      if (p == q) continue;
      bool found = false;
      for (const Mask o : x.opens()) {
        if (has_bit(o, p) && !has_bit(o, q)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_hausdorff(const FiniteSpace& x) {
  for (int p = 0; p < x.size(); ++p) {
    for (int q = p + 1; q < x.size(); ++q) {
      bool found = false;
      for (const Mask u : x.opens()) {
        if (!has_bit(u, p)) continue;
        for (const Mask v : x.opens()) {
          if (has_bit(v, q) && (u & v) == 0) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_relatively_compact(const FiniteSpace& x, Mask subset_points) {
  // Every open cover of the subset must admit a finite subcover. Covers are
  // enumerated literally as subfamilies of the opens; for each one, a
  // subcover is assembled by picking one member per covered point and then
  // re-checked.
  const int m = static_cast<int>(x.opens().size());
  if (m > 20) throw StructureError("cover search too large for literal enumeration");
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << m); ++sel) {
    Mask covered = 0;
    for_each_bit(sel, [&](int i) { covered |= x.opens()[i]; });
    if (!subset(subset_points, covered)) continue;  // not a cover
    // finite subcover: the first member containing each point
    bool ok = true;
    Mask check = 0;
    for_each_bit(subset_points, [&](int p) {
      int found = -1;
      for_each_bit(sel, [&](int i) {
        if (found < 0 && has_bit(x.opens()[i], p)) found = i;
      });
      if (found < 0) {
        ok = false;
      } else {
        check |= x.opens()[found];
      }
    });
    if (!ok || !subset(subset_points, check)) return false;
  }
  return true;
}

bool is_compact(const FiniteSpace& x) {
  return is_relatively_compact(x, x.all_points());
}

bool is_sober(const FiniteSpace& x) {
  // enumerate closed sets; irreducible: nonempty and not the union of two
  // strictly smaller closed sets
  std::vector<Mask> closed;
  for (const Mask o : x.opens()) closed.push_back(x.all_points() & ~o);
  for (const Mask c : closed) {
    if (c == 0) continue;
    bool reducible = false;
    for (const Mask a : closed) {
      if (reducible) break;
      for (const Mask b : closed) {
        if (a != c && b != c && (a | b) == c) {
          reducible = true;
          break;
        }
      }
    }
    if (reducible) continue;
    int generic_points = 0;
    for_each_bit(c, [&](int p) {
      if (x.closure(bit(p)) == c) ++generic_points;
    });
    if (generic_points != 1) return false;
  }
  return true;
}

bool is_dense(const FiniteSpace& x, Mask s) { return x.closure(s) == x.all_points(); }

bool is_homeomorphism(const ContinuousMap& f) {
  const int n = f.source->size();
  if (f.target->size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int p = 0; p < n; ++p) {
    if (hit[f.map[p]]) return false;
    hit[f.map[p]] = true;
  }
  // continuous bijection with open image of each open
  for (const Mask o : f.source->opens()) {
    Mask image = 0;
    for_each_bit(o, [&](int p) { image |= bit(f.map[p]); });
    if (!f.target->is_open(image)) return false;
  }
  return true;
}

bool homeomorphic(const FiniteSpace& x, const FiniteSpace& y) {
  if (x.size() != y.size()) return false;
  if (x.opens().size() != y.opens().size()) return false;
  std::vector<int> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Mask o : x.opens()) {
      Mask image = 0;
      for_each_bit(o, [&](int p) { image |= bit(perm[p]); });
      if (!y.is_open(image)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Sobrification sobrification(const FiniteSpace& x) {
  // identify topologically indistinguishable points
  const int n = x.size();
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int p = 0; p < n; ++p) {
    for (std::size_t r = 0; r < reps.size(); ++r) {
      bool same = true;
      for (const Mask o : x.opens()) {
        if (has_bit(o, p) != has_bit(o, reps[r])) {
          same = false;
          break;
        }
      }
      if (same) {
        cls[p] = static_cast<int>(r);
        break;
      }
    }
    if (cls[p] < 0) {
      cls[p] = static_cast<int>(reps.size());
      reps.push_back(p);
    }
  }
  std::vector<std::string> ids;
  for (int r : reps) ids.push_back(x.point_id(r));
  std::vector<Mask> opens;
  for (const Mask o : x.opens()) {
    Mask q = 0;
    for_each_bit(o, [&](int p) { q |= bit(cls[p]); });
    opens.push_back(q);
  }
  FiniteSpace quotient(std::move(ids), std::move(opens));
  return Sobrification{std::move(quotient), std::move(cls)};
}

namespace {

Spectrum spectrum_from_ideals(const FiniteLattice& d, std::vector<Ideal> pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::string> ids;
  std::vector<Mask> basic(d.size(), 0);
  for (int i = 0; i < n; ++i) {
    std::ostringstream os;
    os << '{';
    const auto members = pts[i].member_ids();
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k) os << ',';
      os << members[k];
    }
    os << '}';
    ids.push_back(os.str());
  }
  for (int b = 0; b < d.size(); ++b) {
    for (int i = 0; i < n; ++i) {
      if (!pts[i].contains(b)) basic[b] |= bit(i);
    }
  }
  FiniteSpace space = FiniteSpace::from_basis(std::move(ids), basic);
  return Spectrum{std::move(space), std::move(pts), std::move(basic)};
}

}  // namespace

Spectrum spec_space(const FiniteLattice& d) {
  return spectrum_from_ideals(d, enumerate_prime_ideals(d));
}

Spectrum max_space(const FiniteLattice& d) {
  return spectrum_from_ideals(d, enumerate_maximal_ideals(d));
}

namespace {

std::vector<Mask> checked_base_members(const FiniteSpace& x, std::vector<Mask> members) {
  sort_opens(members);
  for (const Mask m : members) {
    if (!x.is_open(m)) {
      throw StructureError("base member " + point_set_id(x.point_ids(), m) +
                           " is not open");
    }
  }
  if (members.empty() || members.front() != 0 || members.back() != x.all_points()) {
    throw StructureError("base must contain the empty set and the full space");
  }
  auto present = [&](Mask s) {
    return std::find(members.begin(), members.end(), s) != members.end();
  };
  for (const Mask a : members) {
    for (const Mask b : members) {
      if (!present(a | b) || !present(a & b)) {
        throw StructureError("base not a sublattice of the opens");
      }
    }
  }
  return members;
}

FiniteLattice base_lattice(const FiniteSpace& x, const std::vector<Mask>& members) {
  std::vector<std::string> ids;
  for (const Mask m : members) ids.push_back(point_set_id(x.point_ids(), m));
  return inclusion_lattice(ids, members);
}

}  // namespace

TopBase::TopBase(FiniteSpace x, std::vector<Mask> member_opens)
    : space_(std::move(x)),
      members_(checked_base_members(space_, std::move(member_opens))),
      lattice_(base_lattice(space_, members_)) {}

TopBase TopBase::full(FiniteSpace x) {
  std::vector<Mask> opens = x.opens();
  return TopBase(std::move(x), std::move(opens));
}

int TopBase::index_of_open(Mask open) const {
  for (int i = 0; i < size(); ++i) {
    if (members_[i] == open) return i;
  }
  return -1;
}

bool TopBase::is_base() const {
  for (const Mask o : space_.opens()) {
    Mask acc = 0;
    for (const Mask m : members_) {
      if (subset(m, o)) acc |= m;
    }
    if (acc != o) return false;
  }
  return true;
}

std::vector<EtaPoint> eta_map(const TopBase& b) {
  std::vector<EtaPoint> out;
  const FiniteLattice& l = b.lattice();
  for (int p = 0; p < b.space().size(); ++p) {
    Mask members = 0;
    for (int i = 0; i < b.size(); ++i) {
      if (!has_bit(b.member_points(i), p)) members |= bit(i);
    }
    const Ideal ideal(l, members);
    const bool prime = is_prime_ideal(ideal);
    const bool maximal = is_maximal_ideal(ideal);
    out.push_back(EtaPoint{ideal, prime, maximal});
  }
  return out;
}

ContinuousMap eta_into_max(const TopBase& b, const Spectrum& max_of_b) {
  const auto eta = eta_map(b);
  std::vector<int> map;
  map.reserve(eta.size());
  for (const EtaPoint& e : eta) {
    int found = -1;
    for (std::size_t i = 0; i < max_of_b.points.size(); ++i) {
      if (max_of_b.points[i].members == e.ideal.members) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) throw StructureError("eta image is not a maximal ideal");
    map.push_back(found);
  }
  return ContinuousMap(b.space(), max_of_b.space, std::move(map));
}

}  // namespace maxspec
