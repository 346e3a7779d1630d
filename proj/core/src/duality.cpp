#include "maxspec/duality.hpp"

#include <algorithm>

namespace maxspec {

bool in_top_dlat_w(const TopBase& b) {
  if (!is_t0(b.space())) return false;
  if (!b.is_base()) return false;
  if (!is_wallman_base(b)) return false;
  // eta surjective onto the maximal ideals
  const auto eta = eta_map(b);
  std::vector<Mask> hit;
  for (const EtaPoint& e : eta) {
    if (!e.maximal) return false;
    hit.push_back(e.ideal.members);
  }
  for (const Ideal& m : enumerate_maximal_ideals(b.lattice())) {
    if (std::find(hit.begin(), hit.end(), m.members) == hit.end()) return false;
  }
  return true;
}

TopDLatArrow::TopDLatArrow(const TopBase& src, const TopBase& dst,
                           std::vector<int> pm)
    : source(&src), target(&dst), point_map(std::move(pm)) {
  ContinuousMap check(src.space(), dst.space(), point_map);  // validates continuity
  base_restriction.assign(dst.size(), -1);
  for (int v = 0; v < dst.size(); ++v) {
    const Mask pre = check.preimage(dst.member_points(v));
    const int u = src.index_of_open(pre);
    if (u < 0) {
      throw StructureError("inverse image of base member does not restrict to the base");
    }
    base_restriction[v] = u;
  }
}

TopDLatArrow::TopDLatArrow(const TopBase& src, const TopBase& dst,
                           std::vector<int> pm,
                           const std::vector<int>& supplied_restriction)
    : TopDLatArrow(src, dst, std::move(pm)) {
  if (supplied_restriction != base_restriction) {
    throw StructureError("supplied base restriction disagrees with the recomputed one");
  }
}

ContinuousMap TopDLatArrow::as_continuous() const {
  return ContinuousMap(source->space(), target->space(), point_map);
}

FiniteLattice functor_h(const TopBase& b) { return b.lattice(); }

LatticeHom functor_h_arrow(const TopDLatArrow& f) {
  return LatticeHom{&f.target->lattice(), &f.source->lattice(), f.base_restriction};
}

KObject functor_k(const FiniteLattice& d) {
  if (!is_conjunctive(d)) {
    throw StructureError("K is defined on conjunctive lattices only");
  }
  Spectrum max = max_space(d);
  std::vector<Mask> members(max.basic_open.begin(), max.basic_open.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return KObject{std::move(max), std::move(members)};
}

bool is_maximal_hom(const LatticeHom& f) {
  const FiniteLattice& s = *f.source;
  const FiniteLattice& t = *f.target;
  for (const Ideal& m : enumerate_maximal_ideals(t)) {
    Mask pre = 0;
    for (int a = 0; a < s.size(); ++a) {
      if (m.contains(f.map[a])) pre |= bit(a);
    }
    if (!is_maximal_ideal(Ideal(s, pre))) return false;
  }
  return true;
}

ContinuousMap functor_k_arrow(const LatticeHom& f, const Spectrum& max_source,
                              const Spectrum& max_target) {
  if (!is_maximal_hom(f)) {
    throw StructureError("K is defined on maximal homomorphisms only");
  }
  const FiniteLattice& s = *f.source;
  std::vector<int> point_map;
  for (const Ideal& m : max_target.points) {
    Mask pre = 0;
    for (int a = 0; a < s.size(); ++a) {
      if (m.contains(f.map[a])) pre |= bit(a);
    }
    int found = -1;
    for (std::size_t i = 0; i < max_source.points.size(); ++i) {
      if (max_source.points[i].members == pre) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) throw StructureError("preimage of a maximal ideal is not maximal");
    point_map.push_back(found);
  }
  return ContinuousMap(max_target.space, max_source.space, std::move(point_map));
}

bool roundtrip_space(const TopBase& b) {
  const Spectrum max = max_space(b.lattice());
  ContinuousMap eta = eta_into_max(b, max);
  if (!is_homeomorphism(eta)) return false;
  // each base member lands on its basic open
  for (int u = 0; u < b.size(); ++u) {
    Mask image = 0;
    for_each_bit(b.member_points(u), [&](int p) { image |= bit(eta.map[p]); });
    if (image != max.basic_open[u]) return false;
  }
  return true;
}

bool roundtrip_lattice(const FiniteLattice& d) {
  const KObject k = functor_k(d);
  const TopBase base = k.base();
  // eta as a lattice map: d -> index of its basic open among the members
  std::vector<int> map;
  for (int a = 0; a < d.size(); ++a) {
    const int idx = base.index_of_open(k.max.basic_open[a]);
    if (idx < 0) return false;
    map.push_back(idx);
  }
  LatticeHom eta{&d, &base.lattice(), map};
  if (!is_lattice_hom(eta)) return false;
  // bijective onto the image base
  if (d.size() != base.size()) return false;
  std::vector<bool> hit(base.size(), false);
  for (int i : map) {
    if (hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

bool naturality_square(const TopDLatArrow& f) {
  const auto eta_src = eta_map(*f.source);
  const auto eta_dst = eta_map(*f.target);
  const FiniteLattice& tl = f.target->lattice();
  for (int x = 0; x < f.source->space().size(); ++x) {
    const Ideal& over = eta_dst[f.point_map[x]].ideal;
    // preimage of eta_src(x) under the base restriction
    Mask pre = 0;
    for (int v = 0; v < tl.size(); ++v) {
      if (eta_src[x].ideal.contains(f.base_restriction[v])) pre |= bit(v);
    }
    if (pre != over.members) return false;
  }
  return true;
}

CoatomSpace t1_max_space(const FiniteLattice& f) {
  std::vector<int> elems;
  for_each_bit(f.coatoms(), [&](int b) { elems.push_back(b); });
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> ids;
  for (int b : elems) ids.push_back(f.id(b));
  std::vector<Mask> basic;
  for (int a = 0; a < f.size(); ++a) {
    Mask m = 0;
    for (int i = 0; i < n; ++i) {
      if (!f.leq(elems[i], a)) m |= bit(i);
    }
    basic.push_back(m);
  }
  FiniteSpace space = FiniteSpace::from_basis(std::move(ids), std::move(basic));
  return CoatomSpace{std::move(space), std::move(elems)};
}

bool t1_coatom_homeo(const FiniteLattice& f) {
  const CoatomSpace ca = t1_max_space(f);
  const Spectrum max = max_space(f);
  if (ca.space.size() != max.space.size()) return false;
  std::vector<int> map;
  for (const int b : ca.coatom_elements) {
    const Mask principal = f.downset(b);
    int found = -1;
    for (std::size_t i = 0; i < max.points.size(); ++i) {
      if (max.points[i].members == principal) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) return false;
    map.push_back(found);
  }
  try {
    return is_homeomorphism(ContinuousMap(ca.space, max.space, std::move(map)));
  } catch (const StructureError&) {
    return false;
  }
}

bool is_t1_frm(const FiniteLattice& f) {
  return f.is_distributive() && is_conjunctive(f) && is_countably_compact(f);
}

bool frame_hom_maximal_coatom_condition(const LatticeHom& f) {
  const FiniteLattice& s = *f.source;
  const FiniteLattice& t = *f.target;
  bool ok = true;
  for_each_bit(t.coatoms(), [&](int b) {
    Mask below = 0;
    for (int a = 0; a < s.size(); ++a) {
      if (t.leq(f.map[a], b)) below |= bit(a);
    }
    ok = ok && has_bit(s.coatoms(), s.join_of(below));
  });
  return ok;
}

}  // namespace maxspec
