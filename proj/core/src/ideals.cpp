#include "maxspec/ideals.hpp"

#include <algorithm>

namespace maxspec {

namespace {

bool join_closed(const FiniteLattice& l, Mask m) {
  bool ok = true;
  for_each_bit(m, [&](int a) {
    for_each_bit(m, [&](int b) { ok = ok && has_bit(m, l.join(a, b)); });
  });
  return ok;
}

bool meet_closed(const FiniteLattice& l, Mask m) {
  bool ok = true;
  for_each_bit(m, [&](int a) {
    for_each_bit(m, [&](int b) { ok = ok && has_bit(m, l.meet(a, b)); });
  });
  return ok;
}

std::vector<std::string> sorted_ids(const FiniteLattice& l, Mask m) {
  std::vector<std::string> ids;
  for_each_bit(m, [&](int i) { ids.push_back(l.id(i)); });
  std::sort(ids.begin(), ids.end());
  return ids;
}

template <typename T>
void sort_by_member_ids(const FiniteLattice& l, std::vector<T>& xs) {
  std::sort(xs.begin(), xs.end(), [&](const T& a, const T& b) {
    return sorted_ids(l, a.members) < sorted_ids(l, b.members);
  });
}

}  // namespace

Ideal::Ideal(const FiniteLattice& l, Mask m) : lattice(&l), members(m) {
  if (!has_bit(m, l.bottom())) throw StructureError("ideal does not contain bottom");
  if (!l.poset().is_downclosed(m)) throw StructureError("ideal not down-closed");
  if (!join_closed(l, m)) throw StructureError("ideal not closed under join");
}

std::vector<std::string> Ideal::member_ids() const {
  return sorted_ids(*lattice, members);
}

Filter::Filter(const FiniteLattice& l, Mask m) : lattice(&l), members(m) {
  if (!has_bit(m, l.top())) throw StructureError("filter does not contain top");
  if (!l.poset().is_upclosed(m)) throw StructureError("filter not up-closed");
  if (!meet_closed(l, m)) throw StructureError("filter not closed under meet");
}

Ideal principal_ideal(const FiniteLattice& l, int a) { return Ideal(l, l.downset(a)); }

Filter principal_filter(const FiniteLattice& l, int a) { return Filter(l, l.upset(a)); }

Ideal ideal_generated_by(const FiniteLattice& l, Mask s) {
  return principal_ideal(l, l.join_of(s));
}

std::vector<Ideal> all_ideals(const FiniteLattice& l) {
  std::vector<Ideal> out;
  for (const Mask d : l.poset().all_downsets()) {
    if (has_bit(d, l.bottom()) && join_closed(l, d)) out.emplace_back(l, d);
  }
  sort_by_member_ids(l, out);
  return out;
}

std::vector<Filter> all_filters(const FiniteLattice& l) {
  std::vector<Filter> out;
  const Mask all = l.all();
  for (const Mask d : l.poset().all_downsets()) {
    const Mask u = all & ~d;
    if (has_bit(u, l.top()) && meet_closed(l, u)) out.emplace_back(l, u);
  }
  sort_by_member_ids(l, out);
  return out;
}

bool is_prime_ideal(const Ideal& i) {
  const FiniteLattice& l = *i.lattice;
  if (!i.is_proper()) return false;
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) {
      if (i.contains(l.meet(a, b)) && !i.contains(a) && !i.contains(b)) return false;
    }
  }
  return true;
}

bool is_maximal_ideal(const Ideal& i) {
  const FiniteLattice& l = *i.lattice;
  if (!i.is_proper()) return false;
  for (const Ideal& j : all_ideals(l)) {
    if (j.is_proper() && subset(i.members, j.members) && i.members != j.members) {
      return false;
    }
  }
  return true;
}

std::vector<Ideal> enumerate_prime_ideals(const FiniteLattice& l) {
  std::vector<Ideal> out;
  for (const Ideal& i : all_ideals(l)) {
    if (is_prime_ideal(i)) out.push_back(i);
  }
  return out;
}

std::vector<Ideal> enumerate_maximal_ideals(const FiniteLattice& l) {
  const std::vector<Ideal> ideals = all_ideals(l);
  std::vector<Ideal> out;
  for (const Ideal& i : ideals) {
    if (!i.is_proper()) continue;
    bool maximal = true;
    for (const Ideal& j : ideals) {
      if (j.is_proper() && subset(i.members, j.members) && i.members != j.members) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

Mask coatoms(const FiniteLattice& l) { return l.coatoms(); }

Ideal jacobson_closure(const FiniteLattice& l, const Ideal& i) {
  Mask out = 0;
  for (int d = 0; d < l.size(); ++d) {
    bool in = true;
    for (int b = 0; b < l.size() && in; ++b) {
      if (l.join(d, b) != l.top()) continue;
      bool witnessed = false;
      for_each_bit(i.members, [&](int c) {
        witnessed = witnessed || l.join(b, c) == l.top();
      });
      in = witnessed;
    }
    if (in) out |= bit(d);
  }
  return Ideal(l, out);
}

Ideal intersection_of_maximals_containing(const FiniteLattice& l, const Ideal& i) {
  Mask acc = l.all();
  bool any = false;
  for (const Ideal& m : enumerate_maximal_ideals(l)) {
    if (subset(i.members, m.members)) {
      acc &= m.members;
      any = true;
    }
  }
  if (!any) acc = l.all();
  return Ideal(l, acc);
}

}  // namespace maxspec
