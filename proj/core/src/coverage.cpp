#include "maxspec/coverage.hpp"

#include <algorithm>

#include "maxspec/wallman.hpp"

namespace maxspec {

Sieve::Sieve(const FiniteLattice& l, int a, Mask m)
    : lattice(&l), anchor(a), members(m) {
  if (a < 0 || a >= l.size()) throw StructureError("sieve anchor out of range");
  if (!subset(m, l.downset(a))) throw StructureError("sieve member above its anchor");
  if (!l.poset().is_downclosed(m)) throw StructureError("sieve not down-closed");
}

std::vector<Mask> sieves_on(const FiniteLattice& l, int anchor) {
  const Mask down = l.downset(anchor);
  std::vector<Mask> out;
  for (const Mask d : l.poset().all_downsets()) {
    if (subset(d, down)) out.push_back(d);
  }
  return out;
}

GrothendieckTopology::GrothendieckTopology(const FiniteLattice& l, std::string name,
                                           CoverFn covers)
    : lattice_(&l), name_(std::move(name)), covers_(std::move(covers)) {}

bool GrothendieckTopology::covers(int anchor, Mask sieve_members) const {
  return covers_(anchor, sieve_members);
}

GrothendieckTopology coherent_topology(const FiniteLattice& d) {
  if (!d.is_distributive()) throw StructureError("coherent topology needs a distributive lattice");
  return GrothendieckTopology(d, "coh", [&d](int c, Mask s) {
    return d.join_of(s) == c;
  });
}

GrothendieckTopology maximal_topology(const FiniteLattice& d) {
  if (!d.is_distributive()) throw StructureError("maximal topology needs a distributive lattice");
  return GrothendieckTopology(d, "max", [&d](int c, Mask s) {
    const int join = d.join_of(s);
    for (int e = 0; e < d.size(); ++e) {
      if (d.join(c, e) == d.top() && d.join(join, e) != d.top()) return false;
    }
    return true;
  });
}

GrothendieckTopology induced_canonical(const Sublattice& b) {
  const FiniteLattice& ambient = *b.ambient;
  for (int x = 0; x < ambient.size(); ++x) {
    if (ambient.join_of(b.ambient_mask & ambient.downset(x)) != x) {
      throw StructureError("sublattice is not a base: ambient element '" +
                           ambient.id(x) + "' is not a join of members");
    }
  }
  const std::vector<int> embed = b.embed;
  return GrothendieckTopology(b.lattice, "can", [&ambient, embed](int c, Mask s) {
    int acc = ambient.bottom();
    for_each_bit(s, [&](int i) { acc = ambient.join(acc, embed[i]); });
    return acc == embed[c];
  });
}

GrothendieckTopology cr_topology(const FiniteLattice& a) {
  if (!a.is_distributive()) throw StructureError("cr topology needs a finite frame");
  const std::vector<Mask> below = completely_below(a);
  return GrothendieckTopology(a, "cr", [below](int c, Mask s) {
    return subset(below[c], s);
  });
}

GrothendieckTopology countable_topology(const FiniteLattice& d) {
  return GrothendieckTopology(d, "countable", [&d](int c, Mask s) {
    return d.join_of(s) == c;
  });
}

bool verify_topology_axioms(const GrothendieckTopology& j) {
  const FiniteLattice& l = j.lattice();
  for (int c = 0; c < l.size(); ++c) {
    if (!j.covers(c, l.downset(c))) return false;  // maximality
    const std::vector<Mask> sieves = sieves_on(l, c);
    for (const Mask s : sieves) {
      if (!j.covers(c, s)) continue;
      // stability
      bool stable = true;
      for_each_bit(l.downset(c), [&](int d) {
        stable = stable && j.covers(d, s & l.downset(d));
      });
      if (!stable) return false;
      // transitivity
      for (const Mask r : sieves) {
        bool r_locally_covers = true;
        for_each_bit(s, [&](int e) {
          r_locally_covers = r_locally_covers && j.covers(e, r & l.downset(e));
        });
        if (r_locally_covers && !j.covers(c, r)) return false;
      }
    }
  }
  return true;
}

namespace {

// Two topologies are comparable when they live on the same lattice object
// or on structurally identical copies (same ids in the same order, same
// order relation).
void check_same_carrier(const FiniteLattice& a, const FiniteLattice& b) {
  if (&a == &b) return;
  if (a.size() != b.size() || a.poset().ids() != b.poset().ids()) {
    throw StructureError("topologies live on different lattices");
  }
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (a.leq(i, j) != b.leq(i, j)) {
        throw StructureError("topologies live on different lattices");
      }
    }
  }
}

}  // namespace

bool topology_finer_or_equal(const GrothendieckTopology& j1,
                             const GrothendieckTopology& j2) {
  const FiniteLattice& l = j1.lattice();
  check_same_carrier(l, j2.lattice());
  for (int c = 0; c < l.size(); ++c) {
    for (const Mask s : sieves_on(l, c)) {
      if (j1.covers(c, s) && !j2.covers(c, s)) return false;
    }
  }
  return true;
}

bool topology_equal(const GrothendieckTopology& j1, const GrothendieckTopology& j2) {
  const FiniteLattice& l = j1.lattice();
  check_same_carrier(l, j2.lattice());
  for (int c = 0; c < l.size(); ++c) {
    for (const Mask s : sieves_on(l, c)) {
      if (j1.covers(c, s) != j2.covers(c, s)) return false;
    }
  }
  return true;
}

bool is_j_closed(const GrothendieckTopology& j, const Ideal& i) {
  const FiniteLattice& l = j.lattice();
  for (int c = 0; c < l.size(); ++c) {
    if (i.contains(c)) continue;
    if (j.covers(c, i.members & l.downset(c))) return false;
  }
  return true;
}

Ideal j_closure(const GrothendieckTopology& j, const Ideal& i) {
  const FiniteLattice& l = j.lattice();
  Mask cur = i.members;
  for (;;) {
    Mask next = cur;
    // anchors forced in by covering sieves lying inside the set
    for (int c = 0; c < l.size(); ++c) {
      if (!has_bit(next, c) && j.covers(c, cur & l.downset(c))) next |= bit(c);
    }
    // re-close as an ideal
    for (;;) {
      Mask grown = next;
      for_each_bit(next, [&](int a) {
        grown |= l.downset(a);
        for_each_bit(next, [&](int b) { grown |= bit(l.join(a, b)); });
      });
      if (grown == next) break;
      next = grown;
    }
    if (next == cur) break;
    cur = next;
  }
  return Ideal(l, cur);
}

JIdealsFrame j_ideals_frame(const GrothendieckTopology& j) {
  const FiniteLattice& l = j.lattice();
  std::vector<Mask> closed;
  std::vector<std::string> ids;
  for (const Ideal& i : all_ideals(l)) {
    if (!is_j_closed(j, i)) continue;
    closed.push_back(i.members);
    std::string id = "{";
    const auto members = i.member_ids();
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k) id += ',';
      id += members[k];
    }
    id += '}';
    ids.push_back(std::move(id));
  }
  const int n = static_cast<int>(closed.size());
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) rel[a][b] = subset(closed[a], closed[b]);
  }
  FiniteLattice frame = FiniteLattice::from_order(FinitePoset(std::move(ids), rel));
  return JIdealsFrame{std::move(frame), std::move(closed)};
}

bool is_subcanonical(const GrothendieckTopology& j) {
  const FiniteLattice& l = j.lattice();
  for (int a = 0; a < l.size(); ++a) {
    if (!is_j_closed(j, principal_ideal(l, a))) return false;
  }
  return true;
}

std::vector<Filter> j_prime_filters(const GrothendieckTopology& j) {
  const FiniteLattice& l = j.lattice();
  std::vector<Filter> out;
  for (const Filter& f : all_filters(l)) {
    if (!f.is_proper()) continue;
    bool prime = true;
    for_each_bit(f.members, [&](int c) {
      if (!prime) return;
      for (const Mask s : sieves_on(l, c)) {
        if (j.covers(c, s) && (s & f.members) == 0) {
          prime = false;
          return;
        }
      }
    });
    if (prime) out.push_back(f);
  }
  return out;
}

}  // namespace maxspec
