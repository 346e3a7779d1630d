#pragma once

#include <vector>

#include "maxspec/lattice.hpp"

namespace maxspec {

/// An ideal of a finite lattice: down-closed, contains bottom, closed under
/// binary join. Invalid member sets are rejected at construction, never
/// repaired.
struct Ideal {
  Ideal(const FiniteLattice& l, Mask m);

  const FiniteLattice* lattice;
  Mask members;

  bool contains(int i) const { return has_bit(members, i); }
  bool is_proper() const { return members != lattice->all(); }
  std::vector<std::string> member_ids() const;  // sorted

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.lattice == b.lattice && a.members == b.members;
  }
};

/// A filter: up-closed, contains top, closed under binary meet.
struct Filter {
  Filter(const FiniteLattice& l, Mask m);

  const FiniteLattice* lattice;
  Mask members;

  bool contains(int i) const { return has_bit(members, i); }
  bool is_proper() const { return members != lattice->all(); }

  friend bool operator==(const Filter& a, const Filter& b) {
    return a.lattice == b.lattice && a.members == b.members;
  }
};

// Principal ideal / filter.
Ideal principal_ideal(const FiniteLattice& l, int a);
Filter principal_filter(const FiniteLattice& l, int a);

// Smallest ideal containing s: downset of the joins of subsets of s (plus
// bottom).
Ideal ideal_generated_by(const FiniteLattice& l, Mask s);

// All ideals / filters, enumerated as downsets (resp. upsets) filtered by
// join-closure (resp. meet-closure), deterministically ordered by the sorted
// member-id lists.
std::vector<Ideal> all_ideals(const FiniteLattice& l);
std::vector<Filter> all_filters(const FiniteLattice& l);

// Proper and meet-prime: a&b in I implies a in I or b in I.
bool is_prime_ideal(const Ideal& i);
// Proper and not strictly contained in a proper ideal.
bool is_maximal_ideal(const Ideal& i);

std::vector<Ideal> enumerate_prime_ideals(const FiniteLattice& l);
std::vector<Ideal> enumerate_maximal_ideals(const FiniteLattice& l);

// Elements distinct from top whose only strict upper bound is top; on a
// finite frame these generate exactly the maximal ideals.
Mask coatoms(const FiniteLattice& l);

// The closure sending I to { d : every b co-covering d is co-covered by some
// member of I }. A closure operator whose fixpoints are the ideals cut out
// by the maximal-spectrum topology; equals the intersection of the maximal
// ideals containing I (all of the lattice when there are none).
Ideal jacobson_closure(const FiniteLattice& l, const Ideal& i);

// Independent oracle for jacobson_closure.
Ideal intersection_of_maximals_containing(const FiniteLattice& l, const Ideal& i);

}  // namespace maxspec
