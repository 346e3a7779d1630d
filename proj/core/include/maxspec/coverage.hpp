#pragma once

#include <functional>
#include <string>
#include <vector>

#include "maxspec/ideals.hpp"
#include "maxspec/lattice.hpp"

namespace maxspec {

/// A sieve on an element c: a down-closed subset of the downset of c.
struct Sieve {
  Sieve(const FiniteLattice& l, int anchor, Mask members);

  const FiniteLattice* lattice;
  int anchor;
  Mask members;
};

// All sieves on the given anchor, ordered by (size, mask).
std::vector<Mask> sieves_on(const FiniteLattice& l, int anchor);

/// A Grothendieck topology on a finite lattice, kept as a covering
/// predicate: covers(c, S) decides whether the sieve S covers c. Cover
/// families are materialized only on demand by the callers that need them
/// (axiom checks, equality); the predicate form is the primary
/// representation. The topology borrows the lattice: keep it alive.
class GrothendieckTopology {
 public:
  using CoverFn = std::function<bool(int, Mask)>;

  GrothendieckTopology(const FiniteLattice& l, std::string name, CoverFn covers);

  const FiniteLattice& lattice() const { return *lattice_; }
  const std::string& name() const { return name_; }

  bool covers(int anchor, Mask sieve_members) const;
  bool covers(const Sieve& s) const { return covers(s.anchor, s.members); }

 private:
  const FiniteLattice* lattice_;
  std::string name_;
  CoverFn covers_;
};

// S covers c iff the join of S is c (finitely, "some finite subfamily joins
// to c" collapses to this).
GrothendieckTopology coherent_topology(const FiniteLattice& d);

// S covers c iff every d with c|d = 1 also satisfies (join S)|d = 1. The
// original finite-subset formulation is equivalent on a finite lattice; the
// equivalence is asserted by brute force in the tests.
GrothendieckTopology maximal_topology(const FiniteLattice& d);

// Topology induced on the base-sublattice b by the canonical topology of
// its ambient frame: S covers x iff the ambient join of S equals x.
// Fails when b is not a base, naming an inexpressible ambient element.
GrothendieckTopology induced_canonical(const Sublattice& b);

// S covers a iff every element completely below a belongs to S.
GrothendieckTopology cr_topology(const FiniteLattice& a);

// Sieves containing countable covering families; on a finite lattice every
// family is countable, so this is the canonical topology of the finite
// frame (S covers d iff join S = d). Kept as its own named constructor.
GrothendieckTopology countable_topology(const FiniteLattice& d);

// Maximality, stability and transitivity, checked by sieve enumeration.
bool verify_topology_axioms(const GrothendieckTopology& j);

// Equality as cover families over the common lattice.
bool topology_equal(const GrothendieckTopology& j1, const GrothendieckTopology& j2);

// True iff j1-covers are j2-covers.
bool topology_finer_or_equal(const GrothendieckTopology& j1,
                             const GrothendieckTopology& j2);

// An ideal is j-closed when every covering sieve lying inside it forces its
// anchor in.
bool is_j_closed(const GrothendieckTopology& j, const Ideal& i);

// Smallest j-closed ideal containing i (least-fixpoint saturation).
Ideal j_closure(const GrothendieckTopology& j, const Ideal& i);

/// The frame of all j-closed ideals ordered by inclusion.
struct JIdealsFrame {
  FiniteLattice lattice;
  std::vector<Mask> ideals;  // lattice element -> member mask in j's lattice
};
JIdealsFrame j_ideals_frame(const GrothendieckTopology& j);

// Every principal ideal is j-closed.
bool is_subcanonical(const GrothendieckTopology& j);

// Proper filters F such that every covering sieve on a member of F meets F.
std::vector<Filter> j_prime_filters(const GrothendieckTopology& j);

}  // namespace maxspec
