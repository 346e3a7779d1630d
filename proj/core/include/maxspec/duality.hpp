#pragma once

#include <string>
#include <vector>

#include "maxspec/topology.hpp"
#include "maxspec/wallman.hpp"

namespace maxspec {

// Membership in the category of T0 spaces with a Wallman base whose point
// evaluation is surjective onto the maximal ideals.
bool in_top_dlat_w(const TopBase& b);

/// An arrow (X, B) -> (Y, B'): a continuous point map whose inverse image
/// carries B' into B. Construction recomputes the base restriction and
/// rejects maps that do not restrict; a supplied restriction table is
/// cross-checked against the recomputed one.
struct TopDLatArrow {
  TopDLatArrow(const TopBase& src, const TopBase& dst, std::vector<int> point_map);
  TopDLatArrow(const TopBase& src, const TopBase& dst, std::vector<int> point_map,
               const std::vector<int>& supplied_restriction);

  const TopBase* source;
  const TopBase* target;
  std::vector<int> point_map;
  std::vector<int> base_restriction;  // target base index -> source base index

  ContinuousMap as_continuous() const;
};

// H on objects: the base lattice. (Kept as a function for symmetry with the
// arrow part; the result is asserted conjunctive by the duality sweeps.)
FiniteLattice functor_h(const TopBase& b);

// H on arrows: the inverse-image restriction B' -> B.
LatticeHom functor_h_arrow(const TopDLatArrow& f);

/// K on objects: the maximal spectrum together with the image of the point
/// evaluation map as its base. The base member for lattice element d is the
/// set of maximal ideals avoiding d.
struct KObject {
  Spectrum max;                    // max_space of the input lattice
  std::vector<Mask> base_members;  // opens of max.space forming Im(eta)
  TopBase base() const { return TopBase(max.space, base_members); }
};

// Requires a conjunctive input (precondition error otherwise).
KObject functor_k(const FiniteLattice& d);

// Preimage under f of every maximal ideal of the target is maximal in the
// source.
bool is_maximal_hom(const LatticeHom& f);

// K on arrows: the continuous map max(D') -> max(D) sending an ideal to its
// preimage. Requires f maximal.
ContinuousMap functor_k_arrow(const LatticeHom& f, const Spectrum& max_source,
                              const Spectrum& max_target);

// K(H(-)) roundtrip: eta is a homeomorphism X -> Max(B) carrying each base
// member U onto the basic open of ideals avoiding U.
bool roundtrip_space(const TopBase& b);

// H(K(-)) roundtrip: d -> (basic open of d) is a lattice isomorphism onto
// the image base.
bool roundtrip_lattice(const FiniteLattice& d);

// The eta-square for an arrow: eta_Y(f(x)) must be the preimage under the
// base restriction of eta_X(x).
bool naturality_square(const TopDLatArrow& f);

/// The co-atom realization of the maximal spectrum of a finite frame:
/// points are the co-atoms, opens are generated by { b : b not <= a }.
struct CoatomSpace {
  FiniteSpace space;
  std::vector<int> coatom_elements;  // point -> frame element
};
CoatomSpace t1_max_space(const FiniteLattice& f);

// The co-atom space is homeomorphic to max_space(f) via b -> principal
// ideal of b.
bool t1_coatom_homeo(const FiniteLattice& f);

// Compact conjunctive frames; compactness is executed literally even though
// finite frames are always compact.
bool is_t1_frm(const FiniteLattice& f);

// For every co-atom b of the target, the join of { a : f(a) <= b } is a
// co-atom of the source; agrees with is_maximal_hom on finite lattices.
bool frame_hom_maximal_coatom_condition(const LatticeHom& f);

}  // namespace maxspec
