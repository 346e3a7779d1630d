#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxspec/lattice.hpp"
#include "maxspec/topology.hpp"

namespace maxspec {

/// A finite commutative ring with unit, given by explicit addition and
/// multiplication tables. Construction validates every ring axiom and names
/// the failed law with witnesses.
class FiniteCommRing {
 public:
  FiniteCommRing(std::vector<std::string> ids, std::vector<int> add,
                 std::vector<int> mul, int zero, int one);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  int index_of(const std::string& id) const;

  int add(int a, int b) const { return add_[a * size() + b]; }
  int mul(int a, int b) const { return mul_[a * size() + b]; }
  int neg(int a) const { return neg_[a]; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  Mask all() const { return full_mask(size()); }

  // a^n for n >= 1.
  int power(int a, int n) const;

 private:
  std::vector<std::string> ids_;
  std::vector<int> add_, mul_, neg_;
  int zero_, one_;
};

FiniteCommRing zmod(int n);
FiniteCommRing ring_product(const FiniteCommRing& r, const FiniteCommRing& s);

// Exhaustive bijection search; feasible for rings of at most 8 elements.
bool ring_isomorphic(const FiniteCommRing& r, const FiniteCommRing& s);

/// A ring ideal as an element mask: additive subgroup absorbing
/// multiplication. Invalid sets are rejected.
struct RingIdeal {
  RingIdeal(const FiniteCommRing& r, Mask m);

  const FiniteCommRing* ring;
  Mask members;

  bool contains(int a) const { return has_bit(members, a); }
  bool is_proper() const { return members != ring->all(); }
  // "(g)" for a principal ideal with minimal generator g, else the member
  // list.
  std::string label() const;

  friend bool operator==(const RingIdeal& a, const RingIdeal& b) {
    return a.ring == b.ring && a.members == b.members;
  }
};

RingIdeal principal_ring_ideal(const FiniteCommRing& r, int a);
RingIdeal ring_ideal_generated_by(const FiniteCommRing& r, Mask gens);
RingIdeal ideal_sum(const RingIdeal& i, const RingIdeal& j);

// All ideals, found by closing the principal ideals under sums;
// deterministically ordered by (size, mask).
std::vector<RingIdeal> enumerate_ring_ideals(const FiniteCommRing& r);

bool is_prime_ring_ideal(const RingIdeal& i);
bool is_maximal_ring_ideal(const RingIdeal& i);

// { a : a^n in i for some n >= 1 }; exponents up to |R| suffice.
RingIdeal radical(const RingIdeal& i);

/// Zariski-style spectra: points are prime (resp. maximal) ideals, with the
/// topology generated by the loci where a fixed element stays invertible.
struct RingSpectrum {
  FiniteSpace space;
  std::vector<RingIdeal> points;
  std::vector<Mask> basic_open;  // ring element a -> { P : a not in P }
};

RingSpectrum zariski_spec(const FiniteCommRing& r);
RingSpectrum max_spec_ring(const FiniteCommRing& r);

/// The reticulation of a finite ring: the distributive lattice of radical
/// ideals under inclusion, with join the radical of the sum and meet the
/// intersection, together with the class map a -> radical((a)).
struct Reticulation {
  FiniteLattice lattice;
  std::vector<Mask> element_ideal;  // lattice element -> radical ideal mask
  std::vector<int> class_map;       // ring element -> lattice element
};

Reticulation reticulation(const FiniteCommRing& r);

// Independent oracle for the reticulation order: the class of a lies below
// the class of b iff a^n = b*c has a solution.
bool reticulation_order_witness(const FiniteCommRing& r, int a, int b);

// { a : for every b some c has ab + c + abc in i }; agrees with the
// intersection of the maximal ideals containing i.
RingIdeal jacobson_radical_ring(const FiniteCommRing& r, const RingIdeal& i);

// The oracle side of the agreement above.
RingIdeal intersection_of_maximals_ring(const FiniteCommRing& r, const RingIdeal& i);

// The covering-family maximality criterion for a prime ideal, evaluated by
// the monotone reduction: p fails at c iff the largest admissible family
// inside p, namely radical((c)) & p, already satisfies the covering
// condition. Family admissibility is quantified over ideals rather than
// finite element sets (equivalent on a finite ring).
bool is_almost_maximal(const FiniteCommRing& r, const RingIdeal& p);

// Literal variant enumerating all subfamilies of radical((c)); exponential,
// intended for rings of at most 8 elements as a cross-check.
bool is_almost_maximal_bruteforce(const FiniteCommRing& r, const RingIdeal& p);

/// A unital ring homomorphism; construction validates additivity,
/// multiplicativity and preservation of one.
struct RingHom {
  RingHom(const FiniteCommRing& src, const FiniteCommRing& dst, std::vector<int> m);

  const FiniteCommRing* source;
  const FiniteCommRing* target;
  std::vector<int> map;
};

// Preimage of every maximal ideal of the target is maximal in the source.
bool is_maximal_ring_hom(const RingHom& f);

// The induced lattice map between the reticulations: radical ideal I to the
// radical of the ideal generated by its image.
LatticeHom induced_reticulation_hom(const RingHom& f, const Reticulation& ls,
                                    const Reticulation& lt);

// The covering-family criterion for ring homomorphisms, evaluated on the
// reticulations as a morphism-of-sites condition between the
// maximal-spectrum topologies.
bool ring_hom_family_criterion(const RingHom& f);

// Sober-form conjunctivity: elements contained in the same maximal ideals
// are contained in the same prime ideals.
bool is_conjunctive_ring_sober_form(const FiniteCommRing& r);

// Reticulation-form: the reticulation is a conjunctive lattice.
bool is_conjunctive_ring_reticulation_form(const FiniteCommRing& r);

// Both criteria, asserted to agree (finite spectra are sober).
bool is_conjunctive_ring(const FiniteCommRing& r);

// The canonical map from the reticulation to the opens of the maximal
// spectrum is injective.
bool reticulation_to_max_opens_injective(const FiniteCommRing& r);

// P -> { classes contained in P } is a homeomorphism from the Zariski
// spectrum onto the spectrum of the reticulation.
bool spec_reticulation_agreement(const FiniteCommRing& r);

}  // namespace maxspec
