#pragma once

#include <string>
#include <vector>

#include "maxspec/ideals.hpp"
#include "maxspec/lattice.hpp"

namespace maxspec {

/// A finite topological space: point ids plus the full family of open sets
/// (as point masks). The family must contain the empty set and the whole
/// space and be closed under binary union and intersection; from_basis
/// closes an arbitrary family instead of rejecting it.
class FiniteSpace {
 public:
  FiniteSpace(std::vector<std::string> point_ids, std::vector<Mask> opens);

  static FiniteSpace from_basis(std::vector<std::string> point_ids,
                                std::vector<Mask> family);
  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);
  static FiniteSpace sierpinski();  // points x, y; opens {}, {x}, {x,y}

  int size() const { return static_cast<int>(point_ids_.size()); }
  const std::string& point_id(int i) const { return point_ids_[i]; }
  const std::vector<std::string>& point_ids() const { return point_ids_; }
  int point_index(const std::string& id) const;
  Mask all_points() const { return full_mask(size()); }

  const std::vector<Mask>& opens() const { return opens_; }
  bool is_open(Mask s) const;
  bool is_closed(Mask s) const { return is_open(all_points() & ~s); }
  Mask closure(Mask s) const;
  Mask interior(Mask s) const;

  // The frame of open sets as a FiniteLattice; element i of the lattice is
  // opens()[i], the id being the point list, e.g. "{x,y}".
  FiniteLattice opens_lattice() const;

 private:
  std::vector<std::string> point_ids_;
  std::vector<Mask> opens_;  // sorted by (size, mask)
};

/// A continuous point map; construction checks continuity (preimages of
/// opens are open).
struct ContinuousMap {
  ContinuousMap(const FiniteSpace& src, const FiniteSpace& dst, std::vector<int> m);

  const FiniteSpace* source;
  const FiniteSpace* target;
  std::vector<int> map;

  Mask preimage(Mask target_set) const;
  int apply(int p) const { return map[p]; }
};

bool is_t0(const FiniteSpace& x);
bool is_t1(const FiniteSpace& x);
bool is_hausdorff(const FiniteSpace& x);
// Literal cover search over the open subfamilies covering the given subset;
// constant true on finite spaces but kept executable for relative use.
bool is_compact(const FiniteSpace& x);
bool is_relatively_compact(const FiniteSpace& x, Mask subset_points);
// Every irreducible closed set has a unique generic point.
bool is_sober(const FiniteSpace& x);

bool is_dense(const FiniteSpace& x, Mask s);
bool is_homeomorphism(const ContinuousMap& f);
// Exhaustive search over point bijections.
bool homeomorphic(const FiniteSpace& x, const FiniteSpace& y);

/// Sobrification of a finite space: its T0 quotient (finite T0 spaces are
/// sober) together with the class of each original point.
struct Sobrification {
  FiniteSpace space;
  std::vector<int> point_map;  // original point -> quotient point

  // The universal map into the quotient; borrows both spaces.
  ContinuousMap quotient_map(const FiniteSpace& original) const {
    return ContinuousMap(original, space, point_map);
  }
};
Sobrification sobrification(const FiniteSpace& x);

/// The spectrum of a distributive lattice: points are the prime (resp.
/// maximal) ideals, the topology is generated by the sets of ideals avoiding
/// a fixed lattice element. The ideals borrow the input lattice.
struct Spectrum {
  FiniteSpace space;
  std::vector<Ideal> points;        // parallel to space points
  std::vector<Mask> basic_open;     // lattice element b -> { P : b not in P }
};

Spectrum spec_space(const FiniteLattice& d);
Spectrum max_space(const FiniteLattice& d);

/// A pair (X, B): B a bounded sublattice of the opens of X, given by the
/// member point-masks. Owns a copy of the space, so temporaries are safe.
/// Carries the data needed by the Wallman-style predicates and the
/// space/lattice duality.
class TopBase {
 public:
  TopBase(FiniteSpace x, std::vector<Mask> member_opens);
  // B = all opens of X.
  static TopBase full(FiniteSpace x);

  const FiniteSpace& space() const { return space_; }
  int size() const { return static_cast<int>(members_.size()); }
  Mask member_points(int i) const { return members_[i]; }
  const std::vector<Mask>& members() const { return members_; }
  int index_of_open(Mask open) const;  // -1 when absent

  // B as an abstract lattice (inclusion order); element i is members()[i].
  const FiniteLattice& lattice() const { return lattice_; }

  // Every open of X is a union of members.
  bool is_base() const;

 private:
  FiniteSpace space_;
  std::vector<Mask> members_;
  FiniteLattice lattice_;
};

/// Per-point result of the map x -> { b in B : x not in b }.
struct EtaPoint {
  Ideal ideal;
  bool prime;
  bool maximal;
};
std::vector<EtaPoint> eta_map(const TopBase& b);

// eta as a continuous map X -> max_space(B.lattice()); requires every eta
// ideal to be maximal (i.e. B a Wallman base).
ContinuousMap eta_into_max(const TopBase& b, const Spectrum& max_of_b);

}  // namespace maxspec
