#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxspec/base.hpp"

namespace maxspec {

/// A finite partially ordered set over opaque string element ids.
///
/// The order is stored as per-element up-sets and down-sets (bitmasks over
/// element indices). Construction validates reflexivity, antisymmetry and
/// transitivity, naming the first offending pair in the diagnostic.
class FinitePoset {
 public:
  // leq_pairs lists the pairs (x, y) with x <= y; reflexive pairs may be
  // omitted, everything else must be spelled out (no transitive closure is
  // taken -- a missing consequence is a validation error).
  FinitePoset(std::vector<std::string> ids,
              const std::vector<std::pair<std::string, std::string>>& leq_pairs);

  // Relation given as a matrix: rel[i][j] true iff ids[i] <= ids[j].
  FinitePoset(std::vector<std::string> ids,
              const std::vector<std::vector<bool>>& rel);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  // Index of an id, or -1 when absent.
  int index_of(const std::string& id) const;

  bool leq(int a, int b) const { return has_bit(up_[a], b); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  Mask upset(int a) const { return up_[a]; }
  Mask downset(int a) const { return down_[a]; }
  Mask all() const { return full_mask(size()); }

  // True iff s is closed downwards / upwards under the order.
  bool is_downclosed(Mask s) const;
  bool is_upclosed(Mask s) const;

  // b covers a: a < b with nothing strictly between.
  bool covers(int b, int a) const;
  // Elements of s that are maximal/minimal within s.
  Mask maximal_in(Mask s) const;
  Mask minimal_in(Mask s) const;

  // Indices in a linear extension (non-decreasing along the order).
  std::vector<int> linear_extension() const;

  // All down-closed subsets, deterministically ordered by (size, mask).
  std::vector<Mask> all_downsets() const;

  bool isomorphic_to(const FinitePoset& other) const;

 private:
  FinitePoset() = default;
  void validate() const;

  std::vector<std::string> ids_;
  std::vector<Mask> up_;    // up_[a] = { b : a <= b }
  std::vector<Mask> down_;  // down_[a] = { b : b <= a }
};

}  // namespace maxspec
