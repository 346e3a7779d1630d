#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxspec {

// Carrier sets of every structure in this library (lattice elements, space
// points, ring elements) are kept as uint64_t bitmasks, which caps carriers
// at 64 elements. Constructors reject anything larger with a StructureError.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

// Raised when a structure violates its defining axioms (non-transitive
// order, inconsistent operation table, ...). The message names the law and
// the offending witnesses.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask full_mask(int n) {
  return n >= kMaxElements ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr bool has_bit(Mask m, int i) { return (m >> i) & 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Calls f(i) for every set bit of m, in increasing order.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

}  // namespace maxspec
