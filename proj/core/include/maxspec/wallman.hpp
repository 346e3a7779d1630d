#pragma once

#include <string>
#include <vector>

#include "maxspec/ideals.hpp"
#include "maxspec/lattice.hpp"
#include "maxspec/topology.hpp"

namespace maxspec {

/// Three-valued outcome for hypothesis-gated theorem checks, so corpus
/// sweeps can tell counterexamples from inapplicable instances.
enum class CheckStatus { Holds, Fails, HypothesesNotMet };

struct CheckOutcome {
  CheckStatus status;
  std::string detail;  // failed hypothesis or counterexample witness

  bool holds() const { return status == CheckStatus::Holds; }
};

// B (a bounded sublattice of the opens of X, must be a base -- precondition
// error otherwise): every point of every member U is avoided by some member
// V with U | V = X.
bool is_wallman_base(const TopBase& b);

// Whenever every c co-covering a also co-covers b, a <= b.
bool is_conjunctive(const FiniteLattice& d);

// Relative conjunctivity of a sublattice b inside the frame of its ambient
// lattice.
bool is_A_conjunctive(const FiniteLattice& ambient, const Sublattice& b);

// Co-covers separated by disjoint elements.
bool is_normal(const FiniteLattice& d);
// As is_normal, with "disjoint" weakened to "meet in the closure of the
// zero ideal under the maximal-spectrum topology".
bool is_seminormal(const FiniteLattice& d);

// The frame is conjunctive over itself.
bool is_subfit(const FiniteLattice& a);

// Every element is the meet of the co-atoms above it.
bool is_coatomistic(const FiniteLattice& f);

// Normal, plus the approximation property: each a is the join of elements c
// admitting b with b&c = 0 and b|a = 1. Sequences collapse to finite
// families on a finite lattice.
bool is_alexandrov_algebra(const FiniteLattice& d);

// Every family joining to top has a finite subfamily joining to top;
// constant true finitely but executed literally.
bool is_countably_compact(const FiniteLattice& d);

// b is well inside a: some c has c&b = 0 and c|a = 1.
bool well_inside(const FiniteLattice& a, int b, int x);

// The completely-below relation: the largest interpolative subrelation of
// well-inside, computed by deleting pairs without an interpolant until
// stable. Returned as rows indexed by the right argument:
// result[a] = { b : b completely below a }.
std::vector<Mask> completely_below(const FiniteLattice& a);

// As completely_below, but deleting one failing pair at a time in a
// seed-shuffled order; the fixpoint is order-independent and the tests
// assert as much.
std::vector<Mask> completely_below_seeded(const FiniteLattice& a, std::uint64_t seed);

// Every a is the join of the elements completely below it.
bool is_completely_regular(const FiniteLattice& a);

// Ideals in which every member is completely below another member.
std::vector<Ideal> completely_regular_ideals(const FiniteLattice& a);

// On a normal subfit finite frame, the completely regular ideals coincide
// with the ideals closed under the maximal-spectrum topology. Hypotheses
// are checked and reported rather than assumed.
CheckOutcome cr_equals_jm_closed(const FiniteLattice& a);

// Prime ideals i of b such that every union (formed in the opens of the
// space) of a subset of i that happens to lie in b is again in i.
std::vector<Ideal> primes_closed_under_unions(const TopBase& b);

}  // namespace maxspec
