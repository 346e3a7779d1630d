#pragma once

#include <functional>
#include <string>
#include <vector>

#include "maxspec/lattice.hpp"
#include "maxspec/rings.hpp"
#include "maxspec/topology.hpp"

namespace maxspec::sweep {

/// The instances every registered theorem is swept over: the distributive
/// lattices of enumerate_corpus, all finite spaces on a few points (up to
/// homeomorphism), and the modular rings with a handful of products.
struct Corpus {
  std::vector<FiniteLattice> lattices;
  std::vector<FiniteSpace> spaces;
  std::vector<FiniteCommRing> rings;
  std::vector<std::string> ring_names;
  int max_lattice_size = 8;
  int max_points = 4;
};

Corpus build_corpus(int max_lattice_size = 8, int max_points = 4, int ring_max = 60);

// All topologies on the point set of x that are subfamilies of its opens
// (every union/intersection-closed bounded subfamily), i.e. the candidate
// bounded sublattices of the open-set frame.
std::vector<std::vector<Mask>> sublattice_families_of_opens(const FiniteSpace& x);

/// Aggregated verdict of one theorem sweep. A theorem passes when nothing
/// failed and its side conditions (required positive/negative witnesses,
/// minimum non-vacuous instance counts) hold.
struct TheoremResult {
  std::string id;
  int pass = 0;
  int fail = 0;
  int hypotheses_not_met = 0;
  std::string first_counterexample;
  std::vector<std::string> notes;
  bool side_conditions_ok = true;
  std::string side_condition_detail;

  bool ok() const { return fail == 0 && side_conditions_ok; }
};

struct Theorem {
  std::string id;
  std::string description;
  std::function<TheoremResult(const Corpus&)> run;
};

// The stable public registry, one theorem per acceptance criterion.
const std::vector<Theorem>& registry();

std::vector<std::string> theorem_ids();

// Runs one registered theorem; throws StructureError on an unknown id,
// listing the valid ones.
TheoremResult run_theorem(const std::string& id, const Corpus& corpus);

}  // namespace maxspec::sweep
