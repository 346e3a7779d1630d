#pragma once

#include <string>

#include "maxspec/lattice.hpp"
#include "maxspec/topology.hpp"

namespace maxspec::io {

// Hasse diagram of a lattice (cover edges, bottom at the bottom).
// Deterministic for a fixed input.
std::string lattice_dot(const FiniteLattice& l);

// Specialization diagram of a T0 space: x -> y when the closure of y
// contains x and the pair is a cover in the specialization order.
std::string space_dot(const FiniteSpace& x);

}  // namespace maxspec::io
