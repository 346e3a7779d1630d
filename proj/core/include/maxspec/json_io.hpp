#pragma once

#include <string>
#include <vector>

#include "maxspec/lattice.hpp"
#include "maxspec/rings.hpp"
#include "maxspec/topology.hpp"

namespace maxspec::io {

enum class InputKind { Lattice, Space, Ring };

// Detects the payload by its keys: elements+leq -> lattice, points+opens ->
// space, elements+add+mul -> ring.
InputKind detect_kind(const std::string& json_text);

// Loaders throw StructureError with a witness-naming diagnostic. The space
// loader closes the given family under union/intersection, so a basis is
// accepted; the lattice loader derives meet/join from leq and rejects
// non-lattices.
FiniteLattice load_lattice(const std::string& json_text);
FiniteSpace load_space(const std::string& json_text);
FiniteCommRing load_ring(const std::string& json_text);

// Canonical output: sorted keys, sorted element lists; emitted JSON
// re-loads to an equal structure.
std::string save_lattice(const FiniteLattice& l);
std::string save_space(const FiniteSpace& x);
std::string save_ring(const FiniteCommRing& r);

// All invariant violations of the payload, one line each; empty means ok.
std::vector<std::string> validate(const std::string& json_text);

// One-line summary for a valid payload, e.g. "ok: distributive lattice, 4
// elements".
std::string describe(const std::string& json_text);

}  // namespace maxspec::io
