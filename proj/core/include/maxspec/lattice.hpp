#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxspec/poset.hpp"

namespace maxspec {

/// A finite bounded lattice: a poset together with bottom/top and explicit
/// meet/join tables. Construction checks that the tables agree with the
/// greatest-lower/least-upper bounds recomputed from the order.
///
/// Every finite lattice here is bounded; the one-element lattice (0 = 1) is
/// admitted and predicates downstream must cope with it.
class FiniteLattice {
 public:
  // Derives meet/join from the order; fails with the offending pair when
  // some glb/lub does not exist or the poset is empty.
  static FiniteLattice from_order(FinitePoset poset);

  // Explicit tables, validated against the order.
  static FiniteLattice from_tables(FinitePoset poset, std::vector<int> meet,
                                   std::vector<int> join, int bottom, int top);

  const FinitePoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& id(int i) const { return poset_.id(i); }
  int index_of(const std::string& id) const { return poset_.index_of(id); }

  bool leq(int a, int b) const { return poset_.leq(a, b); }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  Mask upset(int a) const { return poset_.upset(a); }
  Mask downset(int a) const { return poset_.downset(a); }
  Mask all() const { return poset_.all(); }

  // Join / meet over a subset; empty join is bottom, empty meet is top.
  int join_of(Mask s) const;
  int meet_of(Mask s) const;

  // a&(b|c) == (a&b)|(a&c) for all triples; cached at construction.
  bool is_distributive() const { return distributive_; }

  // Elements covered only by top (and distinct from it).
  Mask coatoms() const;
  // Join-irreducible elements: x != 0 with exactly one lower cover.
  Mask join_irreducibles() const;
  // Every element has a complement (makes a distributive lattice Boolean).
  bool is_boolean() const;

  bool isomorphic_to(const FiniteLattice& other) const;

 private:
  FiniteLattice(FinitePoset poset, std::vector<int> meet, std::vector<int> join,
                int bottom, int top);

  FinitePoset poset_;
  std::vector<int> meet_;  // flat size*size
  std::vector<int> join_;
  int bottom_ = -1;
  int top_ = -1;
  bool distributive_ = false;
};

/// A lattice homomorphism candidate: a total element map between two
/// lattices. is_lattice_hom checks preservation of 0, 1, meet and join.
struct LatticeHom {
  const FiniteLattice* source = nullptr;
  const FiniteLattice* target = nullptr;
  std::vector<int> map;  // source index -> target index

  int apply(int i) const { return map[i]; }
};

bool is_lattice_hom(const LatticeHom& f);

/// A bounded sublattice of an ambient lattice, carrying its own lattice
/// structure plus the embedding back into the ambient one (borrowed; the
/// ambient lattice must outlive the sublattice).
struct Sublattice {
  const FiniteLattice* ambient = nullptr;
  FiniteLattice lattice;
  std::vector<int> embed;  // lattice index -> ambient index
  Mask ambient_mask = 0;

  // Every ambient element is a join of members.
  bool is_base() const;
};

bool is_distributive(const FiniteLattice& l);

// Lattice of down-closed subsets of p, ordered by inclusion. Element ids are
// the member lists, e.g. "{a,b}". Always distributive.
FiniteLattice downset_lattice(const FinitePoset& p);

// Smallest bounded sublattice of l containing s (bounds adjoined, then
// closed under meet and join).
Sublattice sublattice_closure(const FiniteLattice& l, Mask s);

// Named small lattices used throughout the tests and the corpus.
namespace fixtures {
FiniteLattice one_element();
FiniteLattice c2();
FiniteLattice c3();
FiniteLattice b2();
FiniteLattice b3();
FiniteLattice l5();  // b2 with a new top adjoined
}  // namespace fixtures

// All pairwise non-isomorphic distributive lattices with at most max_size
// elements, realized as downset lattices of the posets on at most
// ceil(max_size/2) elements, plus the fixtures C3/B2/B3/L5 whenever they
// fit. Deterministic order: by size, then by a canonical form string.
std::vector<FiniteLattice> enumerate_corpus(int max_size);

}  // namespace maxspec
