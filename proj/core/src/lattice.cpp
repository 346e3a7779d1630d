#include "maxspec/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace maxspec {

namespace {

// Least element of s, or -1 when s has none.
int least_of(const FinitePoset& p, Mask s) {
  int found = -1;
  for_each_bit(s, [&](int i) {
    if (found == -1 && subset(s, p.upset(i))) found = i;
  });
  return found;
}

int greatest_of(const FinitePoset& p, Mask s) {
  int found = -1;
  for_each_bit(s, [&](int i) {
    if (found == -1 && subset(s, p.downset(i))) found = i;
  });
  return found;
}

}  // namespace

FiniteLattice FiniteLattice::from_order(FinitePoset poset) {
  const int n = poset.size();
  if (n == 0) throw StructureError("a lattice needs at least one element");
  std::vector<int> meet(n * n), join(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const int m = greatest_of(poset, poset.downset(a) & poset.downset(b));
      if (m < 0) {
        throw StructureError("no meet for pair ('" + poset.id(a) + "','" +
                             poset.id(b) + "')");
      }
      const int j = least_of(poset, poset.upset(a) & poset.upset(b));
      if (j < 0) {
        throw StructureError("no join for pair ('" + poset.id(a) + "','" +
                             poset.id(b) + "')");
      }
      meet[a * n + b] = meet[b * n + a] = m;
      join[a * n + b] = join[b * n + a] = j;
    }
  }
  const int bottom = least_of(poset, poset.all());
  const int top = greatest_of(poset, poset.all());
  if (bottom < 0) throw StructureError("no bottom element");
  if (top < 0) throw StructureError("no top element");
  return FiniteLattice(std::move(poset), std::move(meet), std::move(join), bottom, top);
}

FiniteLattice FiniteLattice::from_tables(FinitePoset poset, std::vector<int> meet,
                                         std::vector<int> join, int bottom, int top) {
  const int n = poset.size();
  if (n == 0) throw StructureError("a lattice needs at least one element");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int m = meet[a * n + b];
      const int g = greatest_of(poset, poset.downset(a) & poset.downset(b));
      if (m != g) {
        throw StructureError("meet table inconsistent with order at ('" +
                             poset.id(a) + "','" + poset.id(b) + "')");
      }
      const int j = join[a * n + b];
      const int l = least_of(poset, poset.upset(a) & poset.upset(b));
      if (j != l) {
        throw StructureError("join table inconsistent with order at ('" +
                             poset.id(a) + "','" + poset.id(b) + "')");
      }
    }
  }
  if (bottom != least_of(poset, poset.all()) || top != greatest_of(poset, poset.all())) {
    throw StructureError("bounds inconsistent with order");
  }
  return FiniteLattice(std::move(poset), std::move(meet), std::move(join), bottom, top);
}

FiniteLattice::FiniteLattice(FinitePoset poset, std::vector<int> meet,
                             std::vector<int> join, int bottom, int top)
    : poset_(std::move(poset)),
      meet_(std::move(meet)),
      join_(std::move(join)),
      bottom_(bottom),
      top_(top) {
  const int n = size();
  distributive_ = true;
  for (int a = 0; a < n && distributive_; ++a) {
    for (int b = 0; b < n && distributive_; ++b) {
      for (int c = 0; c < n; ++c) {
        if (this->meet(a, this->join(b, c)) !=
            this->join(this->meet(a, b), this->meet(a, c))) {
          distributive_ = false;
          break;
        }
      }
    }
  }
}

int FiniteLattice::join_of(Mask s) const {
  int acc = bottom_;
  for_each_bit(s, [&](int i) { acc = join(acc, i); });
  return acc;
}

int FiniteLattice::meet_of(Mask s) const {
  int acc = top_;
  for_each_bit(s, [&](int i) { acc = meet(acc, i); });
  return acc;
}

Mask FiniteLattice::coatoms() const {
  Mask out = 0;
  for (int a = 0; a < size(); ++a) {
    if (a == top_) continue;
    if ((upset(a) & ~bit(a)) == bit(top_)) out |= bit(a);
  }
  return out;
}

Mask FiniteLattice::join_irreducibles() const {
  Mask out = 0;
  for (int x = 0; x < size(); ++x) {
    if (x == bottom_) continue;
    int lower_covers = 0;
    for_each_bit(downset(x) & ~bit(x), [&](int y) {
      if (poset_.covers(x, y)) ++lower_covers;
    });
    if (lower_covers == 1) out |= bit(x);
  }
  return out;
}

bool FiniteLattice::is_boolean() const {
  if (!distributive_) return false;
  for (int a = 0; a < size(); ++a) {
    bool complemented = false;
    for (int b = 0; b < size() && !complemented; ++b) {
      complemented = meet(a, b) == bottom_ && join(a, b) == top_;
    }
    if (!complemented) return false;
  }
  return true;
}

bool FiniteLattice::isomorphic_to(const FiniteLattice& other) const {
  if (size() != other.size()) return false;
  if (distributive_ != other.distributive_) return false;
  if (distributive_) {
    // Birkhoff: a finite distributive lattice is determined by the poset of
    // its join-irreducibles.
    auto irr_poset = [](const FiniteLattice& l) {
      std::vector<int> irr;
      for_each_bit(l.join_irreducibles(), [&](int i) { irr.push_back(i); });
      const int m = static_cast<int>(irr.size());
      std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
      std::vector<std::string> ids;
      for (int i = 0; i < m; ++i) {
        ids.push_back(l.id(irr[i]));
        for (int j = 0; j < m; ++j) rel[i][j] = l.leq(irr[i], irr[j]);
      }
      return FinitePoset(std::move(ids), rel);
    };
    return irr_poset(*this).isomorphic_to(irr_poset(other));
  }
  // general case: order isomorphism implies lattice isomorphism
  return poset_.isomorphic_to(other.poset_);
}

bool is_lattice_hom(const LatticeHom& f) {
  const FiniteLattice& s = *f.source;
  const FiniteLattice& t = *f.target;
  if (static_cast<int>(f.map.size()) != s.size()) {
    throw StructureError("homomorphism map not total on the source");
  }
  for (int i : f.map) {
    if (i < 0 || i >= t.size()) throw StructureError("homomorphism map leaves the codomain");
  }
  if (f.map[s.bottom()] != t.bottom()) return false;
  if (f.map[s.top()] != t.top()) return false;
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (f.map[s.meet(a, b)] != t.meet(f.map[a], f.map[b])) return false;
      if (f.map[s.join(a, b)] != t.join(f.map[a], f.map[b])) return false;
    }
  }
  return true;
}

bool Sublattice::is_base() const {
  const FiniteLattice& a = *ambient;
  for (int x = 0; x < a.size(); ++x) {
    const Mask below = ambient_mask & a.downset(x);
    if (a.join_of(below) != x) return false;
  }
  return true;
}

bool is_distributive(const FiniteLattice& l) { return l.is_distributive(); }

FiniteLattice downset_lattice(const FinitePoset& p) {
  const std::vector<Mask> downs = p.all_downsets();
  const int n = static_cast<int>(downs.size());
  if (n > kMaxElements) {
    throw StructureError("downset lattice too large: " + std::to_string(n) + " elements");
  }
  std::vector<std::string> ids;
  ids.reserve(downs.size());
  for (const Mask d : downs) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each_bit(d, [&](int i) {
      if (!first) os << ',';
      os << p.id(i);
      first = false;
    });
    os << '}';
    ids.push_back(os.str());
  }
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rel[i][j] = subset(downs[i], downs[j]);
  }
  return FiniteLattice::from_order(FinitePoset(std::move(ids), rel));
}

Sublattice sublattice_closure(const FiniteLattice& l, Mask s) {
  Mask members = s | bit(l.bottom()) | bit(l.top());
  for (;;) {
    Mask next = members;
    for_each_bit(members, [&](int a) {
      for_each_bit(members, [&](int b) {
        next |= bit(l.meet(a, b));
        next |= bit(l.join(a, b));
      });
    });
    if (next == members) break;
    members = next;
  }
  std::vector<int> embed;
  for_each_bit(members, [&](int i) { embed.push_back(i); });
  const int m = static_cast<int>(embed.size());
  std::vector<std::string> ids;
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) {
    ids.push_back(l.id(embed[i]));
    for (int j = 0; j < m; ++j) rel[i][j] = l.leq(embed[i], embed[j]);
  }
  FiniteLattice sub = FiniteLattice::from_order(FinitePoset(std::move(ids), rel));
  return Sublattice{&l, std::move(sub), std::move(embed), members};
}

namespace fixtures {

namespace {
FiniteLattice chain(const std::vector<std::string>& ids) {
  const int n = static_cast<int>(ids.size());
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) rel[i][j] = true;
  }
  return FiniteLattice::from_order(FinitePoset(ids, rel));
}
}  // namespace

FiniteLattice one_element() { return chain({"0"}); }
FiniteLattice c2() { return chain({"0", "1"}); }
FiniteLattice c3() { return chain({"0", "m", "1"}); }

FiniteLattice b2() {
  const FinitePoset atoms({"a", "b"}, std::vector<std::pair<std::string, std::string>>{});
  return downset_lattice(atoms);
}

FiniteLattice b3() {
  const FinitePoset atoms({"x", "y", "z"}, std::vector<std::pair<std::string, std::string>>{});
  return downset_lattice(atoms);
}

FiniteLattice l5() {
  // downsets of the poset a < c > b give 0 < {a},{b} < {a,b} < top
  const std::vector<std::pair<std::string, std::string>> rel{{"a", "c"}, {"b", "c"}};
  const FinitePoset v({"a", "b", "c"}, rel);
  return downset_lattice(v);
}

}  // namespace fixtures

namespace {

// Canonical form used to deduplicate small lattices: the lexicographically
// least order-matrix string over all permutations that respect the
// (|downset|, |upset|) invariant of each element. Isomorphisms preserve the
// invariant, so restricting the search keeps the form canonical while
// staying exhaustive within each class (sizes stay <= 8 here).
std::string canonical_form(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto inv = [&](int i) {
    return std::pair<int, int>(popcount(l.downset(i)), popcount(l.upset(i)));
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inv(a) < inv(b); });
  std::vector<std::pair<int, int>> runs;  // [begin, end) of equal-invariant blocks
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv(order[j]) == inv(order[i])) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  std::string best;
  auto evaluate = [&]() {
    std::string cur;
    cur.reserve(n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cur.push_back(l.leq(order[i], order[j]) ? '1' : '0');
      }
    }
    if (best.empty() || cur < best) best = cur;
  };
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (r == runs.size()) {
      evaluate();
      return;
    }
    auto [b, e] = runs[r];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      self(self, r + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(rec, 0);
  return best;
}

std::vector<FinitePoset> all_posets_on(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  std::vector<FinitePoset> out;
  // Candidate strict relations on the off-diagonal pairs.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) cells.emplace_back(i, j);
    }
  }
  const int bits = static_cast<int>(cells.size());
  for (std::uint32_t code = 0; code < (1u << bits); ++code) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) rel[i][i] = true;
    for (int b = 0; b < bits; ++b) {
      if ((code >> b) & 1) rel[cells[b].first][cells[b].second] = true;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && rel[i][j] && rel[j][i]) ok = false;
        for (int k = 0; k < n && ok; ++k) {
          if (rel[i][j] && rel[j][k] && !rel[i][k]) ok = false;
        }
      }
    }
    if (ok) out.emplace_back(ids, rel);
  }
  return out;
}

}  // namespace

std::vector<FiniteLattice> enumerate_corpus(int max_size) {
  if (max_size < 1) throw StructureError("corpus max_size must be >= 1");
  std::vector<FiniteLattice> picked;
  std::vector<std::pair<int, std::string>> keys;  // (size, canonical form)
  auto add = [&](FiniteLattice l) {
    if (l.size() > max_size) return;
    const std::pair<int, std::string> key{l.size(), canonical_form(l)};
    for (const auto& k : keys) {
      if (k == key) return;
    }
    keys.push_back(key);
    picked.push_back(std::move(l));
  };

  const int max_poset = (max_size + 1) / 2;
  add(fixtures::one_element());  // downsets of the empty poset
  for (int n = 1; n <= max_poset; ++n) {
    for (const FinitePoset& p : all_posets_on(n)) {
      FiniteLattice l = downset_lattice(p);
      if (l.size() <= max_size) add(std::move(l));
    }
  }
  for (auto make : {fixtures::c3, fixtures::b2, fixtures::b3, fixtures::l5}) {
    add(make());
  }

  std::vector<int> order(picked.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<FiniteLattice> out;
  out.reserve(picked.size());
  for (int i : order) out.push_back(std::move(picked[i]));
  return out;
}

}  // namespace maxspec
