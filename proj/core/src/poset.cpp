#include "maxspec/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace maxspec {

namespace {

void check_ids(const std::vector<std::string>& ids) {
  if (static_cast<int>(ids.size()) > kMaxElements) {
    throw StructureError("carrier too large: " + std::to_string(ids.size()) +
                         " elements (limit " + std::to_string(kMaxElements) + ")");
  }
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw StructureError("duplicate element id '" + id + "'");
    }
  }
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> ids,
                         const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  check_ids(ids);
  ids_ = std::move(ids);
  const int n = size();
  up_.assign(n, 0);
  down_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    up_[i] |= bit(i);
    down_[i] |= bit(i);
  }
  for (const auto& [x, y] : leq_pairs) {
    const int a = index_of(x);
    const int b = index_of(y);
    if (a < 0) throw StructureError("leq mentions unknown element '" + x + "'");
    if (b < 0) throw StructureError("leq mentions unknown element '" + y + "'");
    up_[a] |= bit(b);
    down_[b] |= bit(a);
  }
  validate();
}

FinitePoset::FinitePoset(std::vector<std::string> ids,
                         const std::vector<std::vector<bool>>& rel) {
  check_ids(ids);
  ids_ = std::move(ids);
  const int n = size();
  up_.assign(n, 0);
  down_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rel[i][j]) {
        up_[i] |= bit(j);
        down_[j] |= bit(i);
      }
    }
  }
  validate();
}

void FinitePoset::validate() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (!leq(i, i)) {
      throw StructureError("leq not reflexive at ('" + ids_[i] + "','" + ids_[i] + "')");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) {
        throw StructureError("leq not antisymmetric at ('" + ids_[i] + "','" + ids_[j] + "')");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for_each_bit(up_[i], [&](int j) {
      if ((up_[j] & ~up_[i]) != 0) {
        const int k = std::countr_zero(up_[j] & ~up_[i]);
        throw StructureError("leq not transitive: '" + ids_[i] + "' <= '" + ids_[j] +
                             "' <= '" + ids_[k] + "' but not '" + ids_[i] + "' <= '" +
                             ids_[k] + "'");
      }
    });
  }
}

int FinitePoset::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i) {
    if (ids_[i] == id) return i;
  }
  return -1;
}

bool FinitePoset::is_downclosed(Mask s) const {
  bool ok = true;
  for_each_bit(s, [&](int i) { ok = ok && subset(down_[i], s); });
  return ok;
}

bool FinitePoset::is_upclosed(Mask s) const {
  bool ok = true;
  for_each_bit(s, [&](int i) { ok = ok && subset(up_[i], s); });
  return ok;
}

bool FinitePoset::covers(int b, int a) const {
  if (!lt(a, b)) return false;
  // no c with a < c < b
  const Mask between = up_[a] & down_[b] & ~bit(a) & ~bit(b);
  return between == 0;
}

Mask FinitePoset::maximal_in(Mask s) const {
  Mask out = 0;
  for_each_bit(s, [&](int i) {
    if ((up_[i] & s & ~bit(i)) == 0) out |= bit(i);
  });
  return out;
}

Mask FinitePoset::minimal_in(Mask s) const {
  Mask out = 0;
  for_each_bit(s, [&](int i) {
    if ((down_[i] & s & ~bit(i)) == 0) out |= bit(i);
  });
  return out;
}

std::vector<int> FinitePoset::linear_extension() const {
  const int n = size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const int da = popcount(down_[a]);
    const int db = popcount(down_[b]);
    if (da != db) return da < db;
    return a < b;
  });
  return order;
}

std::vector<Mask> FinitePoset::all_downsets() const {
  // Walk a linear extension; a subset of a prefix extends to a downset of
  // the whole poset iff each chosen element has its predecessors chosen.
  const std::vector<int> order = linear_extension();
  std::vector<Mask> out{0};
  for (const int e : order) {
    const Mask preds = down_[e] & ~bit(e);
    const std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (subset(preds, out[i])) out.push_back(out[i] | bit(e));
    }
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  return out;
}

bool FinitePoset::isomorphic_to(const FinitePoset& other) const {
  const int n = size();
  if (n != other.size()) return false;
  // invariant prefilter: sorted (|down|, |up|) profiles
  auto profile = [](const FinitePoset& p) {
    std::vector<std::pair<int, int>> v;
    for (int i = 0; i < p.size(); ++i) {
      v.emplace_back(popcount(p.down_[i]), popcount(p.up_[i]));
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  if (profile(*this) != profile(other)) return false;

  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto compatible = [&](int i, int j) {
    if (popcount(down_[i]) != popcount(other.down_[j])) return false;
    if (popcount(up_[i]) != popcount(other.up_[j])) return false;
    for (int k = 0; k < n; ++k) {
      if (perm[k] < 0) continue;
      if (leq(i, k) != other.leq(j, perm[k])) return false;
      if (leq(k, i) != other.leq(perm[k], j)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || !compatible(i, j)) continue;
      perm[i] = j;
      used[j] = true;
      if (self(self, i + 1)) return true;
      perm[i] = -1;
      used[j] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace maxspec
