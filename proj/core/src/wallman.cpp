#include "maxspec/wallman.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "maxspec/coverage.hpp"

namespace maxspec {

bool is_wallman_base(const TopBase& b) {
  if (!b.is_base()) {
    throw StructureError("sublattice is not a base for the topology");
  }
  const FiniteSpace& x = b.space();
  const Mask all = x.all_points();
  for (int u = 0; u < b.size(); ++u) {
    const Mask pu = b.member_points(u);
    bool ok_u = true;
    for_each_bit(pu, [&](int p) {
      if (!ok_u) return;
      bool found = false;
      for (int v = 0; v < b.size() && !found; ++v) {
        const Mask pv = b.member_points(v);
        found = (pu | pv) == all && !has_bit(pv, p);
      }
      ok_u = found;
    });
    if (!ok_u) return false;
  }
  return true;
}

bool is_conjunctive(const FiniteLattice& d) {
  const int top = d.top();
  for (int a = 0; a < d.size(); ++a) {
    for (int b = 0; b < d.size(); ++b) {
      bool hyp = true;
      for (int c = 0; c < d.size() && hyp; ++c) {
        if (d.join(a, c) == top && d.join(b, c) != top) hyp = false;
      }
      if (hyp && !d.leq(a, b)) return false;
    }
  }
  return true;
}

bool is_A_conjunctive(const FiniteLattice& ambient, const Sublattice& b) {
  const int top = ambient.top();
  for (int a = 0; a < ambient.size(); ++a) {
    for (const int be : b.embed) {
      bool hyp = true;
      for (const int c : b.embed) {
        if (ambient.join(c, be) != top) continue;
        bool witnessed = false;
        for (const int d : b.embed) {
          if (ambient.leq(d, a) && ambient.join(c, d) == top) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) {
          hyp = false;
          break;
        }
      }
      if (hyp && !ambient.leq(be, a)) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteLattice& d) {
  const int top = d.top();
  const int bot = d.bottom();
  for (int a = 0; a < d.size(); ++a) {
    for (int b = 0; b < d.size(); ++b) {
      if (d.join(a, b) != top) continue;
      bool found = false;
      for (int c = 0; c < d.size() && !found; ++c) {
        if (d.join(c, a) != top) continue;
        for (int e = 0; e < d.size(); ++e) {
          if (d.join(b, e) == top && d.meet(c, e) == bot) {
            found = true;
            break;
          }
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_seminormal(const FiniteLattice& d) {
  const int top = d.top();
  const Ideal zero_closure =
      jacobson_closure(d, principal_ideal(d, d.bottom()));
  for (int a = 0; a < d.size(); ++a) {
    for (int b = 0; b < d.size(); ++b) {
      if (d.join(a, b) != top) continue;
      bool found = false;
      for (int c = 0; c < d.size() && !found; ++c) {
        if (d.join(c, a) != top) continue;
        for (int e = 0; e < d.size(); ++e) {
          if (d.join(b, e) == top && zero_closure.contains(d.meet(c, e))) {
            found = true;
            break;
          }
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_subfit(const FiniteLattice& a) {
  return is_A_conjunctive(a, sublattice_closure(a, a.all()));
}

bool is_coatomistic(const FiniteLattice& f) {
  const Mask co = f.coatoms();
  for (int a = 0; a < f.size(); ++a) {
    if (f.meet_of(co & f.upset(a)) != a) return false;
  }
  return true;
}

bool is_alexandrov_algebra(const FiniteLattice& d) {
  if (!is_normal(d)) return false;
  const int top = d.top();
  const int bot = d.bottom();
  for (int a = 0; a < d.size(); ++a) {
    // the family of all usable c is the best one: membership of each c is
    // witnessed independently, and the join only grows
    Mask usable = 0;
    for (int c = 0; c < d.size(); ++c) {
      for (int b = 0; b < d.size(); ++b) {
        if (d.meet(b, c) == bot && d.join(b, a) == top) {
          usable |= bit(c);
          break;
        }
      }
    }
    if (d.join_of(usable) != a) return false;
  }
  return true;
}

bool is_countably_compact(const FiniteLattice& d) {
  if (d.size() > 20) {
    throw StructureError("family search too large for literal enumeration");
  }
  const int top = d.top();
  for (Mask family = 0; family < (Mask{1} << d.size()); ++family) {
    if (d.join_of(family) != top) continue;
    // assemble a finite subfamily joining to top
    Mask sub = 0;
    int acc = d.bottom();
    for_each_bit(family, [&](int c) {
      if (acc == top) return;
      sub |= bit(c);
      acc = d.join(acc, c);
    });
    if (d.join_of(sub) != top) return false;
  }
  return true;
}

bool well_inside(const FiniteLattice& a, int b, int x) {
  for (int c = 0; c < a.size(); ++c) {
    if (a.meet(c, b) == a.bottom() && a.join(c, x) == a.top()) return true;
  }
  return false;
}

namespace {

std::vector<Mask> well_inside_rows(const FiniteLattice& a) {
  std::vector<Mask> rows(a.size(), 0);
  for (int x = 0; x < a.size(); ++x) {
    for (int b = 0; b < a.size(); ++b) {
      if (well_inside(a, b, x)) rows[x] |= bit(b);
    }
  }
  return rows;
}

bool has_interpolant(const std::vector<Mask>& rows, int b, int x) {
  bool found = false;
  for_each_bit(rows[x], [&](int m) {
    found = found || has_bit(rows[m], b);
  });
  return found;
}

}  // namespace

std::vector<Mask> completely_below(const FiniteLattice& a) {
  std::vector<Mask> rows = well_inside_rows(a);
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < a.size(); ++x) {
      for_each_bit(rows[x], [&](int b) {
        if (!has_interpolant(rows, b, x)) {
          rows[x] &= ~bit(b);
          changed = true;
        }
      });
    }
  }
  return rows;
}

std::vector<Mask> completely_below_seeded(const FiniteLattice& a, std::uint64_t seed) {
  std::vector<Mask> rows = well_inside_rows(a);
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<std::pair<int, int>> failing;  // (x, b)
    for (int x = 0; x < a.size(); ++x) {
      for_each_bit(rows[x], [&](int b) {
        if (!has_interpolant(rows, b, x)) failing.emplace_back(x, b);
      });
    }
    if (failing.empty()) break;
    const auto [x, b] = failing[rng() % failing.size()];
    rows[x] &= ~bit(b);
  }
  return rows;
}

bool is_completely_regular(const FiniteLattice& a) {
  const std::vector<Mask> below = completely_below(a);
  for (int x = 0; x < a.size(); ++x) {
    if (a.join_of(below[x]) != x) return false;
  }
  return true;
}

std::vector<Ideal> completely_regular_ideals(const FiniteLattice& a) {
  const std::vector<Mask> below = completely_below(a);
  std::vector<Ideal> out;
  for (const Ideal& i : all_ideals(a)) {
    bool ok = true;
    for_each_bit(i.members, [&](int x) {
      bool interpolated = false;
      for_each_bit(i.members, [&](int b) {
        interpolated = interpolated || has_bit(below[b], x);
      });
      ok = ok && interpolated;
    });
    if (ok) out.push_back(i);
  }
  return out;
}

CheckOutcome cr_equals_jm_closed(const FiniteLattice& a) {
  if (!a.is_distributive()) {
    return {CheckStatus::HypothesesNotMet, "not a frame (not distributive)"};
  }
  if (!is_normal(a)) return {CheckStatus::HypothesesNotMet, "not normal"};
  if (!is_subfit(a)) return {CheckStatus::HypothesesNotMet, "not subfit"};
  const GrothendieckTopology jm = maximal_topology(a);
  std::vector<Mask> cr, jm_closed;
  for (const Ideal& i : completely_regular_ideals(a)) cr.push_back(i.members);
  for (const Ideal& i : all_ideals(a)) {
    if (is_j_closed(jm, i)) jm_closed.push_back(i.members);
  }
  if (cr == jm_closed) return {CheckStatus::Holds, ""};
  return {CheckStatus::Fails, "completely regular ideals differ from the closed ones"};
}

std::vector<Ideal> primes_closed_under_unions(const TopBase& b) {
  std::vector<Ideal> out;
  for (const Ideal& i : enumerate_prime_ideals(b.lattice())) {
    // all achievable unions of subsets of i, as point sets
    std::vector<Mask> unions{0};
    for (;;) {
      const std::size_t before = unions.size();
      std::vector<Mask> grown = unions;
      for (const Mask u : unions) {
        for_each_bit(i.members, [&](int m) {
          const Mask v = u | b.member_points(m);
          if (std::find(grown.begin(), grown.end(), v) == grown.end()) {
            grown.push_back(v);
          }
        });
      }
      unions = std::move(grown);
      if (unions.size() == before) break;
    }
    bool closed = true;
    for (const Mask u : unions) {
      const int idx = b.index_of_open(u);
      if (idx >= 0 && !i.contains(idx)) {
        closed = false;
        break;
      }
    }
    if (closed) out.push_back(i);
  }
  return out;
}

}  // namespace maxspec
