#include "maxspec/json_io.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

namespace maxspec::io {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw StructureError("not valid JSON");
  if (!j.is_object()) throw StructureError("top-level JSON value must be an object");
  return j;
}

std::vector<std::string> string_list(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw StructureError("missing array field '" + key + "'");
  }
  std::vector<std::string> out;
  for (const auto& v : j[key]) {
    if (!v.is_string()) throw StructureError("'" + key + "' entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

// Indices sorting ids lexicographically; used to canonicalize output.
std::vector<int> sorted_order(const std::vector<std::string>& ids) {
  std::vector<int> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return ids[a] < ids[b]; });
  return order;
}

}  // namespace

InputKind detect_kind(const std::string& text) {
  const json j = parse(text);
  if (j.contains("points") && j.contains("opens")) return InputKind::Space;
  if (j.contains("elements") && j.contains("add") && j.contains("mul")) {
    return InputKind::Ring;
  }
  if (j.contains("elements") && j.contains("leq")) return InputKind::Lattice;
  throw StructureError(
      "unrecognized payload: expected elements+leq, points+opens or elements+add+mul");
}

FiniteLattice load_lattice(const std::string& text) {
  const json j = parse(text);
  std::vector<std::string> ids = string_list(j, "elements");
  if (!j.contains("leq") || !j["leq"].is_array()) {
    throw StructureError("missing array field 'leq'");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : j["leq"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw StructureError("'leq' entries must be [x, y] id pairs");
    }
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return FiniteLattice::from_order(FinitePoset(std::move(ids), pairs));
}

std::string save_lattice(const FiniteLattice& l) {
  const std::vector<int> order = sorted_order(l.poset().ids());
  json j;
  j["elements"] = json::array();
  for (int i : order) j["elements"].push_back(l.id(i));
  j["leq"] = json::array();
  for (int a : order) {
    for (int b : order) {
      if (l.leq(a, b)) j["leq"].push_back(json::array({l.id(a), l.id(b)}));
    }
  }
  return j.dump(2) + "\n";
}

FiniteSpace load_space(const std::string& text) {
  const json j = parse(text);
  std::vector<std::string> ids = string_list(j, "points");
  if (!j.contains("opens") || !j["opens"].is_array()) {
    throw StructureError("missing array field 'opens'");
  }
  if (static_cast<int>(ids.size()) > kMaxElements) throw StructureError("space too large");
  std::vector<Mask> family;
  for (const auto& open : j["opens"]) {
    if (!open.is_array()) throw StructureError("'opens' entries must be arrays of point ids");
    Mask m = 0;
    for (const auto& p : open) {
      if (!p.is_string()) throw StructureError("'opens' entries must be arrays of point ids");
      const auto it = std::find(ids.begin(), ids.end(), p.get<std::string>());
      if (it == ids.end()) {
        throw StructureError("open set mentions unknown point '" + p.get<std::string>() + "'");
      }
      m |= bit(static_cast<int>(it - ids.begin()));
    }
    family.push_back(m);
  }
  return FiniteSpace::from_basis(std::move(ids), std::move(family));
}

std::string save_space(const FiniteSpace& x) {
  const std::vector<int> order = sorted_order(x.point_ids());
  std::vector<int> position(x.size());
  for (int i = 0; i < x.size(); ++i) position[order[i]] = i;
  json j;
  j["points"] = json::array();
  for (int i : order) j["points"].push_back(x.point_id(i));
  std::vector<std::vector<std::string>> opens;
  for (const Mask o : x.opens()) {
    std::vector<std::string> members;
    for_each_bit(o, [&](int p) { members.push_back(x.point_id(p)); });
    std::sort(members.begin(), members.end());
    opens.push_back(std::move(members));
  }
  std::sort(opens.begin(), opens.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  j["opens"] = opens;
  return j.dump(2) + "\n";
}

FiniteCommRing load_ring(const std::string& text) {
  const json j = parse(text);
  std::vector<std::string> ids = string_list(j, "elements");
  const int n = static_cast<int>(ids.size());
  auto table = [&](const std::string& key) {
    if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != n) {
      throw StructureError("field '" + key + "' must be an " + std::to_string(n) +
                           "x" + std::to_string(n) + " table of element ids");
    }
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a) {
      const auto& row = j[key][a];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw StructureError("field '" + key + "' must be an " + std::to_string(n) +
                             "x" + std::to_string(n) + " table of element ids");
      }
      for (int b = 0; b < n; ++b) {
        if (!row[b].is_string()) throw StructureError("'" + key + "' entries must be ids");
        const auto it = std::find(ids.begin(), ids.end(), row[b].get<std::string>());
        if (it == ids.end()) {
          throw StructureError("'" + key + "' mentions unknown element '" +
                               row[b].get<std::string>() + "'");
        }
        t[a * n + b] = static_cast<int>(it - ids.begin());
      }
    }
    return t;
  };
  auto element = [&](const std::string& key) {
    if (!j.contains(key) || !j[key].is_string()) {
      throw StructureError("missing id field '" + key + "'");
    }
    const auto it = std::find(ids.begin(), ids.end(), j[key].get<std::string>());
    if (it == ids.end()) {
      throw StructureError("'" + key + "' names unknown element '" +
                           j[key].get<std::string>() + "'");
    }
    return static_cast<int>(it - ids.begin());
  };
  std::vector<int> add = table("add");
  std::vector<int> mul = table("mul");
  const int zero = element("zero");
  const int one = element("one");
  return FiniteCommRing(std::move(ids), std::move(add), std::move(mul), zero, one);
}

std::string save_ring(const FiniteCommRing& r) {
  const std::vector<int> order = sorted_order(r.ids());
  std::vector<int> position(r.size());
  for (int i = 0; i < r.size(); ++i) position[order[i]] = i;
  json j;
  j["elements"] = json::array();
  for (int i : order) j["elements"].push_back(r.id(i));
  json add = json::array(), mul = json::array();
  for (int a : order) {
    json arow = json::array(), mrow = json::array();
    for (int b : order) {
      arow.push_back(r.id(r.add(a, b)));
      mrow.push_back(r.id(r.mul(a, b)));
    }
    add.push_back(std::move(arow));
    mul.push_back(std::move(mrow));
  }
  j["add"] = std::move(add);
  j["mul"] = std::move(mul);
  j["zero"] = r.id(r.zero());
  j["one"] = r.id(r.one());
  return j.dump(2) + "\n";
}

namespace {

constexpr std::size_t kMaxDiagnostics = 25;

class Diagnostics {
 public:
  void add(const std::string& d) {
    if (lines_.size() < kMaxDiagnostics) {
      lines_.push_back(d);
    } else {
      truncated_ = true;
    }
  }
  bool full() const { return truncated_; }
  std::vector<std::string> take() {
    if (truncated_) lines_.push_back("... further violations suppressed");
    return std::move(lines_);
  }

 private:
  std::vector<std::string> lines_;
  bool truncated_ = false;
};

void validate_lattice_payload(const json& j, Diagnostics& out) {
  const std::vector<std::string> ids = string_list(j, "elements");
  const int n = static_cast<int>(ids.size());
  if (n == 0) {
    out.add("a lattice needs at least one element");
    return;
  }
  if (n > kMaxElements) {
    out.add("carrier too large: " + std::to_string(n) + " elements");
    return;
  }
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      if (ids[i] == ids[k]) out.add("duplicate element id '" + ids[i] + "'");
    }
  }
  auto index_of = [&](const std::string& id) {
    for (int i = 0; i < n; ++i) {
      if (ids[i] == id) return i;
    }
    return -1;
  };
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) rel[i][i] = true;
  if (!j.contains("leq") || !j["leq"].is_array()) {
    out.add("missing array field 'leq'");
    return;
  }
  for (const auto& p : j["leq"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      out.add("'leq' entries must be [x, y] id pairs");
      return;
    }
    const int a = index_of(p[0].get<std::string>());
    const int b = index_of(p[1].get<std::string>());
    if (a < 0) out.add("leq mentions unknown element '" + p[0].get<std::string>() + "'");
    if (b < 0) out.add("leq mentions unknown element '" + p[1].get<std::string>() + "'");
    if (a >= 0 && b >= 0) rel[a][b] = true;
  }
  if (out.full()) return;
  bool order_ok = true;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && rel[a][b] && rel[b][a]) {
        if (a < b) {
          out.add("leq not antisymmetric at ('" + ids[a] + "','" + ids[b] + "')");
          order_ok = false;
        }
      }
      for (int c = 0; c < n; ++c) {
        if (rel[a][b] && rel[b][c] && !rel[a][c]) {
          out.add("leq not transitive: '" + ids[a] + "' <= '" + ids[b] + "' <= '" +
                  ids[c] + "' but not '" + ids[a] + "' <= '" + ids[c] + "'");
          order_ok = false;
        }
      }
    }
  }
  if (!order_ok || out.full()) return;
  // meets and joins must exist
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      bool has_meet = false, has_join = false;
      for (int c = 0; c < n && !(has_meet && has_join); ++c) {
        if (rel[c][a] && rel[c][b]) {
          bool greatest = true;
          for (int d = 0; d < n; ++d) {
            if (rel[d][a] && rel[d][b] && !rel[d][c]) greatest = false;
          }
          has_meet = has_meet || greatest;
        }
        if (rel[a][c] && rel[b][c]) {
          bool least = true;
          for (int d = 0; d < n; ++d) {
            if (rel[a][d] && rel[b][d] && !rel[c][d]) least = false;
          }
          has_join = has_join || least;
        }
      }
      if (!has_meet) out.add("no meet for pair ('" + ids[a] + "','" + ids[b] + "')");
      if (!has_join) out.add("no join for pair ('" + ids[a] + "','" + ids[b] + "')");
    }
  }
}

void validate_ring_payload(const std::string& text, Diagnostics& out) {
  // structural parse first; then axiom checks, collecting every failure
  try {
    load_ring(text);
  } catch (const StructureError& first) {
    out.add(first.what());
    // keep collecting: re-run each axiom family on the raw tables when the
    // shape is usable
    const json j = parse(text);
    std::vector<std::string> ids;
    try {
      ids = string_list(j, "elements");
    } catch (const StructureError&) {
      return;
    }
    const int n = static_cast<int>(ids.size());
    auto try_table = [&](const std::string& key, std::vector<int>& t) {
      if (!j.contains(key) || !j[key].is_array() ||
          static_cast<int>(j[key].size()) != n) {
        return false;
      }
      t.assign(n * n, -1);
      for (int a = 0; a < n; ++a) {
        const auto& row = j[key][a];
        if (!row.is_array() || static_cast<int>(row.size()) != n) return false;
        for (int b = 0; b < n; ++b) {
          if (!row[b].is_string()) return false;
          const auto it = std::find(ids.begin(), ids.end(), row[b].get<std::string>());
          if (it == ids.end()) return false;
          t[a * n + b] = static_cast<int>(it - ids.begin());
        }
      }
      return true;
    };
    std::vector<int> add, mul;
    if (!try_table("add", add) || !try_table("mul", mul) || n == 0) return;
    for (int a = 0; a < n && !out.full(); ++a) {
      for (int b = 0; b < n && !out.full(); ++b) {
        for (int c = 0; c < n; ++c) {
          if (mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]]) {
            out.add("multiplication not associative at ('" + ids[a] + "','" +
                    ids[b] + "','" + ids[c] + "')");
          }
          if (add[add[a * n + b] * n + c] != add[a * n + add[b * n + c]]) {
            out.add("addition not associative at ('" + ids[a] + "','" + ids[b] +
                    "','" + ids[c] + "')");
          }
          if (out.full()) break;
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate(const std::string& text) {
  Diagnostics out;
  InputKind kind;
  try {
    kind = detect_kind(text);
  } catch (const StructureError& e) {
    out.add(e.what());
    return out.take();
  }
  switch (kind) {
    case InputKind::Lattice:
      try {
        validate_lattice_payload(parse(text), out);
      } catch (const StructureError& e) {
        out.add(e.what());
      }
      break;
    case InputKind::Space:
      try {
        load_space(text);
      } catch (const StructureError& e) {
        out.add(e.what());
      }
      break;
    case InputKind::Ring:
      validate_ring_payload(text, out);
      break;
  }
  return out.take();
}

std::string describe(const std::string& text) {
  switch (detect_kind(text)) {
    case InputKind::Lattice: {
      const FiniteLattice l = load_lattice(text);
      const std::string kind = l.is_distributive() ? "distributive lattice" : "lattice";
      return "ok: " + kind + ", " + std::to_string(l.size()) + " elements";
    }
    case InputKind::Space: {
      const FiniteSpace x = load_space(text);
      return "ok: space, " + std::to_string(x.size()) + " points, " +
             std::to_string(x.opens().size()) + " opens";
    }
    case InputKind::Ring: {
      const FiniteCommRing r = load_ring(text);
      return "ok: commutative ring, " + std::to_string(r.size()) + " elements";
    }
  }
  return "";
}

}  // namespace maxspec::io
