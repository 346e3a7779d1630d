#include "maxspec/dot.hpp"

#include <sstream>

namespace maxspec::io {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string lattice_dot(const FiniteLattice& l) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < l.size(); ++i) {
    os << "  \"" << escape(l.id(i)) << "\";\n";
  }
  for (int b = 0; b < l.size(); ++b) {
    for (int a = 0; a < l.size(); ++a) {
      if (l.poset().covers(b, a)) {
        os << "  \"" << escape(l.id(a)) << "\" -> \"" << escape(l.id(b)) << "\";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::string space_dot(const FiniteSpace& x) {
  // specialization order: p <= q iff p lies in the closure of q
  const int n = x.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) leq[p][q] = has_bit(x.closure(bit(q)), p);
  }
  std::ostringstream os;
  os << "digraph specialization {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int p = 0; p < n; ++p) {
    os << "  \"" << escape(x.point_id(p)) << "\";\n";
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q || !leq[p][q] || leq[q][p]) continue;
      bool cover = true;
      for (int r = 0; r < n && cover; ++r) {
        if (r != p && r != q && leq[p][r] && leq[r][q] && !leq[r][p] && !leq[q][r]) {
          cover = false;
        }
      }
      if (cover) {
        os << "  \"" << escape(x.point_id(p)) << "\" -> \"" << escape(x.point_id(q))
           << "\";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace maxspec::io
