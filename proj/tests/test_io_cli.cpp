#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "maxspec/cli.hpp"
#include "maxspec/dot.hpp"
#include "maxspec/json_io.hpp"
#include "maxspec/sweep.hpp"

using namespace maxspec;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

const char* kB2Json = R"({
  "elements": ["0", "a", "b", "1"],
  "leq": [["0","a"], ["0","b"], ["0","1"], ["a","1"], ["b","1"]]
})";

}  // namespace

TEST_CASE("lattice JSON round-trips through the canonical form") {
  const FiniteLattice l = io::load_lattice(kB2Json);
  CHECK(l.size() == 4);
  CHECK(l.is_distributive());
  const std::string saved = io::save_lattice(l);
  const FiniteLattice reloaded = io::load_lattice(saved);
  CHECK(io::save_lattice(reloaded) == saved);
  CHECK(reloaded.isomorphic_to(l));
  // ids survive
  for (const char* id : {"0", "a", "b", "1"}) CHECK(reloaded.index_of(id) >= 0);
}

TEST_CASE("lattice loader rejects non-lattices with a named pair") {
  // two maximal elements: no join for (a, b)
  const std::string no_top = R"({
    "elements": ["0", "a", "b"],
    "leq": [["0","a"], ["0","b"]]
  })";
  CHECK_THROWS_WITH_AS(io::load_lattice(no_top), doctest::Contains("'a'"),
                       StructureError);
  const std::string not_transitive = R"({
    "elements": ["0", "a", "b"],
    "leq": [["0","a"], ["a","b"]]
  })";
  CHECK_THROWS_WITH_AS(io::load_lattice(not_transitive),
                       doctest::Contains("not transitive"), StructureError);
}

TEST_CASE("space JSON closes a basis and round-trips") {
  const std::string basis = R"({
    "points": ["x", "y"],
    "opens": [["x"], ["y"]]
  })";
  const FiniteSpace x = io::load_space(basis);
  CHECK(x.opens().size() == 4);
  const std::string saved = io::save_space(x);
  const FiniteSpace reloaded = io::load_space(saved);
  CHECK(io::save_space(reloaded) == saved);
}

TEST_CASE("ring JSON round-trips and validates") {
  const std::string z2 = io::save_ring(zmod(2));
  const FiniteCommRing reloaded = io::load_ring(z2);
  CHECK(ring_isomorphic(reloaded, zmod(2)));
  CHECK(io::save_ring(reloaded) == z2);

  // corrupt the multiplication table
  std::string bad = z2;
  const auto pos = bad.find("\"mul\"");
  REQUIRE(pos != std::string::npos);
  // make mul constant zero: breaks the unit law
  bad.replace(pos, std::string::npos,
              "\"mul\": [[\"0\", \"0\"], [\"0\", \"0\"]],\n  \"one\": \"1\",\n  "
              "\"zero\": \"0\"\n}");
  CHECK_THROWS_WITH_AS(io::load_ring(bad), doctest::Contains("identity"),
                       StructureError);
}

TEST_CASE("detect_kind and validate") {
  CHECK(io::detect_kind(kB2Json) == io::InputKind::Lattice);
  CHECK(io::validate(kB2Json).empty());
  CHECK_FALSE(io::validate("{\"elements\": [], \"leq\": []}").empty());
  CHECK(io::describe(kB2Json) == "ok: distributive lattice, 4 elements");
}

TEST_CASE("dot output is deterministic and well-formed") {
  const FiniteLattice b2 = io::load_lattice(kB2Json);
  const std::string dot = io::lattice_dot(b2);
  CHECK(dot == io::lattice_dot(b2));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("\"0\" -> \"a\"") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"1\"") != std::string::npos);
  CHECK(dot.find("\"0\" -> \"1\"") == std::string::npos);  // covers only
  CHECK(dot.back() == '\n');

  const std::string sdot = io::space_dot(FiniteSpace::sierpinski());
  CHECK(sdot.find("\"y\" -> \"x\"") != std::string::npos);  // y specializes to x
}

TEST_CASE("cli check command and exit codes") {
  std::string out, err;
  CHECK(run_cli({"check", "zmod(12)"}, &out, &err) == 0);
  CHECK(out == "ok: commutative ring, 12 elements\n");
  CHECK(run_cli({"check", "/nonexistent/file.json"}, &out, &err) == 1);
  CHECK(err.find("cannot open") != std::string::npos);
}

TEST_CASE("validate collects several violations with witnesses") {
  const std::string broken = R"({
    "elements": ["0", "a", "b"],
    "leq": [["0","a"], ["a","b"], ["b","a"]]
  })";
  const auto diags = io::validate(broken);
  CHECK(diags.size() >= 2);
  bool transitive = false, antisymmetric = false;
  for (const std::string& d : diags) {
    transitive = transitive || d.find("not transitive") != std::string::npos;
    antisymmetric = antisymmetric || d.find("not antisymmetric") != std::string::npos;
  }
  CHECK(transitive);
  CHECK(antisymmetric);

  // non-lattice order: both the missing meet and the missing join are named
  const std::string no_bounds = R"({
    "elements": ["a", "b"],
    "leq": []
  })";
  const auto diags2 = io::validate(no_bounds);
  bool meet = false, join = false;
  for (const std::string& d : diags2) {
    meet = meet || d.find("no meet") != std::string::npos;
    join = join || d.find("no join") != std::string::npos;
  }
  CHECK(meet);
  CHECK(join);
}

TEST_CASE("cli check and sweep emit JSON reports on demand") {
  const std::string path = "/tmp/maxspec_bad_lattice.json";
  {
    std::ofstream f(path);
    f << R"({"elements": ["0", "a", "b"], "leq": [["0","a"], ["a","b"], ["b","a"]]})";
  }
  std::string out;
  CHECK(run_cli({"check", path, "--json"}, &out) == 1);
  CHECK(out.find("\"ok\": false") != std::string::npos);
  CHECK(out.find("not transitive") != std::string::npos);

  CHECK(run_cli({"sweep", "--max-size", "3", "--theorem", "max-implies-prime",
                 "--json"},
                &out) == 0);
  CHECK(out.find("\"id\": \"max-implies-prime\"") != std::string::npos);
  CHECK(out.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("cli spectrum command") {
  std::string out;
  CHECK(run_cli({"spectrum", "zmod(12)", "--kind", "max"}, &out) == 0);
  CHECK(out.find("(2)") != std::string::npos);
  CHECK(out.find("(3)") != std::string::npos);
  CHECK(run_cli({"spectrum", "zmod(12)", "--dot"}, &out) == 0);
  CHECK(out.find("digraph") == 0);
}

TEST_CASE("cli sweep with an unknown theorem id lists the valid ones") {
  std::string out, err;
  CHECK(run_cli({"sweep", "--theorem", "no-such-thing"}, &out, &err) == 1);
  CHECK(err.find("unknown theorem id") != std::string::npos);
  CHECK(err.find("max-implies-prime") != std::string::npos);
}

TEST_CASE("cli sweep runs a single fast theorem") {
  std::string out;
  CHECK(run_cli({"sweep", "--max-size", "5", "--theorem", "max-implies-prime"},
                &out) == 0);
  CHECK(out.find("PASS max-implies-prime") == 0);
}

TEST_CASE("cli reticulate and duality roundtrip") {
  std::string out;
  CHECK(run_cli({"reticulate", "zmod(12)"}, &out) == 0);
  CHECK(out.find("class_map") != std::string::npos);
  CHECK(out.find("(6)") != std::string::npos);

  // lattice roundtrip verdict through a temp file
  const std::string path = "/tmp/maxspec_test_b2.json";
  {
    std::ofstream f(path);
    f << kB2Json;
  }
  CHECK(run_cli({"duality", "roundtrip", "--input", path}, &out) == 0);
  CHECK(out.find("\"roundtrip\": true") != std::string::npos);
}

TEST_CASE("the theorem registry is the stable public list") {
  const std::vector<std::string> expected{
      "max-implies-prime",
      "wallman-iff-eta-in-max",
      "conjunctive-triple-equivalence",
      "eta-image-is-wallman",
      "kD-equals-jacobson",
      "dlatmax",
      "compact-thm",
      "conjunctive-normal-seminormal",
      "duality-roundtrips",
      "conjunctive-iff-coatomistic",
      "t1-duality",
      "alexandrov-negative/positive",
      "cr-equals-jm-closed",
      "reticulation-boolean",
      "spec-reticulation-agreement",
      "ring-jacobson",
      "ring-criteria-agreement",
  };
  CHECK(sweep::theorem_ids() == expected);
}

TEST_CASE("sweep reports are deterministic") {
  std::string first, second;
  const std::vector<std::string> args{"sweep", "--max-size", "5", "--theorem",
                                      "dlatmax", "--theorem", "t1-duality", "--json"};
  CHECK(run_cli(args, &first) == 0);
  CHECK(run_cli(args, &second) == 0);
  CHECK(first == second);
}

TEST_CASE("cli predicates record") {
  const std::string path = "/tmp/maxspec_test_b2_pred.json";
  {
    std::ofstream f(path);
    f << kB2Json;
  }
  std::string out;
  CHECK(run_cli({"predicates", path}, &out) == 0);
  for (const char* key :
       {"distributive", "conjunctive", "normal", "seminormal", "subfit",
        "coatomistic", "alexandrov", "countably_compact", "completely_regular"}) {
    CHECK(out.find(key) != std::string::npos);
  }
  CHECK(out.find("\"conjunctive\": true") != std::string::npos);
}
