#include "maxspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxspec/coverage.hpp"
#include "maxspec/dot.hpp"
#include "maxspec/duality.hpp"
#include "maxspec/json_io.hpp"
#include "maxspec/sweep.hpp"
#include "maxspec/wallman.hpp"

namespace maxspec::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kPropertyFailure = 2;

// "zmod(12)" and "zmod(2)xzmod(3)" are accepted wherever a ring file is.
std::optional<FiniteCommRing> parse_ring_shorthand(const std::string& arg) {
  auto parse_one = [](const std::string& s) -> std::optional<int> {
    if (s.rfind("zmod(", 0) != 0 || s.back() != ')') return std::nullopt;
    try {
      return std::stoi(s.substr(5, s.size() - 6));
    } catch (...) {
      return std::nullopt;
    }
  };
  const auto x = arg.find('x');
  if (x != std::string::npos) {
    const auto a = parse_one(arg.substr(0, x));
    const auto b = parse_one(arg.substr(x + 1));
    if (a && b) return ring_product(zmod(*a), zmod(*b));
    return std::nullopt;
  }
  if (const auto n = parse_one(arg)) return zmod(*n);
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Either a shorthand ring or the contents of a file.
struct Input {
  std::optional<FiniteCommRing> ring;
  std::string text;  // file payload when ring is empty
};

Input resolve_input(const std::string& arg) {
  if (auto ring = parse_ring_shorthand(arg)) return {std::move(ring), ""};
  return {std::nullopt, read_file(arg)};
}

json space_to_json(const FiniteSpace& x) {
  return json::parse(io::save_space(x));
}

int cmd_check(const std::string& path, bool as_json, std::ostream& out,
              std::ostream& err) {
  try {
    const Input input = resolve_input(path);
    std::vector<std::string> diags;
    std::string summary;
    if (input.ring) {
      summary = "ok: commutative ring, " + std::to_string(input.ring->size()) +
                " elements";
    } else {
      diags = io::validate(input.text);
      if (diags.empty()) summary = io::describe(input.text);
    }
    if (as_json) {
      json report;
      report["ok"] = diags.empty();
      report["diagnostics"] = diags;
      if (diags.empty()) report["summary"] = summary;
      out << report.dump(2) << "\n";
      return diags.empty() ? kOk : kInvalidInput;
    }
    if (diags.empty()) {
      out << summary << "\n";
      return kOk;
    }
    for (const std::string& d : diags) err << "invalid: " << d << "\n";
    return kInvalidInput;
  } catch (const StructureError& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalidInput;
  }
}

int cmd_spectrum(const std::string& path, const std::string& kind, bool dot,
                 std::ostream& out, std::ostream& err) {
  try {
    const Input input = resolve_input(path);
    FiniteSpace space = FiniteSpace::discrete(0);
    if (input.ring) {
      RingSpectrum s = kind == "max" ? max_spec_ring(*input.ring)
                                     : zariski_spec(*input.ring);
      space = std::move(s.space);
    } else {
      switch (io::detect_kind(input.text)) {
        case io::InputKind::Lattice: {
          const FiniteLattice d = io::load_lattice(input.text);
          if (!d.is_distributive()) {
            throw StructureError("spectra are defined for distributive lattices");
          }
          Spectrum s = kind == "max" ? max_space(d) : spec_space(d);
          space = std::move(s.space);
          break;
        }
        case io::InputKind::Ring: {
          const FiniteCommRing r = io::load_ring(input.text);
          RingSpectrum s = kind == "max" ? max_spec_ring(r) : zariski_spec(r);
          space = std::move(s.space);
          break;
        }
        case io::InputKind::Space:
          throw StructureError("spectra take a lattice or a ring, not a space");
      }
    }
    if (dot) {
      out << io::space_dot(space);
    } else {
      out << io::save_space(space);
    }
    return kOk;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

int cmd_predicates(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const Input input = resolve_input(path);
    if (input.ring) throw StructureError("predicates take a lattice file");
    const FiniteLattice d = io::load_lattice(input.text);
    json record;
    record["distributive"] = d.is_distributive();
    if (d.is_distributive()) {
      record["conjunctive"] = is_conjunctive(d);
      record["normal"] = is_normal(d);
      record["seminormal"] = is_seminormal(d);
      record["subfit"] = is_subfit(d);
      record["coatomistic"] = is_coatomistic(d);
      record["alexandrov"] = is_alexandrov_algebra(d);
      record["countably_compact"] = is_countably_compact(d);
      record["completely_regular"] = is_completely_regular(d);
    }
    out << record.dump(2) << "\n";
    return kOk;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

int cmd_reticulate(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const Input input = resolve_input(path);
    FiniteCommRing ring = input.ring ? *input.ring : io::load_ring(input.text);
    const Reticulation l = reticulation(ring);
    json j = json::parse(io::save_lattice(l.lattice));
    json class_map;
    for (int a = 0; a < ring.size(); ++a) {
      class_map[ring.id(a)] = l.lattice.id(l.class_map[a]);
    }
    j["class_map"] = std::move(class_map);
    out << j.dump(2) << "\n";
    return kOk;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

int cmd_duality_roundtrip(const std::string& path, std::ostream& out,
                          std::ostream& err) {
  try {
    const Input input = resolve_input(path);
    if (input.ring) throw StructureError("duality roundtrip takes a space or lattice file");
    json verdict;
    switch (io::detect_kind(input.text)) {
      case io::InputKind::Space: {
        const FiniteSpace x = io::load_space(input.text);
        const TopBase b = TopBase::full(x);
        verdict["object"] = "space with its full open-set base";
        verdict["t0"] = is_t0(x);
        verdict["wallman_base"] = is_wallman_base(b);
        verdict["in_category"] = in_top_dlat_w(b);
        if (in_top_dlat_w(b)) {
          verdict["roundtrip"] = roundtrip_space(b);
        } else {
          verdict["roundtrip"] = nullptr;
          verdict["witness"] = "object is outside the Wallman category";
        }
        break;
      }
      case io::InputKind::Lattice: {
        const FiniteLattice d = io::load_lattice(input.text);
        verdict["object"] = "distributive lattice";
        if (!d.is_distributive()) throw StructureError("lattice is not distributive");
        verdict["conjunctive"] = is_conjunctive(d);
        if (is_conjunctive(d)) {
          verdict["roundtrip"] = roundtrip_lattice(d);
        } else {
          verdict["roundtrip"] = nullptr;
          verdict["witness"] = "lattice is not conjunctive";
        }
        break;
      }
      case io::InputKind::Ring:
        throw StructureError("duality roundtrip takes a space or lattice file");
    }
    out << verdict.dump(2) << "\n";
    const bool applicable = !verdict["roundtrip"].is_null();
    if (applicable && !verdict["roundtrip"].get<bool>()) return kPropertyFailure;
    return kOk;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

int cmd_sweep(int max_size, const std::vector<std::string>& theorem_ids_arg,
              bool as_json, std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::string> ids =
        theorem_ids_arg.empty() ? sweep::theorem_ids() : theorem_ids_arg;
    for (const std::string& id : ids) {
      bool known = false;
      for (const std::string& k : sweep::theorem_ids()) known = known || k == id;
      if (!known) {
        std::string msg = "unknown theorem id '" + id + "'; valid ids:";
        for (const std::string& k : sweep::theorem_ids()) msg += " " + k;
        throw StructureError(msg);
      }
    }
    const sweep::Corpus corpus = sweep::build_corpus(max_size);
    bool any_failure = false;
    json report = json::array();
    for (const std::string& id : ids) {
      const sweep::TheoremResult res = sweep::run_theorem(id, corpus);
      if (as_json) {
        json row;
        row["id"] = res.id;
        row["ok"] = res.ok();
        row["pass"] = res.pass;
        row["fail"] = res.fail;
        row["hypotheses_not_met"] = res.hypotheses_not_met;
        if (!res.first_counterexample.empty()) {
          row["first_counterexample"] = res.first_counterexample;
        }
        if (!res.side_conditions_ok) {
          row["side_condition"] = res.side_condition_detail;
        }
        row["notes"] = res.notes;
        report.push_back(std::move(row));
      } else {
        out << (res.ok() ? "PASS" : "FAIL") << " " << res.id
            << ": pass=" << res.pass << " fail=" << res.fail
            << " hypotheses-not-met=" << res.hypotheses_not_met;
        if (!res.first_counterexample.empty()) {
          out << " first-counterexample=[" << res.first_counterexample << "]";
        }
        if (!res.side_conditions_ok) {
          out << " side-condition=[" << res.side_condition_detail << "]";
        }
        out << "\n";
        for (const std::string& note : res.notes) {
          out << "  note: " << note << "\n";
        }
      }
      any_failure = any_failure || !res.ok();
    }
    if (as_json) out << report.dump(2) << "\n";
    return any_failure ? kPropertyFailure : kOk;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

int cmd_export_dot(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const Input input = resolve_input(path);
    if (input.ring) {
      out << io::space_dot(zariski_spec(*input.ring).space);
      return kOk;
    }
    switch (io::detect_kind(input.text)) {
      case io::InputKind::Lattice:
        out << io::lattice_dot(io::load_lattice(input.text));
        break;
      case io::InputKind::Space:
        out << io::space_dot(io::load_space(input.text));
        break;
      case io::InputKind::Ring:
        out << io::space_dot(zariski_spec(io::load_ring(input.text)).space);
        break;
    }
    return kOk;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite spectra of distributive lattices and rings"};
  app.require_subcommand(1);

  std::string check_path;
  bool check_json = false;
  CLI::App* check = app.add_subcommand("check", "validate a lattice/space/ring file");
  check->add_option("path", check_path, "input file or ring shorthand")->required();
  check->add_flag("--json", check_json, "emit the validation report as JSON");

  std::string spectrum_path, spectrum_kind = "spec";
  bool spectrum_dot = false;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "emit the prime or maximal spectrum");
  spectrum->add_option("path", spectrum_path, "lattice/ring file or shorthand")
      ->required();
  spectrum->add_option("--kind", spectrum_kind, "spec or max")
      ->check(CLI::IsMember({"spec", "max"}));
  spectrum->add_flag("--dot", spectrum_dot, "emit a specialization diagram");

  std::string predicates_path;
  CLI::App* predicates =
      app.add_subcommand("predicates", "emit the lattice predicate record");
  predicates->add_option("path", predicates_path, "lattice file")->required();

  std::string reticulate_path;
  CLI::App* reticulate =
      app.add_subcommand("reticulate", "emit the reticulation of a ring");
  reticulate->add_option("path", reticulate_path, "ring file or shorthand")
      ->required();

  CLI::App* duality = app.add_subcommand("duality", "duality checks");
  duality->require_subcommand(1);
  std::string roundtrip_input;
  CLI::App* roundtrip =
      duality->add_subcommand("roundtrip", "run the functor roundtrip verdict");
  roundtrip->add_option("--input", roundtrip_input, "space or lattice file")
      ->required();

  int sweep_max_size = 8;
  std::vector<std::string> sweep_theorems;
  bool sweep_json = false;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run registered theorem sweeps over the corpus");
  sweep_cmd->add_option("--max-size", sweep_max_size, "lattice corpus size bound");
  sweep_cmd->add_option("--theorem", sweep_theorems, "theorem id (repeatable)");
  sweep_cmd->add_flag("--json", sweep_json, "emit the report as JSON");

  CLI::App* export_cmd = app.add_subcommand("export", "export diagrams");
  export_cmd->require_subcommand(1);
  std::string export_path;
  CLI::App* export_dot = export_cmd->add_subcommand("dot", "Hasse/specialization DOT");
  export_dot->add_option("path", export_path, "input file or ring shorthand")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  if (check->parsed()) return cmd_check(check_path, check_json, out, err);
  if (spectrum->parsed()) {
    return cmd_spectrum(spectrum_path, spectrum_kind, spectrum_dot, out, err);
  }
  if (predicates->parsed()) return cmd_predicates(predicates_path, out, err);
  if (reticulate->parsed()) return cmd_reticulate(reticulate_path, out, err);
  if (duality->parsed()) return cmd_duality_roundtrip(roundtrip_input, out, err);
  if (sweep_cmd->parsed()) {
    return cmd_sweep(sweep_max_size, sweep_theorems, sweep_json, out, err);
  }
  if (export_cmd->parsed()) return cmd_export_dot(export_path, out, err);
  err << "error: no command\n";
  return kInvalidInput;
}

}  // namespace maxspec::cli
