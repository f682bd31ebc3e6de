// Copyright 2026 The pisu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pisu/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pisu/ansatz.hpp"
#include "pisu/circuit_io.hpp"
#include "pisu/simulator.hpp"
#include "pisu/synthesis.hpp"

namespace pisu::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Circuit load_circuit(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return circuit_from_json(nlohmann::json::parse(text));
  }
  return from_qasm(text);
}

void write_circuit(std::ostream& out, const Circuit& c, const std::string& format) {
  if (format == "qasm") {
    out << to_qasm(c);
  } else {
    out << circuit_to_json(c).dump(2) << '\n';
  }
}

SynthesisPlan parse_mode(const std::string& mode, const SymmetrizedGenerator& g) {
  if (mode == "auto") return default_plan(g);
  if (mode == "exact") return SynthesisPlan::exact();
  if (mode.starts_with("trotter:")) {
    const int k = parse_int(std::string_view(mode).substr(8), "trotter steps");
    if (k < 1) throw UsageError("trotter steps must be >= 1");
    return SynthesisPlan::trotter(k);
  }
  throw UsageError("unknown mode '" + mode + "' (expected auto, exact or trotter:<k>)");
}

std::string mode_name(const SynthesisPlan& plan) {
  switch (plan.mode) {
    case SynthesisMode::ExactProduct: return "exact";
    case SynthesisMode::Trotter: return "trotter:" + std::to_string(plan.trotter_steps);
    case SynthesisMode::DenseExponential: return "dense";
  }
  return "?";
}

void check_qubits(std::size_t n) {
  if (n < 1 || n > PauliString::kMaxQubits) throw UsageError("--qubits must be in [1, 64]");
}

int cmd_dim(std::ostream& out, std::size_t n, std::size_t table) {
  check_qubits(n);
  out << "formula: " << dim_pisu(n) << ", enumerated: " << enumerate_types(n).size() << '\n';
  if (table > 0) {
    out << "n\tpisu\tsu\n";
    for (std::size_t k = 1; k <= table; ++k) {
      out << k << '\t' << dim_pisu(k) << '\t' << ((std::uint64_t{1} << (2 * k)) - 1) << '\n';
    }
  }
  return kExitOk;
}

int cmd_basis(std::ostream& out, std::size_t n, const std::string& format) {
  check_qubits(n);
  const auto basis = enumerate_basis(n);
  if (format == "json") {
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const TypeVector& t = basis[k].type();
      std::vector<std::string> orbit;
      for (const PauliString& s : basis[k].orbit()) orbit.push_back(s.dense());
      gens.push_back({{"index", k + 1},
                      {"label", basis[k].label()},
                      {"type", {{"x", t.x}, {"y", t.y}, {"z", t.z}, {"i", t.i}}},
                      {"orbit", orbit}});
    }
    out << nlohmann::json{{"n", n}, {"dimension", basis.size()}, {"generators", gens}}.dump(2)
        << '\n';
    return kExitOk;
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const TypeVector& t = basis[k].type();
    out << "sigma" << k + 1 << '\t' << basis[k].label() << '\t' << t.x << ',' << t.y << ','
        << t.z << ',' << t.i << '\t';
    for (std::size_t s = 0; s < basis[k].orbit().size(); ++s) {
      if (s > 0) out << " + ";
      out << basis[k].orbit()[s].dense();
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_closure(std::ostream& out, std::size_t n, double tol) {
  check_qubits(n);
  if (n > 8) throw UsageError("closure is limited to n <= 8");
  const ClosureReport report = verify_closure(n, tol);
  out << closure_report_json(report).dump() << '\n';
  return report.pass ? kExitOk : kExitVerificationFailed;
}

int cmd_synth(std::ostream& out, std::ostream& err, std::size_t n, const std::string& type,
              double theta, const std::string& mode, const std::string& format, int pivot) {
  check_qubits(n);
  const SymmetrizedGenerator g(parse_type_vector(type, n));
  SynthesisPlan plan = parse_mode(mode, g);
  if (pivot != 0) plan.pivot = pivot;
  const GeneratorSynthesis result = synth_generator(g, theta, plan);
  if (plan.mode == SynthesisMode::Trotter) {
    err << "note: sym(" << g.label() << ") synthesized with " << mode_name(plan) << '\n';
  }
  write_circuit(out, *result.circuit, format);
  return kExitOk;
}

int cmd_verify(std::ostream& out, const std::string& path, double tol, std::size_t blocks) {
  const Circuit c = load_circuit(path);
  const UnitaryMatrix u = circuit_unitary(c);
  double defect = 0.0;
  std::string what;
  if (blocks > 0) {
    if (c.n() % blocks != 0) throw UsageError("--blocks must divide the qubit count");
    defect = block_invariance_defect(u.matrix(), BlockStructure(c.n() / blocks, blocks));
    what = "block-swap-invariant";
  } else {
    defect = swap_invariance_defect(u.matrix(), c.n());
    what = "swap-invariant";
  }
  const bool pass = defect < tol;
  out << what << ": " << (pass ? "yes" : "no") << " (max defect " << sci(defect) << ", tol "
      << sci(tol) << ")\n";
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_ansatz(std::ostream& out, std::size_t n, const std::string& mode, const std::string& choice_flag,
               const std::string& replacement_flag, std::uint64_t seed, const std::string& format,
               double tol) {
  check_qubits(n);
  if (n < 2) throw UsageError("ansatz needs --qubits >= 2");
  RotationChoice rc;
  if (choice_flag == "tie") {
    rc = RotationChoice::Tie;
  } else if (choice_flag == "couple") {
    rc = RotationChoice::Couple;
  } else {
    throw UsageError("--choice must be tie or couple");
  }
  const Circuit base = base_variational_circuit(n, seed);
  SymmetrizedAnsatz result{Circuit(n), {}, {}};
  nlohmann::json report;
  if (mode == "full") {
    std::unique_ptr<SymmetrizedGenerator> replacement;
    if (replacement_flag == "pairs") {
      replacement = std::make_unique<SymmetrizedGenerator>(default_replacement(n));
    } else if (replacement_flag == "all-x") {
      replacement = std::make_unique<SymmetrizedGenerator>(TypeVector{static_cast<int>(n), 0, 0, 0});
    } else {
      throw UsageError("--replacement must be pairs or all-x");
    }
    result = symmetrize_fully(base, *replacement, SymmetrizationChoice::all(rc));
    randomize_parameters(result.circuit, seed);
    const double defect = swap_invariance_defect(circuit_unitary(result.circuit).matrix(), n);
    report = {{"symmetry", "all transpositions"}, {"max_defect", defect}, {"invariant", defect < tol}};
  } else if (mode.starts_with("blocks:")) {
    const int blocks = parse_int(std::string_view(mode).substr(7), "block count");
    if (blocks < 2) throw UsageError("block count must be >= 2");
    const BlockStructure structure(n, static_cast<std::size_t>(blocks));
    result = symmetrize_by_extension(base, structure.blocks, SymmetrizationChoice::all(rc));
    const UnitaryMatrix u = circuit_unitary(result.circuit);
    const double defect = block_invariance_defect(u.matrix(), structure);
    const double within = max_abs_diff(
        swap_matrix(1, 2, structure.n()).matrix() * u.matrix() * swap_matrix(1, 2, structure.n()).matrix(),
        u.matrix());
    report = {{"symmetry", "block exchange"},
              {"blocks", blocks},
              {"max_defect", defect},
              {"invariant", defect < tol},
              {"swap12_defect", within}};
  } else {
    throw UsageError("--mode must be blocks:<b> or full");
  }
  report["parameters"] = result.circuit.num_parameters();
  report["base_parameters"] = base.num_parameters();
  report["cnots"] = cnot_count(result.circuit);
  report["warnings"] = result.warnings;
  const bool pass = report["invariant"].get<bool>();
  if (format == "json") {
    out << nlohmann::json{{"circuit", circuit_to_json(result.circuit)}, {"report", report}}.dump(2)
        << '\n';
  } else {
    out << to_qasm(result.circuit) << "// report: " << report.dump() << '\n';
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_count_cnots(std::ostream& out, std::size_t n, int trotter_steps) {
  check_qubits(n);
  if (trotter_steps < 1) throw UsageError("--trotter-steps must be >= 1");
  std::uint64_t total = 0;
  out << "index\tlabel\tmode\tcnots\n";
  const auto basis = enumerate_basis(n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const SynthesisPlan plan = default_plan(basis[k], trotter_steps);
    const std::size_t count = cnot_count(*synth_generator(basis[k], 0.0, plan).circuit);
    total += count;
    out << k + 1 << '\t' << basis[k].label() << '\t' << mode_name(plan) << '\t' << count << '\n';
  }
  out << "total: " << total << ", naive formula: " << naive_cnot_budget(n) << '\n';
  return kExitOk;
}

int cmd_export(std::ostream& out, const std::string& path, const std::string& format) {
  write_circuit(out, load_circuit(path), format);
  return kExitOk;
}

}  // namespace

TypeVector parse_type_vector(std::string_view spec, std::size_t n) {
  TypeVector t;
  bool seen[3] = {false, false, false};
  std::size_t pos = 0;
  if (spec.empty()) throw std::invalid_argument("empty type vector");
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.size() < 3 || item[1] != ':') {
      throw std::invalid_argument("type vector entries look like x:2, got '" + std::string(item) + "'");
    }
    const int count = parse_int(item.substr(2), "letter count");
    if (count < 0) throw std::invalid_argument("negative letter count");
    int* slot = nullptr;
    int which = 0;
    switch (item[0]) {
      case 'x': case 'X': slot = &t.x; which = 0; break;
      case 'y': case 'Y': slot = &t.y; which = 1; break;
      case 'z': case 'Z': slot = &t.z; which = 2; break;
      default: throw std::invalid_argument("unknown letter '" + std::string(1, item[0]) + "'");
    }
    if (seen[which]) throw std::invalid_argument("letter given twice in type vector");
    seen[which] = true;
    *slot = count;
  }
  const long remainder = static_cast<long>(n) - t.x - t.y - t.z;
  if (remainder < 0) throw std::invalid_argument("type vector uses more letters than qubits");
  t.i = static_cast<int>(remainder);
  if (t.is_identity()) throw std::invalid_argument("type vector is the identity");
  return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation-invariant quantum circuit toolkit"};
  app.require_subcommand(1);

  std::size_t qubits = 0;
  double tol = 1e-10;

  auto* dim = app.add_subcommand("dim", "dimension formula vs enumerated basis size");
  std::size_t table = 0;
  dim->add_option("--qubits", qubits)->required();
  dim->add_option("--table", table, "also print the scaling table for n = 1..N");

  auto* basis = app.add_subcommand("basis", "list the symmetrized Pauli basis");
  std::string basis_format = "text";
  basis->add_option("--qubits", qubits)->required();
  basis->add_option("--format", basis_format)->check(CLI::IsMember({"text", "json"}));

  auto* closure = app.add_subcommand("closure", "verify closure under the Lie bracket");
  double closure_tol = 1e-12;
  closure->add_option("--qubits", qubits)->required();
  closure->add_option("--tol", closure_tol);

  auto* synth = app.add_subcommand("synth", "synthesize exp(-i theta/2 sym(type))");
  std::string type_spec;
  double theta = 0.0;
  std::string synth_mode = "auto";
  std::string out_format = "qasm";
  int pivot = 0;
  synth->add_option("--qubits", qubits)->required();
  synth->add_option("--type", type_spec, "x:a,y:b,z:c")->required();
  synth->add_option("--theta", theta)->required();
  synth->add_option("--mode", synth_mode, "auto | exact | trotter:<k>");
  synth->add_option("--out", out_format)->check(CLI::IsMember({"qasm", "json"}));
  synth->add_option("--pivot", pivot, "central rotation qubit (1-based)");

  auto* verify = app.add_subcommand("verify", "check SWAP invariance of a circuit file");
  std::string circuit_path;
  std::size_t verify_blocks = 0;
  verify->add_option("--circuit", circuit_path)->required();
  verify->add_option("--tol", tol);
  verify->add_option("--blocks", verify_blocks, "check whole-block exchanges instead");

  auto* ansatz = app.add_subcommand("ansatz", "symmetrize the base variational circuit");
  std::string ansatz_mode;
  std::string choice = "tie";
  std::string replacement = "pairs";
  std::uint64_t seed = 7;
  std::string ansatz_format = "qasm";
  ansatz->add_option("--qubits", qubits, "qubits of the base circuit")->required();
  ansatz->add_option("--mode", ansatz_mode, "blocks:<b> | full")->required();
  ansatz->add_option("--choice", choice, "tie | couple");
  ansatz->add_option("--replacement", replacement, "pairs | all-x (full mode)");
  ansatz->add_option("--seed", seed);
  ansatz->add_option("--out", ansatz_format)->check(CLI::IsMember({"qasm", "json"}));
  ansatz->add_option("--tol", tol);

  auto* count = app.add_subcommand("count-cnots", "CNOT counts per generator vs naive formula");
  int trotter_steps = 1;
  count->add_option("--qubits", qubits)->required();
  count->add_option("--trotter-steps", trotter_steps);

  auto* exporter = app.add_subcommand("export", "convert a circuit between JSON and QASM");
  std::string export_format = "qasm";
  exporter->add_option("--circuit", circuit_path)->required();
  exporter->add_option("--out", export_format)->check(CLI::IsMember({"qasm", "json"}));

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dim) return cmd_dim(out, qubits, table);
    if (*basis) return cmd_basis(out, qubits, basis_format);
    if (*closure) return cmd_closure(out, qubits, closure_tol);
    if (*synth) return cmd_synth(out, err, qubits, type_spec, theta, synth_mode, out_format, pivot);
    if (*verify) return cmd_verify(out, circuit_path, tol, verify_blocks);
    if (*ansatz) {
      return cmd_ansatz(out, qubits, ansatz_mode, choice, replacement, seed, ansatz_format, tol);
    }
    if (*count) return cmd_count_cnots(out, qubits, trotter_steps);
    if (*exporter) return cmd_export(out, circuit_path, export_format);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pisu::cli
