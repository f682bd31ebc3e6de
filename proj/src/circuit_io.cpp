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


#include "pisu/circuit_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pisu {

namespace {

std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void qasm_error(std::size_t line, const std::string& msg) {
  throw std::invalid_argument("qasm line " + std::to_string(line) + ": " + msg);
}

int parse_qubit(std::string_view operand, std::size_t line) {
  operand = trim(operand);
  const auto open = operand.find('[');
  const auto close = operand.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    qasm_error(line, "expected q[index], got '" + std::string(operand) + "'");
  }
  int index = 0;
  auto digits = operand.substr(open + 1, close - open - 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    qasm_error(line, "bad qubit index '" + std::string(digits) + "'");
  }
  return index + 1;
}

double parse_angle(std::string_view text, std::size_t line) {
  text = trim(text);
  std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || *end != '\0') qasm_error(line, "unsupported angle '" + buf + "'");
  return v;
}

}  // namespace

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates()) {
    nlohmann::json jg{{"kind", std::string(gate_name(g.kind))}, {"qubits", g.qubits}};
    jg["param"] = g.param ? nlohmann::json(*g.param) : nlohmann::json(nullptr);
    if (g.scale != 1.0) jg["scale"] = g.scale;
    gates.push_back(std::move(jg));
  }
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : c.params()) params[name] = value;
  return {{"n", c.n()}, {"gates", std::move(gates)}, {"params", std::move(params)}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit c(j.at("n").get<std::size_t>());
  for (const auto& jg : j.at("gates")) {
    const std::string kind = jg.at("kind").get<std::string>();
    const auto k = gate_kind_from_name(kind);
    if (!k) throw std::invalid_argument("circuit JSON: unknown gate kind '" + kind + "'");
    Gate g{*k, jg.at("qubits").get<std::vector<int>>(), std::nullopt, 1.0};
    if (jg.contains("param") && !jg.at("param").is_null()) g.param = jg.at("param").get<std::string>();
    if (jg.contains("scale")) g.scale = jg.at("scale").get<double>();
    c.add(std::move(g));
  }
  if (j.contains("params")) {
    for (const auto& [name, value] : j.at("params").items()) c.bind(name, value.get<double>());
  }
  return c;
}

std::string to_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n() << "];\n";
  for (const Gate& g : c.gates()) {
    out << gate_name(g.kind);
    if (is_rotation(g.kind)) out << '(' << format_angle(c.angle(g)) << ')';
    out << ' ';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i > 0) out << ',';
      out << "q[" << g.qubits[i] - 1 << ']';
    }
    out << ";\n";
  }
  return out.str();
}

Circuit from_qasm(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t rotations = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto comment = line.find("//"); comment != std::string_view::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.back() != ';') qasm_error(line_no, "missing ';'");
    line = trim(line.substr(0, line.size() - 1));
    if (line.starts_with("OPENQASM") || line.starts_with("include")) continue;
    if (line.starts_with("qreg")) {
      if (circuit) qasm_error(line_no, "only one qreg is supported");
      circuit.emplace(static_cast<std::size_t>(parse_qubit(line.substr(4), line_no) - 1));
      continue;
    }
    if (!circuit) qasm_error(line_no, "gate before qreg");

    const auto name_end = line.find_first_of(" (");
    if (name_end == std::string_view::npos) qasm_error(line_no, "missing operands");
    const std::string_view name = line.substr(0, name_end);
    const auto kind = gate_kind_from_name(name);
    if (!kind) qasm_error(line_no, "unsupported gate '" + std::string(name) + "'");

    std::string_view rest = line.substr(name_end);
    std::optional<double> angle;
    if (rest.front() == '(') {
      const auto close = rest.find(')');
      if (close == std::string_view::npos) qasm_error(line_no, "unbalanced parenthesis");
      angle = parse_angle(rest.substr(1, close - 1), line_no);
      rest = rest.substr(close + 1);
    }
    if (angle.has_value() != is_rotation(*kind)) {
      qasm_error(line_no, "angle given for a fixed gate or missing for a rotation");
    }
    std::vector<int> qubits;
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto comma = rest.find(',', start);
      if (comma == std::string_view::npos) comma = rest.size();
      qubits.push_back(parse_qubit(rest.substr(start, comma - start), line_no));
      start = comma + 1;
    }
    Gate g{*kind, std::move(qubits), std::nullopt, 1.0};
    if (angle) {
      const std::string p = "a" + std::to_string(rotations++);
      g.param = p;
      circuit->bind(p, *angle);
    }
    try {
      circuit->add(std::move(g));
    } catch (const std::exception& e) {
      qasm_error(line_no, e.what());
    }
  }
  if (!circuit) throw std::invalid_argument("qasm: no qreg declared");
  return *std::move(circuit);
}

}  // namespace pisu
