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


#include "pisu/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pisu {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::CNOT: return "cx";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::CNOT, GateKind::RX,
                     GateKind::RY, GateKind::RZ}) {
    if (gate_name(k) == name) return k;
  }
  if (name == "cnot") return GateKind::CNOT;
  return std::nullopt;
}

bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

std::size_t gate_arity(GateKind k) { return k == GateKind::CNOT ? 2 : 1; }

Matrix gate_matrix(GateKind kind, double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  Matrix m = Matrix::Zero(2, 2);
  switch (kind) {
    case GateKind::H:
      m << 1, 1, 1, -1;
      m /= std::sqrt(2.0);
      break;
    case GateKind::S:
      m(0, 0) = 1;
      m(1, 1) = kI;
      break;
    case GateKind::Sdg:
      m(0, 0) = 1;
      m(1, 1) = -kI;
      break;
    case GateKind::RX:
      m(0, 0) = c;
      m(1, 1) = c;
      m(0, 1) = -kI * s;
      m(1, 0) = -kI * s;
      break;
    case GateKind::RY:
      m(0, 0) = c;
      m(1, 1) = c;
      m(0, 1) = -s;
      m(1, 0) = s;
      break;
    case GateKind::RZ:
      m(0, 0) = std::exp(-kI * (angle / 2));
      m(1, 1) = std::exp(kI * (angle / 2));
      break;
    case GateKind::CNOT:
      m = Matrix::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      break;
  }
  return m;
}

Circuit::Circuit(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("Circuit: qubit count must be positive");
}

Circuit& Circuit::add(Gate g) {
  if (g.qubits.size() != gate_arity(g.kind)) {
    throw std::invalid_argument("Circuit::add: wrong number of qubits for " +
                                std::string(gate_name(g.kind)));
  }
  for (int q : g.qubits) {
    if (q < 1 || static_cast<std::size_t>(q) > n_) {
      throw std::out_of_range("Circuit::add: qubit " + std::to_string(q) + " outside [1, " +
                              std::to_string(n_) + "]");
    }
  }
  if (g.kind == GateKind::CNOT && g.qubits[0] == g.qubits[1]) {
    throw std::invalid_argument("Circuit::add: CNOT control equals target");
  }
  if (is_rotation(g.kind) != g.param.has_value()) {
    throw std::invalid_argument("Circuit::add: rotations need exactly one parameter, "
                                "other gates none");
  }
  if (g.param && g.param->empty()) throw std::invalid_argument("Circuit::add: empty parameter name");
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::bind(const std::string& name, double value) {
  params_[name] = value;
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw std::invalid_argument("Circuit::append: qubit counts differ");
  for (const auto& [name, value] : other.params_) {
    auto it = params_.find(name);
    if (it != params_.end() && it->second != value) {
      throw std::invalid_argument("Circuit::append: parameter '" + name +
                                  "' bound to conflicting values");
    }
    params_[name] = value;
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

double Circuit::angle(const Gate& g) const {
  if (!g.param) throw std::invalid_argument("Circuit::angle: gate has no parameter");
  auto it = params_.find(*g.param);
  if (it == params_.end()) throw std::invalid_argument("unbound parameter '" + *g.param + "'");
  return g.scale * it->second;
}

std::set<std::string> Circuit::parameter_names() const {
  std::set<std::string> names;
  for (const Gate& g : gates_) {
    if (g.param) names.insert(*g.param);
  }
  return names;
}

bool Circuit::fully_bound() const {
  return std::ranges::all_of(parameter_names(),
                             [&](const std::string& p) { return params_.contains(p); });
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::ranges::count_if(gates_, [kind](const Gate& g) { return g.kind == kind; }));
}

}  // namespace pisu
