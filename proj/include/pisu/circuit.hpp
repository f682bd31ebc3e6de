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


#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pisu/unitary.hpp"

namespace pisu {

enum class GateKind { H, S, Sdg, CNOT, RX, RY, RZ };

std::string_view gate_name(GateKind k);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
bool is_rotation(GateKind k);
std::size_t gate_arity(GateKind k);

/// One gate. Qubits are 1-based; for CNOT qubits = {control, target}.
///
/// A rotation refers to a named circuit parameter; its angle is
/// scale * params[param]. The scale lets a Trotter step share the parameter
/// of the full evolution.
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> qubits;
  std::optional<std::string> param;
  double scale = 1.0;

  static Gate h(int q) { return {GateKind::H, {q}, std::nullopt, 1.0}; }
  static Gate s(int q) { return {GateKind::S, {q}, std::nullopt, 1.0}; }
  static Gate sdg(int q) { return {GateKind::Sdg, {q}, std::nullopt, 1.0}; }
  static Gate cnot(int control, int target) {
    return {GateKind::CNOT, {control, target}, std::nullopt, 1.0};
  }
  static Gate rx(int q, std::string p, double scale = 1.0) {
    return {GateKind::RX, {q}, std::move(p), scale};
  }
  static Gate ry(int q, std::string p, double scale = 1.0) {
    return {GateKind::RY, {q}, std::move(p), scale};
  }
  static Gate rz(int q, std::string p, double scale = 1.0) {
    return {GateKind::RZ, {q}, std::move(p), scale};
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// 2x2 (or 4x4 for CNOT, control on the leftmost factor) matrix of a gate
/// at the given angle. RX(t) = exp(-i t X / 2), likewise RY, RZ.
Matrix gate_matrix(GateKind kind, double angle = 0.0);

/// Ordered gate list over n qubits; the first gate is applied first.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n);

  std::size_t n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::map<std::string, double>& params() const { return params_; }

  /// Validates arity, qubit range and parameter presence.
  Circuit& add(Gate g);
  Circuit& bind(const std::string& name, double value);

  /// Appends another circuit on the same qubit count. Parameters are
  /// merged; a name bound to two different values is an error.
  Circuit& append(const Circuit& other);

  /// Angle of a rotation gate; throws if its parameter is unbound.
  double angle(const Gate& g) const;

  /// Distinct parameter names referenced by rotation gates.
  std::set<std::string> parameter_names() const;
  std::size_t num_parameters() const { return parameter_names().size(); }
  bool fully_bound() const;

  std::size_t count(GateKind kind) const;

 private:
  std::size_t n_ = 0;
  std::vector<Gate> gates_;
  std::map<std::string, double> params_;
};

}  // namespace pisu
