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

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "pisu/circuit.hpp"
#include "pisu/pauli.hpp"
#include "pisu/symmetry.hpp"
#include "pisu/unitary.hpp"

namespace pisu {

/// Requested an exact product for an orbit whose strings do not commute.
class NonCommutingOrbitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SynthesisMode { ExactProduct, Trotter, DenseExponential };

struct SynthesisPlan {
  SynthesisMode mode = SynthesisMode::ExactProduct;
  int trotter_steps = 1;
  /// Central-rotation qubit. Used for every orbit string that is non-I
  /// there; other strings fall back to their lowest non-I qubit.
  std::optional<int> pivot;

  static SynthesisPlan exact() { return {}; }
  static SynthesisPlan trotter(int steps) { return {SynthesisMode::Trotter, steps, std::nullopt}; }
  static SynthesisPlan dense() { return {SynthesisMode::DenseExponential, 1, std::nullopt}; }
};

inline constexpr int kDefaultTrotterSteps = 8;

/// Exact product when the orbit commutes, otherwise Trotter.
SynthesisPlan default_plan(const SymmetrizedGenerator& g, int trotter_steps = kDefaultTrotterSteps);

/// Single-qubit gates mapping X onto a letter: after * X * before == letter,
/// with `before` applied first. Chosen numerically on first use.
struct BasisChange {
  GateKind before;
  GateKind after;
};
BasisChange basis_change(PauliLetter l);

/// exp(-i theta/2 P) for a coefficient-1 string P: basis changes, CNOT
/// ladders fanning out from `pivot` (0 = lowest non-I qubit), RX(theta) on
/// the pivot, then the mirror image. Identity qubits are untouched.
Circuit synth_string(const PauliString& s, double theta, int pivot = 0,
                     const std::string& param = "theta");

/// Same exponential with one CNOT chain visiting `ladder` in order;
/// ladder[0] is the pivot and the list covers the string's support exactly.
Circuit synth_string_ordered(const PauliString& s, double theta, std::span<const int> ladder,
                             const std::string& param = "theta");

/// Appends exp(-i scale*param/2 P) to an existing circuit.
void append_string_exponential(Circuit& c, const PauliString& s, const std::string& param,
                               double scale = 1.0, int pivot = 0);

bool commuting_orbit(const SymmetrizedGenerator& g);

/// exp(-i theta/2 M) for Hermitian M via eigendecomposition.
UnitaryMatrix dense_exponential(const Matrix& hermitian, double theta);
UnitaryMatrix dense_exponential(const SymmetrizedGenerator& g, double theta);

struct GeneratorSynthesis {
  SynthesisMode mode = SynthesisMode::ExactProduct;
  /// Empty in dense-exponential mode.
  std::optional<Circuit> circuit;
  /// Set in dense-exponential mode only.
  std::optional<UnitaryMatrix> dense;

  UnitaryMatrix unitary() const;
};

/// exp(-i theta/2 g) as a circuit (exact product or first-order Trotter with
/// angle theta/k per step) or as a dense unitary. Throws
/// NonCommutingOrbitError for an exact product over a non-commuting orbit.
GeneratorSynthesis synth_generator(const SymmetrizedGenerator& g, double theta,
                                   const SynthesisPlan& plan, const std::string& param = "theta");

std::size_t cnot_count(const Circuit& c);

/// 2n * sum_{k=1}^{n} (n-k)^3, the reference budget for the whole group.
std::uint64_t naive_cnot_budget(std::size_t n);

}  // namespace pisu
