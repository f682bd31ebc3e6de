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


#include "pisu/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "pisu/simulator.hpp"

namespace pisu {

namespace {

struct BasisChangeTable {
  BasisChange y;
  BasisChange z;
};

bool maps_x_to(const BasisChange& bc, PauliLetter target) {
  const Matrix m = gate_matrix(bc.after) * letter_matrix(PauliLetter::X) * gate_matrix(bc.before);
  return max_abs_diff(m, letter_matrix(target)) < 1e-14;
}

BasisChange pick(PauliLetter target, std::initializer_list<BasisChange> candidates) {
  for (const BasisChange& bc : candidates) {
    if (maps_x_to(bc, target)) return bc;
  }
  throw std::logic_error("no basis change maps X onto " + std::string(1, to_char(target)));
}

const BasisChangeTable& basis_change_table() {
  static const BasisChangeTable table{
      pick(PauliLetter::Y, {{GateKind::Sdg, GateKind::S}, {GateKind::S, GateKind::Sdg}}),
      pick(PauliLetter::Z, {{GateKind::H, GateKind::H}}),
  };
  return table;
}

std::vector<int> support_qubits(const PauliString& s) {
  std::vector<int> out;
  for (std::size_t p = 0; p < s.n(); ++p) {
    if (s.letter(p) != PauliLetter::I) out.push_back(static_cast<int>(p + 1));
  }
  return out;
}

void check_exponentiable(const PauliString& s) {
  if (s.is_identity()) throw std::invalid_argument("synth_string: all-identity string");
  if (s.coefficient() != Complex(1.0, 0.0)) {
    throw std::invalid_argument("synth_string: string coefficient must be 1");
  }
}

// Chains start at the pivot; each CNOT passes parity one step outward.
void emit(Circuit& c, const PauliString& s, const std::vector<std::vector<int>>& chains,
          const std::string& param, double scale) {
  const std::vector<int> support = support_qubits(s);
  auto wrap = [&](bool before) {
    for (int q : support) {
      const PauliLetter l = s.letter(static_cast<std::size_t>(q - 1));
      if (l == PauliLetter::X) continue;
      const BasisChange bc = basis_change(l);
      c.add(Gate{before ? bc.before : bc.after, {q}, std::nullopt, 1.0});
    }
  };
  wrap(true);
  for (const auto& chain : chains) {
    for (std::size_t k = chain.size() - 1; k-- > 0;) c.add(Gate::cnot(chain[k], chain[k + 1]));
  }
  c.add(Gate::rx(chains.front().front(), param, scale));
  for (auto it = chains.rbegin(); it != chains.rend(); ++it) {
    for (std::size_t k = 0; k + 1 < it->size(); ++k) c.add(Gate::cnot((*it)[k], (*it)[k + 1]));
  }
  wrap(false);
}

int resolve_pivot(const PauliString& s, int pivot) {
  if (pivot == 0) return std::countr_zero(s.support_bits()) + 1;
  if (pivot < 1 || static_cast<std::size_t>(pivot) > s.n()) {
    throw std::out_of_range("synth_string: pivot outside the register");
  }
  if (s.letter(static_cast<std::size_t>(pivot - 1)) == PauliLetter::I) {
    throw std::invalid_argument("synth_string: pivot sits on an identity letter");
  }
  return pivot;
}

}  // namespace

SynthesisPlan default_plan(const SymmetrizedGenerator& g, int trotter_steps) {
  return commuting_orbit(g) ? SynthesisPlan::exact() : SynthesisPlan::trotter(trotter_steps);
}

BasisChange basis_change(PauliLetter l) {
  switch (l) {
    case PauliLetter::Y: return basis_change_table().y;
    case PauliLetter::Z: return basis_change_table().z;
    default: throw std::invalid_argument("basis_change: only Y and Z need a basis change");
  }
}

void append_string_exponential(Circuit& c, const PauliString& s, const std::string& param,
                               double scale, int pivot) {
  check_exponentiable(s);
  if (s.n() != c.n()) throw std::invalid_argument("synth_string: qubit counts differ");
  const int p = resolve_pivot(s, pivot);
  std::vector<int> right{p};
  std::vector<int> left{p};
  for (int q : support_qubits(s)) {
    if (q > p) right.push_back(q);
  }
  for (int q = p - 1; q >= 1; --q) {
    if (s.letter(static_cast<std::size_t>(q - 1)) != PauliLetter::I) left.push_back(q);
  }
  emit(c, s, {right, left}, param, scale);
}

Circuit synth_string(const PauliString& s, double theta, int pivot, const std::string& param) {
  Circuit c(s.n());
  append_string_exponential(c, s, param, 1.0, pivot);
  c.bind(param, theta);
  return c;
}

Circuit synth_string_ordered(const PauliString& s, double theta, std::span<const int> ladder,
                             const std::string& param) {
  check_exponentiable(s);
  std::vector<int> chain(ladder.begin(), ladder.end());
  std::vector<int> sorted = chain;
  std::ranges::sort(sorted);
  if (sorted != support_qubits(s)) {
    throw std::invalid_argument("synth_string_ordered: ladder must list the support exactly once");
  }
  Circuit c(s.n());
  emit(c, s, {chain}, param, 1.0);
  c.bind(param, theta);
  return c;
}

bool commuting_orbit(const SymmetrizedGenerator& g) {
  const auto& orbit = g.orbit();
  for (std::size_t a = 0; a < orbit.size(); ++a) {
    for (std::size_t b = a + 1; b < orbit.size(); ++b) {
      if (!commutes(orbit[a], orbit[b])) return false;
    }
  }
  return true;
}

UnitaryMatrix dense_exponential(const Matrix& hermitian, double theta) {
  if (hermitian.rows() != hermitian.cols()) {
    throw std::invalid_argument("dense_exponential: matrix is not square");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian);
  if (eig.info() != Eigen::Success) throw std::runtime_error("dense_exponential: eigensolver failed");
  const Eigen::VectorXcd phases = (eig.eigenvalues().cast<Complex>() * Complex(0.0, -theta / 2))
                                      .array()
                                      .exp()
                                      .matrix();
  const Matrix& v = eig.eigenvectors();
  return UnitaryMatrix(v * phases.asDiagonal() * v.adjoint());
}

UnitaryMatrix dense_exponential(const SymmetrizedGenerator& g, double theta) {
  check_dense_limit(g.n(), "dense_exponential");
  return dense_exponential(g.matrix(), theta);
}

UnitaryMatrix GeneratorSynthesis::unitary() const {
  if (dense) return *dense;
  return circuit_unitary(*circuit);
}

GeneratorSynthesis synth_generator(const SymmetrizedGenerator& g, double theta,
                                   const SynthesisPlan& plan, const std::string& param) {
  GeneratorSynthesis out;
  out.mode = plan.mode;
  if (plan.mode == SynthesisMode::DenseExponential) {
    out.dense = dense_exponential(g, theta);
    return out;
  }
  int steps = 1;
  if (plan.mode == SynthesisMode::ExactProduct) {
    if (!commuting_orbit(g)) {
      throw NonCommutingOrbitError("exact product requested for the non-commuting orbit of " +
                                   g.label());
    }
  } else {
    if (plan.trotter_steps < 1) throw std::invalid_argument("synth_generator: trotter steps < 1");
    steps = plan.trotter_steps;
  }
  Circuit c(g.n());
  const double scale = 1.0 / steps;
  for (int step = 0; step < steps; ++step) {
    for (const PauliString& s : g.orbit()) {
      int pivot = 0;
      if (plan.pivot && s.letter(static_cast<std::size_t>(*plan.pivot - 1)) != PauliLetter::I) {
        pivot = *plan.pivot;
      }
      append_string_exponential(c, s, param, scale, pivot);
    }
  }
  c.bind(param, theta);
  out.circuit = std::move(c);
  return out;
}

std::size_t cnot_count(const Circuit& c) { return c.count(GateKind::CNOT); }

std::uint64_t naive_cnot_budget(std::size_t n) {
  std::uint64_t sum = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::uint64_t d = n - k;
    sum += d * d * d;
  }
  return 2 * n * sum;
}

}  // namespace pisu
