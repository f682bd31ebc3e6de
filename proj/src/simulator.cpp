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


#include "pisu/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace pisu {

namespace {

using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Left-multiplies u by a single-qubit gate on basis bit `bit`.
void apply_single(RowMajor& u, const Matrix& g, std::uint64_t bit) {
  const auto dim = static_cast<std::uint64_t>(u.rows());
  const Complex g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
  const bool diagonal = g01 == Complex{} && g10 == Complex{};
  for (std::uint64_t r0 = 0; r0 < dim; ++r0) {
    if (r0 & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(r0);
    const auto i1 = static_cast<Eigen::Index>(r0 | bit);
    if (diagonal) {
      u.row(i0) *= g00;
      u.row(i1) *= g11;
      continue;
    }
    for (Eigen::Index col = 0; col < u.cols(); ++col) {
      const Complex a = u(i0, col);
      const Complex b = u(i1, col);
      u(i0, col) = g00 * a + g01 * b;
      u(i1, col) = g10 * a + g11 * b;
    }
  }
}

void apply_cnot(RowMajor& u, std::uint64_t control, std::uint64_t target) {
  const auto dim = static_cast<std::uint64_t>(u.rows());
  for (std::uint64_t r = 0; r < dim; ++r) {
    if ((r & control) && !(r & target)) {
      u.row(static_cast<Eigen::Index>(r)).swap(u.row(static_cast<Eigen::Index>(r | target)));
    }
  }
}

}  // namespace

UnitaryMatrix circuit_unitary(const Circuit& c) {
  check_dense_limit(c.n(), "circuit_unitary");
  const std::size_t n = c.n();
  const Eigen::Index dim = Eigen::Index{1} << n;
  RowMajor u = RowMajor::Identity(dim, dim);
  auto bit_of = [n](int q) { return std::uint64_t{1} << (n - static_cast<std::size_t>(q)); };
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::CNOT) {
      apply_cnot(u, bit_of(g.qubits[0]), bit_of(g.qubits[1]));
    } else {
      const double angle = is_rotation(g.kind) ? c.angle(g) : 0.0;
      apply_single(u, gate_matrix(g.kind, angle), bit_of(g.qubits[0]));
    }
  }
  return UnitaryMatrix(Matrix(u));
}

std::vector<UnitaryMatrix> circuit_unitaries(std::span<const Circuit> circuits) {
  std::vector<UnitaryMatrix> out;
  out.reserve(circuits.size());
  for (const Circuit& c : circuits) out.push_back(circuit_unitary(c));
  return out;
}

ComparisonResult equal_up_to_global_phase(const Matrix& u, const Matrix& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
  }
  ComparisonResult result;
  const Complex overlap = (v.adjoint() * u).trace();
  if (std::abs(overlap) > 1e-12 * static_cast<double>(u.rows())) {
    result.global_phase = overlap / std::abs(overlap);
  } else {
    Eigen::Index row = 0, col = 0;
    v.cwiseAbs().maxCoeff(&row, &col);
    const Complex ratio = u(row, col) / v(row, col);
    if (std::abs(ratio) > 0.0 && std::isfinite(std::abs(ratio))) {
      result.global_phase = ratio / std::abs(ratio);
    }
  }
  result.max_abs_diff = max_abs_diff(u, result.global_phase * v);
  result.pass = result.max_abs_diff < tol;
  return result;
}

}  // namespace pisu
