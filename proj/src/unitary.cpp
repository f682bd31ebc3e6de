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


#include "pisu/unitary.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace pisu {

namespace {

constexpr std::size_t kDefaultDenseQubits = 12;

}  // namespace

std::size_t dense_qubit_limit() {
  const char* env = std::getenv("PISU_MAX_QUBITS");
  if (env == nullptr || *env == '\0') return kDefaultDenseQubits;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
  if (ec != std::errc{} || *ptr != '\0' || value == 0 || value > 30) {
    return kDefaultDenseQubits;
  }
  return value;
}

void check_dense_limit(std::size_t n, const char* what) {
  const std::size_t limit = dense_qubit_limit();
  if (n > limit) {
    throw DimensionLimitError(std::string(what) + ": " + std::to_string(n) +
                              " qubits exceeds the dense limit of " +
                              std::to_string(limit));
  }
}

double unitarity_defect(const Matrix& m) {
  const Matrix gram = m.adjoint() * m;
  return (gram - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw std::invalid_argument("UnitaryMatrix: matrix must be square and non-empty");
  }
  defect_ = pisu::unitarity_defect(m_);
  if (!(defect_ < kTolerance)) {
    throw std::invalid_argument("UnitaryMatrix: unitarity defect " + std::to_string(defect_) +
                                " exceeds tolerance");
  }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t n_qubits) {
  check_dense_limit(n_qubits, "identity");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return UnitaryMatrix(Matrix::Identity(dim, dim));
}

std::size_t UnitaryMatrix::num_qubits() const {
  return static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(m_.rows())));
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint()); }

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("UnitaryMatrix: dimension mismatch");
  return UnitaryMatrix(a.m_ * b.m_);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace pisu
