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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pisu {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Raised when a dense 2^n x 2^n realization would exceed the qubit cap.
class DimensionLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Dense-realization qubit cap. PISU_MAX_QUBITS overrides the default of 12.
std::size_t dense_qubit_limit();

/// Throws DimensionLimitError if n exceeds dense_qubit_limit().
void check_dense_limit(std::size_t n, const char* what);

/// max_{ij} |(U^dagger U - 1)_{ij}|
double unitarity_defect(const Matrix& m);

/// A dense matrix known to be unitary within kTolerance.
class UnitaryMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  /// Throws std::invalid_argument if m is not square or not unitary.
  explicit UnitaryMatrix(Matrix m);

  static UnitaryMatrix identity(std::size_t n_qubits);

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  std::size_t num_qubits() const;
  double unitarity_defect() const { return defect_; }

  UnitaryMatrix adjoint() const;
  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  Matrix m_;
  double defect_ = 0.0;
};

/// Entrywise max |a - b|; throws std::invalid_argument on shape mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace pisu
