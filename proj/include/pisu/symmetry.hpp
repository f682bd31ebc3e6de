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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pisu/pauli.hpp"
#include "pisu/unitary.hpp"

namespace pisu {

/// Letter counts of a Pauli string; qubit permutations preserve it.
struct TypeVector {
  int x = 0;
  int y = 0;
  int z = 0;
  int i = 0;

  int n() const { return x + y + z + i; }
  bool is_identity() const { return x == 0 && y == 0 && z == 0; }
  /// Number of distinct non-identity letters present (0..3).
  int letter_kinds() const { return (x > 0) + (y > 0) + (z > 0); }
  /// Representative string: X's, then Y's, then Z's, then I's.
  std::string representative() const;

  friend auto operator<=>(const TypeVector&, const TypeVector&) = default;
};

TypeVector type_of(const PauliString& s);

/// n! / (x! y! z! i!)
std::uint64_t multinomial(const TypeVector& t);

/// One basis element of the permutation-invariant algebra: the sum of every
/// distinct arrangement of a type vector's letters, each with coefficient 1.
class SymmetrizedGenerator {
 public:
  explicit SymmetrizedGenerator(TypeVector type);

  const TypeVector& type() const { return type_; }
  std::size_t n() const { return static_cast<std::size_t>(type_.n()); }
  /// Orbit in lexicographic order with I < X < Y < Z.
  const std::vector<PauliString>& orbit() const { return orbit_; }
  /// Representative dense string, e.g. "XY" for XY + YX.
  const std::string& label() const { return label_; }

  PauliSum sum() const;
  /// Hermitian matrix of the sum.
  Matrix matrix() const;

 private:
  TypeVector type_;
  std::vector<PauliString> orbit_;
  std::string label_;
};

/// Every transposition (i, j), 1 <= i < j <= n.
std::vector<std::pair<int, int>> transpositions(std::size_t n);

/// Permutation matrix exchanging tensor factors i and j (1-based).
UnitaryMatrix swap_matrix(int i, int j, std::size_t n);

/// Matrix moving the state of qubit q onto qubit image[q-1].
UnitaryMatrix qubit_permutation_matrix(std::span<const int> image);

/// Letters at positions i and j (1-based) exchanged, coefficient kept.
PauliString conjugate_by_swap(const PauliString& s, int i, int j);

/// Non-identity type vectors on n qubits in basis order (descending x, y, z).
std::vector<TypeVector> enumerate_types(std::size_t n);

/// One generator per non-identity type vector, ordered by descending
/// (x, y, z); for n = 2 this is XX, XY, XZ, XI, YY, YZ, YI, ZZ, ZI.
std::vector<SymmetrizedGenerator> enumerate_basis(std::size_t n);

/// (n+3)(n+2)(n+1)/6 - 1
std::uint64_t dim_pisu(std::size_t n);

/// max |S U S^dagger - U| < tol.
bool is_invariant_under(const Matrix& u, const Matrix& s, double tol);

/// Invariance under the qubit permutation `image` (see
/// qubit_permutation_matrix), evaluated by index remapping.
bool is_invariant_under_permutation(const Matrix& u, std::span<const int> image, double tol);

/// Largest |S U S - U| over all transpositions S.
double swap_invariance_defect(const Matrix& u, std::size_t n);

/// Invariance under every transposition SWAP; transpositions generate S_n.
bool is_swap_invariant(const Matrix& u, std::size_t n, double tol);

struct Projection {
  std::vector<Complex> coefficients;
  double residual = 0.0;
};

/// Coefficients of v along each generator by trace orthogonality: the mean
/// of v's coefficients over the orbit. residual = |v - reconstruction| in
/// coefficient norm; it is nonzero when v is not symmetric or has support
/// outside the basis.
Projection project_onto_basis(const PauliSum& v, std::span<const SymmetrizedGenerator> basis);

struct ClosureReport {
  std::size_t n = 0;
  std::size_t pairs = 0;
  double max_residual = 0.0;
  bool pass = false;
  /// Generator indices (0-based) of the worst pair.
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
};

/// Brackets every unordered pair of distinct basis generators symbolically
/// and projects the result back onto the basis.
ClosureReport verify_closure(std::size_t n, double tol);

/// {"n", "pairs", "max_residual", "pass"}
nlohmann::json closure_report_json(const ClosureReport& r);

}  // namespace pisu
