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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pisu/unitary.hpp"

namespace pisu {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter l);
PauliLetter letter_from_char(char c);

/// Standard 2x2 matrix of a letter in the computational basis.
Matrix letter_matrix(PauliLetter l);

/// A tensor product of Pauli letters over n <= 64 qubits with a complex
/// coefficient.
///
/// Qubit ordering: position 0 is qubit 1 and is the leftmost Kronecker
/// factor, i.e. the most significant bit of a computational basis index.
/// Every module uses this convention.
///
/// Letters are stored symplectically as x/z bitmasks (Y sets both bits and
/// denotes the Hermitian Y, not XZ). Phases produced by Pauli multiplication
/// are kept as an exact power of i and only folded into the complex
/// coefficient by coefficient().
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  PauliString() = default;
  /// Identity string on n qubits.
  explicit PauliString(std::size_t n, Complex coeff = 1.0);
  /// Dense form, e.g. "XYIZ". Case-insensitive; '_' is accepted for I.
  explicit PauliString(std::string_view letters, Complex coeff = 1.0);
  PauliString(const std::vector<PauliLetter>& letters, Complex coeff = 1.0);

  std::size_t n() const { return n_; }
  PauliLetter letter(std::size_t pos) const;
  std::vector<PauliLetter> letters() const;
  void set_letter(std::size_t pos, PauliLetter l);

  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  std::uint64_t support_bits() const { return x_ | z_; }

  /// coeff * i^phase.
  Complex coefficient() const;
  Complex raw_coeff() const { return coeff_; }
  int phase_exponent() const { return phase_; }
  PauliString with_coefficient(Complex c) const;

  /// Number of non-identity letters.
  std::size_t weight() const;
  bool is_identity() const { return support_bits() == 0; }

  /// "XYIZ".
  std::string dense() const;
  /// Index notation with qubit 1 rightmost, e.g. "x2 y1" for Y (x) X.
  /// The identity string renders as "1".
  std::string notation() const;

  /// Same letters, ignoring coefficients.
  bool same_letters(const PauliString& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }

 private:
  friend PauliString multiply(const PauliString& a, const PauliString& b);

  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  Complex coeff_{1.0, 0.0};
  int phase_ = 0;
};

/// Kronecker product of the letter matrices in qubit order, scaled by the
/// coefficient. Throws DimensionLimitError above dense_qubit_limit().
Matrix string_matrix(const PauliString& s);

/// Pauli group product with exact phase tracking.
PauliString multiply(const PauliString& a, const PauliString& b);

/// Symplectic commutation test.
bool commutes(const PauliString& a, const PauliString& b);

/// Formal complex-linear combination of Pauli strings on a fixed qubit count.
/// Terms whose coefficient falls below the pruning epsilon are dropped.
class PauliSum {
 public:
  static constexpr double kDefaultEpsilon = 1e-14;

  /// Letter key: (x bits, z bits).
  using Key = std::pair<std::uint64_t, std::uint64_t>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n, double epsilon = kDefaultEpsilon);
  PauliSum(const PauliString& s, double epsilon = kDefaultEpsilon);

  std::size_t n() const { return n_; }
  double epsilon() const { return epsilon_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds the term's folded coefficient; prunes the entry if it cancels.
  void add(const PauliString& s);
  void add(const PauliSum& other, Complex scale = 1.0);

  /// Coefficient of the string with the given letters (0 if absent).
  Complex coefficient(const PauliString& letters) const;

  /// Terms in deterministic order, each carrying its coefficient.
  std::vector<PauliString> terms() const;
  const std::map<Key, Complex>& raw_terms() const { return terms_; }

  /// Euclidean norm of the coefficient vector. Equals the Frobenius norm
  /// of the matrix divided by sqrt(2^n).
  double norm() const;
  bool is_hermitian(double tol = kDefaultEpsilon) const;

  Matrix matrix() const;

  /// Text form, e.g. "1 XY + 1 YX". Empty sum renders as "0".
  std::string to_string() const;

  friend PauliSum operator+(PauliSum a, const PauliSum& b);
  friend PauliSum operator-(PauliSum a, const PauliSum& b);
  friend PauliSum operator*(Complex c, PauliSum a);
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

 private:
  void accumulate(const Key& key, Complex c);
  PauliString term(const Key& key, Complex c) const;

  std::size_t n_ = 0;
  double epsilon_ = kDefaultEpsilon;
  std::map<Key, Complex> terms_;
};

/// [a, b] = ab - ba, computed term-wise: anticommuting pairs contribute 2ab,
/// commuting pairs cancel exactly.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

void to_json(nlohmann::json& j, const PauliSum& s);
void from_json(const nlohmann::json& j, PauliSum& s);

}  // namespace pisu
