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


// Test-only reference implementations. They deliberately avoid the
// library's fast paths (sliced gate application, bitmask string matrices,
// eigendecomposition) so they can check them.

#pragma once

#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "pisu/circuit.hpp"
#include "pisu/pauli.hpp"

namespace pisu::oracle {

inline Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

inline Matrix identity(std::size_t n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  return Matrix::Identity(dim, dim);
}

/// Kronecker product of letter matrices, qubit 1 leftmost.
inline Matrix pauli_kron(const PauliString& s) {
  Matrix m = Matrix::Identity(1, 1);
  for (std::size_t p = 0; p < s.n(); ++p) m = kron(m, letter_matrix(s.letter(p)));
  return s.coefficient() * m;
}

/// Single-qubit matrix g on qubit q (1-based) of n.
inline Matrix embed_1q(const Matrix& g, int q, std::size_t n) {
  Matrix m = Matrix::Identity(1, 1);
  for (int k = 1; k <= static_cast<int>(n); ++k) {
    m = kron(m, k == q ? g : Matrix::Identity(2, 2));
  }
  return m;
}

/// CNOT as |0><0|_c (x) 1 + |1><1|_c (x) X_t.
inline Matrix embed_cnot(int control, int target, std::size_t n) {
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1;
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1;
  Matrix x = letter_matrix(PauliLetter::X);
  Matrix a = Matrix::Identity(1, 1);
  Matrix b = Matrix::Identity(1, 1);
  for (int k = 1; k <= static_cast<int>(n); ++k) {
    a = kron(a, k == control ? p0 : Matrix::Identity(2, 2));
    b = kron(b, k == control ? p1 : (k == target ? x : Matrix::Identity(2, 2)));
  }
  return a + b;
}

/// Product of Kronecker-embedded gate matrices.
inline Matrix naive_circuit_unitary(const Circuit& c) {
  Matrix u = identity(c.n());
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::CNOT) {
      u = embed_cnot(g.qubits[0], g.qubits[1], c.n()) * u;
    } else {
      const double angle = is_rotation(g.kind) ? c.angle(g) : 0.0;
      u = embed_1q(gate_matrix(g.kind, angle), g.qubits[0], c.n()) * u;
    }
  }
  return u;
}

/// exp(a) by scaling and squaring with a truncated Taylor series.
inline Matrix expm_taylor(const Matrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Matrix scaled = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// exp(-i theta/2 h) through the Taylor oracle.
inline Matrix evolve(const Matrix& h, double theta) {
  return expm_taylor(Complex(0.0, -theta / 2) * h);
}

inline PauliString random_string(std::mt19937_64& rng, std::size_t n, bool allow_identity = true) {
  std::uniform_int_distribution<int> letter(0, 3);
  while (true) {
    PauliString s(n);
    for (std::size_t p = 0; p < n; ++p) s.set_letter(p, static_cast<PauliLetter>(letter(rng)));
    if (allow_identity || !s.is_identity()) return s;
  }
}

inline Circuit random_circuit(std::mt19937_64& rng, std::size_t n, std::size_t gates) {
  std::uniform_int_distribution<int> kind(0, 6);
  std::uniform_int_distribution<int> qubit(1, static_cast<int>(n));
  std::uniform_real_distribution<double> angle(-3.2, 3.2);
  Circuit c(n);
  for (std::size_t k = 0; k < gates; ++k) {
    const auto gk = static_cast<GateKind>(kind(rng));
    if (gk == GateKind::CNOT) {
      if (n < 2) continue;
      const int a = qubit(rng);
      int b = qubit(rng);
      while (b == a) b = qubit(rng);
      c.add(Gate::cnot(a, b));
    } else if (is_rotation(gk)) {
      const std::string p = "p" + std::to_string(k);
      c.add(Gate{gk, {qubit(rng)}, p, 1.0});
      c.bind(p, angle(rng));
    } else {
      c.add(Gate{gk, {qubit(rng)}, std::nullopt, 1.0});
    }
  }
  return c;
}

}  // namespace pisu::oracle
