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


#include "pisu/symmetry.hpp"

#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "pisu/simulator.hpp"
#include "pisu/synthesis.hpp"

using namespace pisu;

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (const auto& g : enumerate_basis(n)) out.push_back(g.label());
  return out;
}

}  // namespace

TEST(swap_matrix, two_qubit_swap) {
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(1, 2) = expected(2, 1) = expected(3, 3) = 1;
  EXPECT_EQ(swap_matrix(1, 2, 2).matrix(), expected);
}

TEST(swap_matrix, trivial_and_composed) {
  EXPECT_EQ(swap_matrix(1, 1, 3).matrix(), oracle::identity(3));
  const Matrix s12 = swap_matrix(1, 2, 3).matrix();
  const Matrix s23 = swap_matrix(2, 3, 3).matrix();
  EXPECT_EQ(swap_matrix(1, 3, 3).matrix(), s12 * s23 * s12);
}

TEST(swap_matrix, moves_tensor_factors) {
  const Matrix x = letter_matrix(PauliLetter::X);
  const Matrix y = letter_matrix(PauliLetter::Y);
  const Matrix z = letter_matrix(PauliLetter::Z);
  const Matrix s = swap_matrix(1, 3, 3).matrix();
  const Matrix lhs = s * oracle::kron(oracle::kron(x, y), z) * s;
  EXPECT_LT(max_abs_diff(lhs, oracle::kron(oracle::kron(z, y), x)), 1e-15);
}

TEST(qubit_permutation_matrix, cycle_is_product_of_swaps) {
  // 1 -> 2 -> 3 -> 1 moves qubit 1's state onto qubit 2, and so on.
  const std::vector<int> image{2, 3, 1};
  const Matrix p = qubit_permutation_matrix(image).matrix();
  const Matrix x = letter_matrix(PauliLetter::X);
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix moved = p * oracle::kron(oracle::kron(x, i2), i2) * p.adjoint();
  EXPECT_LT(max_abs_diff(moved, oracle::kron(oracle::kron(i2, x), i2)), 1e-15);
}

TEST(conjugate_by_swap, matches_dense_conjugation) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliString s = oracle::random_string(rng, 4).with_coefficient(Complex(0.3, -1.1));
    for (const auto& [i, j] : transpositions(4)) {
      const Matrix sw = swap_matrix(i, j, 4).matrix();
      EXPECT_LT(max_abs_diff(string_matrix(conjugate_by_swap(s, i, j)),
                             sw * oracle::pauli_kron(s) * sw),
                1e-14);
    }
  }
}

TEST(enumerate_basis, small_sizes) {
  EXPECT_EQ(labels(1), (std::vector<std::string>{"X", "Y", "Z"}));
  EXPECT_EQ(labels(2),
            (std::vector<std::string>{"XX", "XY", "XZ", "XI", "YY", "YZ", "YI", "ZZ", "ZI"}));
  EXPECT_EQ(enumerate_basis(3).size(), 19u);
  EXPECT_EQ(dim_pisu(6), 83u);
}

TEST(enumerate_basis, two_qubit_generators_as_sums) {
  const auto basis = enumerate_basis(2);
  const PauliSum xy = PauliSum(PauliString("XY")) + PauliSum(PauliString("YX"));
  EXPECT_EQ(basis[1].sum().to_string(), xy.to_string());
  EXPECT_EQ(basis[3].orbit().size(), 2u);
  EXPECT_EQ(basis[0].orbit().size(), 1u);
  EXPECT_TRUE(basis[3].orbit()[0].same_letters(PauliString("IX")));
  EXPECT_TRUE(basis[3].orbit()[1].same_letters(PauliString("XI")));
}

TEST(enumerate_basis, dimension_formula_and_orbit_partition) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto basis = enumerate_basis(n);
    EXPECT_EQ(basis.size(), dim_pisu(n)) << n;
    std::uint64_t strings = 0;
    for (const auto& g : basis) {
      EXPECT_EQ(g.orbit().size(), multinomial(g.type()));
      strings += g.orbit().size();
    }
    EXPECT_EQ(strings, (std::uint64_t{1} << (2 * n)) - 1) << n;
  }
}

TEST(symmetrized_generator, rejects_identity_type) {
  EXPECT_THROW(SymmetrizedGenerator(TypeVector{0, 0, 0, 3}), std::invalid_argument);
  EXPECT_THROW(SymmetrizedGenerator(TypeVector{-1, 2, 0, 0}), std::invalid_argument);
}

TEST(symmetrized_generator, matrix_is_hermitian_and_swap_invariant) {
  for (const auto& g : enumerate_basis(3)) {
    const Matrix m = g.matrix();
    EXPECT_LT(max_abs_diff(m, m.adjoint()), 1e-15);
    EXPECT_TRUE(is_swap_invariant(m, 3, 1e-14)) << g.label();
  }
}

TEST(invariance, examples) {
  EXPECT_TRUE(is_invariant_under(oracle::identity(2), swap_matrix(1, 2, 2).matrix(), 1e-10));
  const SymmetrizedGenerator xy(TypeVector{1, 1, 0, 0});
  EXPECT_TRUE(is_swap_invariant(oracle::evolve(xy.matrix(), 0.9), 2, 1e-10));
  Circuit cx(2);
  cx.add(Gate::cnot(1, 2));
  const Matrix u = circuit_unitary(cx).matrix();
  EXPECT_FALSE(is_invariant_under(u, swap_matrix(1, 2, 2).matrix(), 1e-10));
  EXPECT_FALSE(is_swap_invariant(u, 2, 1e-10));
  EXPECT_NEAR(swap_invariance_defect(u, 2), 1.0, 1e-15);
}

TEST(invariance, index_remapping_matches_dense_check) {
  std::mt19937_64 rng(42);
  const std::vector<int> image{3, 1, 4, 2};
  const Matrix p = qubit_permutation_matrix(image).matrix();
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix u = circuit_unitary(oracle::random_circuit(rng, 4, 30)).matrix();
    const double dense = (p * u * p.adjoint() - u).cwiseAbs().maxCoeff();
    EXPECT_EQ(is_invariant_under_permutation(u, image, 1e-10), dense < 1e-10);
    EXPECT_EQ(is_invariant_under(u, p, 1e-10), dense < 1e-10);
  }
  const Matrix sym = oracle::evolve(enumerate_basis(4)[5].matrix(), 0.4);
  EXPECT_TRUE(is_invariant_under_permutation(sym, image, 1e-10));
}

TEST(projection, examples) {
  const auto basis = enumerate_basis(2);
  const Projection own = project_onto_basis(basis[1].sum(), basis);
  EXPECT_LT(std::abs(own.coefficients[1] - Complex(1)), 1e-15);
  EXPECT_LT(own.residual, 1e-15);

  const Projection bracket = project_onto_basis(commutator(basis[3].sum(), basis[6].sum()), basis);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Complex expected = k == 8 ? 2.0 * kI : Complex(0);
    EXPECT_LT(std::abs(bracket.coefficients[k] - expected), 1e-15) << k;
  }
  EXPECT_LT(bracket.residual, 1e-15);

  const Projection lopsided = project_onto_basis(PauliSum(PauliString("XI")), basis);
  EXPECT_NEAR(std::abs(lopsided.coefficients[3]), 0.5, 1e-15);
  EXPECT_NEAR(lopsided.residual, std::sqrt(0.5), 1e-15);
}

TEST(closure, small_qubit_counts_pass) {
  const ClosureReport r2 = verify_closure(2, 1e-12);
  EXPECT_EQ(r2.pairs, 36u);
  EXPECT_TRUE(r2.pass);
  EXPECT_LT(r2.max_residual, 1e-12);
  for (std::size_t n : {1u, 3u, 4u}) EXPECT_TRUE(verify_closure(n, 1e-12).pass) << n;
  const nlohmann::json j = closure_report_json(verify_closure(1, 1e-12));
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["pairs"], 3);
  EXPECT_EQ(j["pass"], true);
}

TEST(closure, products_of_exponentials_stay_invariant) {
  std::mt19937_64 rng(43);
  const auto basis = enumerate_basis(3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix u = oracle::identity(3);
    for (int f = 0; f < 4; ++f) u = oracle::evolve(basis[pick(rng)].matrix(), angle(rng)) * u;
    EXPECT_TRUE(is_swap_invariant(u, 3, 1e-10));
    EXPECT_TRUE(is_swap_invariant(u.adjoint(), 3, 1e-10));
  }
}
