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


#include "pisu/ansatz.hpp"

#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "pisu/simulator.hpp"
#include "pisu/synthesis.hpp"

using namespace pisu;

namespace {

Matrix unitary_of(const Circuit& c) { return circuit_unitary(c).matrix(); }

const std::vector<int> kBlockExchange{4, 5, 6, 1, 2, 3};

PauliString string_on(std::size_t n, std::initializer_list<std::pair<int, PauliLetter>> letters) {
  PauliString s(n);
  for (auto [q, l] : letters) s.set_letter(static_cast<std::size_t>(q - 1), l);
  return s;
}

}  // namespace

TEST(block_structure, swap_pairs_and_exchange) {
  const BlockStructure b(3, 2);
  EXPECT_EQ(b.n(), 6u);
  EXPECT_EQ(b.swap_pairs(), (std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_EQ(b.block_exchange(0, 1), kBlockExchange);
  EXPECT_THROW(BlockStructure(0, 2), std::invalid_argument);
}

TEST(base_variational_circuit, shape) {
  const Circuit c3 = base_variational_circuit(3, 1);
  EXPECT_EQ(c3.num_parameters(), 6u);
  EXPECT_EQ(c3.count(GateKind::CNOT), 3u);
  EXPECT_EQ(c3.gates().back(), Gate::cnot(3, 1));
  const Circuit c2 = base_variational_circuit(2, 1);
  EXPECT_EQ(c2.num_parameters(), 4u);
  EXPECT_EQ(c2.count(GateKind::CNOT), 2u);
  EXPECT_TRUE(c3.fully_bound());
  EXPECT_THROW(base_variational_circuit(1, 1), std::invalid_argument);
}

TEST(base_variational_circuit, seeded) {
  EXPECT_EQ(base_variational_circuit(3, 5).params(), base_variational_circuit(3, 5).params());
  EXPECT_NE(base_variational_circuit(3, 5).params(), base_variational_circuit(3, 6).params());
}

TEST(generate_group, sizes) {
  const std::vector<std::vector<int>> transposition{{2, 1, 3}};
  EXPECT_EQ(generate_group(3, transposition).size(), 2u);
  const std::vector<std::vector<int>> sym3{{2, 1, 3}, {1, 3, 2}};
  const auto group = generate_group(3, sym3);
  EXPECT_EQ(group.size(), 6u);
  EXPECT_EQ(group.front(), (std::vector<int>{1, 2, 3}));
}

TEST(symmetrize_by_extension, tie_is_block_invariant_and_keeps_parameters) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    SymmetrizedAnsatz a =
        symmetrize_by_extension(base_variational_circuit(3, seed), 2, SymmetrizationChoice{});
    EXPECT_EQ(a.circuit.n(), 6u);
    EXPECT_EQ(a.circuit.num_parameters(), 6u);
    const Matrix u = unitary_of(a.circuit);
    EXPECT_TRUE(is_invariant_under_permutation(u, kBlockExchange, 1e-10));
    EXPECT_LT(block_invariance_defect(u, BlockStructure(3, 2)), 1e-10);
    EXPECT_FALSE(is_invariant_under(u, swap_matrix(1, 2, 6).matrix(), 1e-10));
  }
}

TEST(symmetrize_by_extension, invariant_for_random_bindings_and_three_blocks) {
  SymmetrizedAnsatz a = symmetrize_by_extension(base_variational_circuit(2, 0), 3);
  EXPECT_EQ(a.circuit.num_parameters(), 4u);
  for (std::uint64_t seed = 10; seed < 15; ++seed) {
    randomize_parameters(a.circuit, seed);
    EXPECT_LT(block_invariance_defect(unitary_of(a.circuit), BlockStructure(2, 3)), 1e-10);
  }
}

TEST(symmetrize_by_extension, couple_uses_cross_block_xx) {
  const Circuit base = base_variational_circuit(3, 4);
  const SymmetrizationChoice choice{RotationChoice::Couple, RotationChoice::Tie};
  const SymmetrizedAnsatz a = symmetrize_by_extension(base, 2, choice);
  ASSERT_EQ(a.layers.size(), 3u);
  EXPECT_NE(a.layers[0].description.find("coupled"), std::string::npos);
  EXPECT_NE(a.layers[1].description.find("tied"), std::string::npos);

  // The coupled layer alone equals the product of exp(-i a_q/2 X_q X_{q+3}).
  Circuit layer(6);
  for (std::size_t k = a.layers[0].first_gate; k < a.layers[0].end_gate; ++k) {
    layer.add(a.circuit.gates()[k]);
  }
  for (const auto& [name, value] : a.circuit.params()) layer.bind(name, value);
  Matrix expected = oracle::identity(6);
  for (int q = 1; q <= 3; ++q) {
    const PauliString xx = string_on(6, {{q, PauliLetter::X}, {q + 3, PauliLetter::X}});
    expected = oracle::evolve(oracle::pauli_kron(xx), base.params().at("a" + std::to_string(q))) *
               expected;
  }
  EXPECT_LT(max_abs_diff(unitary_of(layer), expected), 1e-12);

  EXPECT_LT(block_invariance_defect(unitary_of(a.circuit), BlockStructure(3, 2)), 1e-10);
  EXPECT_EQ(a.circuit.num_parameters(), 6u);
}

TEST(symmetrize_by_extension, rejects_single_block) {
  EXPECT_THROW(symmetrize_by_extension(base_variational_circuit(3, 0), 1), std::invalid_argument);
}

TEST(augment_entangling_layer, block_images_commute_but_symmetric_images_do_not) {
  const Circuit base = base_variational_circuit(3, 0);
  std::vector<Gate> cnots;
  for (const Gate& g : base.gates()) {
    if (g.kind == GateKind::CNOT) cnots.push_back(g);
  }
  const std::vector<std::vector<int>> sym3{{2, 1, 3}, {1, 3, 2}};
  const AugmentedLayer naive = augment_entangling_layer(cnots, generate_group(3, sym3));
  EXPECT_FALSE(naive.abelian);
  EXPECT_TRUE(cnots_commute(Gate::cnot(1, 2), Gate::cnot(1, 3)));
  EXPECT_FALSE(cnots_commute(Gate::cnot(1, 2), Gate::cnot(2, 1)));
}

TEST(symmetrize_fully, tied_rotations_equal_collective_exponential) {
  const SymmetrizedAnsatz a = symmetrize_fully(base_variational_circuit(3, 8), default_replacement(3));
  ASSERT_EQ(a.layers.size(), 3u);
  ASSERT_TRUE(a.layers[0].generator);
  Circuit layer(3);
  for (std::size_t k = a.layers[0].first_gate; k < a.layers[0].end_gate; ++k) {
    layer.add(a.circuit.gates()[k]);
  }
  const double alpha = a.circuit.params().at("a1");
  layer.bind("a1", alpha);
  const Matrix collective = oracle::evolve(a.layers[0].generator->matrix(), alpha);
  EXPECT_LT(max_abs_diff(unitary_of(layer), collective), 1e-12);
  EXPECT_EQ(a.layers[0].generator->to_string(),
            SymmetrizedGenerator(TypeVector{1, 0, 0, 2}).sum().to_string());
}

TEST(symmetrize_fully, invariant_for_each_replacement) {
  const Circuit base = base_variational_circuit(3, 9);
  for (const auto& replacement :
       {default_replacement(3), SymmetrizedGenerator(TypeVector{3, 0, 0, 0})}) {
    for (RotationChoice choice : {RotationChoice::Tie, RotationChoice::Couple}) {
      SymmetrizedAnsatz a = symmetrize_fully(base, replacement, SymmetrizationChoice::all(choice));
      EXPECT_TRUE(a.warnings.empty());
      for (std::uint64_t seed = 20; seed < 23; ++seed) {
        randomize_parameters(a.circuit, seed);
        EXPECT_TRUE(is_swap_invariant(unitary_of(a.circuit), 3, 1e-10)) << replacement.label();
      }
    }
  }
}

TEST(symmetrize_fully, non_commuting_replacement_warns) {
  const SymmetrizedAnsatz a = symmetrize_fully(base_variational_circuit(3, 1),
                                               SymmetrizedGenerator(TypeVector{1, 1, 1, 0}));
  EXPECT_EQ(a.warnings.size(), 1u);
  EXPECT_THROW(symmetrize_fully(base_variational_circuit(3, 1), default_replacement(4)),
               std::invalid_argument);
}

TEST(symmetrize_fully, naive_augmentation_breaks_invariance) {
  const Circuit base = base_variational_circuit(3, 2);
  const SymmetrizedAnsatz tied = symmetrize_fully(base, default_replacement(3));
  std::vector<Gate> cnots;
  for (const Gate& g : base.gates()) {
    if (g.kind == GateKind::CNOT) cnots.push_back(g);
  }
  const std::vector<std::vector<int>> sym3{{2, 1, 3}, {1, 3, 2}};
  const AugmentedLayer naive = augment_entangling_layer(cnots, generate_group(3, sym3));
  Circuit c(3);
  for (std::size_t k = 0; k < tied.layers[2].first_gate; ++k) c.add(tied.circuit.gates()[k]);
  for (const Gate& g : naive.gates) c.add(g);
  for (const auto& [name, value] : tied.circuit.params()) {
    if (name != "g1") c.bind(name, value);
  }
  EXPECT_FALSE(is_swap_invariant(unitary_of(c), 3, 1e-10));
}

TEST(composition, appending_generator_circuits_keeps_invariance) {
  SymmetrizedAnsatz full = symmetrize_fully(base_variational_circuit(3, 3), default_replacement(3));
  full.circuit.append(
      *synth_generator(SymmetrizedGenerator(TypeVector{0, 1, 2, 0}), 0.9, SynthesisPlan::exact())
           .circuit);
  EXPECT_TRUE(is_swap_invariant(unitary_of(full.circuit), 3, 1e-10));

  SymmetrizedAnsatz ext = symmetrize_by_extension(base_variational_circuit(3, 3), 2);
  ext.circuit.append(
      *synth_generator(SymmetrizedGenerator(TypeVector{2, 0, 0, 4}), 0.4, SynthesisPlan::exact())
           .circuit);
  EXPECT_LT(block_invariance_defect(unitary_of(ext.circuit), BlockStructure(3, 2)), 1e-10);
}
