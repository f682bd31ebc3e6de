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
#include <utility>
#include <vector>

#include "pisu/circuit.hpp"
#include "pisu/pauli.hpp"
#include "pisu/symmetry.hpp"

namespace pisu {

/// The images of an entangling layer under a symmetry group do not commute.
class NonAbelianLayerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `blocks` interchangeable copies of a `block_size`-qubit register; qubit
/// q of block b (0-based) is q + b * block_size.
struct BlockStructure {
  std::size_t block_size = 0;
  std::size_t blocks = 0;

  BlockStructure(std::size_t block_size, std::size_t blocks);

  std::size_t n() const { return block_size * blocks; }
  /// Pairs of qubits at the same position in different blocks; for two
  /// blocks of three: (1,4), (2,5), (3,6).
  std::vector<std::pair<int, int>> swap_pairs() const;
  /// Qubit image of exchanging whole blocks a and b (0-based).
  std::vector<int> block_exchange(std::size_t a, std::size_t b) const;
};

enum class RotationChoice {
  /// Every symmetric copy of a rotation shares one parameter.
  Tie,
  /// Copies are replaced by one coupled rotation, e.g. XX across blocks.
  Couple,
};

struct SymmetrizationChoice {
  RotationChoice x_layer = RotationChoice::Tie;
  RotationChoice y_layer = RotationChoice::Tie;

  static SymmetrizationChoice all(RotationChoice c) { return {c, c}; }
  RotationChoice for_layer(GateKind rotation) const;
};

/// RX layer, RY layer (parameters a1..an, b1..bn bound to seeded uniform
/// angles in [0, 2pi)), then the cyclic CNOT layer i -> i+1, n -> 1.
Circuit base_variational_circuit(std::size_t n, std::uint64_t seed);

/// Rebinds every parameter to a seeded uniform angle in [0, 2pi).
void randomize_parameters(Circuit& c, std::uint64_t seed);

struct LayerRecord {
  std::string description;
  std::size_t first_gate = 0;
  std::size_t end_gate = 0;
  /// Exponentiated algebra element for rotation and replacement layers.
  std::optional<PauliSum> generator;
};

struct SymmetrizedAnsatz {
  Circuit circuit;
  std::vector<LayerRecord> layers;
  std::vector<std::string> warnings;
};

/// All images of each CNOT under a group of qubit permutations. `abelian`
/// is false if some CNOT's image set contains a non-commuting pair.
struct AugmentedLayer {
  std::vector<Gate> gates;
  bool abelian = true;
};
AugmentedLayer augment_entangling_layer(std::span<const Gate> cnots,
                                        std::span<const std::vector<int>> group);

/// Closure of a set of qubit permutations under composition, identity first.
std::vector<std::vector<int>> generate_group(std::size_t n,
                                             std::span<const std::vector<int>> generators);

bool cnots_commute(const Gate& a, const Gate& b);

/// Copies the circuit onto interchangeable blocks. Rotation layers are tied
/// or coupled per `choice`; each CNOT is joined by its images under the
/// block-swap group. Throws NonAbelianLayerError if an image set does not
/// commute.
SymmetrizedAnsatz symmetrize_by_extension(const Circuit& c, std::size_t blocks,
                                          const SymmetrizationChoice& choice = {});

/// Makes the circuit invariant under every qubit permutation: rotation
/// layers are tied (or coupled through the pairwise sum), and each CNOT
/// layer is replaced by the exponential of `replacement`. A non-commuting
/// replacement is Trotterized and flagged in `warnings`.
SymmetrizedAnsatz symmetrize_fully(const Circuit& c, const SymmetrizedGenerator& replacement,
                                   const SymmetrizationChoice& choice = {});

/// The pairwise-X generator, the default replacement.
SymmetrizedGenerator default_replacement(std::size_t n);

/// Largest defect over all composite whole-block exchanges.
double block_invariance_defect(const Matrix& u, const BlockStructure& blocks);

}  // namespace pisu
