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

#include <algorithm>
#include <deque>
#include <numbers>
#include <random>
#include <set>

#include "pisu/synthesis.hpp"

namespace pisu {

namespace {

struct ParsedLayer {
  bool entangling = false;
  GateKind rotation = GateKind::RX;
  std::vector<Gate> gates;
};

// Splits a circuit into runs of CNOTs and runs of same-kind rotations that
// touch each qubit at most once.
std::vector<ParsedLayer> parse_layers(const Circuit& c) {
  std::vector<ParsedLayer> layers;
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::CNOT) {
      if (layers.empty() || !layers.back().entangling) layers.push_back({true, g.kind, {}});
      layers.back().gates.push_back(g);
      continue;
    }
    if (!is_rotation(g.kind)) {
      throw std::invalid_argument("not a variational circuit: unexpected gate " +
                                  std::string(gate_name(g.kind)));
    }
    const bool fits = !layers.empty() && !layers.back().entangling &&
                      layers.back().rotation == g.kind &&
                      std::ranges::none_of(layers.back().gates, [&](const Gate& o) {
                        return o.qubits[0] == g.qubits[0];
                      });
    if (!fits) layers.push_back({false, g.kind, {}});
    layers.back().gates.push_back(g);
  }
  return layers;
}

PauliLetter rotation_letter(GateKind k) {
  switch (k) {
    case GateKind::RX: return PauliLetter::X;
    case GateKind::RY: return PauliLetter::Y;
    case GateKind::RZ: return PauliLetter::Z;
    default: throw std::invalid_argument("not a rotation gate");
  }
}

// Places a string over `qubits.size()` qubits onto the given 1-based
// positions of an n-qubit register.
PauliString embed(const PauliString& small, std::span<const int> qubits, std::size_t n) {
  PauliString out(n);
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    out.set_letter(static_cast<std::size_t>(qubits[k] - 1), small.letter(k));
  }
  return out;
}

// Pairwise coupling of one letter across the given qubits.
SymmetrizedGenerator pair_generator(PauliLetter l, std::size_t k) {
  TypeVector t{0, 0, 0, static_cast<int>(k) - 2};
  if (l == PauliLetter::X) t.x = 2;
  if (l == PauliLetter::Y) t.y = 2;
  if (l == PauliLetter::Z) t.z = 2;
  return SymmetrizedGenerator(t);
}

std::string layer_name(GateKind k) { return std::string(gate_name(k)); }

void copy_bindings(const Circuit& from, Circuit& to) {
  for (const auto& [name, value] : from.params()) to.bind(name, value);
}

std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& h) {
  std::vector<int> out(h.size());
  for (std::size_t q = 0; q < h.size(); ++q) out[q] = g[static_cast<std::size_t>(h[q] - 1)];
  return out;
}

}  // namespace

BlockStructure::BlockStructure(std::size_t block_size_, std::size_t blocks_)
    : block_size(block_size_), blocks(blocks_) {
  if (block_size == 0 || blocks == 0) {
    throw std::invalid_argument("BlockStructure: block size and count must be positive");
  }
}

std::vector<std::pair<int, int>> BlockStructure::swap_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < blocks; ++a) {
    for (std::size_t b = a + 1; b < blocks; ++b) {
      for (std::size_t q = 1; q <= block_size; ++q) {
        out.emplace_back(static_cast<int>(q + a * block_size), static_cast<int>(q + b * block_size));
      }
    }
  }
  return out;
}

std::vector<int> BlockStructure::block_exchange(std::size_t a, std::size_t b) const {
  if (a >= blocks || b >= blocks) throw std::out_of_range("block_exchange: no such block");
  std::vector<int> image(n());
  for (std::size_t q = 0; q < n(); ++q) image[q] = static_cast<int>(q + 1);
  for (std::size_t q = 0; q < block_size; ++q) {
    std::swap(image[q + a * block_size], image[q + b * block_size]);
  }
  return image;
}

RotationChoice SymmetrizationChoice::for_layer(GateKind rotation) const {
  return rotation == GateKind::RX ? x_layer : y_layer;
}

Circuit base_variational_circuit(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("base_variational_circuit: needs at least 2 qubits");
  Circuit c(n);
  for (std::size_t q = 1; q <= n; ++q) c.add(Gate::rx(static_cast<int>(q), "a" + std::to_string(q)));
  for (std::size_t q = 1; q <= n; ++q) c.add(Gate::ry(static_cast<int>(q), "b" + std::to_string(q)));
  for (std::size_t q = 1; q <= n; ++q) {
    c.add(Gate::cnot(static_cast<int>(q), static_cast<int>(q % n + 1)));
  }
  randomize_parameters(c, seed);
  return c;
}

void randomize_parameters(Circuit& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (const std::string& name : c.parameter_names()) c.bind(name, angle(rng));
}

bool cnots_commute(const Gate& a, const Gate& b) {
  return a.qubits[0] != b.qubits[1] && b.qubits[0] != a.qubits[1];
}

std::vector<std::vector<int>> generate_group(std::size_t n,
                                             std::span<const std::vector<int>> generators) {
  std::vector<int> identity(n);
  for (std::size_t q = 0; q < n; ++q) identity[q] = static_cast<int>(q + 1);
  std::vector<std::vector<int>> elements{identity};
  std::set<std::vector<int>> seen{identity};
  std::deque<std::vector<int>> frontier{identity};
  while (!frontier.empty()) {
    const std::vector<int> g = frontier.front();
    frontier.pop_front();
    for (const auto& gen : generators) {
      if (gen.size() != n) throw std::invalid_argument("generate_group: generator size mismatch");
      std::vector<int> next = compose(gen, g);
      if (seen.insert(next).second) {
        elements.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  return elements;
}

AugmentedLayer augment_entangling_layer(std::span<const Gate> cnots,
                                        std::span<const std::vector<int>> group) {
  AugmentedLayer out;
  for (const Gate& g : cnots) {
    if (g.kind != GateKind::CNOT) throw std::invalid_argument("augment_entangling_layer: not a CNOT");
    std::vector<Gate> images;
    for (const auto& perm : group) {
      Gate image = Gate::cnot(perm[static_cast<std::size_t>(g.qubits[0] - 1)],
                              perm[static_cast<std::size_t>(g.qubits[1] - 1)]);
      if (std::ranges::find(images, image) == images.end()) images.push_back(image);
    }
    for (std::size_t a = 0; a < images.size(); ++a) {
      for (std::size_t b = a + 1; b < images.size(); ++b) {
        if (!cnots_commute(images[a], images[b])) out.abelian = false;
      }
    }
    out.gates.insert(out.gates.end(), images.begin(), images.end());
  }
  return out;
}

SymmetrizedAnsatz symmetrize_by_extension(const Circuit& c, std::size_t blocks,
                                          const SymmetrizationChoice& choice) {
  if (blocks < 2) throw std::invalid_argument("symmetrize_by_extension: needs at least 2 blocks");
  const BlockStructure structure(c.n(), blocks);
  const std::size_t width = c.n();
  SymmetrizedAnsatz out{Circuit(structure.n()), {}, {}};
  copy_bindings(c, out.circuit);

  std::vector<std::vector<int>> generators;
  for (auto [i, j] : structure.swap_pairs()) {
    std::vector<int> image(structure.n());
    for (std::size_t q = 0; q < image.size(); ++q) image[q] = static_cast<int>(q + 1);
    std::swap(image[static_cast<std::size_t>(i - 1)], image[static_cast<std::size_t>(j - 1)]);
    generators.push_back(std::move(image));
  }
  const auto group = generate_group(structure.n(), generators);

  for (const ParsedLayer& layer : parse_layers(c)) {
    LayerRecord record;
    record.first_gate = out.circuit.gates().size();
    if (layer.entangling) {
      const AugmentedLayer augmented = augment_entangling_layer(layer.gates, group);
      if (!augmented.abelian) {
        throw NonAbelianLayerError("symmetrize_by_extension: block-swap images of the entangling "
                                   "layer do not commute");
      }
      for (const Gate& g : augmented.gates) out.circuit.add(g);
      record.description = "cx layer with block-swap images";
    } else if (choice.for_layer(layer.rotation) == RotationChoice::Tie) {
      for (const Gate& g : layer.gates) {
        for (std::size_t b = 0; b < blocks; ++b) {
          Gate copy = g;
          copy.qubits[0] = g.qubits[0] + static_cast<int>(b * width);
          out.circuit.add(std::move(copy));
        }
      }
      record.description = layer_name(layer.rotation) + " layer tied across blocks";
    } else {
      const SymmetrizedGenerator coupling = pair_generator(rotation_letter(layer.rotation), blocks);
      for (const Gate& g : layer.gates) {
        std::vector<int> copies;
        for (std::size_t b = 0; b < blocks; ++b) copies.push_back(g.qubits[0] + static_cast<int>(b * width));
        for (const PauliString& s : coupling.orbit()) {
          append_string_exponential(out.circuit, embed(s, copies, structure.n()), *g.param, g.scale);
        }
      }
      record.description = layer_name(layer.rotation) + " layer coupled across blocks";
    }
    record.end_gate = out.circuit.gates().size();
    out.layers.push_back(std::move(record));
  }
  return out;
}

SymmetrizedGenerator default_replacement(std::size_t n) {
  if (n < 2) throw std::invalid_argument("default_replacement: needs at least 2 qubits");
  return SymmetrizedGenerator(TypeVector{2, 0, 0, static_cast<int>(n) - 2});
}

SymmetrizedAnsatz symmetrize_fully(const Circuit& c, const SymmetrizedGenerator& replacement,
                                   const SymmetrizationChoice& choice) {
  const std::size_t n = c.n();
  if (replacement.n() != n) {
    throw std::invalid_argument("symmetrize_fully: replacement acts on a different qubit count");
  }
  SymmetrizedAnsatz out{Circuit(n), {}, {}};
  const bool exact = commuting_orbit(replacement);
  std::size_t entangling_layers = 0;

  for (const ParsedLayer& layer : parse_layers(c)) {
    LayerRecord record;
    record.first_gate = out.circuit.gates().size();
    if (layer.entangling) {
      const std::string param = "g" + std::to_string(++entangling_layers);
      const SynthesisPlan plan =
          exact ? SynthesisPlan::exact() : SynthesisPlan::trotter(kDefaultTrotterSteps);
      if (!exact) {
        out.warnings.push_back("replacement " + replacement.label() +
                               " has a non-commuting orbit; Trotterized with " +
                               std::to_string(kDefaultTrotterSteps) + " steps");
      }
      const auto synthesized = synth_generator(replacement, 0.0, plan, param);
      out.circuit.append(*synthesized.circuit);
      record.description = "cx layer replaced by exp of sym(" + replacement.label() + ")";
      record.generator = replacement.sum();
    } else {
      const Gate& first = layer.gates.front();
      const std::string& param = *first.param;
      out.circuit.bind(param, c.params().contains(param) ? c.params().at(param) : 0.0);
      const PauliLetter letter = rotation_letter(layer.rotation);
      if (choice.for_layer(layer.rotation) == RotationChoice::Tie || n < 2) {
        PauliSum generator(n);
        for (std::size_t q = 1; q <= n; ++q) {
          out.circuit.add(Gate{layer.rotation, {static_cast<int>(q)}, param, first.scale});
          PauliString single(n);
          single.set_letter(q - 1, letter);
          generator.add(single);
        }
        record.description = layer_name(layer.rotation) + " layer tied across all qubits";
        record.generator = std::move(generator);
      } else {
        const SymmetrizedGenerator coupling = pair_generator(letter, n);
        for (const PauliString& s : coupling.orbit()) {
          append_string_exponential(out.circuit, s, param, first.scale);
        }
        record.description = layer_name(layer.rotation) + " layer coupled to sym(" +
                             coupling.label() + ")";
        record.generator = coupling.sum();
      }
    }
    record.end_gate = out.circuit.gates().size();
    out.layers.push_back(std::move(record));
  }
  return out;
}

double block_invariance_defect(const Matrix& u, const BlockStructure& blocks) {
  double worst = 0.0;
  for (std::size_t a = 0; a < blocks.blocks; ++a) {
    for (std::size_t b = a + 1; b < blocks.blocks; ++b) {
      const std::vector<int> image = blocks.block_exchange(a, b);
      const Matrix p = qubit_permutation_matrix(image).matrix();
      worst = std::max(worst, max_abs_diff(p * u * p.adjoint(), u));
    }
  }
  return worst;
}

}  // namespace pisu
