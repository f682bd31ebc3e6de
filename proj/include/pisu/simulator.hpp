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

#include <span>
#include <vector>

#include "pisu/circuit.hpp"
#include "pisu/unitary.hpp"

namespace pisu {

/// Unitary of a circuit: gates are applied in order by acting on the
/// affected row pairs only, never by building Kronecker-embedded matrices.
/// Throws on unbound parameters and above dense_qubit_limit().
UnitaryMatrix circuit_unitary(const Circuit& c);

/// Batch form; results are in input order.
std::vector<UnitaryMatrix> circuit_unitaries(std::span<const Circuit> circuits);

struct ComparisonResult {
  double max_abs_diff = 0.0;
  Complex global_phase{1.0, 0.0};
  bool pass = false;
};

/// Compares u against phase * v, where phase = tr(v^dagger u)/|tr(v^dagger u)|,
/// or the ratio of the entries at v's largest-magnitude position when the
/// trace vanishes.
ComparisonResult equal_up_to_global_phase(const Matrix& u, const Matrix& v, double tol = 1e-10);

}  // namespace pisu
