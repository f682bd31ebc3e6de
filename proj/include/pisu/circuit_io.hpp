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

#include <string>
#include <string_view>

#include <json.hpp>

#include "pisu/circuit.hpp"

namespace pisu {

/// {"n": int, "gates": [{"kind", "qubits", "param", "scale"?}], "params": {...}}
///
/// Qubits are 1-based. "scale" is only written when it differs from 1.
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

/// OpenQASM 2.0 with literal angles; qubit k maps to q[k-1].
/// Throws if a rotation parameter is unbound.
std::string to_qasm(const Circuit& c);

/// Parses the subset emitted by to_qasm (h, s, sdg, cx, rx, ry, rz with
/// numeric angles, one qreg). Each rotation gets its own parameter a<k>.
Circuit from_qasm(std::string_view text);

}  // namespace pisu
