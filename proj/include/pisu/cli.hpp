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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pisu/symmetry.hpp"

namespace pisu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "x:a,y:b,z:c" with the identity count implied by n. Throws
/// std::invalid_argument on malformed input or a negative remainder.
TypeVector parse_type_vector(std::string_view spec, std::size_t n);

}  // namespace pisu::cli
