// Copyright 2026 The LAFF Authors
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

#ifndef LAFF_CORE_GAMES_H_
#define LAFF_CORE_GAMES_H_

#include <string>
#include <string_view>
#include <vector>

#include "laff/matrix_game.h"

namespace laff {

// The eleven evaluation games (one symmetric and one asymmetric game per
// reward family, Cyclic only asymmetric).
const std::vector<std::string>& TestGameNames();

// The four games used to tune the switch-test constants.
const std::vector<std::string>& TrainingGameNames();

// Test games, training games and "chicken"; sixteen in total.
const std::vector<std::string>& BuiltinGameNames();

// Throws std::invalid_argument for an unknown name.
BimatrixGame BuiltinGame(std::string_view name);

// Parses {"name": ..., "R1": [[...]], "R2": [[...]]}. Throws
// std::invalid_argument on malformed input or entries outside [0, 1].
BimatrixGame GameFromJson(std::string_view text);

// A built-in name, or else a path to a JSON game file.
BimatrixGame LoadGame(std::string_view name_or_path);

// JSON document for a game in the format GameFromJson accepts.
std::string GameToJson(const BimatrixGame& game);

}  // namespace laff

#endif  // LAFF_CORE_GAMES_H_
