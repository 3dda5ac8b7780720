// Copyright 2026 The darwinfuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Markdown renderings of the constant tables the docs carry. The docs embed
// these blocks between `<!-- BEGIN name -->` / `<!-- END name -->` markers and
// a test fails when they drift from the code.
#ifndef DARWINFUZZ_CONSTANT_TABLES_H_
#define DARWINFUZZ_CONSTANT_TABLES_H_

#include <string>
#include <string_view>
#include <vector>

namespace darwinfuzz {

std::vector<std::string_view> ConstantTableNames();

// Throws std::out_of_range for unknown names.
std::string RenderConstantTable(std::string_view name);

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_CONSTANT_TABLES_H_
