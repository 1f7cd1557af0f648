// Copyright 2026 The cdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CDIM_CLI_COMMANDS_HPP_
#define CDIM_CLI_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cdim/graph.hpp"

namespace cdim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

struct SweepRow {
  int n = 0;
  int m = 0;
  int diameter = 0;
  int md = 0;
  int cd = 0;
  int ld = 0;
  int bell_lb = 0;
  std::optional<int> path_lb;
  std::string family = "-";
  int approx_cd = 0;
  double ratio = 1.0;
};

// Computes one sweep row and appends a message for every failed check.
SweepRow sweep_graph(const Graph& g, std::int64_t path_budget,
                     std::vector<std::string>& violations);

std::string csv_header();
std::string to_csv(const SweepRow& row);

}  // namespace cdim::cli

#endif  // CDIM_CLI_COMMANDS_HPP_
