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

#ifndef CDIM_ENUMERATION_HPP_
#define CDIM_ENUMERATION_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "cdim/graph.hpp"

namespace cdim {

inline constexpr int kMaxCanonicalOrder = 11;

// Isomorphism-invariant code: the smallest upper-triangle adjacency bit string
// over all relabellings that order vertices by a degree-based invariant.
// Requires n <= kMaxCanonicalOrder.
std::uint64_t canonical_code(const Graph& g);

// The graph on n vertices encoded by a canonical code.
Graph decode_canonical(int n, std::uint64_t code);

// One representative per isomorphism class of connected graphs on exactly n
// vertices, in canonical labelling, sorted by code. 1 <= n <= 8.
std::vector<Graph> connected_graphs(int n);

// connected_graphs(1) .. connected_graphs(max_n), concatenated.
std::vector<Graph> connected_graphs_up_to(int max_n);

// Erdos-Renyi G(n, p) resampled until connected. Throws GraphError after
// max_attempts failures.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng,
                             int max_attempts = 10000);

}  // namespace cdim

#endif  // CDIM_ENUMERATION_HPP_
