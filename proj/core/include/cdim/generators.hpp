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

#ifndef CDIM_GENERATORS_HPP_
#define CDIM_GENERATORS_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdim/graph.hpp"

namespace cdim {

// Path x0 - x1 - ... - x(n-1).
Graph path_graph(int n);
// Cycle on x0..x(n-1); n >= 3.
Graph cycle_graph(int n);
Graph complete_graph(int n);
// n vertices in total: centre 0 joined to leaves 1..n-1.
Graph star_graph(int n);
// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(int a, int b);

// The edge {0,1} joined to an independent set {2..n-1}; n >= 4.
Graph s_graph(int n);
// Path 0 - 1 - 2 with leaves 3..n-1 hanging off vertex 2; n >= 4.
Graph t_graph(int n);
// Triangle {0,1,2} with leaves 3..n-1 hanging off vertex 0; n >= 4.
Graph u_graph(int n);

// Vertices are bit masks of length k; edges join masks at Hamming distance 1.
Graph hypercube_graph(int k);

// 12-cycle x0..x11 (ids 0..11) plus centre c (id 12) adjacent to x3, x7, x11.
Graph fig2a_graph();

// Dispatches by family name: path, cycle, complete, star, complete_bipartite,
// S, T, U, hypercube, fig2a. Throws GraphError for unknown names, wrong
// parameter counts or sizes below the family minimum.
Graph generate(std::string_view family, std::span<const int> params);

std::vector<std::string> generator_families();

}  // namespace cdim

#endif  // CDIM_GENERATORS_HPP_
