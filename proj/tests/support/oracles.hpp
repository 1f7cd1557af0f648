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

#ifndef CDIM_TESTS_SUPPORT_ORACLES_HPP_
#define CDIM_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cdim/graph.hpp"
#include "cdim/set_cover.hpp"

// Slow, independent reference implementations. None of these call into the
// library beyond the Graph container.
namespace cdim::oracle {

using Matrix = std::vector<std::vector<int>>;

// Floyd-Warshall; unreachable pairs hold a large sentinel.
Matrix floyd_warshall(const Graph& g);

// Detectors grouped by distance from x, groups in increasing distance.
std::vector<std::vector<Vertex>> rank_vector(const Matrix& d, Vertex x,
                                             const std::vector<Vertex>& set);

bool is_centroidal_locating(const Matrix& d, const std::vector<Vertex>& set);
bool is_resolving(const Matrix& d, const std::vector<Vertex>& set);
bool is_locating_dominating(const Graph& g, const std::vector<Vertex>& set);

using SetPredicate = std::function<bool(const std::vector<Vertex>&)>;

// Every subset of {0..n-1} of the given size, via bit masks (n <= 30).
std::vector<std::vector<Vertex>> subsets_of_size(int n, int size);

// Smallest size admitting a passing subset, searching sizes min_size..n.
std::optional<int> minimum_size(int n, int min_size, const SetPredicate& ok);

// Every passing subset of exactly `size` vertices.
std::vector<std::vector<Vertex>> all_passing(int n, int size,
                                             const SetPredicate& ok);

// round(sum_{j >= 0} j^k / 2^(j+1)), the series form of the ordered Bell
// numbers, summed in long double until the terms vanish.
std::uint64_t ordered_bell_series(int k);

// Minimum number of sets covering the universe by exhaustive search over
// set subsets (set count <= 24). nullopt if no cover exists.
std::optional<int> min_set_cover(const SetCoverInstance& instance);

// Detector pair {a,b} separates x and y iff the signs of d(x,a)-d(x,b)
// and d(y,a)-d(y,b) differ.
bool pair_identifies(const Matrix& d, Vertex a, Vertex b, Vertex x, Vertex y);

}  // namespace cdim::oracle

#endif  // CDIM_TESTS_SUPPORT_ORACLES_HPP_
