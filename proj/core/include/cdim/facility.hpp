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

#ifndef CDIM_FACILITY_HPP_
#define CDIM_FACILITY_HPP_

#include <cstdint>
#include <vector>

#include "cdim/graph.hpp"

namespace cdim {

// Customers strictly closer to u than to v.
VertexSet v_region(const DistanceMatrix& dm, Vertex u, Vertex v);

// |V_{u,v}| - |V_{v,u}|.
int competition_score(const DistanceMatrix& dm, Vertex u, Vertex v);

struct FacilityScores {
  // worst[u] = min over v != u of competition_score(u, v); 0 on a single
  // vertex.
  std::vector<int> worst;
  // Total distance from u to every vertex.
  std::vector<std::int64_t> total_distance;
  VertexSet median;    // argmin of total_distance
  VertexSet centroid;  // argmax of worst
};

// Requires a connected graph.
FacilityScores facility_scores(const DistanceMatrix& dm);

// bw(u) = largest vertex count of a component of T - u, which equals the
// edge count of that branch including the edge back to u. Throws GraphError
// unless g is a tree.
std::vector<int> branch_weights(const Graph& g);
VertexSet branch_weight_centroid(const Graph& g);

}  // namespace cdim

#endif  // CDIM_FACILITY_HPP_
