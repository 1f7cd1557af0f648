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

#include "cdim/facility.hpp"

#include <algorithm>
#include <limits>

namespace cdim {

VertexSet v_region(const DistanceMatrix& dm, Vertex u, Vertex v) {
  VertexSet out;
  for (Vertex x = 0; x < dm.order(); ++x)
    if (dm(x, u) < dm(x, v)) out.push_back(x);
  return out;
}

int competition_score(const DistanceMatrix& dm, Vertex u, Vertex v) {
  int score = 0;
  for (Vertex x = 0; x < dm.order(); ++x) {
    auto du = dm(x, u), dv = dm(x, v);
    score += (du < dv) - (dv < du);
  }
  return score;
}

FacilityScores facility_scores(const DistanceMatrix& dm) {
  if (!dm.connected()) {
    throw GraphError("facility scores require a connected graph");
  }
  const int n = dm.order();
  FacilityScores s;
  s.worst.assign(n, 0);
  s.total_distance.assign(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    int worst = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < n; ++v) {
      s.total_distance[u] += dm(u, v);
      if (v != u) worst = std::min(worst, competition_score(dm, u, v));
    }
    s.worst[u] = n > 1 ? worst : 0;
  }
  if (n == 0) return s;
  auto min_d = *std::min_element(s.total_distance.begin(), s.total_distance.end());
  auto max_f = *std::max_element(s.worst.begin(), s.worst.end());
  for (Vertex u = 0; u < n; ++u) {
    if (s.total_distance[u] == min_d) s.median.push_back(u);
    if (s.worst[u] == max_f) s.centroid.push_back(u);
  }
  return s;
}

std::vector<int> branch_weights(const Graph& g) {
  if (!is_tree(g)) throw GraphError("branch weight requires a tree");
  const int n = g.order();
  // Root at 0; subtree sizes via reverse BFS order.
  std::vector<Vertex> order = {0}, parent(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex v : g.neighbors(order[i])) {
      if (v != parent[order[i]]) {
        parent[v] = order[i];
        order.push_back(v);
      }
    }
  }
  std::vector<int> subtree(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];
  }
  std::vector<int> bw(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    int best = n - subtree[u];  // the branch through the parent
    for (Vertex v : g.neighbors(u))
      if (v != parent[u]) best = std::max(best, subtree[v]);
    bw[u] = best;
  }
  return bw;
}

VertexSet branch_weight_centroid(const Graph& g) {
  auto bw = branch_weights(g);
  int best = *std::min_element(bw.begin(), bw.end());
  VertexSet out;
  for (Vertex u = 0; u < g.order(); ++u)
    if (bw[u] == best) out.push_back(u);
  return out;
}

}  // namespace cdim
