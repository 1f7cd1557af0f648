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

#include "cdim/graph.hpp"

#include <algorithm>
#include <string>

namespace cdim {

Graph::Graph(int n) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  adjacency_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} out of range for n=" +
                       std::to_string(n));
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += static_cast<int>(list.size());
  }
  edge_count_ /= 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) {
    best = std::max(best, static_cast<int>(list.size()));
  }
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (order() <= 1) return true;
  std::vector<char> seen(order(), 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == order();
}

DistanceMatrix::DistanceMatrix(int n, std::vector<std::int32_t> table)
    : n_(n), table_(std::move(table)) {
  connected_ = std::none_of(table_.begin(), table_.end(),
                            [](std::int32_t d) { return d == kUnreachable; });
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n,
                                  DistanceMatrix::kUnreachable);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::int32_t* row = table.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex v : g.neighbors(u)) {
        if (row[v] == DistanceMatrix::kUnreachable) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(table));
}

int eccentricity(const DistanceMatrix& dm, Vertex u) {
  auto row = dm.row(u);
  return row.empty() ? 0 : *std::max_element(row.begin(), row.end());
}

int diameter(const DistanceMatrix& dm) {
  if (!dm.connected()) throw GraphError("diameter of a disconnected graph");
  int best = 0;
  for (Vertex u = 0; u < dm.order(); ++u) {
    best = std::max(best, eccentricity(dm, u));
  }
  return best;
}

void require_connected(const Graph& g, const char* what) {
  if (!g.is_connected()) {
    throw GraphError(std::string(what) + " requires a connected graph");
  }
}

VertexSet make_vertex_set(std::vector<Vertex> vertices, int n) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  if (!vertices.empty() && (vertices.front() < 0 || vertices.back() >= n)) {
    throw GraphError("vertex id out of range for n=" + std::to_string(n));
  }
  return vertices;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && g.is_connected();
}

}  // namespace cdim
