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

#ifndef CDIM_GRAPH_HPP_
#define CDIM_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdim {

using Vertex = std::int32_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Throws GraphError on self-loops or out-of-range endpoints. Duplicate
  // edges (in either orientation) collapse to one.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

// All-pairs hop distances. Unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr std::int32_t kUnreachable =
      std::numeric_limits<std::int32_t>::max();

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<std::int32_t> table);

  int order() const { return n_; }
  bool connected() const { return connected_; }

  std::int32_t operator()(Vertex u, Vertex v) const {
    return table_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const std::int32_t> row(Vertex u) const {
    return {table_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }

 private:
  int n_ = 0;
  bool connected_ = true;
  std::vector<std::int32_t> table_;
};

// One BFS per source.
DistanceMatrix all_pairs_distances(const Graph& g);

// Throws GraphError when dm is disconnected.
int diameter(const DistanceMatrix& dm);

int eccentricity(const DistanceMatrix& dm, Vertex u);

// Throws GraphError naming `what` unless g is connected.
void require_connected(const Graph& g, const char* what);

// Normalizes an arbitrary vertex list into a VertexSet and range-checks it.
VertexSet make_vertex_set(std::vector<Vertex> vertices, int n);

bool is_tree(const Graph& g);

}  // namespace cdim

#endif  // CDIM_GRAPH_HPP_
