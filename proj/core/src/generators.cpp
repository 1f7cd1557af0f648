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

#include "cdim/generators.hpp"

#include <string>

namespace cdim {
namespace {

void require_at_least(std::string_view family, int value, int minimum) {
  if (value < minimum) {
    throw GraphError(std::string(family) + " requires size >= " +
                     std::to_string(minimum) + ", got " +
                     std::to_string(value));
  }
}

}  // namespace

Graph path_graph(int n) {
  require_at_least("path", n, 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require_at_least("cycle", n, 3);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require_at_least("complete", n, 1);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph star_graph(int n) {
  require_at_least("star", n, 1);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  require_at_least("complete_bipartite", a, 1);
  require_at_least("complete_bipartite", b, 1);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  return Graph(a + b, edges);
}

Graph s_graph(int n) {
  require_at_least("S", n, 4);
  std::vector<Edge> edges = {{0, 1}};
  for (Vertex v = 2; v < n; ++v) {
    edges.push_back({0, v});
    edges.push_back({1, v});
  }
  return Graph(n, edges);
}

Graph t_graph(int n) {
  require_at_least("T", n, 4);
  std::vector<Edge> edges = {{0, 1}, {1, 2}};
  for (Vertex v = 3; v < n; ++v) edges.push_back({2, v});
  return Graph(n, edges);
}

Graph u_graph(int n) {
  require_at_least("U", n, 4);
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}};
  for (Vertex v = 3; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph hypercube_graph(int k) {
  require_at_least("hypercube", k, 1);
  if (k > 20) throw GraphError("hypercube dimension too large");
  const int n = 1 << k;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (int bit = 0; bit < k; ++bit) {
      Vertex v = u ^ (1 << bit);
      if (u < v) edges.push_back({u, v});
    }
  return Graph(n, edges);
}

Graph fig2a_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 12; ++i) edges.push_back({i, (i + 1) % 12});
  for (Vertex x : {3, 7, 11}) edges.push_back({12, x});
  return Graph(13, edges);
}

Graph generate(std::string_view family, std::span<const int> params) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw GraphError(std::string(family) + " takes " +
                       std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
    }
  };
  if (family == "path") return expect(1), path_graph(params[0]);
  if (family == "cycle") return expect(1), cycle_graph(params[0]);
  if (family == "complete") return expect(1), complete_graph(params[0]);
  if (family == "star") return expect(1), star_graph(params[0]);
  if (family == "complete_bipartite") {
    expect(2);
    return complete_bipartite_graph(params[0], params[1]);
  }
  if (family == "S") return expect(1), s_graph(params[0]);
  if (family == "T") return expect(1), t_graph(params[0]);
  if (family == "U") return expect(1), u_graph(params[0]);
  if (family == "hypercube") return expect(1), hypercube_graph(params[0]);
  if (family == "fig2a") return expect(0), fig2a_graph();
  throw GraphError("unknown graph family '" + std::string(family) + "'");
}

std::vector<std::string> generator_families() {
  return {"path", "cycle", "complete", "star", "complete_bipartite",
          "S",    "T",     "U",        "hypercube", "fig2a"};
}

}  // namespace cdim
