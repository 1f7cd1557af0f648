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

#include "cdim/enumeration.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

namespace cdim {
namespace {

// Vertex invariant: degree, then the sorted multiset of neighbour degrees.
using Invariant = std::pair<int, std::vector<int>>;

Invariant invariant_of(const Graph& g, Vertex v) {
  Invariant inv{g.degree(v), {}};
  for (Vertex w : g.neighbors(v)) inv.second.push_back(g.degree(w));
  std::sort(inv.second.begin(), inv.second.end());
  return inv;
}

std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  std::uint64_t code = 0;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adjacent(order[i], order[j])) code |= std::uint64_t{1} << bit;
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw GraphError("canonical_code supports at most 11 vertices");
  }
  std::vector<std::pair<Invariant, Vertex>> keyed;
  for (Vertex v = 0; v < n; ++v) keyed.emplace_back(invariant_of(g, v), v);
  std::sort(keyed.begin(), keyed.end());

  std::vector<Vertex> order;
  std::vector<std::pair<int, int>> cells;  // [begin, end) into order
  for (int i = 0; i < n; ++i) {
    order.push_back(keyed[i].second);
    if (i == 0 || keyed[i].first != keyed[i - 1].first) {
      cells.push_back({i, i + 1});
    } else {
      cells.back().second = i + 1;
    }
  }

  std::uint64_t best = code_of(g, order);
  for (;;) {
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c == cells.size()) break;
    best = std::min(best, code_of(g, order));
  }
  return best;
}

Graph decode_canonical(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (code >> bit & 1) edges.push_back({i, j});
  return Graph(n, edges);
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw GraphError("connected_graphs supports 1 <= n <= 8");
  if (n == 1) return {Graph(1)};
  // Every connected graph has a non-cut vertex, so extending each class on
  // n-1 vertices by one vertex with a non-empty neighbourhood reaches all.
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> codes;
  for (const Graph& base : connected_graphs(n - 1)) {
    const std::vector<Edge> base_edges = base.edges();
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> edges = base_edges;
      for (int v = 0; v < n - 1; ++v)
        if (mask & (1u << v)) edges.push_back({v, n - 1});
      std::uint64_t code = canonical_code(Graph(n, edges));
      if (seen.insert(code).second) codes.push_back(code);
    }
  }
  std::sort(codes.begin(), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(decode_canonical(n, code));
  return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng,
                             int max_attempts) {
  if (n < 1) throw GraphError("random_connected_graph requires n >= 1");
  if (p < 0.0 || p > 1.0) throw GraphError("edge probability must be in [0, 1]");
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    Graph g(n, edges);
    if (g.is_connected()) return g;
  }
  throw GraphError("no connected sample within the attempt limit");
}

}  // namespace cdim
