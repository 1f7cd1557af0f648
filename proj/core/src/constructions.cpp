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

#include "cdim/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "cdim/bounds.hpp"
#include "cdim/generators.hpp"
#include "cdim/locate.hpp"

namespace cdim {
namespace {

int popcount(unsigned mask) { return __builtin_popcount(mask); }

std::string with_params(const std::string& name, std::initializer_list<int> ps) {
  std::string out = name;
  for (int p : ps) out += " " + std::to_string(p);
  return out;
}

// Verifies `basis` on `graph` and throws ConstructionError otherwise.
void require_locating(const Graph& graph, const VertexSet& basis,
                      const std::string& provenance) {
  auto check = check_centroidal_locating(all_pairs_distances(graph), basis);
  if (!check.locating) {
    throw ConstructionError(provenance + ": basis fails to separate " +
                                std::to_string(check.witness->first) + " and " +
                                std::to_string(check.witness->second),
                            *check.witness);
  }
}

ConstructedInstance finish(Graph graph, VertexSet basis, int low, int high,
                           std::string provenance) {
  require_locating(graph, basis, provenance);
  ConstructedInstance out;
  out.graph = std::move(graph);
  out.raw_basis = basis;
  out.basis = std::move(basis);
  out.claimed_low = low;
  out.claimed_high = high;
  out.provenance = std::move(provenance);
  return out;
}

VertexSet range_set(Vertex first, Vertex last_exclusive) {
  VertexSet out;
  for (Vertex v = first; v < last_exclusive; ++v) out.push_back(v);
  return out;
}

VertexSet merge(std::initializer_list<VertexSet> parts, int n) {
  std::vector<Vertex> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return make_vertex_set(std::move(all), n);
}

// Cycle blocks R_i = x[i(2q+2) .. (i+1)(2q+2)-1]; B1 holds each block start,
// B0 every second vertex x2, x4, ..., x(2q-2) of R_0.
VertexSet cycle_block_basis(int p, int q, int n) {
  VertexSet b1, b0;
  for (int i = 0; i < p; ++i) b1.push_back(i * (2 * q + 2));
  for (int i = 0; i + 1 < q; ++i) b0.push_back(2 * (i + 1));
  return merge({b0, b1}, n);
}

// Path blocks over x0..x(n-2); B1 includes the final vertex x(n-1) and B0 is
// mirrored at both ends.
VertexSet path_block_basis(int p, int q, int n) {
  VertexSet b1, b0;
  for (int i = 0; i <= p; ++i) b1.push_back(i * (2 * q + 2));
  for (int i = 0; i + 1 < q; ++i) {
    b0.push_back(2 * (i + 1));
    b0.push_back(n - 1 - 2 * (i + 1));
  }
  return merge({b0, b1}, n);
}

}  // namespace

ConstructionError::ConstructionError(const std::string& what,
                                     std::pair<Vertex, Vertex> witness)
    : std::runtime_error(what), witness_(witness) {}

VertexSet minimize_locating_set(const DistanceMatrix& dm, VertexSet basis) {
  CentroidalChecker check(dm);
  VertexSet trial;
  for (auto it = basis.rbegin(); it != basis.rend();) {
    Vertex v = *it;
    trial.clear();
    for (Vertex b : basis)
      if (b != v) trial.push_back(b);
    if (!trial.empty() && check(trial)) {
      basis = trial;
      // Restart from the same position in the shrunken set.
      it = std::find_if(basis.rbegin(), basis.rend(),
                        [v](Vertex b) { return b < v; });
    } else {
      ++it;
    }
  }
  return basis;
}

ConstructedInstance construct_diam2(int k) {
  if (k < 4 || k > 20) throw GraphError("construct_diam2 requires 4 <= k <= 20");
  const int n = (1 << k) + k - 1;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    const Vertex s = k + static_cast<Vertex>(mask) - 1;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) edges.push_back({s, b});
    for (Vertex t = s + 1; t < n; ++t) edges.push_back({s, t});
  }
  return finish(Graph(n, edges), range_set(0, k), k, k,
                with_params("diam2", {k}));
}

ConstructedInstance construct_diam3(int k) {
  if (k < 4 || k > 9) throw GraphError("construct_diam3 requires 4 <= k <= 9");
  const unsigned full = (1u << k) - 1;
  Vertex next = k;
  std::map<unsigned, Vertex> x_of;
  std::vector<Edge> edges;
  auto attach = [&](Vertex v, unsigned set) {
    for (int b = 0; b < k; ++b)
      if (set & (1u << b)) edges.push_back({v, b});
  };

  std::vector<Vertex> clique_x;
  for (unsigned s = 1; s <= full; ++s) {
    int size = popcount(s);
    if (size < 2 || size > k - 2) continue;
    x_of[s] = next;
    clique_x.push_back(next);
    attach(next++, s);
  }
  for (std::size_t i = 0; i < clique_x.size(); ++i)
    for (std::size_t j = i + 1; j < clique_x.size(); ++j)
      edges.push_back({clique_x[i], clique_x[j]});

  for (unsigned s = 1; s <= full; ++s) {
    if (popcount(s) > k - 2) continue;
    const unsigned rest = full & ~s;
    // Proper non-empty subsets of B \ S, increasing.
    std::vector<unsigned> ts;
    for (unsigned t = 1; t <= rest; ++t)
      if ((t & ~rest) == 0 && t != rest) ts.push_back(t);
    for (unsigned t : ts) {
      const Vertex y = next++;
      attach(y, s);
      unsigned target = t;
      if (popcount(t) == 1) target = t | (s & (~s + 1));  // t plus min S
      edges.push_back({y, x_of.at(target)});
    }
  }

  std::vector<Vertex> clique_z;
  for (unsigned s = 1; s <= full; ++s) {
    if (popcount(s) < k - 1) continue;
    clique_z.push_back(next);
    attach(next++, s);
  }
  for (std::size_t i = 0; i < clique_z.size(); ++i)
    for (std::size_t j = i + 1; j < clique_z.size(); ++j)
      edges.push_back({clique_z[i], clique_z[j]});

  return finish(Graph(next, edges), range_set(0, k), k, k,
                with_params("diam3", {k}));
}

ConstructedInstance construct_cycle_basis(int n) {
  if (n < 12) throw GraphError("construct_cycle_basis requires n >= 12");
  const Graph g = cycle_graph(n);
  const DistanceMatrix dm = all_pairs_distances(g);
  const int low = lower_bound_paths(n, n % 2 == 0 ? 4 : 3).integer_bound;

  // (size, p, q) for every block decomposition n = p(2q+2), p, q >= 2.
  std::vector<std::tuple<int, int, int>> forms;
  for (int q = 2; 2 * (2 * q + 2) <= n; ++q)
    if (n % (2 * q + 2) == 0) {
      int p = n / (2 * q + 2);
      forms.emplace_back(p + q - 1, p, q);
    }
  std::sort(forms.begin(), forms.end());
  for (auto [size, p, q] : forms) {
    VertexSet basis = cycle_block_basis(p, q, n);
    if (is_centroidal_locating(dm, basis)) {
      return finish(g, std::move(basis), low, size,
                    with_params("cycle-basis", {n, p, q}));
    }
  }

  // Padded: m = 2l^2 <= n largest, blocks on x0..x(m-1), then B0 covers
  // x1..x(2q+1) and the tail x(m)..x(n-1).
  int l = 2;
  while (2 * (l + 1) * (l + 1) <= n) ++l;
  const int m = 2 * l * l, p = l, q = l - 1;
  VertexSet b1;
  for (int i = 0; i < p; ++i) b1.push_back(i * (2 * q + 2));
  VertexSet raw = merge({b1, range_set(1, 2 * q + 2), range_set(m, n)}, n);
  ConstructedInstance out =
      finish(g, raw, low, static_cast<int>(raw.size()),
             with_params("cycle-basis-padded", {n, l}));
  out.basis = minimize_locating_set(dm, raw);
  out.claimed_high = static_cast<int>(out.basis.size());
  return out;
}

ConstructedInstance construct_path_basis(int n) {
  if (n < 13) throw GraphError("construct_path_basis requires n >= 13");
  const Graph g = path_graph(n);
  const DistanceMatrix dm = all_pairs_distances(g);
  const int low = lower_bound_paths(n - 1, 2).integer_bound;

  std::vector<std::tuple<int, int, int>> forms;
  for (int q = 2; 2 * (2 * q + 2) <= n - 1; ++q)
    if ((n - 1) % (2 * q + 2) == 0) {
      int p = (n - 1) / (2 * q + 2);
      forms.emplace_back(p + 2 * q - 1, p, q);
    }
  std::sort(forms.begin(), forms.end());
  for (auto [size, p, q] : forms) {
    VertexSet basis = path_block_basis(p, q, n);
    if (is_centroidal_locating(dm, basis)) {
      return finish(g, std::move(basis), low, size,
                    with_params("path-basis", {n, p, q}));
    }
  }

  // Padded: m = (2l)^2 + 1 <= n largest; blocks on x0..x(m-1), B0 on
  // x1..x(2q+1), its mirror x(m-2q-2)..x(m-2) and the tail x(m)..x(n-1).
  int l = 1;
  while (4 * (l + 1) * (l + 1) + 1 <= n) ++l;
  const int m = 4 * l * l + 1, p = 2 * l, q = l - 1, step = 2 * q + 2;
  VertexSet b1;
  for (int i = 0; i <= p; ++i) b1.push_back(i * step);
  VertexSet raw = merge({b1, range_set(1, 2 * q + 2),
                         range_set(m - 2 * q - 2, m - 1), range_set(m, n)},
                        n);
  ConstructedInstance out =
      finish(g, raw, low, static_cast<int>(raw.size()),
             with_params("path-basis-padded", {n, l}));
  out.basis = minimize_locating_set(dm, raw);
  out.claimed_high = static_cast<int>(out.basis.size());
  return out;
}

const char* to_string(ExtremalFamily family) {
  switch (family) {
    case ExtremalFamily::kComplete: return "K_n";
    case ExtremalFamily::kStar: return "K_{1,n-1}";
    case ExtremalFamily::kBipartite2: return "K_{2,n-2}";
    case ExtremalFamily::kS: return "S_n";
    case ExtremalFamily::kT: return "T_n";
    case ExtremalFamily::kU: return "U_n";
  }
  return "?";
}

std::optional<ExtremalFamily> parse_extremal_family(std::string_view name) {
  static const std::pair<std::string_view, ExtremalFamily> kNames[] = {
      {"K_n", ExtremalFamily::kComplete},       {"complete", ExtremalFamily::kComplete},
      {"K_{1,n-1}", ExtremalFamily::kStar},     {"star", ExtremalFamily::kStar},
      {"K_{2,n-2}", ExtremalFamily::kBipartite2}, {"bipartite2", ExtremalFamily::kBipartite2},
      {"S_n", ExtremalFamily::kS},              {"S", ExtremalFamily::kS},
      {"T_n", ExtremalFamily::kT},              {"T", ExtremalFamily::kT},
      {"U_n", ExtremalFamily::kU},              {"U", ExtremalFamily::kU},
  };
  for (const auto& [key, family] : kNames)
    if (key == name) return family;
  return std::nullopt;
}

ConstructedInstance extremal_family(ExtremalFamily family, int n) {
  const bool needs_four = family == ExtremalFamily::kS ||
                          family == ExtremalFamily::kT ||
                          family == ExtremalFamily::kU;
  if (n < (needs_four ? 4 : 3)) {
    throw GraphError(std::string(to_string(family)) + " requires n >= " +
                     (needs_four ? "4" : "3"));
  }
  Graph g;
  VertexSet basis;
  switch (family) {
    case ExtremalFamily::kComplete:
      g = complete_graph(n);
      basis = range_set(0, n - 1);
      break;
    case ExtremalFamily::kStar:
      g = star_graph(n);
      basis = range_set(1, n);
      break;
    case ExtremalFamily::kBipartite2:
      g = complete_bipartite_graph(2, n - 2);
      // K_{2,1} is the path 0 - 2 - 1: keep both leaves.
      basis = n == 3 ? VertexSet{0, 1} : merge({{0}, range_set(2, n)}, n);
      break;
    case ExtremalFamily::kS:
      g = s_graph(n);
      basis = merge({{0}, range_set(2, n)}, n);
      break;
    case ExtremalFamily::kT:
      g = t_graph(n);
      basis = merge({{0, 1}, range_set(3, n)}, n);
      break;
    case ExtremalFamily::kU:
      g = u_graph(n);
      basis = range_set(1, n);
      break;
  }
  return finish(std::move(g), std::move(basis), n - 1, n - 1,
                with_params(to_string(family), {n}));
}

std::optional<ExtremalFamily> recognize_extremal(const Graph& g) {
  require_connected(g, "recognize_extremal");
  const int n = g.order();
  if (n < 3) throw GraphError("recognize_extremal requires n >= 3");
  const int m = g.size();
  std::vector<Vertex> by_degree[2];  // [0]: degree n-1, [1]: degree 1
  int deg2 = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) by_degree[0].push_back(v);
    if (g.degree(v) == 1) by_degree[1].push_back(v);
    if (g.degree(v) == 2) ++deg2;
  }
  const auto& universal = by_degree[0];
  const auto& leaves = by_degree[1];

  if (m == n * (n - 1) / 2) return ExtremalFamily::kComplete;
  if (m == n - 1 && universal.size() == 1) return ExtremalFamily::kStar;

  if (n >= 4 && m == 2 * (n - 2)) {
    // Two non-adjacent vertices whose common neighbourhood is everything else,
    // which is independent.
    for (Vertex a = 0; a < n; ++a) {
      if (g.degree(a) != n - 2) continue;
      for (Vertex b = a + 1; b < n; ++b) {
        if (g.degree(b) != n - 2 || g.adjacent(a, b)) continue;
        auto na = g.neighbors(a), nb = g.neighbors(b);
        if (std::equal(na.begin(), na.end(), nb.begin(), nb.end())) {
          return ExtremalFamily::kBipartite2;
        }
      }
    }
  }
  if (n >= 4 && m == 2 * n - 3 && universal.size() == 2 &&
      g.adjacent(universal[0], universal[1]) && deg2 == n - 2) {
    return ExtremalFamily::kS;
  }
  if (n >= 4 && m == n - 1 && static_cast<int>(leaves.size()) == n - 2) {
    // Double star; one centre carries a single leaf and has degree 2.
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) != 2) continue;
      auto nv = g.neighbors(v);
      if (g.degree(nv[0]) == 1 || g.degree(nv[1]) == 1) return ExtremalFamily::kT;
    }
  }
  if (n >= 4 && m == n && universal.size() == 1 &&
      static_cast<int>(leaves.size()) == n - 3 && deg2 == 2) {
    return ExtremalFamily::kU;
  }
  return std::nullopt;
}

std::vector<ConstructedInstance> fig2_fixtures() {
  std::vector<ConstructedInstance> out;
  out.push_back(finish(fig2a_graph(), {1, 5, 9}, 3, 3, "fig2a"));

  const std::vector<Edge> edges = {
      {0, 1},  {1, 2}, {2, 3},  {3, 4},  {4, 5},   {5, 0},    // hexagon
      {6, 1},  {6, 3}, {6, 5},                                // centre
      {1, 8},  {8, 7}, {7, 3},                                // outer paths
      {3, 9},  {9, 10}, {10, 5}, {5, 12}, {12, 11}, {11, 1},
  };
  Graph fig2b(13, edges);
  const VertexSet basis = {1, 3, 5};
  auto check = check_centroidal_locating(all_pairs_distances(fig2b), basis);
  ConstructedInstance b;
  b.graph = std::move(fig2b);
  b.basis = b.raw_basis = basis;
  b.claimed_low = b.claimed_high = 3;
  b.provenance = "fig2b";
  b.quarantined = !check.locating;
  out.push_back(std::move(b));
  return out;
}

}  // namespace cdim
