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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace cdim::oracle {
namespace {

constexpr int kFar = 1 << 28;

int sign(int v) { return (v > 0) - (v < 0); }

}  // namespace

Matrix floyd_warshall(const Graph& g) {
  const int n = g.order();
  Matrix d(n, std::vector<int>(n, kFar));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

std::vector<std::vector<Vertex>> rank_vector(const Matrix& d, Vertex x,
                                             const std::vector<Vertex>& set) {
  std::map<int, std::vector<Vertex>> by_distance;
  for (Vertex w : set) by_distance[d[x][w]].push_back(w);
  std::vector<std::vector<Vertex>> out;
  for (auto& [dist, group] : by_distance) {
    std::sort(group.begin(), group.end());
    out.push_back(group);
  }
  return out;
}

bool is_centroidal_locating(const Matrix& d, const std::vector<Vertex>& set) {
  std::set<std::vector<std::vector<Vertex>>> seen;
  for (Vertex x = 0; x < static_cast<Vertex>(d.size()); ++x)
    if (!seen.insert(rank_vector(d, x, set)).second) return false;
  return true;
}

bool is_resolving(const Matrix& d, const std::vector<Vertex>& set) {
  std::set<std::vector<int>> seen;
  for (Vertex x = 0; x < static_cast<Vertex>(d.size()); ++x) {
    std::vector<int> code;
    for (Vertex w : set) code.push_back(d[x][w]);
    if (!seen.insert(code).second) return false;
  }
  return true;
}

bool is_locating_dominating(const Graph& g, const std::vector<Vertex>& set) {
  const std::set<Vertex> in(set.begin(), set.end());
  std::set<std::vector<Vertex>> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in.count(v)) continue;
    std::vector<Vertex> hits;
    for (Vertex w : set)
      if (g.adjacent(v, w)) hits.push_back(w);
    if (hits.empty() || !seen.insert(hits).second) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> subsets_of_size(int n, int size) {
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> minimum_size(int n, int min_size, const SetPredicate& ok) {
  for (int size = min_size; size <= n; ++size)
    for (const auto& s : subsets_of_size(n, size))
      if (ok(s)) return size;
  return std::nullopt;
}

std::vector<std::vector<Vertex>> all_passing(int n, int size,
                                             const SetPredicate& ok) {
  std::vector<std::vector<Vertex>> out;
  for (auto& s : subsets_of_size(n, size))
    if (ok(s)) out.push_back(std::move(s));
  return out;
}

std::uint64_t ordered_bell_series(int k) {
  long double sum = 0;
  for (int j = 1; j < 400; ++j)
    sum += std::pow(static_cast<long double>(j), k) /
           std::pow(2.0L, static_cast<long double>(j + 1));
  if (k == 0) sum += 0.5L;  // the j = 0 term, 0^0 / 2
  return static_cast<std::uint64_t>(std::llround(sum));
}

std::optional<int> min_set_cover(const SetCoverInstance& instance) {
  const std::size_t m = instance.sets.size();
  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int count = __builtin_popcount(mask);
    if (best && count >= *best) continue;
    Bitset covered(instance.universe_size);
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) covered |= instance.sets[i];
    if (covered.count() == instance.universe_size) best = count;
  }
  return best;
}

bool pair_identifies(const Matrix& d, Vertex a, Vertex b, Vertex x, Vertex y) {
  return sign(d[x][a] - d[x][b]) != sign(d[y][a] - d[y][b]);
}

}  // namespace cdim::oracle
