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

#include "cdim/approx.hpp"

#include <algorithm>
#include <string>

#include "cdim/exact.hpp"

namespace cdim {
namespace {

std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

}  // namespace

void cd_hyperedge(const DistanceMatrix& dm, VertexPair detectors, Bitset& out) {
  const int n = dm.order();
  out.resize(pair_count(n));
  out.reset();
  std::vector<int> sign(n);
  for (Vertex x = 0; x < n; ++x)
    sign[x] = sign_profile(dm, detectors.a, detectors.b, x);
  for (Vertex y = 1; y < n; ++y) {
    const std::size_t base = static_cast<std::size_t>(y) * (y - 1) / 2;
    for (Vertex x = 0; x < y; ++x)
      if (sign[x] != sign[y]) out.set(base + x);
  }
}

CdSetCover build_cd_setcover(const DistanceMatrix& dm) {
  const int n = dm.order();
  if (n < 2) throw GraphError("pair hypergraph needs at least two vertices");
  if (n > kDenseSetCoverLimit) {
    throw GraphError("dense pair hypergraph limited to n <= " +
                     std::to_string(kDenseSetCoverLimit));
  }
  if (!dm.connected()) throw GraphError("pair hypergraph needs a connected graph");
  CdSetCover h;
  h.n = n;
  h.instance.universe_size = pair_count(n);
  h.instance.sets.resize(pair_count(n));
  for (std::size_t i = 0; i < h.instance.sets.size(); ++i) {
    cd_hyperedge(dm, pair_from_colex_index(i), h.instance.sets[i]);
  }
  return h;
}

CoverResult approx_cd(const Graph& g) {
  require_connected(g, "approx_cd");
  const int n = g.order();
  if (n < 2) throw GraphError("approx_cd requires at least two vertices");
  const DistanceMatrix dm = all_pairs_distances(g);

  std::vector<GreedyStep> steps;
  if (n <= kDenseSetCoverLimit) {
    steps = greedy_set_cover(build_cd_setcover(dm).instance);
  } else {
    steps = lazy_greedy_set_cover(
        pair_count(n), pair_count(n), [&dm](std::size_t i, Bitset& out) {
          cd_hyperedge(dm, pair_from_colex_index(i), out);
        });
  }

  CoverResult result;
  std::vector<Vertex> endpoints;
  for (const auto& step : steps) {
    VertexPair p = pair_from_colex_index(step.set);
    result.cover.push_back(p);
    result.greedy_trace.push_back({p, step.newly_covered});
    endpoints.push_back(p.a);
    endpoints.push_back(p.b);
  }
  result.cover_basis = make_vertex_set(std::move(endpoints), n);
  VertexSet fallback = trivial_locating_set(g);
  if (fallback.size() < result.cover_basis.size()) {
    result.basis = std::move(fallback);
    result.used_fallback = true;
  } else {
    result.basis = result.cover_basis;
  }
  return result;
}

int count_uniquely_dominated(const Graph& g, const VertexSet& set) {
  std::vector<char> in_set(g.order(), 0);
  for (Vertex v : set) in_set[v] = 1;
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_set[v]) continue;
    int hits = 0;
    for (Vertex u : g.neighbors(v)) hits += in_set[u];
    count += hits == 1;
  }
  return count;
}

VertexSet ld_to_cd(const Graph& g, const VertexSet& ld_set) {
  if (!is_locating_dominating(g, ld_set)) {
    throw GraphError("ld_to_cd: input set is not locating-dominating");
  }
  std::vector<char> in_set(g.order(), 0);
  for (Vertex v : ld_set) in_set[v] = 1;
  std::vector<Vertex> out(ld_set.begin(), ld_set.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_set[v]) continue;
    int hits = 0;
    for (Vertex u : g.neighbors(v)) hits += in_set[u];
    if (hits == 1) out.push_back(v);
  }
  return make_vertex_set(std::move(out), g.order());
}

VertexSet greedy_ld(const Graph& g) {
  require_connected(g, "greedy_ld");
  const int n = g.order();
  // Elements 0..n-1: domination of v. Then one element per pair, colex order.
  SetCoverInstance inst;
  inst.universe_size = static_cast<std::size_t>(n) + pair_count(n);
  inst.sets.assign(n, Bitset(inst.universe_size));
  for (Vertex w = 0; w < n; ++w) {
    Bitset& s = inst.sets[w];
    s.set(w);
    for (Vertex v : g.neighbors(w)) s.set(v);
    for (Vertex y = 1; y < n; ++y) {
      for (Vertex x = 0; x < y; ++x) {
        bool separates = w == x || w == y || g.adjacent(w, x) != g.adjacent(w, y);
        if (separates) s.set(n + colex_index({x, y}));
      }
    }
  }
  std::vector<Vertex> chosen;
  for (const auto& step : greedy_set_cover(inst)) {
    chosen.push_back(static_cast<Vertex>(step.set));
  }
  return make_vertex_set(std::move(chosen), n);
}

}  // namespace cdim
