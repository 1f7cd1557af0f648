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

#ifndef CDIM_APPROX_HPP_
#define CDIM_APPROX_HPP_

#include <cstddef>
#include <vector>

#include "cdim/graph.hpp"
#include "cdim/locate.hpp"
#include "cdim/set_cover.hpp"

namespace cdim {

// Hypergraph whose vertices are the C(n,2) vertex pairs and whose hyperedge
// for detector pair {a,b} holds every pair {x,y} that {a,b} identifies.
// Universe elements and hyperedges are both indexed by colex_index.
struct CdSetCover {
  int n = 0;
  SetCoverInstance instance;

  VertexPair detectors(std::size_t set) const {
    return pair_from_colex_index(set);
  }
  VertexPair element(std::size_t index) const {
    return pair_from_colex_index(index);
  }
};

// Largest order for which build_cd_setcover materializes every hyperedge.
inline constexpr int kDenseSetCoverLimit = 200;

// Fills `out` (C(n,2) bits) with the pairs {a,b} identifies.
void cd_hyperedge(const DistanceMatrix& dm, VertexPair detectors, Bitset& out);

// Requires a connected graph with 2 <= n <= kDenseSetCoverLimit.
CdSetCover build_cd_setcover(const DistanceMatrix& dm);

struct CoverStep {
  VertexPair detectors;
  std::size_t newly_covered = 0;
};

struct CoverResult {
  std::vector<VertexPair> cover;
  std::vector<CoverStep> greedy_trace;
  // Endpoints of the chosen detector pairs; |cover_basis| <= 2 |cover|.
  VertexSet cover_basis;
  // The smaller of cover_basis and the trivial locating set.
  VertexSet basis;
  bool used_fallback = false;
};

// Greedy set cover over the pair hypergraph. Uses dense hyperedges up to
// kDenseSetCoverLimit vertices and on-demand hyperedges above it. Requires a
// connected graph with n >= 2.
CoverResult approx_cd(const Graph& g);

// Number of vertices outside `set` with exactly one neighbour in it.
int count_uniquely_dominated(const Graph& g, const VertexSet& set);

// D plus every outside vertex that has a single neighbour in D. Throws
// GraphError unless D is locating-dominating.
VertexSet ld_to_cd(const Graph& g, const VertexSet& ld_set);

// Greedy cover of {dominate v} ∪ {separate x,y}: a vertex w dominates v when
// w ∈ N[v] and separates x,y when w ∈ {x,y} or w lies in exactly one of
// N(x), N(y). The result is locating-dominating.
VertexSet greedy_ld(const Graph& g);

}  // namespace cdim

#endif  // CDIM_APPROX_HPP_
