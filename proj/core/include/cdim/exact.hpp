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

#ifndef CDIM_EXACT_HPP_
#define CDIM_EXACT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "cdim/bounds.hpp"
#include "cdim/graph.hpp"

namespace cdim {

// Necessary conditions every centroidal locating set satisfies:
//  - a degree-1 vertex is always a detector;
//  - a degree-1 vertex u whose neighbour v has degree 2 forces one of
//    {v} ∪ N(v) \ {u};
//  - of two twins (equal open or closed neighbourhoods), one is a detector.
// Sets already hit by must_include are dropped; the list is sorted and
// duplicate-free.
struct ForcedConstraints {
  VertexSet must_include;
  std::vector<VertexSet> at_least_one_of;

  bool satisfied_by(const VertexSet& candidate) const;
};

ForcedConstraints forced_constraints(const Graph& g);

struct SolveResult {
  int value = 0;
  VertexSet basis;
  // Candidates that passed the constraint filters and were fully checked, in
  // enumeration order up to the returned basis. Independent of `threads`.
  std::uint64_t nodes_examined = 0;
  // Every size below `value` was excluded, by search or by a lower bound.
  bool certified = false;
};

struct ExactOptions {
  // Largest size searched. Defaults to n-1 when the max degree is >= 2 and to
  // n otherwise. When exceeded, the result is the trivial locating set and is
  // not certified.
  std::optional<int> size_cap;
  bool use_pruning = true;
  // Workers per size level; results match the serial search exactly.
  int threads = 1;
};

// Candidates at each size are visited in colexicographic order, so the basis
// returned is the colex-first one of minimum size. Throws GraphError on
// disconnected or empty input.
SolveResult exact_cd(const Graph& g, const ExactOptions& options = {});

// Minimum resolving set (distinct distance vectors).
SolveResult exact_md(const Graph& g);

// Minimum locating-dominating set.
SolveResult exact_ld(const Graph& g);

// V minus the lowest-id vertex of degree >= 2, or V when no such vertex
// exists. Always centroidal locating on a connected graph.
VertexSet trivial_locating_set(const Graph& g);

}  // namespace cdim

#endif  // CDIM_EXACT_HPP_
