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

#ifndef CDIM_CONSTRUCTIONS_HPP_
#define CDIM_CONSTRUCTIONS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdim/graph.hpp"

namespace cdim {

// A graph together with a centroidal locating set the builder has verified.
struct ConstructedInstance {
  Graph graph;
  VertexSet basis;
  // The set as first assembled, before any greedy minimization. Equal to
  // `basis` for constructions that are not minimized.
  VertexSet raw_basis;
  // Claimed centroidal dimension interval [low, high].
  int claimed_low = 0;
  int claimed_high = 0;
  std::string provenance;
  // Fixtures transcribed from drawings are reported, not fixed, when the
  // drawn basis fails verification.
  bool quarantined = false;
};

class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, std::pair<Vertex, Vertex> witness);
  std::pair<Vertex, Vertex> witness() const { return witness_; }

 private:
  std::pair<Vertex, Vertex> witness_;
};

// Diameter 2, n = 2^k + k - 1, basis B = {0..k-1}. B induces a k-cycle; the
// clique S = {k..n-1} gets every non-empty subset of B as a neighbourhood,
// masks in increasing order. Requires 4 <= k <= 20.
ConstructedInstance construct_diam2(int k);

// Diameter 3, n = 3^k - 2^(k+1) + 2, independent basis B = {0..k-1} followed
// by the clique X, the independent layer Y and the clique Z. A vertex y(S,T)
// with |T| = 1 attaches to x({t, min S}). Requires 4 <= k <= 9.
ConstructedInstance construct_diam3(int k);

// C_n with a verified basis. When n = p(2q+2) for some p, q >= 2 the
// block construction of size p+q-1 is used (smallest such size that
// verifies); otherwise the padded construction, greedily minimized.
// Requires n >= 12; throws ConstructionError if verification fails.
ConstructedInstance construct_cycle_basis(int n);

// P_n with a verified basis: block construction of size p+2q-1 when
// n = p(2q+2)+1 for p, q >= 2, else the padded construction, greedily
// minimized. Requires n >= 13.
ConstructedInstance construct_path_basis(int n);

enum class ExtremalFamily { kComplete, kStar, kBipartite2, kS, kT, kU };

// "K_n", "K_{1,n-1}", "K_{2,n-2}", "S_n", "T_n", "U_n".
const char* to_string(ExtremalFamily family);
// Accepts the names above and complete, star, bipartite2, S, T, U.
std::optional<ExtremalFamily> parse_extremal_family(std::string_view name);

// A family member on n vertices with an (n-1)-vertex basis. n >= 3, and
// n >= 4 for S, T, U.
ConstructedInstance extremal_family(ExtremalFamily family, int n);

// Structural recognition of the six families with CD = n - 1. Requires a
// connected graph with n >= 3.
std::optional<ExtremalFamily> recognize_extremal(const Graph& g);

// The two 13-vertex fixtures with a 3-vertex basis.
// fig2a: 12-cycle 0..11 plus centre 12 on 3, 7, 11; basis {1, 5, 9}.
// fig2b: hexagon 0..5, centre 6 on 1, 3, 5, and outer 2-paths 1-8-7-3,
// 3-9-10-5, 5-12-11-1; basis {1, 3, 5}.
std::vector<ConstructedInstance> fig2_fixtures();

// Drops detectors in descending id order while the set stays locating.
VertexSet minimize_locating_set(const DistanceMatrix& dm, VertexSet basis);

}  // namespace cdim

#endif  // CDIM_CONSTRUCTIONS_HPP_
