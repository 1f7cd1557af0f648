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

#ifndef CDIM_LOCATE_HPP_
#define CDIM_LOCATE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdim/graph.hpp"

namespace cdim {

// Unordered vertex pair stored with a < b.
struct VertexPair {
  Vertex a;
  Vertex b;

  static VertexPair of(Vertex x, Vertex y) {
    return x < y ? VertexPair{x, y} : VertexPair{y, x};
  }

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

// Position of {a,b} in colexicographic order: pairs sorted by (b, a).
inline std::size_t colex_index(VertexPair p) {
  return static_cast<std::size_t>(p.b) * (p.b - 1) / 2 + p.a;
}
VertexPair pair_from_colex_index(std::size_t index);

// Ordered partition of a detector set by distance from a probe vertex.
// Classes appear in strictly increasing distance; each class is sorted.
class RankVector {
 public:
  RankVector() = default;
  explicit RankVector(std::vector<VertexSet> classes)
      : classes_(std::move(classes)) {}

  const std::vector<VertexSet>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }

  // "{0,2}<5<7": classes joined by '<', ties braced in ascending order.
  std::string to_string() const;

  friend bool operator==(const RankVector&, const RankVector&) = default;

 private:
  std::vector<VertexSet> classes_;
};

// Throws GraphError if `detectors` is empty.
RankVector rank_vector(const DistanceMatrix& dm, Vertex x,
                       std::span<const Vertex> detectors);

// sign(d(x,a) - d(x,b)) in {-1, 0, +1}.
int sign_profile(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex x);

// The detector pair {a,b} separates x from y iff the two signs differ. A tie
// against a strict comparison counts as separated, which folds the two
// ordered readings of the pair into one test.
bool identifies(const DistanceMatrix& dm, VertexPair detectors, Vertex x,
                Vertex y);

struct LocatingCheck {
  bool locating = false;
  // Lexicographically smallest unidentified (x, y), x < y, when not locating.
  std::optional<std::pair<Vertex, Vertex>> witness;
};

// Requires a connected graph and a non-empty detector set.
LocatingCheck check_centroidal_locating(const DistanceMatrix& dm,
                                        std::span<const Vertex> detectors);
bool is_centroidal_locating(const DistanceMatrix& dm,
                            std::span<const Vertex> detectors);

// Distance vectors (d(v,w1),...,d(v,wk)) pairwise distinct.
bool is_resolving(const DistanceMatrix& dm, std::span<const Vertex> set);

// Dominating, and N(v) ∩ D distinct over all v outside D.
bool is_locating_dominating(const Graph& g, std::span<const Vertex> set);

// Reusable checker for search loops. Keeps scratch buffers between calls so
// candidate evaluation does not allocate.
class CentroidalChecker {
 public:
  explicit CentroidalChecker(const DistanceMatrix& dm);

  // `detectors` must be sorted.
  bool operator()(std::span<const Vertex> detectors);

 private:
  const DistanceMatrix* dm_;
  std::vector<std::int32_t> codes_;
  std::vector<std::int32_t> scratch_;
  std::vector<std::pair<std::uint64_t, Vertex>> keyed_;
};

}  // namespace cdim

#endif  // CDIM_LOCATE_HPP_
