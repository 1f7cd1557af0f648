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

#ifndef CDIM_BOUNDS_HPP_
#define CDIM_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cdim/graph.hpp"

namespace cdim {

using BigInt = boost::multiprecision::cpp_int;

// Number of ordered set partitions of a k-set: b(0) = 1,
// b(k) = sum_{i=1..k} C(k,i) b(k-i). Throws std::invalid_argument for k < 0.
BigInt ordered_bell(int k);

// Smallest k >= 1 with b(k) >= n; a graph on n vertices cannot have a
// smaller centroidal locating set. Requires n >= 1.
int bell_lower_bound(std::int64_t n);

// Upper bounds on the order n of a graph of diameter D that has a centroidal
// locating set of size k.
struct OrderCaps {
  BigInt power;                    // k + D^k, any D >= 1
  std::optional<BigInt> general;   // D >= 2
  std::optional<BigInt> small;     // D = 2 (k >= 1) or D = 3 (k >= 5)
  BigInt tightest;
};
OrderCaps order_cap_diam(int diameter, int k);

// Smallest k >= 1 whose tightest order cap admits n vertices.
int diameter_lower_bound(std::int64_t n, int diameter);

// CD > sqrt(2m / k_paths). `integer_bound` is the least integer strictly above
// the root, computed exactly as the least c with c^2 * k_paths > 2m.
struct StrictRootBound {
  std::int64_t numerator = 0;    // 2m
  std::int64_t denominator = 1;  // k_paths
  double value = 0.0;
  int integer_bound = 0;
};
StrictRootBound lower_bound_paths(std::int64_t edges, std::int64_t k_paths);

// Simple u-v paths counted by parity of length. Exhaustive DFS; `overflow`
// is set once more than `budget` complete paths (or 64 * budget partial
// extensions) have been seen, and the counts are then incomplete.
struct PathMultiplicity {
  std::int64_t odd = 0;
  std::int64_t even = 0;
  bool overflow = false;

  std::int64_t weight() const { return 2 * even + odd; }
};
PathMultiplicity path_multiplicity(const Graph& g, Vertex u, Vertex v,
                                   std::int64_t budget);

// max over unordered pairs of 2 k_even + k_odd; nullopt on any overflow.
std::optional<std::int64_t> max_path_weight(const Graph& g,
                                            std::int64_t budget);

enum class BoundKind { kLower, kUpper, kValue, kRelation, kNote };
const char* to_string(BoundKind kind);

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::kNote;
  std::optional<std::int64_t> value;
  bool applicable = false;
  std::string anchor;
};

struct KnownValues {
  std::optional<int> exact_cd;
  std::optional<int> approx_cd;
  std::optional<int> md;
  std::optional<int> ld;
  // A locating-dominating set; enables the lift bound LD + l.
  std::optional<VertexSet> ld_set;
};

struct BoundsReport {
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const;
  // Max over applicable lower bounds / min over applicable upper bounds.
  int best_lower() const;
  int best_upper() const;
  // Every applicable lower <= cd <= every applicable upper, and every
  // applicable relation holds.
  bool consistent_with(int cd) const;
};

// Requires a connected graph with n >= 1.
BoundsReport bounds_report(const Graph& g, const KnownValues& known = {},
                           std::int64_t path_budget = 100000);

}  // namespace cdim

#endif  // CDIM_BOUNDS_HPP_
