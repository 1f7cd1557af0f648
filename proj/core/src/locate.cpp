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

#include "cdim/locate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cdim {
namespace {

// Writes the dense rank of each detector's distance from x into `out`: equal
// ranks share a class, rank order is class order. Two probes have the same
// rank vector iff their dense-rank tuples match.
void dense_ranks(const DistanceMatrix& dm, Vertex x,
                 std::span<const Vertex> detectors,
                 std::vector<std::int32_t>& scratch, std::int32_t* out) {
  auto row = dm.row(x);
  scratch.clear();
  for (Vertex b : detectors) scratch.push_back(row[b]);
  std::sort(scratch.begin(), scratch.end());
  scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
  for (std::size_t i = 0; i < detectors.size(); ++i) {
    out[i] = static_cast<std::int32_t>(
        std::lower_bound(scratch.begin(), scratch.end(), row[detectors[i]]) -
        scratch.begin());
  }
}

// Groups the n rows of a row-major n x k table and returns the
// lexicographically smallest pair of equal rows, if any.
std::optional<std::pair<Vertex, Vertex>> first_duplicate_row(
    int n, std::size_t k, const std::vector<std::int32_t>& table) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto row_begin = [&](Vertex v) { return table.begin() + v * k; };
  auto less = [&](Vertex a, Vertex b) {
    int cmp = 0;
    for (std::size_t i = 0; i < k && cmp == 0; ++i) {
      auto x = row_begin(a)[i], y = row_begin(b)[i];
      cmp = (x < y) ? -1 : (x > y) ? 1 : 0;
    }
    return cmp != 0 ? cmp < 0 : a < b;
  };
  std::sort(order.begin(), order.end(), less);
  std::optional<std::pair<Vertex, Vertex>> best;
  for (int i = 0; i + 1 < n;) {
    int j = i + 1;
    while (j < n &&
           std::equal(row_begin(order[i]), row_begin(order[i]) + k,
                      row_begin(order[j]))) {
      ++j;
    }
    if (j - i >= 2) {
      // Within a group the ids are ascending, so the first two are smallest.
      std::pair<Vertex, Vertex> cand{order[i], order[i + 1]};
      if (!best || cand < *best) best = cand;
    }
    i = j;
  }
  return best;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

VertexPair pair_from_colex_index(std::size_t index) {
  auto b = static_cast<std::size_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (b * (b - 1) / 2 > index) --b;
  while ((b + 1) * b / 2 <= index) ++b;
  return {static_cast<Vertex>(index - b * (b - 1) / 2),
          static_cast<Vertex>(b)};
}

std::string RankVector::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i) out << '<';
    const auto& cls = classes_[i];
    if (cls.size() == 1) {
      out << cls[0];
      continue;
    }
    out << '{';
    for (std::size_t j = 0; j < cls.size(); ++j) out << (j ? "," : "") << cls[j];
    out << '}';
  }
  return out.str();
}

RankVector rank_vector(const DistanceMatrix& dm, Vertex x,
                       std::span<const Vertex> detectors) {
  if (detectors.empty()) throw GraphError("rank vector of an empty detector set");
  std::vector<std::pair<std::int32_t, Vertex>> by_distance;
  for (Vertex b : detectors) by_distance.push_back({dm(x, b), b});
  std::sort(by_distance.begin(), by_distance.end());
  std::vector<VertexSet> classes;
  for (std::size_t i = 0; i < by_distance.size(); ++i) {
    if (i == 0 || by_distance[i].first != by_distance[i - 1].first) {
      classes.emplace_back();
    }
    classes.back().push_back(by_distance[i].second);
  }
  return RankVector(std::move(classes));
}

int sign_profile(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex x) {
  auto da = dm(x, a), db = dm(x, b);
  return (da > db) - (da < db);
}

bool identifies(const DistanceMatrix& dm, VertexPair detectors, Vertex x,
                Vertex y) {
  return sign_profile(dm, detectors.a, detectors.b, x) !=
         sign_profile(dm, detectors.a, detectors.b, y);
}

LocatingCheck check_centroidal_locating(const DistanceMatrix& dm,
                                        std::span<const Vertex> detectors) {
  if (!dm.connected()) {
    throw GraphError("centroidal verification requires a connected graph");
  }
  if (detectors.empty()) throw GraphError("empty detector set");
  VertexSet sorted(detectors.begin(), detectors.end());
  sorted = make_vertex_set(std::move(sorted), dm.order());
  const int n = dm.order();
  const std::size_t k = sorted.size();
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * k);
  std::vector<std::int32_t> scratch;
  for (Vertex x = 0; x < n; ++x) {
    dense_ranks(dm, x, sorted, scratch, table.data() + x * k);
  }
  LocatingCheck result;
  result.witness = first_duplicate_row(n, k, table);
  result.locating = !result.witness.has_value();
  return result;
}

bool is_centroidal_locating(const DistanceMatrix& dm,
                            std::span<const Vertex> detectors) {
  return check_centroidal_locating(dm, detectors).locating;
}

bool is_resolving(const DistanceMatrix& dm, std::span<const Vertex> set) {
  const int n = dm.order();
  if (n <= 1) return true;
  const std::size_t k = set.size();
  if (k == 0) return false;
  std::vector<std::int32_t> table(static_cast<std::size_t>(n) * k);
  for (Vertex x = 0; x < n; ++x)
    for (std::size_t i = 0; i < k; ++i) table[x * k + i] = dm(x, set[i]);
  return !first_duplicate_row(n, k, table).has_value();
}

bool is_locating_dominating(const Graph& g, std::span<const Vertex> set) {
  const int n = g.order();
  std::vector<char> in_set(n, 0);
  for (Vertex v : set) in_set[v] = 1;
  std::vector<VertexSet> traces;
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v]) continue;
    VertexSet trace;
    for (Vertex u : g.neighbors(v))
      if (in_set[u]) trace.push_back(u);
    if (trace.empty()) return false;
    traces.push_back(std::move(trace));
  }
  std::sort(traces.begin(), traces.end());
  return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

CentroidalChecker::CentroidalChecker(const DistanceMatrix& dm) : dm_(&dm) {
  if (!dm.connected()) {
    throw GraphError("centroidal verification requires a connected graph");
  }
}

bool CentroidalChecker::operator()(std::span<const Vertex> detectors) {
  const int n = dm_->order();
  const std::size_t k = detectors.size();
  if (k == 0) return n <= 1;
  codes_.resize(static_cast<std::size_t>(n) * k);
  keyed_.clear();
  for (Vertex x = 0; x < n; ++x) {
    std::int32_t* row = codes_.data() + x * k;
    dense_ranks(*dm_, x, detectors, scratch_, row);
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < k; ++i) h = mix(h, row[i]);
    keyed_.push_back({h, x});
  }
  std::sort(keyed_.begin(), keyed_.end());
  for (std::size_t i = 0; i + 1 < keyed_.size(); ++i) {
    for (std::size_t j = i + 1;
         j < keyed_.size() && keyed_[j].first == keyed_[i].first; ++j) {
      const std::int32_t* a = codes_.data() + keyed_[i].second * k;
      const std::int32_t* b = codes_.data() + keyed_[j].second * k;
      if (std::equal(a, a + k, b)) return false;
    }
  }
  return true;
}

}  // namespace cdim
