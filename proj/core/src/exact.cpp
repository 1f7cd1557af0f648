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

#include "cdim/exact.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "cdim/locate.hpp"

namespace cdim {
namespace {

using Predicate = std::function<bool(std::span<const Vertex>)>;
using PredicateFactory = std::function<Predicate()>;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// Binomials with saturation, for colex ranking.
class BinomialTable {
 public:
  BinomialTable(int n, int r) : r_(r), table_((n + 1) * (r + 1), 0) {
    for (int m = 0; m <= n; ++m) {
      at(m, 0) = 1;
      for (int j = 1; j <= std::min(m, r); ++j) {
        std::uint64_t a = at(m - 1, j - 1), b = j <= m - 1 ? at(m - 1, j) : 0;
        at(m, j) = (a > kSaturated - b) ? kSaturated : a + b;
      }
    }
  }
  std::uint64_t operator()(int m, int j) const {
    return j > m ? 0 : table_[m * (r_ + 1) + j];
  }

 private:
  std::uint64_t& at(int m, int j) { return table_[m * (r_ + 1) + j]; }
  int r_;
  std::vector<std::uint64_t> table_;
};

// Advances c (indices into a pool of size N) to the next combination in
// colex order. Returns false after the last one.
bool next_colex(std::vector<int>& c, int pool_size) {
  const int r = static_cast<int>(c.size());
  for (int j = 0; j < r; ++j) {
    int limit = (j + 1 < r) ? c[j + 1] : pool_size;
    if (c[j] + 1 < limit) {
      ++c[j];
      for (int i = 0; i < j; ++i) c[i] = i;
      return true;
    }
  }
  return false;
}

std::vector<int> unrank_colex(std::uint64_t rank, int r,
                              const BinomialTable& binom) {
  std::vector<int> c(r);
  for (int i = r - 1; i >= 0; --i) {
    int m = i;
    while (binom(m + 1, i + 1) <= rank) ++m;
    c[i] = m;
    rank -= binom(m, i + 1);
  }
  return c;
}

class LevelSearch {
 public:
  LevelSearch(const VertexSet& must, const VertexSet& pool,
              const ForcedConstraints& filters)
      : must_(must), pool_(pool), filters_(filters) {}

  // Returns the colex-first passing candidate of size |must| + r.
  std::optional<VertexSet> run(int r, const PredicateFactory& make_predicate,
                               int threads, std::uint64_t& examined) const {
    const int pool_size = static_cast<int>(pool_.size());
    if (r < 0 || r > pool_size) return std::nullopt;
    BinomialTable binom(pool_size, r);
    const std::uint64_t total = binom(pool_size, r);
    if (threads <= 1 || total == kSaturated || total < 4 * kBlock) {
      return serial(r, make_predicate(), examined);
    }
    return parallel(r, make_predicate, threads, total, binom, examined);
  }

 private:
  static constexpr std::uint64_t kBlock = 2048;

  void materialize(const std::vector<int>& c, VertexSet& out) const {
    out.clear();
    auto it = must_.begin();
    for (int idx : c) {
      Vertex v = pool_[idx];
      while (it != must_.end() && *it < v) out.push_back(*it++);
      out.push_back(v);
    }
    out.insert(out.end(), it, must_.end());
  }

  std::optional<VertexSet> serial(int r, Predicate predicate,
                                  std::uint64_t& examined) const {
    std::vector<int> c(r);
    for (int i = 0; i < r; ++i) c[i] = i;
    VertexSet candidate;
    do {
      materialize(c, candidate);
      if (!filters_.satisfied_by(candidate)) continue;
      ++examined;
      if (predicate(candidate)) return candidate;
    } while (next_colex(c, static_cast<int>(pool_.size())));
    return std::nullopt;
  }

  std::optional<VertexSet> parallel(int r,
                                    const PredicateFactory& make_predicate,
                                    int threads, std::uint64_t total,
                                    const BinomialTable& binom,
                                    std::uint64_t& examined) const {
    const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
    std::vector<std::uint64_t> checked(blocks, 0);
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best_rank{kSaturated};
    std::mutex mu;
    VertexSet best;

    auto worker = [&] {
      Predicate predicate = make_predicate();
      VertexSet candidate;
      for (;;) {
        const std::uint64_t b = next_block.fetch_add(1);
        if (b >= blocks || b * kBlock > best_rank.load()) return;
        std::uint64_t rank = b * kBlock;
        const std::uint64_t end = std::min(total, rank + kBlock);
        std::vector<int> c = unrank_colex(rank, r, binom);
        std::uint64_t local = 0;
        for (; rank < end; ++rank) {
          if (rank > best_rank.load()) break;
          materialize(c, candidate);
          if (filters_.satisfied_by(candidate)) {
            ++local;
            if (predicate(candidate)) {
              std::lock_guard<std::mutex> lock(mu);
              if (rank < best_rank.load()) {
                best_rank.store(rank);
                best = candidate;
              }
              break;
            }
          }
          next_colex(c, static_cast<int>(pool_.size()));
        }
        checked[b] = local;
      }
    };
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();

    const std::uint64_t found = best_rank.load();
    const std::uint64_t last_block = found == kSaturated ? blocks : found / kBlock + 1;
    for (std::uint64_t b = 0; b < last_block; ++b) examined += checked[b];
    if (found == kSaturated) return std::nullopt;
    return best;
  }

  const VertexSet& must_;
  const VertexSet& pool_;
  const ForcedConstraints& filters_;
};

VertexSet complement(const VertexSet& set, int n) {
  VertexSet out;
  auto it = set.begin();
  for (Vertex v = 0; v < n; ++v) {
    if (it != set.end() && *it == v) {
      ++it;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

SolveResult minimum_by_size(const Graph& g, int k_from, int k_to,
                            const PredicateFactory& make_predicate) {
  SolveResult result;
  const VertexSet none;
  const VertexSet pool = complement(none, g.order());
  const ForcedConstraints no_filters;
  LevelSearch search(none, pool, no_filters);
  for (int k = k_from; k <= k_to; ++k) {
    if (auto basis = search.run(k, make_predicate, 1, result.nodes_examined)) {
      result.value = k;
      result.basis = std::move(*basis);
      result.certified = true;
      return result;
    }
  }
  throw GraphError("no solution within the searched sizes");
}

}  // namespace

bool ForcedConstraints::satisfied_by(const VertexSet& candidate) const {
  for (const auto& group : at_least_one_of) {
    bool hit = false;
    for (Vertex v : group) {
      if (std::binary_search(candidate.begin(), candidate.end(), v)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

ForcedConstraints forced_constraints(const Graph& g) {
  require_connected(g, "forced_constraints");
  const int n = g.order();
  ForcedConstraints fc;
  for (Vertex u = 0; u < n; ++u)
    if (g.degree(u) == 1) fc.must_include.push_back(u);

  std::vector<VertexSet> groups;
  for (Vertex u : fc.must_include) {
    Vertex v = g.neighbors(u)[0];
    if (g.degree(v) != 2) continue;
    VertexSet group = {v};
    for (Vertex w : g.neighbors(v))
      if (w != u) group.push_back(w);
    std::sort(group.begin(), group.end());
    groups.push_back(std::move(group));
  }
  for (Vertex u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    const VertexSet cu = closed_neighborhood(g, u);
    for (Vertex v = u + 1; v < n; ++v) {
      const auto nv = g.neighbors(v);
      bool open = std::equal(nu.begin(), nu.end(), nv.begin(), nv.end());
      if (open || cu == closed_neighborhood(g, v)) groups.push_back({u, v});
    }
  }
  for (auto& group : groups) {
    bool hit = std::any_of(group.begin(), group.end(), [&](Vertex v) {
      return std::binary_search(fc.must_include.begin(), fc.must_include.end(), v);
    });
    if (!hit) fc.at_least_one_of.push_back(std::move(group));
  }
  std::sort(fc.at_least_one_of.begin(), fc.at_least_one_of.end());
  fc.at_least_one_of.erase(
      std::unique(fc.at_least_one_of.begin(), fc.at_least_one_of.end()),
      fc.at_least_one_of.end());
  return fc;
}

VertexSet trivial_locating_set(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) >= 2) return complement({u}, g.order());
  }
  return complement({}, g.order());
}

SolveResult exact_cd(const Graph& g, const ExactOptions& options) {
  require_connected(g, "exact_cd");
  const int n = g.order();
  if (n < 1) throw GraphError("exact_cd requires at least one vertex");
  const DistanceMatrix dm = all_pairs_distances(g);

  const ForcedConstraints constraints =
      options.use_pruning ? forced_constraints(g) : ForcedConstraints{};
  const int cap = std::min(
      n, options.size_cap.value_or(g.max_degree() >= 2 ? n - 1 : n));
  const int k_start = std::max<int>(bell_lower_bound(n),
                                    static_cast<int>(constraints.must_include.size()));

  const VertexSet pool = complement(constraints.must_include, n);
  LevelSearch search(constraints.must_include, pool, constraints);
  PredicateFactory make_predicate = [&dm] {
    return Predicate(CentroidalChecker(dm));
  };

  SolveResult result;
  for (int k = k_start; k <= cap; ++k) {
    const int r = k - static_cast<int>(constraints.must_include.size());
    if (auto basis = search.run(r, make_predicate, options.threads,
                                result.nodes_examined)) {
      result.value = k;
      result.basis = std::move(*basis);
      result.certified = true;
      return result;
    }
  }
  result.basis = trivial_locating_set(g);
  result.value = static_cast<int>(result.basis.size());
  result.certified = false;
  return result;
}

SolveResult exact_md(const Graph& g) {
  require_connected(g, "exact_md");
  const int n = g.order();
  if (n < 1) throw GraphError("exact_md requires at least one vertex");
  const DistanceMatrix dm = all_pairs_distances(g);
  return minimum_by_size(g, n == 1 ? 0 : 1, n, [&dm] {
    return Predicate(
        [&dm](std::span<const Vertex> s) { return is_resolving(dm, s); });
  });
}

SolveResult exact_ld(const Graph& g) {
  require_connected(g, "exact_ld");
  const int n = g.order();
  if (n < 1) throw GraphError("exact_ld requires at least one vertex");
  return minimum_by_size(g, 1, n, [&g] {
    return Predicate(
        [&g](std::span<const Vertex> s) { return is_locating_dominating(g, s); });
  });
}

}  // namespace cdim
