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

#include "cdim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cdim/locate.hpp"

namespace cdim {
namespace {

BigInt power(int base, int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigInt binomial(int n, int k) {
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

class PathCounter {
 public:
  PathCounter(const Graph& g, Vertex target, std::int64_t budget)
      : g_(g), target_(target), budget_(budget), on_path_(g.order(), 0) {}

  PathMultiplicity run(Vertex source) {
    on_path_[source] = 1;
    visit(source, 0);
    return result_;
  }

 private:
  void visit(Vertex u, int length) {
    if (result_.overflow) return;
    if (u == target_) {
      (length % 2 ? result_.odd : result_.even) += 1;
      if (result_.odd + result_.even > budget_) result_.overflow = true;
      return;
    }
    for (Vertex w : g_.neighbors(u)) {
      if (on_path_[w]) continue;
      if (++steps_ > 64 * budget_) {
        result_.overflow = true;
        return;
      }
      on_path_[w] = 1;
      visit(w, length + 1);
      on_path_[w] = 0;
      if (result_.overflow) return;
    }
  }

  const Graph& g_;
  Vertex target_;
  std::int64_t budget_;
  std::int64_t steps_ = 0;
  std::vector<char> on_path_;
  PathMultiplicity result_;
};

BoundEntry entry(std::string name, BoundKind kind,
                 std::optional<std::int64_t> value, bool applicable,
                 std::string anchor) {
  return {std::move(name), kind, value, applicable, std::move(anchor)};
}

}  // namespace

BigInt ordered_bell(int k) {
  if (k < 0) throw std::invalid_argument("ordered_bell: k must be >= 0");
  std::vector<BigInt> b(k + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    BigInt sum = 0;
    for (int i = 1; i <= m; ++i) sum += binomial(m, i) * b[m - i];
    b[m] = sum;
  }
  return b[k];
}

int bell_lower_bound(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("bell_lower_bound: n must be >= 1");
  int k = 1;
  while (ordered_bell(k) < n) ++k;
  return k;
}

OrderCaps order_cap_diam(int diameter, int k) {
  if (diameter < 1 || k < 1) {
    throw std::invalid_argument("order_cap_diam: D and k must be >= 1");
  }
  OrderCaps caps;
  caps.power = k + power(diameter, k);
  caps.tightest = caps.power;
  if (diameter >= 2) {
    BigInt sum = 0;
    for (int i = 1; i <= (diameter + 2) / 3; ++i) sum += power(2 * i - 1, k - 1);
    caps.general = power(2 * diameter / 3 + 1, k) + k * sum;
    caps.tightest = std::min(caps.tightest, *caps.general);
  }
  if (diameter == 2) {
    caps.small = power(2, k) + k - 1;
  } else if (diameter == 3 && k >= 5) {
    caps.small = power(3, k) - power(2, k + 1) + 2;
  }
  if (caps.small) caps.tightest = std::min(caps.tightest, *caps.small);
  return caps;
}

int diameter_lower_bound(std::int64_t n, int diameter) {
  int k = 1;
  while (order_cap_diam(diameter, k).tightest < n) ++k;
  return k;
}

StrictRootBound lower_bound_paths(std::int64_t edges, std::int64_t k_paths) {
  if (edges < 1 || k_paths < 1) {
    throw std::invalid_argument("lower_bound_paths: m and k must be >= 1");
  }
  StrictRootBound b;
  b.numerator = 2 * edges;
  b.denominator = k_paths;
  b.value = std::sqrt(static_cast<double>(b.numerator) /
                      static_cast<double>(b.denominator));
  std::int64_t c = static_cast<std::int64_t>(b.value);
  while (c > 0 && (c - 1) * (c - 1) * k_paths > b.numerator) --c;
  while (c * c * k_paths <= b.numerator) ++c;
  b.integer_bound = static_cast<int>(c);
  return b;
}

PathMultiplicity path_multiplicity(const Graph& g, Vertex u, Vertex v,
                                   std::int64_t budget) {
  return PathCounter(g, v, budget).run(u);
}

std::optional<std::int64_t> max_path_weight(const Graph& g,
                                            std::int64_t budget) {
  std::int64_t best = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      auto pm = path_multiplicity(g, u, v, budget);
      if (pm.overflow) return std::nullopt;
      best = std::max(best, pm.weight());
    }
  return best;
}

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kLower: return "lower";
    case BoundKind::kUpper: return "upper";
    case BoundKind::kValue: return "value";
    case BoundKind::kRelation: return "relation";
    case BoundKind::kNote: return "note";
  }
  return "note";
}

const BoundEntry* BoundsReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

int BoundsReport::best_lower() const {
  int best = 0;
  for (const auto& e : entries)
    if (e.applicable && e.kind == BoundKind::kLower && e.value)
      best = std::max<int>(best, static_cast<int>(*e.value));
  return best;
}

int BoundsReport::best_upper() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& e : entries)
    if (e.applicable && e.kind == BoundKind::kUpper && e.value)
      best = std::min<int>(best, static_cast<int>(*e.value));
  return best;
}

bool BoundsReport::consistent_with(int cd) const {
  for (const auto& e : entries) {
    if (!e.applicable || !e.value) continue;
    if (e.kind == BoundKind::kLower && *e.value > cd) return false;
    if (e.kind == BoundKind::kUpper && *e.value < cd) return false;
    if (e.kind == BoundKind::kRelation && *e.value == 0) return false;
  }
  return true;
}

BoundsReport bounds_report(const Graph& g, const KnownValues& known,
                           std::int64_t path_budget) {
  require_connected(g, "bounds_report");
  const int n = g.order();
  if (n < 1) throw GraphError("bounds_report requires at least one vertex");
  const DistanceMatrix dm = all_pairs_distances(g);
  const int diam = diameter(dm);
  BoundsReport r;

  r.entries.push_back(entry("bell", BoundKind::kLower, bell_lower_bound(n),
                            true, "ordered partitions of the basis: n <= b(k)"));
  r.entries.push_back(entry("asymptotic", BoundKind::kNote, std::nullopt, false,
                            "asymptotic form, see Bell bound"));

  const bool has_diam = diam >= 1;
  auto invert = [&](auto cap_of) {
    int k = 1;
    while (cap_of(k) < n) ++k;
    return k;
  };
  r.entries.push_back(entry(
      "diameter_power", BoundKind::kLower,
      has_diam ? std::optional<std::int64_t>(invert([&](int k) {
        return order_cap_diam(diam, k).power;
      }))
               : std::nullopt,
      has_diam, "n <= k + D^k"));
  r.entries.push_back(entry(
      "diameter_general", BoundKind::kLower,
      diam >= 2 ? std::optional<std::int64_t>(invert([&](int k) {
        return *order_cap_diam(diam, k).general;
      }))
                : std::nullopt,
      diam >= 2,
      "n <= (floor(2D/3)+1)^k + k * sum_{i<=ceil(D/3)} (2i-1)^(k-1)"));
  const bool small_diam = diam == 2 || diam == 3;
  r.entries.push_back(entry(
      "diameter_small", BoundKind::kLower,
      small_diam ? std::optional<std::int64_t>(diameter_lower_bound(n, diam))
                 : std::nullopt,
      small_diam, "n <= 2^k + k - 1 (D=2); n <= 3^k - 2^(k+1) + 2 (D=3, k>=5)"));

  std::optional<std::int64_t> path_lb;
  std::optional<std::int64_t> weight;
  if (g.size() >= 1) weight = max_path_weight(g, path_budget);
  if (weight && *weight >= 1) {
    path_lb = lower_bound_paths(g.size(), *weight).integer_bound;
  }
  r.entries.push_back(entry("paths", BoundKind::kLower, path_lb,
                            path_lb.has_value(),
                            "CD > sqrt(2m/k) with 2k_even + k_odd <= k"));
  r.entries.push_back(entry("path_weight", BoundKind::kNote, weight, false,
                            "max over pairs of 2k_even + k_odd"));

  const bool branching = g.max_degree() >= 2;
  r.entries.push_back(entry("order", BoundKind::kUpper,
                            branching ? n - 1 : n, true,
                            branching ? "V minus a vertex of degree >= 2"
                                      : "max degree <= 1 forces CD = n"));

  std::optional<int> ld = known.ld;
  if (!ld && known.ld_set && is_locating_dominating(g, *known.ld_set)) {
    ld = static_cast<int>(known.ld_set->size());
  }
  r.entries.push_back(entry("ld_double", BoundKind::kUpper,
                            ld ? std::optional<std::int64_t>(2 * *ld)
                               : std::nullopt,
                            ld.has_value(), "CD <= 2 LD"));

  std::optional<std::int64_t> lift;
  if (known.ld_set && is_locating_dominating(g, *known.ld_set)) {
    std::vector<char> in_set(n, 0);
    for (Vertex v : *known.ld_set) in_set[v] = 1;
    std::int64_t uniquely = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (in_set[v]) continue;
      int hits = 0;
      for (Vertex u : g.neighbors(v)) hits += in_set[u];
      uniquely += hits == 1;
    }
    lift = static_cast<std::int64_t>(known.ld_set->size()) + uniquely;
  }
  r.entries.push_back(entry("ld_lift", BoundKind::kUpper, lift,
                            lift.has_value(),
                            "CD <= |D| + l, l = outside vertices with one "
                            "dominator"));

  r.entries.push_back(entry("md", BoundKind::kLower,
                            known.md ? std::optional<std::int64_t>(*known.md)
                                     : std::nullopt,
                            known.md.has_value(), "MD <= CD"));

  const bool chain = diam == 2 && known.ld && known.md;
  r.entries.push_back(entry(
      "diameter2_ld_md", BoundKind::kRelation,
      chain ? std::optional<std::int64_t>(*known.ld - 1 <= *known.md)
            : std::nullopt,
      chain, "diameter 2: LD - 1 <= MD"));

  if (known.approx_cd) {
    r.entries.push_back(entry("approx", BoundKind::kUpper, *known.approx_cd,
                              true, "greedy set-cover basis"));
  }
  if (known.exact_cd) {
    r.entries.push_back(entry("exact", BoundKind::kValue, *known.exact_cd, true,
                              "exhaustive search"));
  }
  return r;
}

}  // namespace cdim
