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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cdim/approx.hpp"
#include "cdim/bounds.hpp"
#include "cdim/constructions.hpp"
#include "cdim/enumeration.hpp"
#include "cdim/exact.hpp"
#include "cdim/generators.hpp"
#include "cdim/locate.hpp"
#include "oracles.hpp"

namespace cdim {
namespace {

// Collects the first failed expectation of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  const std::string& notes() const { return notes_; }

 private:
  std::string failure_;
  std::string notes_;
};

std::string str(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

bool oracle_verifies(const Graph& g, const VertexSet& s) {
  return oracle::is_centroidal_locating(oracle::floyd_warshall(g), s);
}

const std::vector<Graph>& sweep_graphs() {
  static const std::vector<Graph> graphs = connected_graphs_up_to(6);
  return graphs;
}

void ac1(Check& c) {
  const Graph p8 = path_graph(8);
  const SolveResult r = exact_cd(p8);
  c.expect(r.value == 4 && r.certified, "exact_cd(P8) != 4");
  c.expect(r.basis == VertexSet{0, 2, 5, 7}, "basis " + str(r.basis));

  const oracle::Matrix fw = oracle::floyd_warshall(p8);
  auto locating = [&](const std::vector<Vertex>& s) {
    return oracle::is_centroidal_locating(fw, s);
  };
  auto fours = oracle::all_passing(8, 4, locating);
  c.expect(fours.size() == 1 && fours[0] == VertexSet{0, 2, 5, 7},
           std::to_string(fours.size()) + " locating 4-subsets");
  c.expect(oracle::all_passing(8, 3, locating).empty(), "a 3-subset locates");

  const char* listing[] = {"0<2<5<7", "{0,2}<5<7", "2<0<5<7",   "2<5<0<7",
                           "5<2<7<0", "5<7<2<0",   "{5,7}<2<0", "7<5<2<0"};
  const DistanceMatrix dm = all_pairs_distances(p8);
  for (Vertex x = 0; x < 8; ++x) {
    const RankVector rv = rank_vector(dm, x, r.basis);
    c.expect(rv.to_string() == listing[x],
             "r(" + std::to_string(x) + ") = " + rv.to_string());
    c.expect(rv.classes() == oracle::rank_vector(fw, x, r.basis),
             "rank vector disagrees with oracle");
  }
}

void ac2(Check& c) {
  const std::uint64_t expected[] = {1, 3, 13, 75, 541, 4683};
  for (int k = 1; k <= 6; ++k) {
    const BigInt b = ordered_bell(k);
    c.expect(b == expected[k - 1], "b(" + std::to_string(k) + ")");
    c.expect(b == oracle::ordered_bell_series(k),
             "series oracle disagrees at k=" + std::to_string(k));
  }
}

void ac3(Check& c) {
  const Graph g = fig2a_graph();
  const SolveResult r = exact_cd(g);
  c.expect(g.order() == 13, "order");
  c.expect(r.value == 3 && r.certified, "exact_cd = " + std::to_string(r.value));
  c.expect(bell_lower_bound(13) == 3, "bell_lower_bound(13)");
  c.expect(oracle_verifies(g, r.basis), "basis rejected by oracle");
  c.note("basis " + str(r.basis));
}

void ac4(Check& c) {
  const ConstructedInstance d = construct_diam2(4);
  c.expect(d.graph.order() == 19, "order " + std::to_string(d.graph.order()));
  c.expect(diameter(all_pairs_distances(d.graph)) == 2, "diameter");
  c.expect(oracle_verifies(d.graph, d.basis) && d.basis.size() == 4,
           "basis does not verify");
  const SolveResult r = exact_cd(d.graph);
  c.expect(r.value == 4 && r.certified, "exact_cd = " + std::to_string(r.value));
  c.expect(bell_lower_bound(19) == 4 && diameter_lower_bound(19, 2) == 4,
           "order caps do not exclude k = 3");
  const oracle::Matrix fw = oracle::floyd_warshall(d.graph);
  const auto threes = oracle::all_passing(19, 3, [&](const std::vector<Vertex>& s) {
    return oracle::is_centroidal_locating(fw, s);
  });
  c.expect(threes.empty(), "a 3-subset locates");
  c.note("no locating 3-subset among 969");
}

void ac5(Check& c) {
  const ConstructedInstance d4 = construct_diam3(4);
  c.expect(d4.graph.order() == 51, "diam3(4) order " + std::to_string(d4.graph.order()));
  c.expect(diameter(all_pairs_distances(d4.graph)) == 3, "diam3(4) diameter");
  c.expect(d4.basis.size() == 4 && oracle_verifies(d4.graph, d4.basis),
           "diam3(4) basis");
  const ConstructedInstance d5 = construct_diam3(5);
  c.expect(d5.graph.order() == 181, "diam3(5) order " + std::to_string(d5.graph.order()));
  c.expect(d5.basis.size() == 5 && oracle_verifies(d5.graph, d5.basis),
           "diam3(5) basis");
}

void ac6(Check& c) {
  const Graph c18 = cycle_graph(18);
  const SolveResult r = exact_cd(c18);
  c.expect(r.value == 4 && r.certified, "exact_cd(C18) = " + std::to_string(r.value));
  const ConstructedInstance built = construct_cycle_basis(18);
  c.expect(built.basis.size() == 4 && oracle_verifies(c18, built.basis),
           "cycle_basis(18) " + str(built.basis));
  const auto weight = max_path_weight(c18, 100000);
  c.expect(weight && *weight == 4, "path weight of C18 is not 4");
  const StrictRootBound lb = lower_bound_paths(18, weight.value_or(4));
  c.expect(lb.value == 3.0 && lb.integer_bound == 4, "paths bound is not CD > 3");
}

void ac7(Check& c) {
  const Graph p37 = path_graph(37);
  const ConstructedInstance built = construct_path_basis(37);
  c.expect(built.basis.size() == 9 && oracle_verifies(p37, built.basis),
           "path_basis(37) " + str(built.basis));
  const StrictRootBound lb = lower_bound_paths(36, 2);
  c.expect(lb.integer_bound == 7, "tree bound gives " + std::to_string(lb.integer_bound));
  const SolveResult r = exact_cd(p37);
  c.expect(r.certified && r.value >= 7 && r.value <= 9,
           "exact_cd(P37) = " + std::to_string(r.value));
  c.expect(oracle_verifies(p37, r.basis), "exact basis rejected by oracle");
  c.note("exact value " + std::to_string(r.value) + ", nodes " +
         std::to_string(r.nodes_examined));
}

void ac8(Check& c) {
  const auto& graphs = sweep_graphs();
  c.expect(graphs.size() == 143, "sweep size " + std::to_string(graphs.size()));
  int diameter_two = 0;
  for (const Graph& g : graphs) {
    const oracle::Matrix fw = oracle::floyd_warshall(g);
    const int n = g.order();
    const int cd = exact_cd(g).value, md = exact_md(g).value, ld = exact_ld(g).value;
    const auto ocd = oracle::minimum_size(n, 1, [&](const std::vector<Vertex>& s) {
      return oracle::is_centroidal_locating(fw, s);
    });
    const auto omd = oracle::minimum_size(n, n == 1 ? 0 : 1, [&](const std::vector<Vertex>& s) {
      return oracle::is_resolving(fw, s);
    });
    const auto old = oracle::minimum_size(n, 1, [&](const std::vector<Vertex>& s) {
      return oracle::is_locating_dominating(g, s);
    });
    c.expect(ocd == cd && omd == md && old == ld, "solver disagrees with oracle");
    c.expect(md <= cd, "MD > CD");
    c.expect(cd <= 2 * ld, "CD > 2 LD");
    if (diameter(all_pairs_distances(g)) == 2) {
      ++diameter_two;
      c.expect(ld - 1 <= md, "LD - 1 > MD on a diameter-2 graph");
    }
  }
  c.note(std::to_string(graphs.size()) + " graphs, " + std::to_string(diameter_two) +
         " of diameter 2");
}

void ac9(Check& c) {
  const ExtremalFamily families[] = {
      ExtremalFamily::kComplete, ExtremalFamily::kStar, ExtremalFamily::kBipartite2,
      ExtremalFamily::kS,        ExtremalFamily::kT,    ExtremalFamily::kU};
  int extremal = 0, checked = 0;
  for (int n = 3; n <= 7; ++n) {
    std::set<std::uint64_t> expected;
    for (ExtremalFamily f : families) {
      const bool small_ok = n >= 4 || f == ExtremalFamily::kComplete ||
                            f == ExtremalFamily::kStar ||
                            f == ExtremalFamily::kBipartite2;
      if (small_ok) expected.insert(canonical_code(extremal_family(f, n).graph));
    }
    std::set<std::uint64_t> found;
    for (const Graph& g : connected_graphs(n)) {
      ++checked;
      const bool is_extremal = exact_cd(g).value == n - 1;
      if (is_extremal) found.insert(canonical_code(g));
      c.expect(recognize_extremal(g).has_value() == is_extremal,
               "recognizer disagrees at n=" + std::to_string(n));
    }
    c.expect(found == expected, "CD = n-1 class mismatch at n=" + std::to_string(n));
    extremal += static_cast<int>(found.size());
  }
  c.note(std::to_string(checked) + " graphs, " + std::to_string(extremal) +
         " with CD = n-1");
}

void ac10(Check& c) {
  std::vector<Graph> graphs;
  for (const Graph& g : sweep_graphs())
    if (g.order() >= 2) graphs.push_back(g);
  const std::size_t sweep_count = graphs.size();
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> order(2, 20);
  std::uniform_real_distribution<double> density(0.1, 0.5);
  for (int i = 0; i < 100; ++i) {
    const int n = order(rng);
    const double p = density(rng);
    graphs.push_back(random_connected_graph(n, p, rng));
  }
  double worst_ratio = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const CoverResult r = approx_cd(g);
    c.expect(oracle_verifies(g, r.basis), "approx basis rejected");
    c.expect(r.cover_basis.size() <= 2 * r.cover.size(), "|B(C)| > 2|C|");
    if (i < sweep_count) {
      const int cd = exact_cd(g).value;
      worst_ratio = std::max(worst_ratio, static_cast<double>(r.basis.size()) / cd);
      const CdSetCover h = build_cd_setcover(all_pairs_distances(g));
      const auto sc = oracle::min_set_cover(h.instance);
      c.expect(sc.has_value() && *sc <= cd * (cd - 1) / 2, "SC(H) > C(CD,2)");
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max ratio on sweep %.3f", worst_ratio);
  c.note(std::to_string(graphs.size()) + " graphs, " + buf);
}

void ac11(Check& c) {
  std::size_t sets = 0;
  for (const Graph& g : sweep_graphs()) {
    const DistanceMatrix dm = all_pairs_distances(g);
    const int ld = exact_ld(g).value;
    for (const auto& d : oracle::all_passing(g.order(), ld, [&](const std::vector<Vertex>& s) {
           return oracle::is_locating_dominating(g, s);
         })) {
      ++sets;
      const VertexSet lifted = ld_to_cd(g, d);
      c.expect(oracle_verifies(g, lifted), "lift rejected");
      c.expect(static_cast<int>(lifted.size()) <= ld + count_uniquely_dominated(g, d),
               "lift above LD + l");
      c.expect(static_cast<int>(lifted.size()) <= 2 * ld, "lift above 2 LD");
    }
  }
  c.note(std::to_string(sets) + " minimum LD sets");
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace cdim

int main() {
  using cdim::Check;
  const std::vector<cdim::Criterion> criteria = {
      {"AC1", "P8 basis, uniqueness and rank vectors", 1, cdim::ac1},
      {"AC2", "ordered Bell numbers b(1..6)", 1, cdim::ac2},
      {"AC3", "13-vertex cycle fixture is Bell-optimal", 10, cdim::ac3},
      {"AC4", "diameter-2 construction, k = 4", 30, cdim::ac4},
      {"AC5", "diameter-3 construction, k = 4 and 5", 60, cdim::ac5},
      {"AC6", "C18 bounds meet at 4", 60, cdim::ac6},
      {"AC7", "P37 basis of size 9 and exact value in [7, 9]", 600, cdim::ac7},
      {"AC8", "MD <= CD <= 2 LD sweep, n <= 6", 600, cdim::ac8},
      {"AC9", "CD = n - 1 characterization, n <= 7", 900, cdim::ac9},
      {"AC10", "greedy approximation soundness", 600, cdim::ac10},
      {"AC11", "LD to CD lift", 300, cdim::ac11},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds <= cr.limit_seconds, "exceeded time limit");
    const bool ok = check.ok();
    failed += !ok;
    std::printf("[%s] %-5s %-48s %8.3f s", ok ? "PASS" : "FAIL", cr.id, cr.title,
                seconds);
    if (!ok) std::printf("  (%s)", check.failure().c_str());
    if (!check.notes().empty()) std::printf("  [%s]", check.notes().c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
