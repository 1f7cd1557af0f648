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

#include "cdim/enumeration.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cdim/generators.hpp"

namespace cdim {
namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), edges);
}

TEST(EnumerationTest, ConnectedGraphCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto graphs = connected_graphs(n);
    EXPECT_EQ(graphs.size(), expected[n - 1]) << "n=" << n;
    std::set<std::uint64_t> codes;
    for (const Graph& g : graphs) {
      ASSERT_TRUE(g.is_connected());
      codes.insert(canonical_code(g));
    }
    EXPECT_EQ(codes.size(), graphs.size());
  }
  EXPECT_EQ(connected_graphs_up_to(6).size(), 143u);
  EXPECT_THROW(connected_graphs(0), GraphError);
}

TEST(CanonicalCodeTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 9;
    Graph g = random_connected_graph(n, 0.4, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(canonical_code(g), canonical_code(relabel(g, perm)));
    ASSERT_EQ(canonical_code(decode_canonical(n, canonical_code(g))),
              canonical_code(g));
  }
}

TEST(CanonicalCodeTest, DistinguishesNonIsomorphic) {
  EXPECT_NE(canonical_code(path_graph(4)), canonical_code(star_graph(4)));
  EXPECT_NE(canonical_code(cycle_graph(6)),
            canonical_code(complete_bipartite_graph(3, 3)));
  EXPECT_THROW(canonical_code(path_graph(12)), GraphError);
}

TEST(RandomGraphTest, DeterministicAndConnected) {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 10; ++i) {
    Graph x = random_connected_graph(15, 0.2, a);
    Graph y = random_connected_graph(15, 0.2, b);
    EXPECT_EQ(x, y);
    EXPECT_TRUE(x.is_connected());
  }
  std::mt19937_64 rng(1);
  EXPECT_THROW(random_connected_graph(5, 0.0, rng, 10), GraphError);
  EXPECT_THROW(random_connected_graph(5, 1.5, rng), GraphError);
}

}  // namespace
}  // namespace cdim
