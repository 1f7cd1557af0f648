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

#include "cdim/edge_list.hpp"

#include <gtest/gtest.h>

#include "cdim/generators.hpp"

namespace cdim {
namespace {

TEST(EdgeListTest, RoundTripsWithIsolatedVertices) {
  const std::vector<Edge> edges = {{0, 2}, {2, 3}};
  Graph g(5, edges);
  std::string text = serialize_edge_list(g);
  EXPECT_EQ(text, "n 5\n0 2\n2 3\n");
  EXPECT_EQ(parse_edge_list(text), g);
}

TEST(EdgeListTest, CommentsAndImplicitOrder) {
  Graph g = parse_edge_list("# a path\n0 1  # first\n\n1 2\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2);
}

TEST(EdgeListTest, RoundTripsGeneratedFamilies) {
  for (const Graph& g : {path_graph(9), cycle_graph(12), complete_graph(6),
                         hypercube_graph(4), fig2a_graph()}) {
    EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  }
}

TEST(EdgeListTest, ReportsLineNumbers) {
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_edge_list("1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("-1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 3\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1\nn 3\n"), ParseError);
}

TEST(VertexListTest, ParsesAndSerializes) {
  VertexSet s = parse_vertex_list("# basis\n7\n0\n5\n2\n");
  EXPECT_EQ(s, (VertexSet{0, 2, 5, 7}));
  EXPECT_EQ(parse_vertex_list(serialize_vertex_list(s)), s);
  EXPECT_THROW(parse_vertex_list("3\nx\n"), ParseError);
  EXPECT_EQ(parse_vertex_list("3 4\n"), (VertexSet{3, 4}));
}

TEST(EdgeListTest, MissingFileThrows) {
  EXPECT_ANY_THROW(read_edge_list_file("/nonexistent/graph.txt"));
}

}  // namespace
}  // namespace cdim
