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

#ifndef CDIM_EDGE_LIST_HPP_
#define CDIM_EDGE_LIST_HPP_

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cdim/graph.hpp"

namespace cdim {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text format:
//   # comment lines (and trailing comments) are ignored
//   n <count>        optional, first non-comment line; declares isolated
//                    vertices
//   u v              one edge per line, decimal ids
// Without a header, n = 1 + max id seen.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Always emits the "n <count>" header so isolated vertices round-trip.
std::string serialize_edge_list(const Graph& g);

// Basis sidecar: one decimal vertex id per line, '#' comments allowed.
VertexSet parse_vertex_list(std::istream& in);
VertexSet parse_vertex_list(std::string_view text);
std::string serialize_vertex_list(const VertexSet& vertices);

Graph read_edge_list_file(const std::string& path);
VertexSet read_vertex_list_file(const std::string& path);

}  // namespace cdim

#endif  // CDIM_EDGE_LIST_HPP_
