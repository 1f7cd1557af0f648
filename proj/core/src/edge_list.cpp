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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace cdim {
namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  return line;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

Vertex parse_id(std::string_view token, int line) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "malformed integer '" + std::string(token) + "'");
  }
  if (value < 0) {
    throw ParseError(line, "negative vertex id " + std::string(token));
  }
  if (value > std::numeric_limits<Vertex>::max() / 2) {
    throw ParseError(line, "vertex id too large: " + std::string(token));
  }
  return static_cast<Vertex>(value);
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

Graph parse_edge_list(std::istream& in) {
  std::optional<int> declared;
  std::vector<Edge> edges;
  Vertex max_id = -1;
  bool seen_content = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = split_ws(strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens[0] == "n") {
      if (seen_content) {
        throw ParseError(line_no, "'n' header must precede all edges");
      }
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      declared = parse_id(tokens[1], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'u v', got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    Vertex u = parse_id(tokens[0], line_no);
    Vertex v = parse_id(tokens[1], line_no);
    if (u == v) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    }
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError(line_no, "vertex id exceeds declared n=" +
                                    std::to_string(*declared));
    }
    max_id = std::max({max_id, u, v});
    edges.push_back({u, v});
  }
  int n = declared ? *declared : max_id + 1;
  return Graph(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

VertexSet parse_vertex_list(std::istream& in) {
  std::vector<Vertex> ids;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    for (auto token : split_ws(strip_comment(raw))) {
      ids.push_back(parse_id(token, line_no));
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

VertexSet parse_vertex_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_vertex_list(in);
}

std::string serialize_vertex_list(const VertexSet& vertices) {
  std::ostringstream out;
  for (Vertex v : vertices) out << v << '\n';
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_edge_list(in);
}

VertexSet read_vertex_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open basis file '" + path + "'");
  return parse_vertex_list(in);
}

}  // namespace cdim
