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

#include "cdim_cli/commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cdim/approx.hpp"
#include "cdim/bounds.hpp"
#include "cdim/constructions.hpp"
#include "cdim/edge_list.hpp"
#include "cdim/enumeration.hpp"
#include "cdim/exact.hpp"
#include "cdim/generators.hpp"
#include "cdim/locate.hpp"
#include "json.hpp"

namespace cdim::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::vector<std::string> command;
  std::ostream& out;
  std::ostream& err;
  Clock::time_point start = Clock::now();
};

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw InputError(std::string("invalid ") + what + ": '" + text + "'");
  }
}

json set_json(const VertexSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

std::string join(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw InputError("failed writing '" + path + "'");
}

void emit_report(Context& ctx, const std::string& digest, json results,
                 json counters) {
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - ctx.start).count();
  json report = {
      {"command", ctx.command},
      {"input_digest", digest},
      {"results", std::move(results)},
      {"wall_time_ms", ms},
      {"counters", std::move(counters)},
  };
  ctx.out << report.dump(2) << '\n';
}

std::string graph_digest(const Graph& g) {
  return sha256_hex(serialize_edge_list(g));
}

// ---- gen -------------------------------------------------------------------

struct GenOptions {
  std::vector<std::string> spec;
  std::string output;
  std::string basis_output;
  bool json = false;
};

std::optional<ConstructedInstance> build_construction(
    const std::vector<std::string>& spec) {
  const std::string& name = spec[0];
  auto one_int = [&](const char* what) {
    if (spec.size() != 2) throw InputError(name + " takes one parameter");
    return parse_int(spec[1], what);
  };
  if (name == "diam2") return construct_diam2(one_int("k"));
  if (name == "diam3") return construct_diam3(one_int("k"));
  if (name == "cycle-basis") return construct_cycle_basis(one_int("n"));
  if (name == "path-basis") return construct_path_basis(one_int("n"));
  if (name == "extremal") {
    if (spec.size() != 3) throw InputError("extremal takes <family> <n>");
    auto family = parse_extremal_family(spec[1]);
    if (!family) throw InputError("unknown extremal family '" + spec[1] + "'");
    return extremal_family(*family, parse_int(spec[2], "n"));
  }
  if (name == "fig2a" || name == "fig2b") {
    if (spec.size() != 1) throw InputError(name + " takes no parameters");
    for (auto& f : fig2_fixtures())
      if (f.provenance == name) return f;
  }
  return std::nullopt;
}

int cmd_gen(Context& ctx, const GenOptions& opt) {
  Graph g;
  std::optional<ConstructedInstance> built = build_construction(opt.spec);
  if (built) {
    g = built->graph;
  } else {
    std::vector<int> params;
    for (std::size_t i = 1; i < opt.spec.size(); ++i)
      params.push_back(parse_int(opt.spec[i], "parameter"));
    g = generate(opt.spec[0], params);
  }

  const std::string edges = serialize_edge_list(g);
  std::string basis_path = opt.basis_output;
  if (built && basis_path.empty() && !opt.output.empty()) {
    basis_path = opt.output + ".basis";
  }
  if (!opt.output.empty()) write_file(opt.output, edges);
  if (built && !basis_path.empty()) {
    write_file(basis_path, serialize_vertex_list(built->basis));
  }

  if (opt.json) {
    json results = {{"family", opt.spec[0]}, {"n", g.order()}, {"m", g.size()}};
    if (opt.output.empty()) results["edge_list"] = edges;
    else results["output"] = opt.output;
    if (built) {
      results["basis"] = set_json(built->basis);
      results["raw_basis"] = set_json(built->raw_basis);
      results["claimed_cd"] = {built->claimed_low, built->claimed_high};
      results["provenance"] = built->provenance;
      results["quarantined"] = built->quarantined;
      if (!basis_path.empty()) results["basis_output"] = basis_path;
    }
    emit_report(ctx, sha256_hex(edges), results, json::object());
  } else if (opt.output.empty()) {
    ctx.out << edges;
    if (built) ctx.out << "# basis " << join(built->basis) << '\n';
  } else {
    ctx.out << "wrote " << opt.output << " (n=" << g.order()
            << ", m=" << g.size() << ")";
    if (built && !basis_path.empty()) {
      ctx.out << " and " << basis_path << " (" << built->basis.size()
              << " vertices)";
    }
    ctx.out << '\n';
  }
  return built && built->quarantined ? kExitViolation : kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string graph;
  std::string basis;
  bool rank_vectors = false;
  bool json = false;
};

int cmd_verify(Context& ctx, const VerifyOptions& opt) {
  const Graph g = read_edge_list_file(opt.graph);
  const VertexSet basis =
      make_vertex_set(read_vertex_list_file(opt.basis), g.order());
  if (basis.empty()) throw InputError("basis file lists no vertices");
  if (!g.is_connected()) throw InputError("graph is not connected");
  const DistanceMatrix dm = all_pairs_distances(g);
  const LocatingCheck check = check_centroidal_locating(dm, basis);

  std::vector<std::string> vectors;
  if (opt.rank_vectors) {
    for (Vertex x = 0; x < g.order(); ++x)
      vectors.push_back(rank_vector(dm, x, basis).to_string());
  }
  if (opt.json) {
    json results = {{"valid", check.locating}, {"basis", set_json(basis)}};
    if (check.witness) {
      results["witness"] = {check.witness->first, check.witness->second};
    }
    if (opt.rank_vectors) results["rank_vectors"] = vectors;
    emit_report(ctx, graph_digest(g), results, json::object());
  } else {
    if (check.locating) {
      ctx.out << "valid\n";
    } else {
      ctx.out << "invalid: vertices " << check.witness->first << " and "
              << check.witness->second << " share a rank vector\n";
    }
    for (std::size_t x = 0; x < vectors.size(); ++x)
      ctx.out << "r(" << x << ") = " << vectors[x] << '\n';
  }
  return check.locating ? kExitOk : kExitViolation;
}

// ---- cd --------------------------------------------------------------------

struct CdOptions {
  std::string mode;
  std::string graph;
  std::optional<int> size_cap;
  int threads = 1;
  bool no_pruning = false;
  bool json = false;
  std::int64_t budget = 100000;
};

json bounds_json(const BoundsReport& report) {
  json out = json::object();
  for (const auto& e : report.entries) {
    out[e.name] = {{"kind", to_string(e.kind)},
                   {"value", e.value ? json(*e.value) : json(nullptr)},
                   {"applicable", e.applicable},
                   {"anchor", e.anchor}};
  }
  return out;
}

void print_bounds(std::ostream& out, const BoundsReport& report) {
  for (const auto& e : report.entries) {
    out << "  " << std::left << std::setw(18) << e.name << std::setw(9)
        << to_string(e.kind) << std::setw(8)
        << (e.value ? std::to_string(*e.value) : std::string("-"))
        << (e.applicable ? "" : "(n/a) ") << e.anchor << '\n';
  }
}

int cmd_cd(Context& ctx, const CdOptions& opt) {
  const Graph g = read_edge_list_file(opt.graph);
  if (!g.is_connected()) throw InputError("graph is not connected");
  if (g.order() < 1) throw InputError("graph has no vertices");

  if (opt.mode == "exact") {
    ExactOptions eo;
    eo.size_cap = opt.size_cap;
    eo.threads = opt.threads;
    eo.use_pruning = !opt.no_pruning;
    const SolveResult r = exact_cd(g, eo);
    if (opt.json) {
      json results = {{"mode", "exact"},
                      {"value", r.value},
                      {"basis", set_json(r.basis)},
                      {"certified", r.certified}};
      emit_report(ctx, graph_digest(g), results,
                  {{"nodes_examined", r.nodes_examined}});
    } else {
      ctx.out << "cd " << r.value << (r.certified ? "" : " (uncertified)")
              << "\nbasis " << join(r.basis) << "\nnodes_examined "
              << r.nodes_examined << '\n';
    }
    return kExitOk;
  }

  if (g.order() < 2) throw InputError("approx mode needs at least 2 vertices");
  const CoverResult r = approx_cd(g);
  const DistanceMatrix dm = all_pairs_distances(g);
  const bool valid = is_centroidal_locating(dm, r.basis);
  KnownValues known;
  known.approx_cd = static_cast<int>(r.basis.size());
  const BoundsReport bounds = bounds_report(g, known, opt.budget);
  if (opt.json) {
    json trace = json::array();
    for (const auto& s : r.greedy_trace)
      trace.push_back({{"pair", {s.detectors.a, s.detectors.b}},
                       {"newly_covered", s.newly_covered}});
    json results = {{"mode", "approx"},
                    {"value", r.basis.size()},
                    {"basis", set_json(r.basis)},
                    {"cover_size", r.cover.size()},
                    {"cover_basis", set_json(r.cover_basis)},
                    {"used_fallback", r.used_fallback},
                    {"valid", valid},
                    {"greedy_trace", trace},
                    {"bounds", bounds_json(bounds)}};
    emit_report(ctx, graph_digest(g), results,
                {{"greedy_steps", r.greedy_trace.size()}});
  } else {
    ctx.out << "approx_cd " << r.basis.size() << (valid ? "" : " (INVALID)")
            << "\nbasis " << join(r.basis) << "\ncover " << r.cover.size()
            << " pairs, cover basis " << r.cover_basis.size() << " vertices"
            << (r.used_fallback ? ", trivial set used" : "") << '\n';
    for (const auto& s : r.greedy_trace)
      ctx.out << "  pick {" << s.detectors.a << "," << s.detectors.b
              << "} covers " << s.newly_covered << '\n';
    ctx.out << "bounds\n";
    print_bounds(ctx.out, bounds);
  }
  return valid ? kExitOk : kExitViolation;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsOptions {
  std::string graph;
  std::int64_t budget = 100000;
  bool with_exact = false;
  bool json = false;
};

int cmd_bounds(Context& ctx, const BoundsOptions& opt) {
  const Graph g = read_edge_list_file(opt.graph);
  if (!g.is_connected()) throw InputError("graph is not connected");
  if (g.order() < 1) throw InputError("graph has no vertices");
  KnownValues known;
  if (opt.with_exact) {
    known.exact_cd = exact_cd(g).value;
    known.md = exact_md(g).value;
    SolveResult ld = exact_ld(g);
    known.ld = ld.value;
    known.ld_set = ld.basis;
  }
  const BoundsReport report = bounds_report(g, known, opt.budget);
  const bool consistent = !known.exact_cd || report.consistent_with(*known.exact_cd);
  if (opt.json) {
    json results = {{"bounds", bounds_json(report)},
                    {"best_lower", report.best_lower()},
                    {"best_upper", report.best_upper()},
                    {"consistent", consistent}};
    emit_report(ctx, graph_digest(g), results, json::object());
  } else {
    print_bounds(ctx.out, report);
    ctx.out << "best lower " << report.best_lower() << ", best upper "
            << report.best_upper() << '\n';
    if (!consistent) ctx.out << "INCONSISTENT with exact value\n";
  }
  return consistent ? kExitOk : kExitViolation;
}

// ---- sweep -----------------------------------------------------------------

struct SweepOptions {
  int max_n = 0;
  int sample = 0;
  int n = 12;
  double p = 0.3;
  std::uint64_t seed = 1;
  bool only_extremal = false;
  std::int64_t budget = 100000;
  bool json = false;
  std::string output;
};

int cmd_sweep(Context& ctx, const SweepOptions& opt) {
  std::vector<Graph> graphs;
  if (opt.sample > 0) {
    if (opt.n < 1 || opt.n > 24) throw InputError("--n must be in [1, 24]");
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.sample; ++i)
      graphs.push_back(random_connected_graph(opt.n, opt.p, rng));
  } else {
    if (opt.max_n < 1) throw InputError("sweep needs max_n >= 1 or --sample");
    if (opt.max_n > 7) {
      throw InputError("max_n above 7 is refused; use --sample for larger n");
    }
    graphs = connected_graphs_up_to(opt.max_n);
  }

  std::ostringstream csv;
  csv << csv_header() << '\n';
  std::vector<std::string> violations;
  std::string all_edges;
  json rows = json::array();
  int emitted = 0;
  for (const Graph& g : graphs) {
    all_edges += serialize_edge_list(g);
    std::vector<std::string> local;
    SweepRow row = sweep_graph(g, opt.budget, local);
    for (auto& v : local) violations.push_back(std::move(v));
    if (opt.only_extremal && !(row.n >= 3 && row.cd == row.n - 1)) continue;
    ++emitted;
    csv << to_csv(row) << '\n';
    rows.push_back({{"n", row.n},
                    {"m", row.m},
                    {"diameter", row.diameter},
                    {"md", row.md},
                    {"cd", row.cd},
                    {"ld", row.ld},
                    {"bell_lb", row.bell_lb},
                    {"path_lb", row.path_lb ? json(*row.path_lb) : json(nullptr)},
                    {"family", row.family},
                    {"approx_cd", row.approx_cd},
                    {"ratio", row.ratio}});
  }
  for (const auto& v : violations) ctx.err << "violation: " << v << '\n';
  if (!opt.output.empty()) write_file(opt.output, csv.str());

  if (opt.json) {
    json results = {{"rows", rows}, {"violations", violations}};
    emit_report(ctx, sha256_hex(all_edges), results,
                {{"graphs", graphs.size()},
                 {"rows", emitted},
                 {"violations", violations.size()}});
  } else if (opt.output.empty()) {
    ctx.out << csv.str();
  } else {
    ctx.out << "wrote " << emitted << " rows to " << opt.output << ", "
            << violations.size() << " violations\n";
  }
  return violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[i]);
  return hex.str();
}

SweepRow sweep_graph(const Graph& g, std::int64_t path_budget,
                     std::vector<std::string>& violations) {
  SweepRow row;
  row.n = g.order();
  row.m = g.size();
  const DistanceMatrix dm = all_pairs_distances(g);
  row.diameter = diameter(dm);
  const std::string tag = "[" + std::to_string(row.n) + " vertices: " +
                          [&] {
                            std::string s;
                            for (const Edge& e : g.edges())
                              s += std::to_string(e.u) + "-" +
                                   std::to_string(e.v) + " ";
                            return s;
                          }() +
                          "] ";
  auto fail = [&](const std::string& what) { violations.push_back(tag + what); };

  const SolveResult cd = exact_cd(g);
  const SolveResult md = exact_md(g);
  const SolveResult ld = exact_ld(g);
  row.cd = cd.value;
  row.md = md.value;
  row.ld = ld.value;
  row.bell_lb = bell_lower_bound(row.n);

  if (row.md > row.cd) fail("MD > CD");
  if (row.cd > 2 * row.ld) fail("CD > 2 LD");
  if (row.diameter == 2 && row.ld - 1 > row.md) fail("LD - 1 > MD at diameter 2");
  if ((row.cd == row.n) != (g.max_degree() <= 1)) fail("CD = n mismatch");

  if (row.n >= 3) {
    auto family = recognize_extremal(g);
    if (family) row.family = to_string(*family);
    if ((row.cd == row.n - 1) != family.has_value()) {
      fail("CD = n - 1 disagrees with the extremal recognizer");
    }
  }

  if (row.n >= 2) {
    const CoverResult approx = approx_cd(g);
    row.approx_cd = static_cast<int>(approx.basis.size());
    if (!is_centroidal_locating(dm, approx.basis)) fail("approx basis invalid");
    if (approx.cover_basis.size() > 2 * approx.cover.size()) {
      fail("|B(C)| > 2|C|");
    }
    const VertexSet lifted = ld_to_cd(g, ld.basis);
    if (!is_centroidal_locating(dm, lifted)) fail("LD lift invalid");
    const int lift_limit = row.ld + count_uniquely_dominated(g, ld.basis);
    if (static_cast<int>(lifted.size()) > lift_limit) fail("LD lift above LD + l");
    if (static_cast<int>(lifted.size()) > 2 * row.ld) fail("LD lift above 2 LD");
  } else {
    row.approx_cd = row.cd;
  }
  row.ratio = static_cast<double>(row.approx_cd) / row.cd;

  KnownValues known;
  known.exact_cd = row.cd;
  known.approx_cd = row.approx_cd;
  known.md = row.md;
  known.ld = row.ld;
  known.ld_set = ld.basis;
  const BoundsReport report = bounds_report(g, known, path_budget);
  if (const BoundEntry* paths = report.find("paths"); paths && paths->value) {
    row.path_lb = static_cast<int>(*paths->value);
  }
  if (!report.consistent_with(row.cd)) fail("bounds report inconsistent");
  return row;
}

std::string csv_header() {
  return "n,m,diameter,md,cd,ld,bell_lb,path_lb,family,approx_cd,ratio";
}

std::string to_csv(const SweepRow& row) {
  std::string family = row.family;
  if (family.find(',') != std::string::npos) family = '"' + family + '"';
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.3f", row.ratio);
  std::ostringstream s;
  s << row.n << ',' << row.m << ',' << row.diameter << ',' << row.md << ','
    << row.cd << ',' << row.ld << ',' << row.bell_lb << ','
    << (row.path_lb ? std::to_string(*row.path_lb) : std::string("-")) << ','
    << family << ',' << row.approx_cd << ',' << ratio;
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Centroidal dimension toolkit", "cdim"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand(
      "gen", "Write a graph family or construction as an edge list");
  gen->add_option("spec", gen_opt.spec,
                  "Family and parameters, e.g. 'path 8', 'diam3 4', "
                  "'extremal T_n 6', 'fig2b'")
      ->required();
  gen->add_option("-o,--output", gen_opt.output, "Edge-list output path");
  gen->add_option("--basis-output", gen_opt.basis_output,
                  "Basis sidecar path (default <output>.basis)");
  gen->add_flag("--json", gen_opt.json, "Print a JSON run report");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Check a centroidal locating set");
  verify->add_option("graph", verify_opt.graph, "Edge-list file")->required();
  verify->add_option("basis", verify_opt.basis, "Basis sidecar file")->required();
  verify->add_flag("--rank-vectors", verify_opt.rank_vectors,
                   "Print every rank vector");
  verify->add_flag("--json", verify_opt.json, "Print a JSON run report");

  CdOptions cd_opt;
  auto* cd = app.add_subcommand("cd", "Centroidal dimension, exact or greedy");
  cd->add_option("mode", cd_opt.mode, "exact or approx")
      ->required()
      ->check(CLI::IsMember({"exact", "approx"}));
  cd->add_option("graph", cd_opt.graph, "Edge-list file")->required();
  cd->add_option("--size-cap", cd_opt.size_cap, "Largest size searched")
      ->check(CLI::PositiveNumber);
  cd->add_option("--threads", cd_opt.threads, "Search workers")
      ->check(CLI::Range(1, 256));
  cd->add_flag("--no-pruning", cd_opt.no_pruning, "Disable forced constraints");
  cd->add_option("--budget", cd_opt.budget, "Path enumeration budget")
      ->check(CLI::PositiveNumber);
  cd->add_flag("--json", cd_opt.json, "Print a JSON run report");

  BoundsOptions bounds_opt;
  auto* bounds = app.add_subcommand("bounds", "Report every applicable bound");
  bounds->add_option("graph", bounds_opt.graph, "Edge-list file")->required();
  bounds->add_option("--budget", bounds_opt.budget, "Path enumeration budget")
      ->check(CLI::PositiveNumber);
  bounds->add_flag("--exact", bounds_opt.with_exact,
                   "Also compute CD, MD and LD exactly and cross-check");
  bounds->add_flag("--json", bounds_opt.json, "Print a JSON run report");

  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand(
      "sweep", "Check invariants over all small connected graphs or samples");
  sweep->add_option("max_n", sweep_opt.max_n, "Largest order (at most 7)");
  sweep->add_option("--sample", sweep_opt.sample,
                    "Random connected graphs instead of enumeration")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--n", sweep_opt.n, "Order of sampled graphs");
  sweep->add_option("--p", sweep_opt.p, "Edge probability of sampled graphs")
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--seed", sweep_opt.seed, "Sampler seed");
  sweep->add_flag("--only-extremal", sweep_opt.only_extremal,
                  "Emit only rows with CD = n - 1");
  sweep->add_option("--budget", sweep_opt.budget, "Path enumeration budget")
      ->check(CLI::PositiveNumber);
  sweep->add_option("-o,--output", sweep_opt.output, "CSV output path");
  sweep->add_flag("--json", sweep_opt.json, "Print a JSON run report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Context ctx{args, out, err};
  try {
    if (*gen) return cmd_gen(ctx, gen_opt);
    if (*verify) return cmd_verify(ctx, verify_opt);
    if (*cd) return cmd_cd(ctx, cd_opt);
    if (*bounds) return cmd_bounds(ctx, bounds_opt);
    if (*sweep) return cmd_sweep(ctx, sweep_opt);
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace cdim::cli
