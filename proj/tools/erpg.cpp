// Copyright 2026 The erpg Authors.
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

// erpg: build and verify cocliques of Erdos-Renyi polarity graphs, export
// ER_q, run the exact independence solver, print orbit censuses and bound
// tables.
//
// Exit codes: 0 ok, 1 internal error, 2 bad arguments or q out of scope,
// 3 a verification check failed, 4 a solver result violates a known bound.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "erpg/erpg.hpp"

namespace {

using namespace erpg;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitBound = 4;

constexpr std::uint64_t kDefaultBudgetNodes = 100'000'000;

/// Argument problems detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool timing = false;
};

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json result = Json::object();
  std::vector<std::string> outputs;
};

void emit_report(const Options& opt, Report& r, double seconds) {
  if (!opt.json) return;
  Json j;
  j["format"] = "erpg-run-report";
  j["version"] = "v1";
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["result"] = r.result;
  j["outputs"] = r.outputs;
  if (opt.timing) j["wall_time_s"] = seconds;
  std::cout << j.dump(2) << '\n';
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << data;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

/// Human output goes to stdout unless the JSON report owns it.
std::ostream& human(const Options& opt) { return opt.json ? std::cerr : std::cout; }

FieldPtr field_for(std::uint64_t q) {
  if (!detail::prime_power(q)) throw UsageError(std::to_string(q) + " is not a prime power");
  return make_field_of_order(q);
}

void require_graph_order(std::uint64_t q) {
  if (q > kMaxGraphOrder) {
    throw UsageError("q = " + std::to_string(q) + " exceeds the graph limit q <= " + std::to_string(kMaxGraphOrder));
  }
}

std::uint64_t budget_from_env() {
  const char* env = std::getenv("ERPG_BUDGET_NODES");
  if (env == nullptr || *env == '\0') return kDefaultBudgetNodes;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("ERPG_BUDGET_NODES must be a positive integer, got '") + env + "'");
  }
}

// ---------------------------------------------------------------------------
// build

struct BuildArgs {
  std::uint64_t q = 0;
  std::string construction = "auto";
  std::string out;
};

ConstructionId resolve_construction(const std::string& name, std::uint64_t q) {
  if (name == "auto") {
    try {
      return auto_construction(static_cast<std::uint32_t>(q));
    } catch (const Error& e) {
      throw UsageError(std::string("no coclique construction for q = ") + std::to_string(q) + ": " + e.what());
    }
  }
  if (name == "odd-neg") return ConstructionId::odd_sq_neg;
  if (name == "odd-pos") return ConstructionId::odd_sq_pos;
  if (name == "even-arc") {
    const auto pp = detail::prime_power(q);
    return pp && pp->first == 2 && pp->second % 2 == 0 ? ConstructionId::even_sq_subfield_arc
                                                         : ConstructionId::even_arc;
  }
  if (name == "triangle-free") return ConstructionId::triangle_free;
  throw UsageError("unknown construction '" + name + "'");
}

int run_build(const Options& opt, const BuildArgs& a, Report& rep) {
  const auto F = field_for(a.q);
  require_graph_order(a.q);
  const auto id = resolve_construction(a.construction, a.q);
  const Plane plane(F);
  const Graph er = build_er_graph(plane);
  rep.parameters = {{"q", a.q}, {"construction", a.construction}};

  Json doc;
  bool ok = false;
  try {
    if (id == ConstructionId::triangle_free) {
      const auto S = triangle_free_set(plane);
      const auto vr = verify_triangle_free(plane, er, S);
      doc = to_json(plane, S, vr);
      ok = vr.ok();
      rep.result = {{"construction", to_string(id)}, {"size", S.points.size()}, {"claimed_size", vr.claimed_size},
                    {"triangles", vr.triangles}, {"regular", vr.regular},
                    {"girth", vr.girth ? Json(*vr.girth) : Json(nullptr)}, {"ok", ok}};
    } else if (id == ConstructionId::even_arc || id == ConstructionId::even_sq_subfield_arc) {
      const auto r = id == ConstructionId::even_arc ? coclique_even(plane, er) : coclique_even_square(plane, er);
      doc = to_json(plane, r.certificate);
      doc["verified"]["maximal_arc"] = r.maximal_arc_ok;
      Json ext;
      ext["degree"] = r.arc.degree;
      ext["candidates"] = r.extension_candidates.size();
      ext["greedy_size"] = r.extended.size();
      ext["greedy_independent"] = is_independent(er, r.extended);
      doc["extension"] = ext;
      ok = r.certificate.ok() && r.maximal_arc_ok && ext["greedy_independent"].get<bool>();
      rep.result = {{"construction", to_string(id)},
                    {"size", r.certificate.points.size()},
                    {"claimed_size", r.certificate.claimed_size},
                    {"independent", r.certificate.verified.independent},
                    {"maximal_arc", r.maximal_arc_ok},
                    {"extension_candidates", r.extension_candidates.size()},
                    {"greedy_extension_size", r.extended.size()},
                    {"ok", ok}};
    } else {
      const auto cert = build_coclique(plane, er, id);
      doc = to_json(plane, cert);
      ok = cert.ok();
      rep.result = {{"construction", to_string(id)},
                    {"size", cert.points.size()},
                    {"claimed_size", cert.claimed_size},
                    {"independent", cert.verified.independent},
                    {"ok", ok}};
    }
  } catch (const Error& e) {
    throw UsageError(std::string("construction '") + a.construction + "' does not apply to q = " +
                     std::to_string(a.q) + ": " + e.what());
  }

  const std::string text = doc.dump(2) + "\n";
  if (!a.out.empty()) {
    write_file(a.out, text);
    rep.outputs.push_back(a.out);
  } else if (!opt.json) {
    std::cout << text;
  }
  auto& h = (a.out.empty() && !opt.json) ? std::cerr : human(opt);
  h << "q=" << a.q << " construction=" << rep.result["construction"].get<std::string>()
    << " size=" << rep.result["size"] << " claimed=" << rep.result["claimed_size"];
  if (rep.result.contains("extension_candidates")) {
    h << " extension_candidates=" << rep.result["extension_candidates"]
      << " greedy_extension=" << rep.result["greedy_extension_size"];
  }
  h << (ok ? " PASS" : " FAIL") << '\n';
  return ok ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// graph

struct GraphArgs {
  std::uint64_t q = 0;
  std::string format = "graph6";
  std::string out;
};

int run_graph(const Options& opt, const GraphArgs& a, Report& rep) {
  const auto F = field_for(a.q);
  require_graph_order(a.q);
  GraphFormat fmt;
  try {
    fmt = parse_graph_format(a.format);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const Plane plane(F);
  const Graph er = build_er_graph(plane);
  const std::string data = export_graph(er, fmt);
  rep.parameters = {{"q", a.q}, {"format", a.format}};
  rep.result = {{"n", er.size()}, {"m", er.edge_count()}};
  if (!a.out.empty()) {
    write_file(a.out, data);
    rep.outputs.push_back(a.out);
    human(opt) << "n=" << er.size() << " m=" << er.edge_count() << '\n';
  } else {
    if (!opt.json) std::cout << data;
    std::cerr << "n=" << er.size() << " m=" << er.edge_count() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// hypergraph

struct HyperArgs {
  std::uint64_t q = 0;
  std::string out;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
};

int run_hypergraph(const Options& opt, const HyperArgs& a, Report& rep) {
  const auto F = field_for(a.q);
  require_graph_order(a.q);
  const Plane plane(F);
  const auto H = build_hypergraph(plane);
  const std::uint64_t q = a.q;
  const std::uint64_t expected = q * (q * q - 1) / 6;
  const auto dense = sample_dense_octets(H, a.samples, a.seed);
  rep.parameters = {{"q", a.q}, {"samples", a.samples}, {"seed", a.seed}};
  rep.result = {{"vertices", H.vertices.size()},
                {"edges", H.edges.size()},
                {"expected_edges", expected},
                {"dense_octets", dense}};
  bool ok = H.edges.size() == expected && dense == 0;
  auto& h = human(opt);
  h << "q=" << q << " vertices=" << H.vertices.size() << " edges=" << H.edges.size() << " expected=" << expected
    << " dense_octets=" << dense << '/' << a.samples;
  if (q % 2 == 0) {
    const auto S = triangle_free_set(plane);
    const bool indep = hyper_independent(H, S.points);
    const auto mw = mw_bound_report(static_cast<std::uint32_t>(q));
    rep.result["triangle_free_size"] = S.points.size();
    rep.result["triangle_free_independent"] = indep;
    rep.result["lower"] = mw.lower;
    rep.result["upper_leading"] = mw.upper_leading;
    ok = ok && indep && mw.sane && S.points.size() == mw.lower;
    h << " independent_set=" << S.points.size() << " upper_leading=" << std::fixed << std::setprecision(2)
      << mw.upper_leading << std::defaultfloat;
  }
  h << (ok ? " PASS" : " FAIL") << '\n';
  rep.result["ok"] = ok;
  if (!a.out.empty()) {
    write_file(a.out, to_triangle_csv(H));
    rep.outputs.push_back(a.out);
  }
  return ok ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::uint64_t q = 0;
  std::optional<std::uint64_t> budget;
  double time_cap_s = 0.0;
};

int run_solve(const Options& opt, const SolveArgs& a, Report& rep) {
  const auto F = field_for(a.q);
  require_graph_order(a.q);
  const Plane plane(F);
  const Graph er = build_er_graph(plane);
  SolveBudget budget;
  budget.max_nodes = a.budget ? *a.budget : budget_from_env();
  if (budget.max_nodes == 0) throw UsageError("--budget must be positive");
  if (a.time_cap_s > 0) {
    budget.time_cap = std::chrono::milliseconds(static_cast<std::int64_t>(a.time_cap_s * 1000.0));
  }

  std::vector<std::uint32_t> seed;
  std::string seeded_with = "none";
  try {
    const auto id = auto_construction(static_cast<std::uint32_t>(a.q));
    const auto cert = build_coclique(plane, er, id);
    if (cert.ok()) {
      seed = cert.points;
      seeded_with = std::string(to_string(id));
    }
  } catch (const Error&) {
    // No construction for this q; start from an empty incumbent.
  }

  const auto r = max_independent_set_exact(er, budget, seed);
  const auto bounds = alpha_bounds(a.q);
  bool violated = r.size > bounds.upper_int() || !is_independent(er, r.set);
  if (r.status == SolveStatus::optimal) violated = violated || r.size < bounds.best_lower_int();

  rep.parameters = {{"q", a.q}, {"budget_nodes", budget.max_nodes}};
  rep.result = {{"alpha", r.size},
                {"status", to_string(r.status)},
                {"nodes", r.nodes},
                {"seed", seeded_with},
                {"seed_size", seed.size()},
                {"lower_bound", bounds.best_lower_int()},
                {"upper_bound", bounds.upper_int()},
                {"bounds_ok", !violated}};
  human(opt) << "q=" << a.q << ' ' << (r.status == SolveStatus::optimal ? "alpha=" : "best_found=") << r.size
             << " status=" << to_string(r.status) << " nodes=" << r.nodes << " seed=" << seeded_with
             << " bounds=[" << bounds.best_lower_int() << ',' << bounds.upper_int() << "]"
             << (violated ? " BOUND VIOLATION" : " ok") << '\n';
  return violated ? kExitBound : kExitOk;
}

// ---------------------------------------------------------------------------
// orbits

int run_orbits(const Options& opt, std::uint64_t q, Report& rep) {
  const auto F = field_for(q);
  if (F->is_even() || !F->has_subfield()) throw UsageError("orbits needs q an odd square");
  const Plane plane(F);
  const auto census = orbit_census_odd_square(plane);
  const auto expected = expected_orbit_census(static_cast<std::uint32_t>(q));
  const bool pass = census == expected;
  Json entries = Json::array();
  auto& h = human(opt);
  h << "q=" << q << " orbits of G off the Baer subplane:\n";
  for (const auto& e : census.entries) {
    entries.push_back({{"kind", to_string(e.kind)}, {"size", e.size}, {"multiplicity", e.multiplicity}});
    h << "  " << std::left << std::setw(18) << to_string(e.kind) << e.multiplicity << " x " << e.size << '\n';
  }
  h << "  total " << census.total() << (pass ? " PASS" : " FAIL") << '\n';
  rep.parameters = {{"q", q}};
  rep.result = {{"census", entries}, {"total", census.total()}, {"pass", pass}};
  return pass ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// table

const std::vector<std::uint64_t>& default_table_orders() {
  static const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 128};
  return qs;
}

int run_table(const Options& opt, const std::string& set, Report& rep) {
  if (set != "default") throw UsageError("unknown table set '" + set + "'");
  rep.parameters = {{"set", set}};
  Json rows = Json::array();
  bool all_ok = true;
  auto& h = human(opt);
  h << std::left << std::setw(6) << "q" << std::setw(17) << "class" << std::setw(13) << "prior_lower" << std::setw(11)
    << "new_lower" << std::setw(8) << "upper" << std::setw(13) << "constructed" << "construction\n";
  for (auto q : default_table_orders()) {
    const auto b = alpha_bounds(q);
    Json row = {{"q", q},
                {"class", to_string(b.cls)},
                {"prior_lower", b.prior_lower_int()},
                {"new_lower", b.new_lower_int() ? Json(*b.new_lower_int()) : Json(nullptr)},
                {"upper", b.upper_int()},
                {"constructed", nullptr},
                {"construction", nullptr}};
    std::string constructed = "-", name = "-";
    std::optional<ConstructionId> id;
    try {
      id = auto_construction(static_cast<std::uint32_t>(q));
    } catch (const Error&) {
    }
    if (id && q <= kMaxGraphOrder) {
      const Plane plane(make_field_of_order(q));
      const Graph er = build_er_graph(plane);
      const auto cert = build_coclique(plane, er, *id);
      all_ok = all_ok && cert.ok() && cert.points.size() <= b.upper_int();
      row["constructed"] = cert.points.size();
      row["construction"] = to_string(*id);
      constructed = std::to_string(cert.points.size()) + (cert.ok() ? "" : "!");
      name = std::string(to_string(*id));
    }
    rows.push_back(row);
    h << std::setw(6) << q << std::setw(17) << to_string(b.cls) << std::setw(13) << b.prior_lower_int()
      << std::setw(11) << (b.new_lower_int() ? std::to_string(*b.new_lower_int()) : "-") << std::setw(8)
      << b.upper_int() << std::setw(13) << constructed << name << '\n';
  }
  rep.result = {{"rows", rows}, {"ok", all_ok}};
  return all_ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cocliques and triangle-free sets in Erdos-Renyi polarity graphs ER_q"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "erpg 1.0.0");
  Options opt;
  app.add_flag("--json", opt.json, "Print a JSON run report on stdout");
  app.add_flag("--timing", opt.timing, "Include wall time in the JSON report");

  BuildArgs build;
  auto* c_build = app.add_subcommand("build", "Construct and verify a coclique certificate");
  c_build->add_option("--q", build.q, "Field order")->required();
  c_build->add_option("--construction", build.construction, "auto|odd-neg|odd-pos|even-arc|triangle-free")
      ->check(CLI::IsMember({"auto", "odd-neg", "odd-pos", "even-arc", "triangle-free"}));
  c_build->add_option("--out", build.out, "Certificate output file (default: stdout)");

  GraphArgs graph;
  auto* c_graph = app.add_subcommand("graph", "Export ER_q");
  c_graph->add_option("--q", graph.q, "Field order")->required();
  c_graph->add_option("--format", graph.format, "graph6|dimacs|csv")
      ->check(CLI::IsMember({"graph6", "dimacs", "csv"}));
  c_graph->add_option("--out", graph.out, "Output file (default: stdout)");

  HyperArgs hyper;
  auto* c_hyper = app.add_subcommand("hypergraph", "Build the triangle hypergraph H_q and check it");
  c_hyper->add_option("--q", hyper.q, "Field order")->required();
  c_hyper->add_option("--out", hyper.out, "Write the edges as CSV triples");
  c_hyper->add_option("--samples", hyper.samples, "8-vertex samples for the density check");
  c_hyper->add_option("--seed", hyper.seed, "Sampling seed");

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "Exact independence number of ER_q by branch and bound");
  c_solve->add_option("--q", solve.q, "Field order")->required();
  c_solve->add_option("--budget", solve.budget, "Search node cap (default: $ERPG_BUDGET_NODES or 1e8)");
  c_solve->add_option("--time-cap", solve.time_cap_s, "Wall-clock cap in seconds");

  std::uint64_t orbits_q = 0;
  auto* c_orbits = app.add_subcommand("orbits", "Orbit census of the Baer conic stabilizer (q an odd square)");
  c_orbits->add_option("--q", orbits_q, "Field order")->required();

  std::string table_set = "default";
  auto* c_table = app.add_subcommand("table", "Bounds on alpha(ER_q) next to constructed sizes");
  c_table->add_option("--set", table_set, "Row set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report rep;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (*c_build) {
      rep.command = "build";
      code = run_build(opt, build, rep);
    } else if (*c_graph) {
      rep.command = "graph";
      code = run_graph(opt, graph, rep);
    } else if (*c_hyper) {
      rep.command = "hypergraph";
      code = run_hypergraph(opt, hyper, rep);
    } else if (*c_solve) {
      rep.command = "solve";
      code = run_solve(opt, solve, rep);
    } else if (*c_orbits) {
      rep.command = "orbits";
      code = run_orbits(opt, orbits_q, rep);
    } else if (*c_table) {
      rep.command = "table";
      code = run_table(opt, table_set, rep);
    }
  } catch (const UsageError& e) {
    std::cerr << "erpg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "erpg: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::TooLarge || e.code() == ErrorCode::NonPrime ? kExitUsage : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "erpg: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit_report(opt, rep, seconds);
  return code;
}
