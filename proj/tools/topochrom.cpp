// topochrom: command-line front end.
//
// Exit codes: 0 success / valid, 1 invalid certificate or infeasible
// construction or a failed sweep, 2 usage or input format error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topochrom/box_complex.hpp"
#include "topochrom/certificate_io.hpp"
#include "topochrom/chromatic.hpp"
#include "topochrom/enumeration.hpp"
#include "topochrom/error.hpp"
#include "topochrom/generators.hpp"
#include "topochrom/graph_io.hpp"
#include "topochrom/host.hpp"
#include "topochrom/kneser_construct.hpp"
#include "topochrom/minors.hpp"
#include "topochrom/report.hpp"
#include "topochrom/subgraph_search.hpp"

namespace {

using namespace topochrom;
using nlohmann::json;

constexpr const char* version_string = "topochrom 0.1.0 (edge-list format 1, certificate format 1)";

enum Exit { ok = 0, rejected = 1, usage = 2 };

// Thrown by a subcommand to end the run with a given code and message.
struct Stop {
  int code;
  std::string message;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Stop{usage, "cannot write '" + path + "'"};
  out << text;
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::optional<int> n, k, r, a, b;
  std::string input;
  std::string output;
};

int need(const std::optional<int>& value, const char* flag, const std::string& family) {
  if (!value) throw Stop{usage, "--family " + family + " needs " + flag};
  return *value;
}

int run_generate(const GenerateArgs& args) {
  const auto& f = args.family;
  Graph g;
  if (f == "kneser") {
    g = kneser(need(args.n, "--n", f), need(args.k, "--k", f));
  } else if (f == "schrijver") {
    g = schrijver(need(args.n, "--n", f), need(args.k, "--k", f));
  } else if (f == "mycielski" || f == "total") {
    if (args.input.empty()) throw Stop{usage, "--family " + f + " needs --input"};
    Graph base = read_edge_list_file(args.input);
    if (f == "total") {
      g = total_graph(base);
    } else {
      int r = need(args.r, "--r", f);
      if (r < 1) throw ParameterError("--r must be at least 1");
      g = mycielskian(base, static_cast<std::size_t>(r));
    }
  } else if (f == "complete_bipartite") {
    std::vector<int> p{need(args.a, "--a", f), need(args.b, "--b", f)};
    g = standard_graph(f, p);
  } else if (f == "petersen") {
    g = petersen_graph();
  } else {
    std::vector<int> p{need(args.n, "--n", f)};
    g = standard_graph(f, p);
  }
  emit(to_edge_list(g), args.output);
  return ok;
}

// ---- bound / betti / chromatic --------------------------------------------

int run_bound(const std::string& file, std::optional<int> family_bound, std::size_t solver_cap,
              std::size_t box_cap) {
  Graph g = read_edge_list_file(file);
  BoundReportOptions options;
  options.solver.vertex_cap = solver_cap;
  options.box.vertex_cap = box_cap;
  if (family_bound) options.family_lower_bound = static_cast<std::size_t>(*family_bound);
  try {
    emit(to_json(bound_report(g, options)).dump() + "\n", "-");
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::length_error*>(&e)) throw;
    throw Stop{rejected, e.what()};
  }
  return ok;
}

int run_betti(const std::string& file, const std::string& which, bool reduced, std::size_t box_cap) {
  Graph g = read_edge_list_file(file);
  BoxComplexOptions options{box_cap};
  auto complex = which == "b0" ? box_complex0(g, options) : box_complex(g, options);
  auto betti = betti_gf2(complex, reduced);
  if (betti.empty_complex)
    std::cerr << "note: empty complex" << (reduced ? " (reduced beta_{-1} = 1)" : "") << '\n';
  emit(json(betti.values).dump() + "\n", "-");
  return ok;
}

int run_chromatic(const std::string& file, bool total, bool alpha, std::size_t cap) {
  Graph g = read_edge_list_file(file);
  if (total) g = total_graph(g);
  SolverLimits limits{cap};
  auto result = chromatic_number(g, limits);
  json out{{"chi", result.chi}, {"witness", result.witness}};
  if (alpha) {
    auto set = maximum_independent_set(g, limits);
    out["alpha"] = set.size();
    out["independent_set"] = set;
  }
  emit(out.dump() + "\n", "-");
  return ok;
}

// ---- certificates ---------------------------------------------------------

int run_construct(int n, int k, bool schrijver_family, bool minor, const std::string& output) {
  OddTopologicalCertificate cert;
  try {
    cert = schrijver_family ? build_odd_topological_schrijver(n, k) : build_odd_topological_kneser(n, k);
  } catch (const InfeasibleError& e) {
    throw Stop{rejected, e.what()};
  }
  if (minor)
    emit(dump_certificate(topological_to_minor(cert)) + "\n", output);
  else
    emit(dump_certificate(cert) + "\n", output);
  return ok;
}

const HostSpec& host_of(const Certificate& cert) {
  return std::visit([](const auto& c) -> const HostSpec& { return c.host; }, cert);
}

Verdict verify_any(const AdjacencyOracle& host, const Certificate& cert) {
  return std::visit(
      [&](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, OddMinorCertificate>)
          return verify_odd_minor(host, c);
        else
          return verify_odd_topological(host, c);
      },
      cert);
}

int run_verify(const std::string& file) {
  auto cert = read_certificate_file(file);
  auto host = make_host_oracle(host_of(cert));
  const char* kind = std::holds_alternative<OddMinorCertificate>(cert) ? "odd_minor" : "odd_topological";
  json out{{"kind", kind}, {"host", host->describe()}};
  try {
    auto verdict = verify_any(*host, cert);
    out["valid"] = verdict.valid();
    if (!verdict) {
      out["clause"] = clause_name(verdict.violation->clause);
      out["detail"] = verdict.violation->detail;
      std::cerr << "invalid: " << clause_name(verdict.violation->clause) << ": " << verdict.violation->detail
                << '\n';
    }
    emit(out.dump() + "\n", "-");
    return verdict ? ok : rejected;
  } catch (const HostVertexError& e) {
    out["valid"] = false;
    out["clause"] = "host_vertex";
    out["detail"] = e.what();
    std::cerr << "invalid: host_vertex: " << e.what() << '\n';
    emit(out.dump() + "\n", "-");
    return rejected;
  }
}

int run_lift(const std::string& file, int levels, const std::string& output) {
  auto any = read_certificate_file(file);
  if (!std::holds_alternative<OddMinorCertificate>(any))
    throw Stop{usage, "lift expects an odd_minor certificate"};
  const auto& cert = std::get<OddMinorCertificate>(any);
  if (levels < 1) throw ParameterError("--r must be at least 1");
  Graph g = materialize_host(cert.host);
  if (auto verdict = verify_odd_minor(g, cert); !verdict)
    throw Stop{rejected, "input certificate is invalid: " + std::string(clause_name(verdict.violation->clause)) +
                             ": " + verdict.violation->detail};
  emit(dump_certificate(lift_odd_minor_mycielski(g, cert, static_cast<std::size_t>(levels))) + "\n", output);
  return ok;
}

// ---- total-check ----------------------------------------------------------

struct SweepRecord {
  bool obstruction_checked = false;
  bool obstruction_free = true;
  bool small_delta_witness = false;  // K_{2,D+1} found with D <= 3
  bool coloring_checked = false;
  std::size_t total_chi = 0;
  std::size_t delta = 0;
};

SweepRecord sweep_one(const Graph& g, bool with_coloring) {
  SweepRecord rec;
  rec.delta = max_degree(g);
  if (g.size() > 0) {
    auto verdict = total_graph_obstruction_check(g);
    if (rec.delta >= 4) {
      rec.obstruction_checked = true;
      rec.obstruction_free = verdict.free();
    } else {
      rec.small_delta_witness = !verdict.free();
    }
  }
  if (with_coloring) {
    rec.coloring_checked = true;
    rec.total_chi = total_chromatic_number(g);
  }
  return rec;
}

std::vector<SweepRecord> sweep(const std::vector<Graph>& graphs, bool with_coloring, unsigned jobs) {
  std::vector<SweepRecord> out(graphs.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(graphs.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = sweep_one(graphs[i], with_coloring);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < graphs.size(); i += jobs) out[i] = sweep_one(graphs[i], with_coloring);
    });
  for (auto& t : pool) t.join();
  return out;
}

int run_total_check(std::size_t max_n, std::size_t random_count, std::size_t random_vertices, unsigned seed,
                    unsigned jobs) {
  if (max_n > max_enumeration_order)
    throw ParameterError("--max-n is limited to " + std::to_string(max_enumeration_order));
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto classes = graph_classes(n);
    graphs.insert(graphs.end(), std::make_move_iterator(classes.begin()), std::make_move_iterator(classes.end()));
  }
  auto records = sweep(graphs, true, jobs);

  std::size_t obstruction_checked = 0, small_delta = 0, coloring_checked = 0;
  json obstruction_violations = json::array(), coloring_violations = json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& r = records[i];
    obstruction_checked += r.obstruction_checked;
    small_delta += r.small_delta_witness;
    coloring_checked += r.coloring_checked;
    if (!r.obstruction_free) obstruction_violations.push_back(to_edge_list(graphs[i]));
    if (r.coloring_checked && r.total_chi > r.delta + 2) coloring_violations.push_back(to_edge_list(graphs[i]));
  }
  json out{{"max_n", max_n},
           {"graphs", graphs.size()},
           {"obstruction", {{"checked", obstruction_checked}, {"violations", obstruction_violations.size()}}},
           {"total_coloring", {{"checked", coloring_checked}, {"violations", coloring_violations.size()}}},
           {"delta_le_3_witnesses", small_delta}};
  if (!obstruction_violations.empty()) out["obstruction"]["graphs"] = obstruction_violations;
  if (!coloring_violations.empty()) out["total_coloring"]["graphs"] = coloring_violations;

  std::size_t random_violations = 0;
  if (random_count > 0) {
    if (random_vertices < 5) throw ParameterError("--vertices must be at least 5 for Delta >= 4");
    std::mt19937 rng(seed);
    std::vector<Graph> sample;
    while (sample.size() < random_count) {
      std::uniform_int_distribution<std::size_t> order(5, random_vertices);
      std::uniform_real_distribution<double> density(0.3, 0.9);
      const std::size_t n = order(rng);
      std::bernoulli_distribution coin(density(rng));
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (coin(rng)) edges.emplace_back(u, v);
      Graph g = make_graph(n, edges);
      if (max_degree(g) >= 4) sample.push_back(std::move(g));
    }
    auto random_records = sweep(sample, false, jobs);
    json bad = json::array();
    for (std::size_t i = 0; i < sample.size(); ++i)
      if (!random_records[i].obstruction_free) bad.push_back(to_edge_list(sample[i]));
    random_violations = bad.size();
    out["random"] = {{"seed", seed}, {"count", sample.size()}, {"max_vertices", random_vertices},
                     {"violations", random_violations}};
    if (!bad.empty()) out["random"]["graphs"] = bad;
  }
  emit(out.dump() + "\n", "-");
  const bool clean = obstruction_violations.empty() && coloring_violations.empty() && random_violations == 0;
  return clean ? ok : rejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological bounds on chromatic numbers: generators, box complexes, certificates."};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for total-check (default 1, deterministic)")
      ->check(CLI::Range(1u, 256u));

  int code = ok;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a graph in edge-list format");
  generate->add_option("--family", gen.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"kneser", "schrijver", "mycielski", "total", "complete", "cycle", "path",
                             "complete_bipartite", "petersen"}));
  generate->add_option("--n", gen.n, "Ground-set size or vertex count");
  generate->add_option("--k", gen.k, "Subset size");
  generate->add_option("--r", gen.r, "Mycielski levels");
  generate->add_option("--a", gen.a, "First side of complete_bipartite");
  generate->add_option("--b", gen.b, "Second side of complete_bipartite");
  generate->add_option("--input", gen.input, "Base graph file for mycielski / total ('-' = stdin)");
  generate->add_option("-o,--output", gen.output, "Output file ('-' = stdout)");
  generate->callback([&] { code = run_generate(gen); });

  std::string bound_file;
  std::optional<int> family_bound;
  std::size_t solver_cap = SolverLimits{}.vertex_cap, box_cap = BoxComplexOptions{}.vertex_cap;
  auto* bound = app.add_subcommand("bound", "Print the bound report of a graph as JSON");
  bound->add_option("graph", bound_file, "Graph file ('-' = stdin)")->required();
  bound->add_option("--family-lower-bound", family_bound, "Known lower bound to check chi against");
  bound->add_option("--solver-cap", solver_cap, "Exact solver vertex cap");
  bound->add_option("--box-cap", box_cap, "Box complex vertex cap");
  bound->callback([&] { code = run_bound(bound_file, family_bound, solver_cap, box_cap); });

  std::string betti_file, which = "b";
  bool reduced = false;
  auto* betti = app.add_subcommand("betti", "Print GF(2) Betti numbers of B(G) or B0(G)");
  betti->add_option("graph", betti_file, "Graph file ('-' = stdin)")->required();
  betti->add_option("--complex", which, "b or b0")->check(CLI::IsMember({"b", "b0"}));
  betti->add_flag("--reduced", reduced, "Reduced Betti numbers");
  betti->add_option("--box-cap", box_cap, "Box complex vertex cap");
  betti->callback([&] { code = run_betti(betti_file, which, reduced, box_cap); });

  std::string chi_file;
  bool total = false, alpha = false;
  auto* chromatic = app.add_subcommand("chromatic", "Exact chromatic number with a witness coloring");
  chromatic->add_option("graph", chi_file, "Graph file ('-' = stdin)")->required();
  chromatic->add_flag("--total", total, "Work on the total graph T(G)");
  chromatic->add_flag("--alpha", alpha, "Also report a maximum independent set");
  chromatic->add_option("--solver-cap", solver_cap, "Exact solver vertex cap");
  chromatic->callback([&] { code = run_chromatic(chi_file, total, alpha, solver_cap); });

  int cn = 0, ck = 0;
  bool schrijver_family = false, minor = false;
  std::string construct_out;
  auto* construct = app.add_subcommand("construct-odd", "Build an odd topological clique in KG(n,k) or SG(n,k)");
  construct->add_option("--n", cn, "Ground-set size")->required();
  construct->add_option("--k", ck, "Subset size")->required();
  construct->add_flag("--schrijver", schrijver_family, "Stay inside SG(n,k)");
  construct->add_flag("--minor", minor, "Emit the derived odd minor certificate instead");
  construct->add_option("-o,--output", construct_out, "Output file ('-' = stdout)");
  construct->callback([&] { code = run_construct(cn, ck, schrijver_family, minor, construct_out); });

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Check a certificate against its self-described host");
  verify->add_option("certificate", verify_file, "Certificate file ('-' = stdin)")->required();
  verify->callback([&] { code = run_verify(verify_file); });

  std::string lift_file, lift_out;
  int levels = 0;
  auto* lift = app.add_subcommand("lift", "Lift an odd minor certificate of G to M_r(G)");
  lift->add_option("certificate", lift_file, "Odd minor certificate ('-' = stdin)")->required();
  lift->add_option("--r", levels, "Mycielski levels")->required();
  lift->add_option("-o,--output", lift_out, "Output file ('-' = stdout)");
  lift->callback([&] { code = run_lift(lift_file, levels, lift_out); });

  std::size_t max_n = 6, random_count = 0, random_vertices = 12;
  unsigned seed = 1;
  auto* total_check = app.add_subcommand("total-check", "Sweep small graphs for the total-graph bounds");
  total_check->add_option("--max-n", max_n, "Exhaustive sweep over graphs with at most this many vertices");
  total_check->add_option("--random", random_count, "Additional random graphs with Delta >= 4");
  total_check->add_option("--vertices", random_vertices, "Vertex bound for random graphs");
  total_check->add_option("--seed", seed, "Seed for random graphs");
  total_check->callback([&] { code = run_total_check(max_n, random_count, random_vertices, seed, jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int printed = app.exit(e);
    return printed == 0 ? ok : usage;
  } catch (const Stop& stop) {
    if (!stop.message.empty()) std::cerr << stop.message << '\n';
    return stop.code;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return usage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return rejected;
  }
  return code;
}
