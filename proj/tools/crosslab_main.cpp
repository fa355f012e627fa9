// crosslab CLI: generators, exact/heuristic bisection, exact crossing
// numbers, bound calculators, the decomposition pipeline and check suites.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crosslab/crosslab.hpp"

namespace {

using namespace crosslab;

Graph load_graph(const std::string& path) { return read_edge_list_file(path); }

int cmd_gen(const std::string& spec, int random_n, double random_p,
            std::uint64_t seed, const std::string& blowup_base,
            int blowup_edges, int blowup_s, const std::string& out,
            const std::string& coords) {
  Graph g;
  std::optional<Drawing> drawing;
  if (spec == "random") {
    g = random_graph(random_n, random_p, seed);
  } else if (spec == "blowup") {
    Graph base = blowup_base.find(':') != std::string::npos ||
                         blowup_base.find('.') == std::string::npos
                     ? classics(blowup_base)
                     : load_graph(blowup_base);
    BlowupSpec bspec;
    if (blowup_edges < 1 || blowup_edges > base.edge_count())
      throw InvalidParameterError("blowup: --edges out of range");
    bspec.selected_edges.assign(base.edges().begin(),
                                base.edges().begin() + blowup_edges);
    bspec.base = std::move(base);
    bspec.s = blowup_s;
    g = blowup(bspec).graph;
  } else if (spec.rfind("grid:", 0) == 0) {
    Drawing d = grid(std::stoi(spec.substr(5)));
    g = d.graph;
    drawing = std::move(d);
  } else {
    g = classics(spec);
  }
  if (out.empty())
    write_edge_list(std::cout, g);
  else
    write_edge_list_file(out, g);
  if (!coords.empty()) {
    if (!drawing)
      throw InvalidParameterError("--coords is only available for grid:<n>");
    write_coordinates_file(coords, *drawing);
  }
  return 0;
}

int cmd_cr_exact(const std::string& path, int k_max) {
  Graph g = load_graph(path);
  auto result = exact_crossing_number(g, k_max);
  std::cout << crossing_result_to_json(result).dump(2) << "\n";
  return result.value ? 0 : 1;
}

int cmd_bisect(const std::string& mode, const std::string& path,
               std::uint64_t seed, int cap) {
  Graph g = load_graph(path);
  Bisection b = mode == "exact" ? exact_bisection(g, cap)
                                : heuristic_bisection(g, seed);
  std::cout << bisection_to_json(b).dump(2) << "\n";
  return 0;
}

int cmd_bounds(const std::string& path, double A, double alpha, int k) {
  Graph g = load_graph(path);
  const long long n = g.vertex_count();
  const long long e = g.edge_count();
  Json j;
  j["n"] = n;
  j["e"] = e;
  auto put = [&](const char* name, const BoundValue& b) {
    j[name] = {{"value", b.value},
               {"applicable", b.applicable},
               {"hypothesis", b.hypothesis}};
  };
  put("crossing_lemma", crossing_lemma_lb(n, e));
  if (n >= 3) put("euler", euler_lb(n, e));
  auto params = theorem2_constants(A, alpha);
  j["constants"] = {{"A", params.A},
                    {"alpha", params.alpha},
                    {"c", params.c},
                    {"c_prime", params.c_prime}};
  put("theorem2", theorem2_lb(n, e, params));
  if (k >= 2) {
    put("corollary_c2k", corollary_c2k_lb(n, e, k));
    j["bs_max_edges"] = bs_max_edges(n, k);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_decompose(const std::string& path, double A, double alpha,
                  const std::string& policy, std::uint64_t seed, int cap,
                  const std::string& trace_out) {
  Graph g = load_graph(path);
  DecomposeOptions opt;
  opt.policy =
      policy == "exact" ? BisectorPolicy::ExactOnly : BisectorPolicy::Auto;
  opt.heuristic_seed = seed;
  opt.exhaustive_cap = cap;
  auto trace = decompose(g, A, alpha, opt);
  Json j = trace_to_json(trace);
  if (trace_out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(trace_out, std::ios::binary);
    if (!out) throw IoError("cannot write trace: " + trace_out);
    out << j.dump(2) << "\n";
    std::cout << "k=" << trace.stopping << " sigma=" << trace.sigma
              << " final_edges=" << trace.final_edge_count << "\n";
  }
  return 0;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

int cmd_verify_trace(const std::string& path, bool with_cr) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trace: " + path);
  Json j = Json::parse(in);
  auto trace = trace_from_json(j);
  VerifyOptions opt;
  if (with_cr) opt.cr_supplier = make_exact_cr_supplier();
  auto verdict = verify_trace(trace, opt);
  bool ok = true;
  for (const auto& c : verdict.checks) {
    std::cout << c.name << ": " << status_name(c.status);
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    ok = ok && c.status != CheckStatus::Fail;
  }
  return ok ? 0 : 1;
}

int cmd_suite(const std::string& config_path, const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) throw IoError("cannot open suite config: " + config_path);
  SuiteConfig cfg = suite_config_from_json(Json::parse(in));
  Report report = run_suite(cfg);
  if (out_path.empty())
    std::cout << emit_report_string(report, cfg.format);
  else
    emit_report(report, cfg.format, out_path);
  std::cerr << "total=" << report.total()
            << " passed=" << report.count(RecordStatus::Pass)
            << " failed=" << report.count(RecordStatus::Fail)
            << " skipped=" << report.count(RecordStatus::Skip) << "\n";
  return report.count(RecordStatus::Fail) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph crossing-number / bisection / decomposition toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string gen_spec;
  int gen_rn = 10;
  double gen_rp = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_base = "grid:5";
  int gen_edges = 1, gen_s = 3;
  std::string gen_out, gen_coords;
  gen->add_option("spec", gen_spec,
                  "kn:<n> | kst:<s>:<t> | path:<n> | cycle:<n> | star:<n> | "
                  "petersen | grid:<n> | random | blowup")
      ->required();
  gen->add_option("--n", gen_rn, "random: vertex count");
  gen->add_option("--p", gen_rp, "random: edge probability");
  gen->add_option("--seed", gen_seed, "random: seed");
  gen->add_option("--base", gen_base, "blowup: base graph spec or file");
  gen->add_option("--edges", gen_edges,
                  "blowup: replace the first <m> edges in canonical order");
  gen->add_option("--s", gen_s, "blowup: gadget size s >= 3");
  gen->add_option("--out", gen_out, "output edge-list path (default stdout)");
  gen->add_option("--coords", gen_coords, "also write grid coordinates");

  // cr exact
  auto* cr = app.add_subcommand("cr", "crossing number");
  auto* cr_exact = cr->add_subcommand("exact", "exact search");
  std::string cr_file;
  int cr_k = 3;
  cr_exact->add_option("file", cr_file, "edge-list file")->required();
  cr_exact->add_option("--max-k", cr_k, "search limit (<= 4)");

  // bisect
  auto* bisect = app.add_subcommand("bisect", "bisection width");
  std::string bisect_mode, bisect_file;
  std::uint64_t bisect_seed = 0;
  int bisect_cap = 24;
  bisect->add_option("mode", bisect_mode, "exact | heuristic")
      ->required()
      ->check(CLI::IsMember({"exact", "heuristic"}));
  bisect->add_option("file", bisect_file, "edge-list file")->required();
  bisect->add_option("--seed", bisect_seed, "heuristic seed");
  bisect->add_option("--cap", bisect_cap, "exhaustive cap");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "bound calculators");
  std::string bounds_file;
  double bounds_A = 0.5, bounds_alpha = 1.0;
  int bounds_k = 0;
  bounds->add_option("file", bounds_file, "edge-list file")->required();
  bounds->add_option("--A", bounds_A, "density constant A");
  bounds->add_option("--alpha", bounds_alpha, "density exponent alpha");
  bounds->add_option("--k", bounds_k, "also evaluate the C_2k corollary");

  // decompose
  auto* dec = app.add_subcommand("decompose", "decomposition pipeline");
  std::string dec_file, dec_policy = "auto", dec_trace;
  double dec_A = 0.5, dec_alpha = 1.0;
  std::uint64_t dec_seed = 0;
  int dec_cap = 24;
  dec->add_option("file", dec_file, "edge-list file")->required();
  dec->add_option("--A", dec_A, "density constant A")->required();
  dec->add_option("--alpha", dec_alpha, "density exponent alpha")->required();
  dec->add_option("--policy", dec_policy, "exact | auto")
      ->check(CLI::IsMember({"exact", "auto"}));
  dec->add_option("--seed", dec_seed, "heuristic bisection seed");
  dec->add_option("--cap", dec_cap, "exhaustive bisection cap");
  dec->add_option("--trace", dec_trace, "write the trace JSON here");

  // verify
  auto* verify = app.add_subcommand("verify", "re-run recorded checks");
  auto* verify_trace_cmd = verify->add_subcommand("trace", "verify a trace file");
  std::string vt_file;
  bool vt_cr = false;
  verify_trace_cmd->add_option("file", vt_file, "trace JSON")->required();
  verify_trace_cmd->add_flag("--with-cr", vt_cr,
                             "attempt the exact crossing budget check (h)");

  // suite
  auto* suite = app.add_subcommand("suite", "run a check suite");
  std::string suite_config, suite_out;
  suite->add_option("config", suite_config, "suite config JSON")->required();
  suite->add_option("--out", suite_out, "report path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(gen_spec, gen_rn, gen_rp, gen_seed, gen_base, gen_edges,
                     gen_s, gen_out, gen_coords);
    if (cr->parsed() && cr_exact->parsed()) return cmd_cr_exact(cr_file, cr_k);
    if (bisect->parsed())
      return cmd_bisect(bisect_mode, bisect_file, bisect_seed, bisect_cap);
    if (bounds->parsed())
      return cmd_bounds(bounds_file, bounds_A, bounds_alpha, bounds_k);
    if (dec->parsed())
      return cmd_decompose(dec_file, dec_A, dec_alpha, dec_policy, dec_seed,
                           dec_cap, dec_trace);
    if (verify->parsed() && verify_trace_cmd->parsed())
      return cmd_verify_trace(vt_file, vt_cr);
    if (suite->parsed()) return cmd_suite(suite_config, suite_out);
  } catch (const crosslab::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  std::cerr << "no subcommand\n";
  return 2;
}
