#pragma once

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "crosslab/bisection.hpp"
#include "crosslab/bounds.hpp"
#include "crosslab/crossing_number.hpp"
#include "crosslab/decomposition.hpp"
#include "crosslab/generators.hpp"
#include "crosslab/io.hpp"
#include "crosslab/json_io.hpp"
#include "crosslab/planarity.hpp"

namespace crosslab {

struct SuiteConfig {
  std::vector<std::string> corpus;  // generator specs or "file:<path>"
  std::vector<std::string> checks;  // subset of pss jensen t3 bs trace bounds
  double A = 0.5;
  double alpha = 1.0;
  int cycle_k = 2;                        // bs cycle parameter
  std::vector<double> t3_values = {2.5, 3.0, 4.0};
  std::vector<double> jensen_values = {0.5, 1.0, 1.5, 2.0};
  std::string format = "json";  // json | csv
  std::uint64_t seed = 0;
  int workers = 1;
  int exhaustive_cap = 24;
  bool timings = false;  // timings break byte-identical reruns; off by default
};

inline SuiteConfig suite_config_from_json(const Json& j) {
  SuiteConfig cfg;
  cfg.corpus = j.at("corpus").get<std::vector<std::string>>();
  cfg.checks = j.at("checks").get<std::vector<std::string>>();
  if (j.contains("params")) {
    cfg.A = j.at("params").value("A", cfg.A);
    cfg.alpha = j.at("params").value("alpha", cfg.alpha);
  }
  cfg.cycle_k = j.value("cycle_k", cfg.cycle_k);
  if (j.contains("t3_values"))
    cfg.t3_values = j.at("t3_values").get<std::vector<double>>();
  if (j.contains("jensen_values"))
    cfg.jensen_values = j.at("jensen_values").get<std::vector<double>>();
  cfg.format = j.value("format", cfg.format);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.workers = j.value("workers", cfg.workers);
  cfg.exhaustive_cap = j.value("exhaustive_cap", cfg.exhaustive_cap);
  cfg.timings = j.value("timings", cfg.timings);
  return cfg;
}

enum class RecordStatus { Pass, Fail, Skip };

struct Record {
  std::string graph_id;
  long long n = 0, e = 0;
  std::string check;
  double lhs = 0, rhs = 0;
  RecordStatus status = RecordStatus::Pass;
  std::string reason;  // skip reason / failure note
  long long micros = 0;

  bool operator==(const Record& other) const {
    return graph_id == other.graph_id && n == other.n && e == other.e &&
           check == other.check && lhs == other.lhs && rhs == other.rhs &&
           status == other.status && reason == other.reason &&
           micros == other.micros;
  }
};

struct Report {
  std::vector<Record> records;

  long long total() const { return static_cast<long long>(records.size()); }
  long long count(RecordStatus s) const {
    long long c = 0;
    for (const auto& r : records) c += r.status == s;
    return c;
  }
  bool operator==(const Report& other) const {
    return records == other.records;
  }
};

namespace detail {

struct CorpusEntry {
  std::string id;
  Graph graph;
  std::optional<int> grid_n;  // set when the entry is a grid
};

inline CorpusEntry resolve_corpus_entry(const std::string& spec, size_t index,
                                        std::uint64_t seed) {
  CorpusEntry entry;
  entry.id = spec;
  if (spec.rfind("file:", 0) == 0) {
    entry.graph = read_edge_list_file(spec.substr(5));
    return entry;
  }
  if (spec.rfind("random:", 0) == 0) {
    std::stringstream ss(spec.substr(7));
    std::string ns, ps;
    if (!std::getline(ss, ns, ':') || !std::getline(ss, ps, ':'))
      throw InvalidConfigError("random spec needs random:<n>:<p>: " + spec);
    // per-entry seed derived from the suite seed and the corpus position
    std::uint64_t derived =
        seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1));
    entry.graph = random_graph(std::stoi(ns), std::stod(ps), derived);
    return entry;
  }
  entry.graph = classics(spec);
  if (spec.rfind("grid:", 0) == 0) entry.grid_n = std::stoi(spec.substr(5));
  return entry;
}

inline std::optional<long long> exact_cr_or_nothing(const Graph& g, int k_max,
                                                    std::string& why_not) {
  if (is_planar(g)) return 0;
  if (g.edge_count() > 24) {
    why_not = "graph too large for the exact crossing search";
    return std::nullopt;
  }
  try {
    auto result = exact_crossing_number(g, k_max);
    if (result.value) return static_cast<long long>(*result.value);
    why_not = "crossing number exceeds k_max = " + std::to_string(k_max);
  } catch (const SearchBudgetError&) {
    why_not = "crossing search budget exhausted";
  }
  return std::nullopt;
}

}  // namespace detail

/// Runs every requested check on one corpus entry. Exact oracles are used
/// when the instance size permits; otherwise the record is skipped with a
/// reason, never silently approximated.
inline std::vector<Record> run_checks_on_entry(const detail::CorpusEntry& entry,
                                               const SuiteConfig& cfg) {
  std::vector<Record> records;
  const Graph& g = entry.graph;

  auto base_record = [&](const std::string& check) {
    Record r;
    r.graph_id = entry.id;
    r.n = g.vertex_count();
    r.e = g.edge_count();
    r.check = check;
    return r;
  };
  auto timed = [&](Record& r, auto&& body) {
    auto start = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const Error& err) {
      r.status = RecordStatus::Fail;
      r.reason = err.what();
    }
    if (cfg.timings)
      r.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    records.push_back(std::move(r));
  };
  auto decide = [](Record& r, bool holds) {
    r.status = holds ? RecordStatus::Pass : RecordStatus::Fail;
  };
  auto skip = [](Record& r, const std::string& reason) {
    r.status = RecordStatus::Skip;
    r.reason = reason;
  };

  for (const std::string& check : cfg.checks) {
    if (check == "pss") {
      Record r = base_record("pss");
      timed(r, [&](Record& rec) {
        if (g.vertex_count() < 2) return skip(rec, "bisection needs n >= 2");
        if (g.vertex_count() > cfg.exhaustive_cap)
          return skip(rec, "exact bisection infeasible: n exceeds cap");
        std::string why;
        auto cr = detail::exact_cr_or_nothing(g, 4, why);
        if (!cr) return skip(rec, why);
        auto b = exact_bisection(g, cfg.exhaustive_cap);
        auto report = pss_check(g, *cr, b);
        rec.lhs = report.b_value;
        rec.rhs = report.rhs;
        decide(rec, report.holds());
      });
    } else if (check == "jensen") {
      for (double t : cfg.jensen_values) {
        Record r = base_record("jensen(t=" + std::to_string(t) + ")");
        timed(r, [&](Record& rec) {
          rec.lhs = lt_norm(g, 2.0);
          rec.rhs = lt_norm(g, t);
          decide(rec, jensen_check(g, t));
        });
      }
    } else if (check == "t3") {
      if (!entry.grid_n) {
        Record r = base_record("t3");
        timed(r, [&](Record& rec) {
          skip(rec, "t3 chain is defined for grid instances only");
        });
        continue;
      }
      Bisection grid_bisection;
      std::string bisect_error;
      try {
        if (g.vertex_count() <= cfg.exhaustive_cap)
          grid_bisection = exact_bisection(g, cfg.exhaustive_cap);
        else
          grid_bisection = heuristic_bisection(g, cfg.seed);
      } catch (const Error& err) {
        bisect_error = err.what();
      }
      for (double t : cfg.t3_values) {
        Record upper = base_record("t3-upper(t=" + std::to_string(t) + ")");
        Record chain = base_record("t3-chain(t=" + std::to_string(t) + ")");
        if (!bisect_error.empty()) {
          timed(upper, [&](Record& rec) { skip(rec, bisect_error); });
          timed(chain, [&](Record& rec) { skip(rec, bisect_error); });
          continue;
        }
        auto t3 = t3_counterexample_check(*entry.grid_n, t, grid_bisection);
        timed(upper, [&](Record& rec) {
          rec.lhs = t3.lhs;
          rec.rhs = t3.chain_mid;
          decide(rec, rec.lhs <= rec.rhs * (1 + 1e-9));
        });
        timed(chain, [&](Record& rec) {
          rec.lhs = t3.chain_mid;
          rec.rhs = t3.chain_rhs;
          decide(rec, rec.lhs <= rec.rhs * (1 + 1e-9));
        });
      }
    } else if (check == "bs") {
      Record r = base_record("bs(k=" + std::to_string(cfg.cycle_k) + ")");
      timed(r, [&](Record& rec) {
        if (g.vertex_count() > 30)
          return skip(rec, "exact cycle detection capped at n <= 30");
        auto report = bs_check(g, cfg.cycle_k);
        rec.lhs = report.c2k_free ? static_cast<double>(g.edge_count()) : 0.0;
        rec.rhs = report.edge_bound;
        decide(rec, report.holds);
      });
    } else if (check == "trace") {
      Record r = base_record("trace");
      timed(r, [&](Record& rec) {
        if (g.edge_count() == 0) return skip(rec, "decompose needs e >= 1");
        DecomposeOptions opt;
        opt.exhaustive_cap = cfg.exhaustive_cap;
        opt.heuristic_seed = cfg.seed;
        auto trace = decompose(g, cfg.A, cfg.alpha, opt);
        auto verdict = verify_trace(trace);
        long long failed = 0;
        for (const auto& c : verdict.checks) failed += c.status == CheckStatus::Fail;
        rec.lhs = static_cast<double>(failed);
        rec.rhs = 0.0;
        if (failed > 0)
          for (const auto& c : verdict.checks)
            if (c.status == CheckStatus::Fail)
              rec.reason += c.name + ": " + c.detail + "; ";
        decide(rec, failed == 0);
      });
    } else if (check == "bounds") {
      Record r = base_record("bounds-euler");
      timed(r, [&](Record& rec) {
        if (g.vertex_count() < 3) return skip(rec, "euler bound needs n >= 3");
        std::string why;
        auto cr = detail::exact_cr_or_nothing(g, 4, why);
        if (!cr) return skip(rec, why);
        rec.lhs = euler_lb(g.vertex_count(), g.edge_count()).value;
        rec.rhs = static_cast<double>(*cr);
        decide(rec, rec.lhs <= rec.rhs);
      });
      Record r2 = base_record("bounds-crossing-lemma");
      timed(r2, [&](Record& rec) {
        auto lemma = crossing_lemma_lb(g.vertex_count(), g.edge_count());
        if (!lemma.applicable)
          return skip(rec, "side condition e >= 4n fails");
        std::string why;
        auto cr = detail::exact_cr_or_nothing(g, 4, why);
        if (!cr) return skip(rec, why);
        rec.lhs = lemma.value;
        rec.rhs = static_cast<double>(*cr);
        decide(rec, rec.lhs <= rec.rhs);
      });
    } else {
      throw InvalidConfigError("unknown check: " + check);
    }
  }
  return records;
}

/// Executes the suite with cfg.workers threads. Tasks are per corpus entry
/// and independently seeded, and the report is assembled in corpus order, so
/// the result is identical for every worker count.
inline Report run_suite(const SuiteConfig& cfg) {
  if (cfg.corpus.empty()) throw InvalidConfigError("corpus must be non-empty");
  if (cfg.checks.empty()) throw InvalidConfigError("checks must be non-empty");
  if (cfg.format != "json" && cfg.format != "csv")
    throw InvalidConfigError("format must be json or csv");
  for (const auto& c : cfg.checks)
    if (c != "pss" && c != "jensen" && c != "t3" && c != "bs" && c != "trace" &&
        c != "bounds")
      throw InvalidConfigError("unknown check: " + c);

  const size_t tasks = cfg.corpus.size();
  std::vector<std::vector<Record>> results(tasks);
  std::vector<std::string> task_errors(tasks);
  const int workers = std::max(1, cfg.workers);
  std::atomic<size_t> next{0};
  // a failing corpus entry becomes a failed record, never a suite abort
  auto work = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= tasks) break;
      try {
        auto entry = detail::resolve_corpus_entry(cfg.corpus[i], i, cfg.seed);
        results[i] = run_checks_on_entry(entry, cfg);
      } catch (const std::exception& err) {
        task_errors[i] = err.what();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  Report report;
  for (size_t i = 0; i < tasks; ++i) {
    if (!task_errors[i].empty()) {
      Record r;
      r.graph_id = cfg.corpus[i];
      r.check = "task";
      r.status = RecordStatus::Fail;
      r.reason = task_errors[i];
      report.records.push_back(std::move(r));
      continue;
    }
    for (auto& r : results[i]) report.records.push_back(std::move(r));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Emission: byte-stable for identical reports.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace detail

inline Json report_to_json(const Report& report) {
  Json j;
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json jr;
    jr["graph"] = r.graph_id;
    jr["n"] = r.n;
    jr["e"] = r.e;
    jr["check"] = r.check;
    jr["lhs"] = r.lhs;
    jr["rhs"] = r.rhs;
    if (r.status == RecordStatus::Skip)
      jr["holds"] = nullptr;
    else
      jr["holds"] = r.status == RecordStatus::Pass;
    jr["reason"] = r.reason;
    jr["micros"] = r.micros;
    records.push_back(jr);
  }
  j["records"] = records;
  Json skipped = Json::array();
  for (const auto& r : report.records)
    if (r.status == RecordStatus::Skip)
      skipped.push_back(
          {{"graph", r.graph_id}, {"check", r.check}, {"reason", r.reason}});
  j["summary"] = {{"total", report.total()},
                  {"passed", report.count(RecordStatus::Pass)},
                  {"failed", report.count(RecordStatus::Fail)},
                  {"skipped", skipped}};
  return j;
}

inline Report report_from_json(const Json& j) {
  Report report;
  for (const auto& jr : j.at("records")) {
    Record r;
    r.graph_id = jr.at("graph").get<std::string>();
    r.n = jr.at("n").get<long long>();
    r.e = jr.at("e").get<long long>();
    r.check = jr.at("check").get<std::string>();
    r.lhs = jr.at("lhs").get<double>();
    r.rhs = jr.at("rhs").get<double>();
    if (jr.at("holds").is_null())
      r.status = RecordStatus::Skip;
    else
      r.status = jr.at("holds").get<bool>() ? RecordStatus::Pass
                                            : RecordStatus::Fail;
    r.reason = jr.at("reason").get<std::string>();
    r.micros = jr.at("micros").get<long long>();
    report.records.push_back(std::move(r));
  }
  return report;
}

inline std::string emit_report_string(const Report& report,
                                      const std::string& format) {
  if (format == "json") return report_to_json(report).dump(2) + "\n";
  if (format != "csv") throw InvalidConfigError("format must be json or csv");
  std::string out = "graph,n,e,check,lhs,rhs,holds,micros\n";
  for (const auto& r : report.records) {
    const char* holds = r.status == RecordStatus::Pass   ? "true"
                        : r.status == RecordStatus::Fail ? "false"
                                                         : "skipped";
    out += r.graph_id + "," + std::to_string(r.n) + "," + std::to_string(r.e) +
           "," + r.check + "," + detail::format_double(r.lhs) + "," +
           detail::format_double(r.rhs) + "," + holds + "," +
           std::to_string(r.micros) + "\n";
  }
  return out;
}

inline void emit_report(const Report& report, const std::string& format,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write report: " + path);
  out << emit_report_string(report, format);
}

}  // namespace crosslab
