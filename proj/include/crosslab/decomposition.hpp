#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "crosslab/bisection.hpp"
#include "crosslab/bounds.hpp"
#include "crosslab/crossing_number.hpp"
#include "crosslab/drawing.hpp"
#include "crosslab/graph.hpp"

namespace crosslab {

/// Result of the degree-capping vertex split. Every vertex whose degree
/// exceeds d_bar = 2e/n is replaced by ceil(deg/d_bar) copies; the ordered
/// neighbor list is partitioned by the rule d_bar*(i-1) < j <= d_bar*i.
/// Copies can end up with degree ceil(d_bar) when d_bar is fractional; that
/// is what the assignment rule produces and what downstream checks assume.
struct SplitResult {
  Graph original;
  Graph split_graph;
  long long dbar_num = 0;  // d_bar = dbar_num / dbar_den = 2e/n, unreduced
  long long dbar_den = 1;
  std::vector<std::vector<int>> groups;  // original v -> its copies A_v
  std::vector<int> origin_of;            // split id -> original vertex
  // per split id, the original-neighbor sublist it received, in order
  std::vector<std::vector<int>> assigned_neighbors;

  double d_bar() const {
    return static_cast<double>(dbar_num) / static_cast<double>(dbar_den);
  }
  int dbar_ceil() const {
    return static_cast<int>((dbar_num + dbar_den - 1) / dbar_den);
  }
};

namespace detail {

// neighbor lists ordered ascending by id, or clockwise around each vertex
// when a drawing is supplied (starting from the positive x direction)
inline std::vector<std::vector<int>> neighbor_orders(const Graph& g,
                                                     const Drawing* drawing) {
  std::vector<std::vector<int>> order(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) order[v] = g.neighbors(v);
  if (!drawing) return order;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Point& c = drawing->at(v);
    auto half = [&](const Point& p) {
      return (p.y < c.y || (p.y == c.y && p.x > c.x)) ? 0 : 1;
    };
    std::stable_sort(order[v].begin(), order[v].end(), [&](int a, int b) {
      const Point& pa = drawing->at(a);
      const Point& pb = drawing->at(b);
      int ha = half(pa), hb = half(pb);
      if (ha != hb) return ha < hb;
      int o = orientation(c, pa, pb);
      if (o != 0) return o < 0;  // clockwise
      return a < b;
    });
  }
  return order;
}

inline SplitResult split_with_orders(const Graph& g,
                                     const std::vector<std::vector<int>>& order) {
  const long long n = g.vertex_count();
  const long long e2 = 2LL * g.edge_count();
  if (e2 == 0) throw EmptyGraphError("split requires at least one edge");

  SplitResult result;
  result.original = g;
  result.dbar_num = e2;
  result.dbar_den = n;
  result.groups.resize(g.vertex_count());

  // copy count: ceil(deg / d_bar) for deg > d_bar, else 1
  int next_id = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const long long deg = g.degree(v);
    long long copies = 1;
    if (deg * n > e2) copies = (deg * n + e2 - 1) / e2;
    for (long long i = 0; i < copies; ++i) result.groups[v].push_back(next_id++);
  }
  result.origin_of.assign(next_id, -1);
  result.assigned_neighbors.assign(next_id, {});
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int id : result.groups[v]) result.origin_of[id] = v;

  // endpoint of edge (v,w) on v's side: copy index ceil(j*n / 2e) for the
  // position j (1-based) of w in v's neighbor order
  std::unordered_map<std::uint64_t, int> endpoint;
  endpoint.reserve(static_cast<size_t>(2) * g.edge_count());
  auto key = [n](int v, int w) {
    return static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(w);
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    const bool split = result.groups[v].size() > 1;
    for (size_t idx = 0; idx < order[v].size(); ++idx) {
      const int w = order[v][idx];
      long long piece = 1;
      if (split) {
        const long long j = static_cast<long long>(idx) + 1;
        piece = (j * n + e2 - 1) / e2;
      }
      const int id = result.groups[v][piece - 1];
      endpoint[key(v, w)] = id;
      result.assigned_neighbors[id].push_back(w);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges())
    edges.push_back(make_edge(endpoint[key(u, v)], endpoint[key(v, u)]));
  result.split_graph = Graph(next_id, std::move(edges));
  return result;
}

}  // namespace detail

/// Abstract split: neighbor lists ordered by ascending id.
inline SplitResult split_high_degree(const Graph& g) {
  return detail::split_with_orders(g, detail::neighbor_orders(g, nullptr));
}

/// Drawing-aware split: neighbor lists in clockwise angular order around
/// each vertex. The combinatorial invariants are identical.
inline SplitResult split_high_degree(const Graph& g, const Drawing& d) {
  if (!(d.graph == g))
    throw InvalidParameterError("drawing does not match the graph");
  return detail::split_with_orders(g, detail::neighbor_orders(g, &d));
}

// ---------------------------------------------------------------------------
// Decomposition Algorithm
// ---------------------------------------------------------------------------

/// Sign of s - (2/3)^i * N, exact integer arithmetic where it fits.
inline int cmp_pow23(long long s, int i, long long N) {
  if (i <= 80) {
    __int128 p3 = 1, p2 = 1;
    for (int j = 0; j < i; ++j) {
      p3 *= 3;
      p2 *= 2;
    }
    const __int128 limit = __int128{1} << 126;
    if (s > 0 && p3 > limit / s) return 1;  // s*3^i overflows, rhs cannot
    __int128 lhs = p3 * s;
    __int128 rhs = p2 * N;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
  }
  long double rhs = powl(2.0L / 3.0L, i) * static_cast<long double>(N);
  if (static_cast<long double>(s) < rhs) return -1;
  if (static_cast<long double>(s) > rhs) return 1;
  return 0;
}

/// The stopping threshold of the decomposition loop:
///   (1/(2A)^(1/alpha)) * e^(1/alpha) / N^(1+1/alpha).
inline double decomposition_threshold(long long N, long long e, double A,
                                      double alpha) {
  const double ia = 1.0 / alpha;
  const double direct = std::pow(static_cast<double>(e) / (2.0 * A), ia) /
                        std::pow(static_cast<double>(N), 1.0 + ia);
  if (std::isfinite(direct) && direct > 0) return direct;
  return std::exp(ia * std::log(static_cast<double>(e)) -
                  ia * std::log(2.0 * A) -
                  (1.0 + ia) * std::log(static_cast<double>(N)));
}

/// Stop condition of level i (shared by decompose, stopping_level and trace
/// verification so the three can never disagree).
inline bool below_threshold(int i, double tau) {
  return std::pow(2.0 / 3.0, i) < tau;
}

struct StoppingLevel {
  int k = 0;
  bool degenerate = false;  // threshold > 1: the loop never runs
};

/// Smallest i with (2/3)^i < threshold: closed form from logs, repaired
/// against the shared predicate so it exactly equals direct iteration.
inline StoppingLevel stopping_level(long long N, long long e, double A,
                                    double alpha) {
  if (N < 1 || e < 1 || !(A > 0) || !(alpha > 0))
    throw InvalidParameterError("stopping_level: need N,e >= 1 and A,alpha > 0");
  const double tau = decomposition_threshold(N, e, A, alpha);
  if (below_threshold(0, tau)) return {0, true};
  const int kCap = 4000;  // (2/3)^4000 underflows; tau >= DBL_MIN terminates
  double est = std::floor(std::log(tau) / std::log(2.0 / 3.0)) + 1.0;
  int k = est < 1 ? 1 : (est > kCap ? kCap : static_cast<int>(est));
  while (k > 1 && below_threshold(k - 1, tau)) --k;
  while (k < kCap && !below_threshold(k, tau)) ++k;
  return {k, false};
}

enum class BisectorPolicy {
  ExactOnly,  // error out when a component exceeds the exhaustive cap
  Auto        // fall back to the heuristic above the cap
};

struct DecomposeOptions {
  BisectorPolicy policy = BisectorPolicy::Auto;
  int exhaustive_cap = 24;
  std::uint64_t heuristic_seed = 0;
};

struct ComponentSummary {
  int n = 0;
  long long e = 0;
  std::vector<int> ids;  // split-graph vertex ids, ascending
};

struct BisectionRecord {
  int component = 0;  // index into the level's component list
  int width = 0;
  Exactness exactness = Exactness::Exact;
  std::vector<int> part_one, part_two;  // split-graph ids
  std::vector<Edge> cut_edges;          // split-graph ids
};

struct LevelRecord {
  int index = 0;           // i
  int component_count = 0;  // M_i
  int large_count = 0;      // m_i
  std::vector<ComponentSummary> components;  // large first (size desc)
  long long deleted = 0;
  std::vector<BisectionRecord> bisections;
};

struct PreimageRecord {
  int component = 0;               // index into the final level's components
  std::vector<int> original_ids;   // V_j, ascending
  long long induced_edge_count = 0;  // e(G[V_j]) in the original graph
};

struct DecompositionTrace {
  SplitResult split;
  BoundParams params;
  std::vector<LevelRecord> levels;  // levels 0..k; level k is the terminal snapshot
  int stopping = 0;                 // k
  long long sigma = 0;
  long long final_edge_count = 0;
  std::vector<PreimageRecord> preimages;
  bool k_zero_flagged = false;
  std::string diagnostics;
  BisectorPolicy policy = BisectorPolicy::Auto;
};

namespace detail {

inline long long induced_edge_count(const Graph& g, const std::vector<int>& ids) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : ids) in[v] = 1;
  long long count = 0;
  for (auto [u, v] : g.edges()) count += in[u] && in[v];
  return count;
}

inline std::vector<PreimageRecord> build_preimages(const SplitResult& split,
                                                   const LevelRecord& final_level) {
  std::vector<PreimageRecord> out;
  for (size_t j = 0; j < final_level.components.size(); ++j) {
    std::vector<int> originals;
    for (int id : final_level.components[j].ids)
      originals.push_back(split.origin_of[id]);
    std::sort(originals.begin(), originals.end());
    originals.erase(std::unique(originals.begin(), originals.end()),
                    originals.end());
    PreimageRecord rec;
    rec.component = static_cast<int>(j);
    rec.induced_edge_count = induced_edge_count(split.original, originals);
    rec.original_ids = std::move(originals);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace detail

/// Runs the level-by-level decomposition of the split graph, recording a
/// full trace. Level i bisects every large component while (2/3)^i is at or
/// above the threshold; k is therefore a pure function of (N, e, A, alpha).
inline DecompositionTrace decompose(const Graph& g, double A, double alpha,
                                    const DecomposeOptions& opt = {}) {
  if (g.edge_count() == 0) throw EmptyGraphError("decompose needs e >= 1");
  if (!(A > 0) || !(alpha > 0))
    throw InvalidParameterError("decompose requires A > 0, alpha > 0");

  DecompositionTrace trace;
  trace.policy = opt.policy;
  trace.split = split_high_degree(g);
  trace.params = theorem2_constants(A, alpha);

  const long long N = trace.split.split_graph.vertex_count();
  const long long e = trace.split.split_graph.edge_count();
  const double tau = decomposition_threshold(N, e, A, alpha);
  const StoppingLevel expected = stopping_level(N, e, A, alpha);

  std::set<Edge> current(trace.split.split_graph.edges().begin(),
                         trace.split.split_graph.edges().end());
  long long sigma = 0;

  for (int i = 0;; ++i) {
    Graph level_graph(static_cast<int>(N),
                      std::vector<Edge>(current.begin(), current.end()));
    auto comps = components(level_graph);

    LevelRecord rec;
    rec.index = i;
    rec.component_count = static_cast<int>(comps.size());
    for (const auto& comp : comps)
      rec.components.push_back({comp.graph.vertex_count(),
                                comp.graph.edge_count(), comp.original_ids});
    int large = 0;
    while (large < static_cast<int>(comps.size())) {
      const int size = rec.components[large].n;
      if (size >= 2 && cmp_pow23(size, i + 1, N) >= 0)
        ++large;
      else
        break;
    }
    rec.large_count = large;

    if (below_threshold(i, tau)) {  // STOP: terminal snapshot
      trace.levels.push_back(std::move(rec));
      trace.stopping = i;
      break;
    }

    for (int j = 0; j < large; ++j) {
      const auto& comp = comps[j];
      Bisection local;
      if (comp.graph.vertex_count() <= opt.exhaustive_cap) {
        local = exact_bisection(comp.graph, opt.exhaustive_cap);
      } else if (opt.policy == BisectorPolicy::ExactOnly) {
        throw BisectorCapExceededError(
            "component of " + std::to_string(comp.graph.vertex_count()) +
            " vertices exceeds the exhaustive cap under exact-only policy");
      } else {
        local = heuristic_bisection(comp.graph, opt.heuristic_seed);
      }
      BisectionRecord brec;
      brec.component = j;
      brec.width = local.width;
      brec.exactness = local.exactness;
      for (int v : local.part_one.members)
        brec.part_one.push_back(comp.original_ids[v]);
      for (int v : local.part_two.members)
        brec.part_two.push_back(comp.original_ids[v]);
      for (auto [u, v] : local.cut_edges) {
        Edge mapped = make_edge(comp.original_ids[u], comp.original_ids[v]);
        brec.cut_edges.push_back(mapped);
        current.erase(mapped);
      }
      sigma += local.width;
      rec.deleted += local.width;
      rec.bisections.push_back(std::move(brec));
    }
    trace.levels.push_back(std::move(rec));
  }

  trace.sigma = sigma;
  trace.final_edge_count = static_cast<long long>(current.size());
  trace.k_zero_flagged = expected.degenerate;
  if (expected.degenerate)
    trace.diagnostics =
        "threshold exceeds 1 at level 0: e > 2A*N^(1+alpha) >= 2A*n^(1+alpha), "
        "violating the subgraph-density hypothesis";
  trace.preimages = detail::build_preimages(trace.split, trace.levels.back());
  return trace;
}

// ---------------------------------------------------------------------------
// Trace verification
// ---------------------------------------------------------------------------

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // witness on failure, reason on skip
};

struct TraceVerdict {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

using CrSupplier = std::function<std::optional<long long>(const Graph&)>;

/// Exact-crossing supplier for check (h): planar graphs report 0 outright,
/// small graphs run the exact search, everything else is unavailable.
inline CrSupplier make_exact_cr_supplier(int k_max = 4,
                                         int max_edges_for_search = 24) {
  return [k_max, max_edges_for_search](const Graph& g) -> std::optional<long long> {
    if (is_planar(g)) return 0;
    if (g.edge_count() > max_edges_for_search) return std::nullopt;
    try {
      auto result = exact_crossing_number(g, k_max);
      if (result.value) return static_cast<long long>(*result.value);
    } catch (const SearchBudgetError&) {
    }
    return std::nullopt;
  };
}

struct VerifyOptions {
  CrSupplier cr_supplier;  // empty: check (h) is skipped
};

inline TraceVerdict verify_trace(const DecompositionTrace& trace,
                                 const VerifyOptions& opt = {}) {
  TraceVerdict verdict;
  if (trace.levels.empty()) {
    verdict.checks.push_back(
        {"a:size-bound", CheckStatus::Fail, "trace has no levels"});
    return verdict;
  }
  const long long N = trace.split.split_graph.vertex_count();
  const long long e_split = trace.split.split_graph.edge_count();
  const double A = trace.params.A;
  const double alpha = trace.params.alpha;
  const double tau = decomposition_threshold(N, e_split, A, alpha);

  auto add = [&](const std::string& name, CheckStatus status,
                 const std::string& detail) {
    verdict.checks.push_back({name, status, detail});
  };
  auto level_tag = [](const LevelRecord& lv, int j) {
    return "level " + std::to_string(lv.index) + ", component " +
           std::to_string(j);
  };

  // (a) size bound: every level-i component has at most (2/3)^i N vertices.
  // Singletons are exempt: once (2/3)^i N drops below 1 they cannot satisfy
  // the raw bound, and they cannot be split further either.
  {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    for (const auto& lv : trace.levels)
      for (size_t j = 0; j < lv.components.size() && status == CheckStatus::Pass;
           ++j)
        if (lv.components[j].n >= 2 &&
            cmp_pow23(lv.components[j].n, lv.index, N) > 0) {
          status = CheckStatus::Fail;
          detail = level_tag(lv, static_cast<int>(j)) + ": " +
                   std::to_string(lv.components[j].n) +
                   " vertices exceed (2/3)^i N";
        }
    add("a:size-bound", status, detail);
  }

  // (b) classification: large components first and within both brackets,
  // the rest strictly below the large-class floor (singletons always small)
  {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    for (const auto& lv : trace.levels) {
      for (size_t j = 0; j < lv.components.size() && status == CheckStatus::Pass;
           ++j) {
        const int size = lv.components[j].n;
        if (static_cast<int>(j) < lv.large_count) {
          const bool ok = size >= 2 && cmp_pow23(size, lv.index + 1, N) >= 0 &&
                          cmp_pow23(size, lv.index, N) <= 0;
          if (!ok) {
            status = CheckStatus::Fail;
            detail = level_tag(lv, static_cast<int>(j)) +
                     ": classified large but outside the bracket (n=" +
                     std::to_string(size) + ")";
          }
        } else if (!(size == 1 || cmp_pow23(size, lv.index + 1, N) < 0)) {
          status = CheckStatus::Fail;
          detail = level_tag(lv, static_cast<int>(j)) +
                   ": classified small but n=" + std::to_string(size) +
                   " is at or above (2/3)^(i+1) N";
        }
      }
    }
    add("b:classification", status, detail);
  }

  // (c) m_i <= (3/2)^(i+1)
  {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    for (const auto& lv : trace.levels) {
      bool ok;
      if (lv.index + 1 <= 80) {
        __int128 p3 = 1, p2 = 1;
        for (int j = 0; j < lv.index + 1; ++j) {
          p3 *= 3;
          p2 *= 2;
        }
        ok = static_cast<__int128>(lv.large_count) * p2 <= p3;
      } else {
        ok = true;  // (3/2)^81 dwarfs any component count
      }
      if (!ok) {
        status = CheckStatus::Fail;
        detail = "level " + std::to_string(lv.index) + ": m_i = " +
                 std::to_string(lv.large_count) + " exceeds (3/2)^(i+1) = " +
                 std::to_string(std::pow(1.5, lv.index + 1));
        break;
      }
    }
    add("c:large-count", status, detail);
  }

  // (d) the stopping bracket for the recorded k
  {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    const int k = trace.stopping;
    if (!below_threshold(k, tau)) {
      status = CheckStatus::Fail;
      detail = "(2/3)^k >= threshold at k=" + std::to_string(k);
    } else if (k == 0) {
      if (!trace.k_zero_flagged) {
        status = CheckStatus::Fail;
        detail = "k = 0 but the degenerate-threshold flag is not set";
      }
    } else if (below_threshold(k - 1, tau)) {
      status = CheckStatus::Fail;
      detail = "(2/3)^(k-1) already below threshold: k not minimal";
    } else if (trace.k_zero_flagged) {
      status = CheckStatus::Fail;
      detail = "degenerate flag set although k > 0";
    }
    add("d:stopping-bracket", status, detail);
  }

  // (e) accounting: per-record widths, per-level sums, sigma, final count
  {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    long long total = 0;
    for (const auto& lv : trace.levels) {
      long long level_sum = 0;
      for (const auto& b : lv.bisections) {
        if (b.width != static_cast<int>(b.cut_edges.size())) {
          status = CheckStatus::Fail;
          detail = "level " + std::to_string(lv.index) +
                   ": bisection width disagrees with its cut-edge list";
        }
        level_sum += b.width;
      }
      if (status == CheckStatus::Pass && level_sum != lv.deleted) {
        status = CheckStatus::Fail;
        detail = "level " + std::to_string(lv.index) +
                 ": deleted = " + std::to_string(lv.deleted) +
                 " but bisections sum to " + std::to_string(level_sum);
      }
      total += lv.deleted;
    }
    if (status == CheckStatus::Pass && total != trace.sigma) {
      status = CheckStatus::Fail;
      detail = "sigma = " + std::to_string(trace.sigma) +
               " but levels sum to " + std::to_string(total);
    }
    if (status == CheckStatus::Pass &&
        trace.sigma != e_split - trace.final_edge_count) {
      status = CheckStatus::Fail;
      detail = "sigma = " + std::to_string(trace.sigma) +
               " != e(G') - final = " +
               std::to_string(e_split - trace.final_edge_count);
    }
    add("e:accounting", status, detail);
  }

  // replay: reconstruct every level from the split graph and the recorded
  // cuts; recorded component summaries must match exactly
  bool replay_ok = true;
  std::vector<Graph> level_graphs;
  {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::set<Edge> current(trace.split.split_graph.edges().begin(),
                           trace.split.split_graph.edges().end());
    for (const auto& lv : trace.levels) {
      Graph level_graph(static_cast<int>(N),
                        std::vector<Edge>(current.begin(), current.end()));
      level_graphs.push_back(level_graph);
      auto comps = components(level_graph);
      if (comps.size() != lv.components.size()) {
        status = CheckStatus::Fail;
        detail = "level " + std::to_string(lv.index) +
                 ": component count mismatch on replay";
        break;
      }
      bool mismatch = false;
      for (size_t j = 0; j < comps.size(); ++j) {
        if (comps[j].original_ids != lv.components[j].ids ||
            comps[j].graph.vertex_count() != lv.components[j].n ||
            comps[j].graph.edge_count() != lv.components[j].e) {
          status = CheckStatus::Fail;
          detail = level_tag(lv, static_cast<int>(j)) +
                   ": recorded summary disagrees with replay";
          mismatch = true;
          break;
        }
      }
      if (mismatch) break;
      for (const auto& b : lv.bisections)
        for (const auto& edge : b.cut_edges) {
          if (current.erase(edge) == 0) {
            status = CheckStatus::Fail;
            detail = "level " + std::to_string(lv.index) +
                     ": cut edge not present in replayed graph";
          }
        }
      if (status == CheckStatus::Fail) break;
    }
    if (status == CheckStatus::Pass &&
        static_cast<long long>(current.size()) != trace.final_edge_count) {
      status = CheckStatus::Fail;
      detail = "replayed final edge count " + std::to_string(current.size()) +
               " != recorded " + std::to_string(trace.final_edge_count);
    }
    replay_ok = status == CheckStatus::Pass;
    add("replay", status, detail);
  }

  // (f) preimages: V_j recomputed from the split groups; |V_j| <= n(G^k_j)
  {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    const auto& final_level = trace.levels.back();
    auto recomputed = detail::build_preimages(trace.split, final_level);
    if (recomputed.size() != trace.preimages.size()) {
      status = CheckStatus::Fail;
      detail = "preimage record count mismatch";
    } else {
      for (size_t j = 0; j < recomputed.size(); ++j) {
        if (recomputed[j].original_ids != trace.preimages[j].original_ids ||
            recomputed[j].induced_edge_count !=
                trace.preimages[j].induced_edge_count) {
          status = CheckStatus::Fail;
          detail = "preimage " + std::to_string(j) +
                   " disagrees with recomputation";
          break;
        }
        if (static_cast<int>(recomputed[j].original_ids.size()) >
            final_level.components[j].n) {
          status = CheckStatus::Fail;
          detail = "|V_" + std::to_string(j) + "| = " +
                   std::to_string(recomputed[j].original_ids.size()) +
                   " exceeds n(G^k_j) = " +
                   std::to_string(final_level.components[j].n);
          break;
        }
      }
    }
    add("f:preimage-bound", status, detail);
  }

  // (g) conditional: if e(G[V_j]) <= A |V_j|^(1+alpha) for every j, then the
  // final graph kept fewer than e/2 edges
  {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::string failed_hypothesis;
    for (const auto& p : trace.preimages) {
      const double budget =
          A * std::pow(static_cast<double>(p.original_ids.size()), 1.0 + alpha);
      if (static_cast<double>(p.induced_edge_count) >
          budget * (1.0 + 1e-12)) {
        failed_hypothesis = "component " + std::to_string(p.component) +
                            ": e(G[V_j]) = " +
                            std::to_string(p.induced_edge_count) + " > A|V_j|^(1+alpha) = " +
                            std::to_string(budget);
        break;
      }
    }
    if (!failed_hypothesis.empty()) {
      status = CheckStatus::Skipped;
      detail = "hypothesis fails: " + failed_hypothesis;
    } else if (2 * trace.final_edge_count >= e_split) {
      status = CheckStatus::Fail;
      detail = "hypothesis holds on every preimage but e(G^k) = " +
               std::to_string(trace.final_edge_count) + " >= e/2";
    }
    add("g:final-half", status, detail);
  }

  // (h) conditional: exact bisections throughout plus exact crossing values
  // give the per-level Cauchy-Schwarz budget
  {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    bool all_exact = true;
    for (const auto& lv : trace.levels)
      for (const auto& b : lv.bisections)
        if (b.exactness != Exactness::Exact) all_exact = false;
    if (!all_exact) {
      status = CheckStatus::Skipped;
      detail = "heuristic bisections present";
    } else if (!opt.cr_supplier) {
      status = CheckStatus::Skipped;
      detail = "no exact crossing-number supplier";
    } else if (!replay_ok) {
      status = CheckStatus::Skipped;
      detail = "level replay failed";
    } else {
      auto cr_root = opt.cr_supplier(trace.split.split_graph);
      if (!cr_root) {
        status = CheckStatus::Skipped;
        detail = "cr(G') unavailable";
      } else {
        for (size_t li = 0; li + 1 < trace.levels.size() &&
                            status == CheckStatus::Pass;
             ++li) {
          const auto& lv = trace.levels[li];
          auto comps = components(level_graphs[li]);
          double sum_sqrt = 0;
          for (int j = 0; j < lv.large_count; ++j) {
            auto cr = opt.cr_supplier(comps[j].graph);
            if (!cr) {
              status = CheckStatus::Skipped;
              detail = "cr unavailable for " + level_tag(lv, j);
              break;
            }
            sum_sqrt += std::sqrt(static_cast<double>(*cr));
          }
          if (status != CheckStatus::Pass) break;
          const double budget = std::sqrt(std::pow(1.5, lv.index + 1) *
                                          static_cast<double>(*cr_root));
          if (sum_sqrt > budget + 1e-9 * std::max(1.0, budget)) {
            status = CheckStatus::Fail;
            detail = "level " + std::to_string(lv.index) +
                     ": sum of sqrt(cr) = " + std::to_string(sum_sqrt) +
                     " exceeds sqrt((3/2)^(i+1) cr(G')) = " +
                     std::to_string(budget);
          }
        }
      }
    }
    add("h:crossing-budget", status, detail);
  }

  return verdict;
}

}  // namespace crosslab
