#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "crosslab/generators.hpp"
#include "crosslab/graph.hpp"

namespace crosslab {

enum class Exactness { Exact, HeuristicUpperBound };

inline const char* to_string(Exactness e) {
  return e == Exactness::Exact ? "exact" : "heuristic-upper-bound";
}

/// Balanced bipartition: both parts have at least ceil(n/3) vertices
/// (the integral reading of the n/3 balance constraint).
struct Bisection {
  VertexSet part_one, part_two;
  std::vector<Edge> cut_edges;
  int width = 0;
  Exactness exactness = Exactness::Exact;
};

inline int balance_floor(int n) { return (n + 2) / 3; }  // ceil(n/3)

namespace detail {

// sorted-sequence lexicographic order on bitmask-encoded vertex subsets
inline bool set_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  std::uint64_t diff = a ^ b;
  std::uint64_t low = diff & (~diff + 1);  // lowest differing bit
  std::uint64_t above = ~(low | (low - 1));
  if (a & low) return (b & above) != 0;  // unless b is a strict prefix
  return (a & above) == 0;               // a smaller only if it ends here
}

inline Bisection bisection_from_sides(const Graph& g,
                                      const std::vector<char>& in_one,
                                      Exactness exactness) {
  Bisection b;
  b.exactness = exactness;
  for (int v = 0; v < g.vertex_count(); ++v)
    (in_one[v] ? b.part_one : b.part_two).members.push_back(v);
  for (const auto& [u, v] : g.edges())
    if (in_one[u] != in_one[v]) b.cut_edges.push_back({u, v});
  b.width = static_cast<int>(b.cut_edges.size());
  return b;
}

}  // namespace detail

/// Minimum-width balanced bipartition by exhaustive enumeration over all
/// vertex subsets containing vertex 0 (parts are interchangeable) with
/// ceil(n/3) <= |S| <= n - ceil(n/3). Ties resolved by lexicographically
/// least part_one. The cap is configurable; 2^(n-1) subsets are scanned.
inline Bisection exact_bisection(const Graph& g, int cap = 24) {
  const int n = g.vertex_count();
  if (n < 2) throw InvalidParameterError("bisection undefined for n < 2");
  if (n > cap)
    throw TooLargeError("exact_bisection: n = " + std::to_string(n) +
                        " exceeds exhaustive cap " + std::to_string(cap));
  if (n > 30) throw TooLargeError("exact_bisection: hard limit n <= 30");

  const int lo = balance_floor(n);
  const int hi = n - lo;
  const auto& edges = g.edges();
  const int m = g.edge_count();

  int best_width = m + 1;
  std::uint64_t best_mask = 0;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t rest = 0; rest < limit; ++rest) {
    const std::uint64_t mask = rest << 1 | 1;  // vertex 0 in part_one
    const int size = std::popcount(mask);
    if (size < lo || size > hi) continue;
    int width = 0;
    for (int ei = 0; ei < m && width <= best_width; ++ei)
      width += (mask >> edges[ei].first & 1) != (mask >> edges[ei].second & 1);
    if (width < best_width ||
        (width == best_width && detail::set_lex_less(mask, best_mask))) {
      best_width = width;
      best_mask = mask;
    }
  }
  std::vector<char> in_one(n);
  for (int v = 0; v < n; ++v) in_one[v] = best_mask >> v & 1;
  return detail::bisection_from_sides(g, in_one, Exactness::Exact);
}

/// Kernighan-Lin local search: seeded balanced starts, KL swap passes
/// (tentative best-gain swaps with locking, rolled back to the best prefix)
/// interleaved with greedy single moves, 8 restarts. Deterministic for a
/// fixed seed; the width is an upper bound on the exact one.
inline Bisection heuristic_bisection(const Graph& g, std::uint64_t seed,
                                     int restarts = 8) {
  const int n = g.vertex_count();
  if (n < 2) throw InvalidParameterError("bisection undefined for n < 2");
  const int lo = balance_floor(n);

  std::mt19937_64 eng(seed);
  std::vector<int> side(n), perm(n), dval(n);
  std::vector<char> locked(n);
  std::vector<int> best_side;
  long long best_width = -1;

  auto cut_width = [&]() {
    long long w = 0;
    for (const auto& [u, v] : g.edges()) w += side[u] != side[v];
    return w;
  };
  // D_v: external minus internal degree; flipping v changes the width by -D_v
  auto recompute_d = [&]() {
    for (int v = 0; v < n; ++v) {
      int cross = 0;
      for (int w : g.neighbors(v)) cross += side[w] != side[v];
      dval[v] = 2 * cross - g.degree(v);
    }
  };
  auto flip = [&](int v) {
    side[v] ^= 1;
    dval[v] = -dval[v];
    for (int w : g.neighbors(v)) dval[w] += side[w] == side[v] ? -2 : 2;
  };

  // one KL pass: swap every vertex at most once, keep the best prefix
  auto kl_pass = [&](long long width) {
    std::fill(locked.begin(), locked.end(), 0);
    recompute_d();
    std::vector<std::pair<int, int>> swaps;
    long long running = width, best_running = width;
    size_t best_prefix = 0;
    while (true) {
      int pick_u = -1, pick_v = -1, pick_gain = 0;
      bool found = false;
      for (int u = 0; u < n; ++u) {
        if (locked[u] || side[u] != 1) continue;
        for (int v = 0; v < n; ++v) {
          if (locked[v] || side[v] != 0) continue;
          const int gain = dval[u] + dval[v] - (g.has_edge(u, v) ? 2 : 0);
          if (!found || gain > pick_gain) {
            found = true;
            pick_gain = gain;
            pick_u = u;
            pick_v = v;
          }
        }
      }
      if (!found) break;
      flip(pick_u);
      flip(pick_v);
      locked[pick_u] = locked[pick_v] = 1;
      swaps.push_back({pick_u, pick_v});
      running -= pick_gain;
      if (running < best_running) {
        best_running = running;
        best_prefix = swaps.size();
      }
    }
    for (size_t i = swaps.size(); i > best_prefix; --i) {
      flip(swaps[i - 1].first);
      flip(swaps[i - 1].second);
    }
    return best_running;
  };

  // greedy single moves, balance permitting
  auto move_pass = [&](long long width) {
    recompute_d();
    int ones = 0;
    for (int v = 0; v < n; ++v) ones += side[v] == 1;
    bool improved = true;
    while (improved) {
      improved = false;
      for (int v = 0; v < n; ++v) {
        const int from = side[v] == 1 ? ones : n - ones;
        if (from - 1 < lo || dval[v] <= 0) continue;
        width -= dval[v];
        flip(v);
        ones += side[v] == 1 ? 1 : -1;
        improved = true;
      }
    }
    return width;
  };

  for (int r = 0; r < restarts; ++r) {
    if (r == 0) {
      // contiguous start: BFS from vertex 0 claims the first n/2 vertices,
      // which seeds the search with a short-perimeter region
      std::fill(side.begin(), side.end(), 0);
      std::vector<int> queue{0};
      side[0] = 1;
      int claimed = 1;
      for (size_t head = 0; head < queue.size() && claimed < n / 2; ++head)
        for (int w : g.neighbors(queue[head])) {
          if (side[w] || claimed >= n / 2) continue;
          side[w] = 1;
          queue.push_back(w);
          ++claimed;
        }
      for (int v = 0; v < n && claimed < n / 2; ++v)
        if (!side[v]) {
          side[v] = 1;
          ++claimed;
        }
    } else {
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (int i = n - 1; i > 0; --i) {  // Fisher-Yates, explicit for portability
        int j = static_cast<int>(eng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
      }
      for (int i = 0; i < n; ++i) side[perm[i]] = i < n / 2 ? 1 : 0;
    }
    long long width = cut_width();
    while (true) {
      long long after = kl_pass(width);
      after = move_pass(after);
      if (after >= width) break;
      width = after;
    }
    if (best_width < 0 || width < best_width) {
      best_width = width;
      best_side = side;
    }
  }

  std::vector<char> in_one(n);
  for (int v = 0; v < n; ++v) in_one[v] = best_side[v] == best_side[0];
  return detail::bisection_from_sides(g, in_one, Exactness::HeuristicUpperBound);
}

/// One evaluation of b(G) <= 6.32 sqrt(cr) + 1.58 sqrt(sum d_i^2).
struct PssReport {
  long long n = 0, e = 0;
  long long cr_value = 0;
  int b_value = 0;
  double rhs = 0;

  bool holds() const {  // recomputed, never stored
    return static_cast<double>(b_value) <= rhs + 1e-9 * std::max(1.0, rhs);
  }
};

inline PssReport pss_check(const Graph& g, long long cr_value,
                           const Bisection& b) {
  if (cr_value < 0) throw InvalidParameterError("cr must be nonnegative");
  if (b.exactness != Exactness::Exact)
    throw HeuristicBisectionRejectedError(
        "pss_check needs an exact bisection; a heuristic upper bound cannot "
        "refute the inequality");
  PssReport report;
  report.n = g.vertex_count();
  report.e = g.edge_count();
  report.cr_value = cr_value;
  report.b_value = b.width;
  report.rhs = 6.32 * std::sqrt(static_cast<double>(cr_value)) +
               1.58 * std::sqrt(degree_power_sum(g, 2.0));
  return report;
}

/// (sum d_i^t)^(1/t); non-increasing in t.
inline double lt_norm(const Graph& g, double t) {
  if (!(t > 0)) throw InvalidParameterError("lt_norm requires t > 0");
  double s = degree_power_sum(g, t);
  return s == 0.0 ? 0.0 : std::pow(s, 1.0 / t);
}

/// l2 <= l_t for t in (0,2]; mathematically unconditional, so false means an
/// implementation bug. Relative tolerance 1e-9 absorbs floating-point t.
inline bool jensen_check(const Graph& g, double t) {
  if (!(t > 0) || t > 2.0)
    throw InvalidParameterError("jensen_check requires t in (0,2]");
  const double l2 = lt_norm(g, 2.0);
  const double lt = lt_norm(g, t);
  return l2 <= lt + 1e-9 * std::max(1.0, lt);
}

/// The t > 2 counterexample chain on the n x n grid, in the grid parameter n:
///   sqrt(cr) + l_t  <=  4 n^(2/t)  <=  12 n^(2/t-1) b(G).
/// Also records the statement-level form with the vertex count n^2:
///   b >= (1/12) (n^2)^(1/2-1/t) (sqrt(cr) + l_t).
struct T3Report {
  int n = 0;
  double t = 0;
  int b_width = 0;
  double lhs = 0;           // sqrt(cr) + l_t with cr = 0 (the grid is planar)
  double chain_mid = 0;     // 4 n^(2/t)
  double chain_rhs = 0;     // 12 n^(2/t-1) b
  double statement_rhs = 0; // (1/12) (n^2)^(1/2-1/t) lhs

  bool holds() const {
    const double tol = 1e-9;
    return lhs <= chain_mid * (1 + tol) && chain_mid <= chain_rhs * (1 + tol);
  }
  bool statement_holds() const {
    return static_cast<double>(b_width) >= statement_rhs * (1 - 1e-9);
  }
};

inline T3Report t3_counterexample_check(int n, double t, const Bisection& b) {
  if (n < 2) throw InvalidParameterError("t3 check requires n >= 2");
  if (!(t > 2.0)) throw InvalidParameterError("t3 check requires t > 2");
  const Graph g = grid(n).graph;
  T3Report report;
  report.n = n;
  report.t = t;
  report.b_width = b.width;
  report.lhs = lt_norm(g, t);  // cr(grid) = 0
  const double nd = n;
  report.chain_mid = 4.0 * std::pow(nd, 2.0 / t);
  report.chain_rhs = 12.0 * std::pow(nd, 2.0 / t - 1.0) * b.width;
  report.statement_rhs =
      std::pow(nd * nd, 0.5 - 1.0 / t) * report.lhs / 12.0;
  return report;
}

}  // namespace crosslab
