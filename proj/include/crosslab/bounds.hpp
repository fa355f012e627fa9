#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "crosslab/errors.hpp"

namespace crosslab {

/// Constants c, c' of the main lower-bound theorem as functions of (A, alpha):
///   c  = 88^(2a) * 2^(a+2) * A
///   c' = 1 / (180^2 * 2^(1+2/a) * A^(1/a))
/// log forms are kept alongside; for small alpha the plain doubles can
/// overflow/underflow while the log forms stay usable.
struct BoundParams {
  double A = 0;
  double alpha = 0;
  double c = 0;
  double c_prime = 0;
  double log_c = 0;        // natural log of c
  double log_c_prime = 0;  // natural log of c'
};

struct DualParams {
  double N = 0;
  double alpha = 0;
  double A_dual = 0;              // max{88^2 * 2^(1+3/alpha), N}
  double threshold_exponent = 0;  // 16 + 3/alpha

  /// cr budget of the dual hypothesis: e^2 / 2^(16+3/alpha).
  double threshold(double e) const {
    return std::exp(2.0 * std::log(e) - threshold_exponent * std::log(2.0));
  }
};

struct BoundValue {
  double value = 0;
  bool applicable = false;
  std::string hypothesis;  // human-readable side condition
};

inline BoundParams theorem2_constants(double A, double alpha) {
  if (!(A > 0) || !(alpha > 0))
    throw InvalidParameterError("theorem2_constants requires A > 0, alpha > 0");
  BoundParams p;
  p.A = A;
  p.alpha = alpha;
  const double ln2 = std::log(2.0);
  p.log_c = 2 * alpha * std::log(88.0) + (alpha + 2) * ln2 + std::log(A);
  p.log_c_prime =
      -(2 * std::log(180.0) + (1 + 2 / alpha) * ln2 + std::log(A) / alpha);
  p.c = std::pow(88.0, 2 * alpha) * std::pow(2.0, alpha + 2) * A;
  p.c_prime =
      1.0 / (180.0 * 180.0 * std::pow(2.0, 1 + 2 / alpha) * std::pow(A, 1 / alpha));
  return p;
}

/// cr(G) >= e^3 / (64 n^2), valid once e >= 4n (the crossing lemma).
inline BoundValue crossing_lemma_lb(long long n, long long e) {
  if (n < 1 || e < 0) throw InvalidParameterError("crossing_lemma_lb: n >= 1, e >= 0");
  BoundValue out;
  double nd = static_cast<double>(n), ed = static_cast<double>(e);
  out.value = ed * ed * ed / (64.0 * nd * nd);
  out.applicable = e >= 4 * n;
  out.hypothesis = "e >= 4n";
  return out;
}

/// cr(G) >= e - 3n + 6 (Euler-formula floor), clamped at zero.
inline BoundValue euler_lb(long long n, long long e) {
  if (n < 3) throw InvalidParameterError("euler_lb requires n >= 3");
  BoundValue out;
  out.value = std::max(0.0, static_cast<double>(e - 3 * n + 6));
  out.applicable = true;
  out.hypothesis = "none";
  return out;
}

/// cr(G) >= c' * e^(2+1/alpha) / n^(1+1/alpha), valid once e >= c n.
/// Evaluated in log space when alpha < 1/4 (exponents get large).
inline BoundValue theorem2_lb(long long n, long long e, const BoundParams& p) {
  if (n < 1) throw InvalidParameterError("theorem2_lb requires n >= 1");
  BoundValue out;
  out.hypothesis = "e >= c*n";
  if (e <= 0) return out;  // value 0, not applicable
  const double nd = static_cast<double>(n), ed = static_cast<double>(e);
  const double ia = 1.0 / p.alpha;
  if (p.alpha < 0.25) {
    out.value =
        std::exp(p.log_c_prime + (2 + ia) * std::log(ed) - (1 + ia) * std::log(nd));
    out.applicable = std::log(ed) >= p.log_c + std::log(nd);
  } else {
    out.value = p.c_prime * std::pow(ed, 2 + ia) / std::pow(nd, 1 + ia);
    out.applicable = ed >= p.c * nd;
  }
  return out;
}

/// The log-squared predecessor bound: same shape as theorem2_lb but gated by
/// e >= c n (ln n)^2. The paper leaves its constants unstated, so they are
/// caller-supplied.
inline BoundValue pst_lb(long long n, long long e, double alpha, double c_user,
                         double c_prime_user) {
  if (n < 2) throw InvalidParameterError("pst_lb requires n >= 2");
  if (!(alpha > 0) || !(c_user > 0) || !(c_prime_user > 0))
    throw InvalidParameterError("pst_lb requires positive alpha, c, c'");
  BoundValue out;
  out.hypothesis = "e >= c*n*(ln n)^2";
  if (e <= 0) return out;
  const double nd = static_cast<double>(n), ed = static_cast<double>(e);
  const double ia = 1.0 / alpha;
  const double ln_n = std::log(nd);
  out.value = c_prime_user * std::pow(ed, 2 + ia) / std::pow(nd, 1 + ia);
  out.applicable = ed >= c_user * nd * ln_n * ln_n;
  return out;
}

/// C_{2k}-free specialization: theorem2_lb instantiated at A = 100k,
/// alpha = 1/k, giving cr(G) >= c' e^(2+k) / n^(1+k).
inline BoundValue corollary_c2k_lb(long long n, long long e, int k) {
  if (k < 2) throw InvalidParameterError("corollary_c2k_lb requires k >= 2");
  return theorem2_lb(n, e, theorem2_constants(100.0 * k, 1.0 / k));
}

/// Bondy-Simonovits: a C_{2k}-free graph has at most 100 k n^(1+1/k) edges.
inline double bs_max_edges(long long n, int k) {
  if (k < 2 || n < 1) throw InvalidParameterError("bs_max_edges: k >= 2, n >= 1");
  return 100.0 * k * std::pow(static_cast<double>(n), 1.0 + 1.0 / k);
}

inline DualParams dual_constants(double N, double alpha) {
  if (!(N > 0) || !(alpha > 0))
    throw InvalidParameterError("dual_constants requires N > 0, alpha > 0");
  DualParams p;
  p.N = N;
  p.alpha = alpha;
  p.A_dual = std::max(88.0 * 88.0 * std::pow(2.0, 1 + 3 / alpha), N);
  p.threshold_exponent = 16 + 3 / alpha;
  return p;
}

}  // namespace crosslab
