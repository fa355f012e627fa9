#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "crosslab/bounds.hpp"
#include "crosslab/crossing_number.hpp"
#include "crosslab/generators.hpp"

using namespace crosslab;
using Catch::Approx;

TEST_CASE("crossing lemma calculator") {
  auto on = crossing_lemma_lb(10, 40);
  CHECK(on.value == Approx(10.0).epsilon(1e-12));
  CHECK(on.applicable);

  auto off = crossing_lemma_lb(10, 20);
  CHECK(off.value == Approx(1.25).epsilon(1e-12));
  CHECK_FALSE(off.applicable);

  auto empty = crossing_lemma_lb(1, 0);
  CHECK(empty.value == 0.0);
  CHECK_FALSE(empty.applicable);
}

TEST_CASE("euler floor") {
  CHECK(euler_lb(5, 10).value == 1.0);   // K5
  CHECK(euler_lb(6, 15).value == 3.0);   // K6
  CHECK(euler_lb(4, 3).value == 0.0);    // P4, clamped
  CHECK(euler_lb(3, 0).applicable);
  CHECK_THROWS_AS(euler_lb(2, 1), InvalidParameterError);
}

TEST_CASE("theorem2 constants are exact at the reference points") {
  auto p = theorem2_constants(0.5, 1.0);
  CHECK(p.c == 30976.0);
  CHECK(p.c_prime == 1.0 / 129600.0);

  auto q = theorem2_constants(1.0, 1.0);
  CHECK(q.c == 61952.0);
  CHECK(q.c_prime == 1.0 / 259200.0);

  // corollary regime k=2: A = 200, alpha = 1/2
  auto r = theorem2_constants(200.0, 0.5);
  CHECK(r.c == Approx(std::pow(88.0, 1.0) * std::pow(2.0, 2.5) * 200.0)
                   .epsilon(1e-12));
  CHECK(r.c_prime ==
        Approx(1.0 / (180.0 * 180.0 * 32.0 * 200.0 * 200.0)).epsilon(1e-12));

  CHECK_THROWS_AS(theorem2_constants(0.0, 1.0), InvalidParameterError);
  CHECK_THROWS_AS(theorem2_constants(1.0, -2.0), InvalidParameterError);
}

TEST_CASE("theorem2 lower bound") {
  auto p = theorem2_constants(0.5, 1.0);
  auto v = theorem2_lb(10, 50, p);
  CHECK(v.value == Approx(125000.0 / 12960000.0).epsilon(1e-12));
  CHECK_FALSE(v.applicable);  // 50 < 30976 * 10

  CHECK(theorem2_lb(10, 0, p).value == 0.0);
  CHECK_FALSE(theorem2_lb(10, 0, p).applicable);
  CHECK(theorem2_lb(1, 0, p).value == 0.0);

  // applicable flips on at e = c n
  long long n = 2;
  long long e_at = static_cast<long long>(std::ceil(p.c * n));
  CHECK(theorem2_lb(n, e_at, p).applicable);
  CHECK_FALSE(theorem2_lb(n, e_at - 1, p).applicable);
}

TEST_CASE("theorem2 bound is monotone in e and antitone in n") {
  auto p = theorem2_constants(0.7, 1.3);
  for (long long e = 1; e < 400; e += 13)
    CHECK(theorem2_lb(50, e, p).value < theorem2_lb(50, e + 7, p).value);
  for (long long n = 5; n < 300; n += 11)
    CHECK(theorem2_lb(n, 1000, p).value > theorem2_lb(n + 3, 1000, p).value);
}

TEST_CASE("pst bound with caller-supplied constants") {
  auto v = pst_lb(16, 1000, 1.0, 1.0, 1.0);
  CHECK(v.applicable);  // 1000 >= 16 (ln 16)^2 ~ 123.0
  CHECK(v.value == Approx(3.90625e6).epsilon(1e-12));

  CHECK(pst_lb(16, 0, 1.0, 1.0, 1.0).value == 0.0);
  CHECK_THROWS_AS(pst_lb(16, 10, 1.0, 0.0, 1.0), InvalidParameterError);
  CHECK_THROWS_AS(pst_lb(1, 10, 1.0, 1.0, 1.0), InvalidParameterError);

  // threshold check is e >= c n (ln n)^2 with the natural log
  long long n = 30;
  double gate = 1.0 * n * std::log(30.0) * std::log(30.0);
  CHECK(pst_lb(n, static_cast<long long>(gate) + 1, 1.0, 1.0, 1.0).applicable);
  CHECK_FALSE(pst_lb(n, static_cast<long long>(gate) - 1, 1.0, 1.0, 1.0)
                  .applicable);
}

TEST_CASE("corollary equals theorem2 at A=100k, alpha=1/k to full precision") {
  const long long samples[][2] = {{10, 100}, {37, 444}, {100, 5000},
                                  {251, 10007}, {1000, 123456}};
  for (int k = 2; k <= 6; ++k) {
    auto params = theorem2_constants(100.0 * k, 1.0 / k);
    for (auto [n, e] : samples) {
      auto direct = corollary_c2k_lb(n, e, k);
      auto via = theorem2_lb(n, e, params);
      CHECK(direct.value == via.value);  // bitwise: same code path
      CHECK(direct.applicable == via.applicable);
    }
  }
  CHECK_THROWS_AS(corollary_c2k_lb(10, 10, 1), InvalidParameterError);
}

TEST_CASE("bs_max_edges") {
  CHECK(bs_max_edges(100, 2) == Approx(200000.0).epsilon(1e-12));
  CHECK(bs_max_edges(1, 3) == Approx(300.0).epsilon(1e-12));
  CHECK(bs_max_edges(64, 2) == Approx(102400.0).epsilon(1e-12));
  CHECK_THROWS_AS(bs_max_edges(10, 1), InvalidParameterError);
}

TEST_CASE("dual constants") {
  auto d = dual_constants(10.0, 1.0);
  CHECK(d.A_dual == 123904.0);  // max{7744 * 16, 10}
  CHECK(d.threshold_exponent == 19.0);

  auto big = dual_constants(1e6, 1.0);
  CHECK(big.A_dual == 1e6);  // the max switches sides

  CHECK(dual_constants(10.0, 3.0).threshold_exponent == 17.0);
  CHECK(d.threshold(1024.0) == Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(dual_constants(-1.0, 1.0), InvalidParameterError);
}

TEST_CASE("the dual theorem's closing arithmetic") {
  // the contradiction bottoms out in 180^2 < 2^15
  CHECK(180 * 180 == 32400);
  CHECK((1 << 15) == 32768);
  CHECK(180 * 180 < (1 << 15));
  // so 1/2^(16+3/a) < 1/(180^2 2^(1+3/a)) fails for every alpha
  for (double alpha : {0.25, 0.5, 1.0, 2.0, 3.0, 10.0}) {
    double lhs = std::exp2(-(16.0 + 3.0 / alpha));
    double rhs = 1.0 / (32400.0 * std::exp2(1.0 + 3.0 / alpha));
    CHECK_FALSE(lhs < rhs);
  }
}

TEST_CASE("log-space evaluation for small alpha") {
  // alpha below 1/4 switches to the log path; it must agree with a long
  // double direct evaluation where the latter is finite
  for (double alpha : {0.05, 0.1, 0.2}) {
    auto p = theorem2_constants(2.0, alpha);
    long long n = 40, e = 900;
    const long double ia = 1.0L / alpha;
    long double direct =
        powl(180.0L, -2.0L) * powl(2.0L, -(1.0L + 2.0L * ia)) *
        powl(2.0L, -ia) *  // A^(1/alpha) with A=2
        powl(static_cast<long double>(e), 2.0L + ia) /
        powl(static_cast<long double>(n), 1.0L + ia);
    auto got = theorem2_lb(n, e, p);
    CHECK(got.value ==
          Approx(static_cast<double>(direct)).epsilon(1e-9));
    CHECK(std::isfinite(got.value));
  }
}

TEST_CASE("fixture crossing numbers dominate the closed-form floors") {
  for (const auto& [name, graph, cr] : fixture_registry()) {
    const long long n = graph.vertex_count();
    const long long e = graph.edge_count();
    CAPTURE(name);
    if (n >= 3) CHECK(euler_lb(n, e).value <= cr);
    auto lemma = crossing_lemma_lb(n, e);
    if (lemma.applicable) CHECK(lemma.value <= cr);
  }
}
