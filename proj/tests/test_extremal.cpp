#include <doctest.h>

#include <stdexcept>
#include <algorithm>
#include <cmath>

#include "grmin/extremal.hpp"
#include "grmin/orbits.hpp"
#include "test_helpers.hpp"

using namespace grmin;
using grmin::test::random_matrix;
using grmin::test::random_positive;

TEST_CASE("sine table") {
  for (int n : {3, 4, 5, 6, 11, 16}) {
    const SineTable s(n);
    for (int k = 1; k <= n - 1; ++k) {
      CHECK(s.s(k) == doctest::Approx(std::sin(k * M_PI / n)).epsilon(1e-15));
      CHECK(s.s(k) == doctest::Approx(s.s(n - k)).epsilon(1e-14));
    }
    for (int k = 1; k < s.d(); ++k) {
      CHECK(s.s(k) < s.s(k + 1));
    }
  }
  CHECK(optimal_loss(4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(optimal_loss(5) ==
        doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  CHECK(optimal_loss(6) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("cyclic matrix columns, n=4") {
  const PointMatrix C = cyclic_matrix(4);
  const double h = std::sqrt(2.0) / 2.0;
  CHECK(C.column(1)[0] == 1.0);
  CHECK(C.column(1)[1] == 0.0);
  CHECK(C.column(2)[0] == doctest::Approx(h).epsilon(1e-15));
  CHECK(C.column(2)[1] == doctest::Approx(h).epsilon(1e-15));
  CHECK(C.column(3)[0] == doctest::Approx(0.0).scale(1));
  CHECK(C.column(3)[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(C.column(4)[0] == doctest::Approx(-h).epsilon(1e-15));
  CHECK(C.column(4)[1] == doctest::Approx(h).epsilon(1e-15));
}

TEST_CASE("cyclic matrix minors are constant over orbits") {
  for (int n = 3; n <= 10; ++n) {
    const PluckerVector P = minors(cyclic_matrix(n));
    const SineTable sines(n);
    CHECK(cyclic_matrix(n).column(1)[0] == 1.0);
    for (const PairIndex& p : ordered_pairs(n)) {
      const int k = OrbitTable::orbit_index(p, n);
      CHECK(P.at(p.i, p.j) == doctest::Approx(sines.s(k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("plucker_ratio golden values") {
  CHECK(plucker_ratio(minors(cyclic_matrix(6))) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(plucker_ratio(minors(cyclic_matrix(5))) ==
        doctest::Approx(1.6180339887498949).epsilon(1e-12));

  PluckerVector flat(5);
  for (const PairIndex& p : ordered_pairs(5)) flat.set(p.i, p.j, 0.37);
  CHECK(plucker_ratio(flat) == 1.0);

  CHECK_THROWS_AS(plucker_ratio(minors(PointMatrix({{1, 0}, {0, 1}, {1, 1}}))),
                  std::invalid_argument);
}

TEST_CASE("geomean ratio sandwich") {
  const PluckerVector PC = minors(cyclic_matrix(7));
  CHECK(geomean_ratio(geometric_means(PC)) ==
        doctest::Approx(plucker_ratio(PC)).epsilon(1e-12));
  for (int n = 4; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PluckerVector P = minors(random_positive(n, 31 * n + seed));
      CHECK(geomean_ratio(geometric_means(P)) <=
            plucker_ratio(P) * (1 + 1e-12));
    }
  }
}

TEST_CASE("absolute ratio ignores column signs") {
  const PointMatrix C = cyclic_matrix(6);
  std::vector<PointMatrix::Column> cols(C.columns());
  cols[1] = {-cols[1][0], -cols[1][1]};
  const PointMatrix flipped(cols);
  CHECK(abs_minor_ratio(flipped) ==
        doctest::Approx(plucker_ratio(minors(C))).epsilon(1e-12));

  CHECK(abs_minor_ratio(PointMatrix({{1, 0}, {0, 1}, {-1, 1}})) == 1.0);

  CHECK_THROWS_AS(abs_minor_ratio(PointMatrix({{1, 0}, {2, 0}, {0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("positive_reduction flips and sorts") {
  const PointMatrix Y =
      positive_reduction(PointMatrix({{1, 0}, {0, -1}, {-1, -1}}));
  CHECK(Y.column(1) == PointMatrix::Column{1, 0});
  CHECK(Y.column(2) == PointMatrix::Column{1, 1});
  CHECK(Y.column(3) == PointMatrix::Column{0, 1});
  const PluckerVector Q = minors(Y);
  CHECK(Q.at(1, 2) == 1.0);
  CHECK(Q.at(1, 3) == 1.0);
  CHECK(Q.at(2, 3) == 1.0);
}

TEST_CASE("positive_reduction leaves sorted input unchanged") {
  const PointMatrix X = random_positive(7, 12);
  CHECK(positive_reduction(X).columns() == X.columns());
}

TEST_CASE("positive_reduction multiset oracle") {
  for (int n = 4; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PointMatrix X = random_matrix(n, 77 * n + seed);
      const PointMatrix Y = positive_reduction(X);
      const PluckerVector PX = minors(X);
      const PluckerVector PY = minors(Y);
      CHECK(is_positive(PY));
      std::vector<double> in, out;
      for (double v : PX.entries()) in.push_back(std::abs(v));
      out = PY.entries();
      std::sort(in.begin(), in.end());
      std::sort(out.begin(), out.end());
      for (std::size_t e = 0; e < in.size(); ++e) {
        CHECK(std::abs(in[e] - out[e]) <= 1e-12 * std::max(1.0, in[e]));
      }
      CHECK(abs_minor_ratio(X) ==
            doctest::Approx(plucker_ratio(PY)).epsilon(1e-12));
    }
  }
}

TEST_CASE("positive_reduction rejects collinear columns") {
  CHECK_THROWS_AS(positive_reduction(PointMatrix({{1, 0}, {2, 0}, {0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(positive_reduction(PointMatrix({{1, 1}, {-2, -2}, {0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("sine weights") {
  const WeightPair w = sine_weights(1, 2, 3, 4);
  CHECK(w.p == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.q == doctest::Approx(0.5).epsilon(1e-12));

  for (int n : {5, 8, 12}) {
    for (int j = 1; j <= n - 3; ++j) {
      for (int k = j + 1; k <= n - 2; ++k) {
        for (int l = k + 1; l <= n - 1; ++l) {
          const WeightPair jkl = sine_weights(j, k, l, n);
          CHECK(jkl.p > 0.0);
          CHECK(jkl.q > 0.0);
          CHECK(jkl.p + jkl.q == doctest::Approx(1.0).epsilon(1e-12));
        }
      }
    }
  }

  // j=1, l=k+1 specializes to the neighbour weights q_k < 1.
  for (int n : {6, 9}) {
    const SineTable s(n);
    for (int k = 2; k <= n - 2; ++k) {
      const WeightPair w1 = sine_weights(1, k, k + 1, n);
      const double qk = s.s(k + 1) * s.s(k - 1) / (s.s(k) * s.s(k));
      CHECK(w1.q == doctest::Approx(qk).epsilon(1e-12));
      CHECK(w1.q < 1.0);
    }
  }

  CHECK_THROWS_AS(sine_weights(2, 2, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(sine_weights(1, 2, 5, 5), std::invalid_argument);
}

TEST_CASE("geomean inequalities are tight at the cyclic matrix") {
  for (int n : {5, 6, 9}) {
    const GeoMeans G = geometric_means(minors(cyclic_matrix(n)));
    for (const SlackEntry& e : geomean_slacks(G)) {
      CHECK(std::abs(e.slack) <= 1e-12);
    }
  }
}

TEST_CASE("geomean inequalities hold at random positive points") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GeoMeans G = geometric_means(minors(random_positive(7, seed)));
    for (const SlackEntry& e : geomean_slacks(G)) {
      CHECK(e.slack >= -1e-12 * std::max(1.0, G.D_at(e.k) * G.D_at(e.l - e.j)));
    }
  }
}

TEST_CASE("collapsed inequality for n=5") {
  // With D_3 = D_2 and D_4 = D_1 every (j,k,l) inequality reduces to
  // D_2^2 >= D_1^2 + D_1*D_2.
  const GeoMeans G = geometric_means(minors(random_positive(5, 99)));
  CHECK(G.D_at(2) * G.D_at(2) >=
        G.D_at(1) * G.D_at(1) + G.D_at(1) * G.D_at(2) - 1e-12);
}

TEST_CASE("normalized logs") {
  const GeoMeans GC = geometric_means(minors(cyclic_matrix(8)));
  for (double ak : normalized_logs(GC)) {
    CHECK(std::abs(ak) <= 1e-12);
  }

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const GeoMeans G =
        geometric_means(normalized(minors(random_positive(6, 500 + seed))));
    const std::vector<double> a = normalized_logs(G);
    CHECK(std::abs(a.front()) <= 1e-10);
    CHECK(std::abs(a.back()) <= 1e-10);
    CHECK(*std::min_element(a.begin(), a.end()) >= -1e-10);
  }
}

TEST_CASE("normalized_logs rejects unnormalized input") {
  const GeoMeans G = geometric_means(minors(cyclic_matrix(6)).scaled(3.0));
  CHECK_THROWS_AS(normalized_logs(G), std::invalid_argument);
}

TEST_CASE("doubling D_d shifts a_d by log 2") {
  const int n = 9;
  const SineTable sines(n);
  GeoMeans G;
  G.n = n;
  for (int k = 1; k <= n - 1; ++k) G.D.push_back(sines.s(k));
  G.D[static_cast<std::size_t>(sines.d() - 1)] *= 2.0;
  const std::vector<double> a = normalized_logs(G);
  CHECK(a[static_cast<std::size_t>(sines.d() - 1)] ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("linear inequalities") {
  // Homogeneous system: zero input gives zero slacks.
  const std::vector<double> zero(5, 0.0);
  for (const SlackEntry& e : log_linear_slacks(zero, 6)) {
    CHECK(e.slack == 0.0);
  }

  // Equality case at the cyclic matrix.
  const GeoMeans GC = geometric_means(minors(cyclic_matrix(7)));
  for (const SlackEntry& e : log_linear_slacks(normalized_logs(GC), 7)) {
    CHECK(std::abs(e.slack) <= 1e-12);
  }

  // Random positive points satisfy the system.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const GeoMeans G =
        geometric_means(normalized(minors(random_positive(6, 900 + seed))));
    for (const SlackEntry& e : log_linear_slacks(normalized_logs(G), 6)) {
      CHECK(e.slack >= -1e-10);
    }
  }

  CHECK_THROWS_AS(log_linear_slacks(zero, 7), std::invalid_argument);
}

TEST_CASE("contraction map") {
  const std::vector<double> a{0.0, 1.0, 1.0, 0.0};
  const std::vector<double> y = contraction_map(a, 5);
  CHECK(y[0] == 0.0);
  CHECK(y[3] == 0.0);
  // q_2 = q_3 = s_1/s_2; halved sums give q/2.
  const double expect = 0.5 * std::sin(M_PI / 5) / std::sin(2 * M_PI / 5);
  CHECK(y[1] == doctest::Approx(expect).epsilon(1e-12));
  CHECK(y[2] == doctest::Approx(expect).epsilon(1e-12));
  CHECK(y[1] == doctest::Approx(0.3090170).epsilon(1e-7));

  const std::vector<double> zero(4, 0.0);
  for (double v : contraction_map(zero, 5)) CHECK(v == 0.0);

  CHECK_THROWS_AS(contraction_map({0.5, 1.0, 1.0, 0.0}, 5),
                  std::invalid_argument);
}

TEST_CASE("contraction map shrinks the max norm geometrically") {
  for (int n : {4, 9, 16}) {
    const double factor = contraction_factor(n);
    CHECK(factor < 1.0);
    Rng rng(static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> a(static_cast<std::size_t>(n - 1), 0.0);
      for (std::size_t e = 1; e + 1 < a.size(); ++e) {
        a[e] = rng.uniform(-1.0, 1.0);
      }
      double norm0 = 0.0;
      for (double v : a) norm0 = std::max(norm0, std::abs(v));
      std::vector<double> cur = a;
      double bound = norm0;
      for (int m = 1; m <= 10; ++m) {
        cur = contraction_map(cur, n);
        bound *= factor;
        double norm = 0.0;
        for (double v : cur) norm = std::max(norm, std::abs(v));
        CHECK(norm <= bound * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("strict positivity diffuses to all interior logs") {
  for (int n = 5; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const GeoMeans G =
          geometric_means(normalized(minors(random_positive(n, 7000 + seed))));
      const std::vector<double> a = normalized_logs(G);
      double max_int = 0.0, min_int = 1e300;
      for (int k = 2; k <= n - 2; ++k) {
        max_int = std::max(max_int, a[static_cast<std::size_t>(k - 1)]);
        min_int = std::min(min_int, a[static_cast<std::size_t>(k - 1)]);
      }
      if (max_int > 1e-8) {
        CHECK(min_int > 0.0);
      }
    }
  }
}

TEST_CASE("certify_point at the cyclic matrix") {
  for (int n = 3; n <= 12; ++n) {
    const CertificateReport report =
        certify_point(cyclic_matrix(n), {1e-12, 1e-12});
    CHECK(report.passed);
    CHECK(std::abs(report.lower_bound_gap) <= 1e-12 * optimal_loss(n));
    CHECK(report.E_value == doctest::Approx(report.L_value).epsilon(1e-12));
    CHECK(report.relation_max_residual <= 1e-12);
    CHECK(report.geomean_violations.empty());
    CHECK(report.linear_violations.empty());
  }
}

TEST_CASE("certify_point at random positive points") {
  for (int n = 4; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const CertificateReport report =
          certify_point(random_positive(n, 40 * n + seed));
      CHECK(report.passed);
      CHECK(report.lower_bound_gap >= -1e-9);
      CHECK(report.L_value <= report.E_value * (1 + 1e-12));
    }
  }
}

TEST_CASE("certify_point rejects non-positive points") {
  CHECK_THROWS_AS(certify_point(PointMatrix({{1, 0}, {0, 1}, {1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("coordinate ratio never beats the theoretical optimum") {
  for (int n = 4; n <= 10; ++n) {
    const double bound = optimal_loss(n) - 1e-9;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      CHECK(plucker_ratio(minors(random_positive(n, seed))) >= bound);
    }
  }
}
