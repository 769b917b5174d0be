#include <doctest.h>

#include <stdexcept>
#include <cmath>

#include "grmin/extremal.hpp"
#include "grmin/geomeans.hpp"
#include "test_helpers.hpp"

using namespace grmin;
using grmin::test::random_matrix;
using grmin::test::random_positive;

TEST_CASE("geometric means of the cyclic matrix, n=5") {
  const GeoMeans G = geometric_means(minors(cyclic_matrix(5)));
  const double s1 = std::sin(M_PI / 5);   // 0.5877852...
  const double s2 = std::sin(2 * M_PI / 5);  // 0.9510565...
  CHECK(G.D_at(1) == doctest::Approx(s1).epsilon(1e-12));
  CHECK(G.D_at(4) == doctest::Approx(s1).epsilon(1e-12));
  CHECK(G.D_at(2) == doctest::Approx(s2).epsilon(1e-12));
  CHECK(G.D_at(3) == doctest::Approx(s2).epsilon(1e-12));
}

TEST_CASE("geometric means scale with the vector") {
  const PluckerVector P = minors(random_positive(6, 5));
  const GeoMeans G = geometric_means(P);
  const GeoMeans Gs = geometric_means(P.scaled(2.5));
  for (int k = 1; k <= 5; ++k) {
    CHECK(Gs.D_at(k) == doctest::Approx(2.5 * G.D_at(k)).epsilon(1e-13));
  }
}

TEST_CASE("D-symmetry under the involution") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GeoMeans G = geometric_means(minors(random_positive(6, seed)));
    CHECK(std::abs(G.D_at(1) - G.D_at(5)) <= 1e-12 * G.D_at(1));
    CHECK(std::abs(G.D_at(2) - G.D_at(4)) <= 1e-12 * G.D_at(2));
  }
}

TEST_CASE("geometric_means rejects nonpositive entries") {
  PluckerVector P = minors(random_positive(5, 1));
  P.set(1, 2, 0.0);
  CHECK_THROWS_AS(geometric_means(P), std::invalid_argument);
  P.set(1, 2, -1.0);
  CHECK_THROWS_AS(geometric_means(P), std::invalid_argument);
}

TEST_CASE("normalized fixes D_1 to sin(pi/n)") {
  const PluckerVector PC = minors(cyclic_matrix(7));
  const PluckerVector N = normalized(PC);
  // The cyclic matrix already satisfies the normalization condition.
  for (const PairIndex& p : ordered_pairs(7)) {
    CHECK(N.at(p.i, p.j) == doctest::Approx(PC.at(p.i, p.j)).epsilon(1e-14));
  }
  // Scaling is removed.
  const PluckerVector N7 = normalized(PC.scaled(7.0));
  for (const PairIndex& p : ordered_pairs(7)) {
    CHECK(N7.at(p.i, p.j) == doctest::Approx(PC.at(p.i, p.j)).epsilon(1e-13));
  }
}

TEST_CASE("normalized random point has D_1 = sin(pi/8)") {
  const PluckerVector N = normalized(minors(random_positive(8, 21)));
  const GeoMeans G = geometric_means(N);
  CHECK(std::abs(G.D_at(1) - std::sin(M_PI / 8)) <= 1e-12);
}

TEST_CASE("normalized rejects nonpositive vectors") {
  CHECK_THROWS_AS(normalized(minors(PointMatrix({{1, 0}, {0, 1}, {1, 1}}))),
                  std::invalid_argument);
}

TEST_CASE("shifted relation with m=0 equals the plain residual") {
  const PluckerVector P = minors(random_matrix(6, 9));
  const std::array<int, 4> quad{1, 3, 4, 6};
  CHECK(shifted_relation_residual(P, quad, 0) == plucker_residual(P, quad));
}

TEST_CASE("shifted relation vanishes for all shifts") {
  const PluckerVector P = minors(random_positive(5, 2));
  const std::array<int, 4> quad{1, 2, 3, 4};
  for (int m = 0; m <= 4; ++m) {
    CHECK(std::abs(shifted_relation_residual(P, quad, m)) <=
          1e-12 * shifted_relation_scale(P, quad, m));
  }
  // Term roles swap at the wrap-around, the identity still holds.
  const PluckerVector PC = minors(cyclic_matrix(4));
  CHECK(std::abs(shifted_relation_residual(PC, {1, 2, 3, 4}, 1)) <=
        1e-12 * shifted_relation_scale(PC, {1, 2, 3, 4}, 1));
}

TEST_CASE("shift consistency on general matrices") {
  for (int n = 4; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const PluckerVector P = minors(random_matrix(n, 1000 * n + seed));
      for (int i = 1; i <= n - 3; ++i) {
        for (int j = i + 1; j <= n - 2; ++j) {
          for (int k = j + 1; k <= n - 1; ++k) {
            for (int l = k + 1; l <= n; ++l) {
              const std::array<int, 4> quad{i, j, k, l};
              for (int m = 0; m < n; ++m) {
                CHECK(std::abs(shifted_relation_residual(P, quad, m)) <=
                      1e-12 * shifted_relation_scale(P, quad, m));
              }
            }
          }
        }
      }
    }
  }
}
