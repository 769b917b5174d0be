#include <doctest.h>

#include <stdexcept>
#include <sstream>

#include "grmin/extremal.hpp"
#include "grmin/json_io.hpp"
#include "grmin/reconstruct.hpp"
#include "test_helpers.hpp"

using namespace grmin;
using grmin::test::random_matrix;
using grmin::test::random_positive;

TEST_CASE("matrix json roundtrip is exact, including through text") {
  const PointMatrix X = random_matrix(6, 77);
  CHECK(matrix_from_json(matrix_to_json(X)).columns() == X.columns());
  const std::string text = matrix_to_json(X).dump();
  CHECK(matrix_from_json(json::parse(text)).columns() == X.columns());
}

TEST_CASE("matrix json validation") {
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n": 3})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(R"({"n": 3, "columns": [[1,0],[0,1]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(
          R"({"n": 3, "columns": [[1,0],[0,1],[1]]})")),
      std::invalid_argument);
}

TEST_CASE("plucker json uses i,j keys") {
  const PluckerVector P = minors(random_matrix(5, 13));
  const json j = plucker_to_json(P);
  CHECK(j.contains("1,2"));
  CHECK(j.contains("4,5"));
  CHECK(j.size() == 10);
  const PluckerVector Q = plucker_from_json(j);
  CHECK(Q.entries() == P.entries());
}

TEST_CASE("plucker json validation") {
  CHECK_THROWS_AS(plucker_from_json(json::parse(R"({"1,2": 1.0})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(plucker_from_json(json::parse(R"({"2,1": 1.0, "x": 2})")),
                  std::invalid_argument);
}

TEST_CASE("outer-orbit json roundtrip") {
  const OuterOrbitData data = extract_outer_orbits(minors(random_positive(7, 3)));
  const OuterOrbitData back = outer_from_json(outer_to_json(data));
  CHECK(back.n() == 7);
  CHECK(back.values() == data.values());

  // An inner pair in the map is rejected.
  json j = outer_to_json(data);
  j["1,3"] = 0.5;
  CHECK_THROWS_AS(outer_from_json(j), std::invalid_argument);
}

TEST_CASE("report serializers carry the headline fields") {
  const CertificateReport cert = certify_point(cyclic_matrix(5));
  const json jc = certificate_to_json(cert);
  CHECK(jc.at("passed").get<bool>());
  CHECK(jc.at("n").get<int>() == 5);
  CHECK(jc.contains("E_value"));
  CHECK(jc.contains("tol_rel"));

  const OrbitTable table(4);
  const json jo = orbit_table_to_json(table);
  CHECK(jo.at("d").get<int>() == 2);
  CHECK(jo.at("orbits").at("1").size() == 4);
  CHECK(jo.at("distinct").at("2").size() == 2);
}

TEST_CASE("csv writers") {
  GeoMeans G = geometric_means(minors(cyclic_matrix(4)));
  G.a = normalized_logs(G);
  std::ostringstream os;
  write_geomeans_csv(os, G);
  CHECK(os.str().substr(0, 9) == "k,D_k,a_k");

  std::ostringstream os2;
  write_slacks_csv(os2, geomean_slacks(G));
  CHECK(os2.str().substr(0, 11) == "j,k,l,slack");
}
