#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include <nlohmann/json.hpp>

#include "isoshift/graph.hpp"
#include "isoshift/io.hpp"
#include "isoshift/random.hpp"
#include "test_util.hpp"

using namespace isoshift;
using nlohmann::json;

TEST_CASE("matrix JSON round trips bit-exactly") {
  const ComplexMatrix a = random_complex_matrix(5, 3, 17) * 1e-7;
  const json j = matrix_to_json(a, json{{"kind", "test"}});
  json meta;
  const ComplexMatrix back = matrix_from_json(json::parse(j.dump()), &meta);
  REQUIRE(back.rows() == 5);
  REQUIRE(back.cols() == 3);
  CHECK(back == a);  // exact, not approximate
  CHECK(meta.at("kind") == "test");
}

TEST_CASE("matrix JSON carries dimensions and meta") {
  ComplexMatrix a(1, 2);
  a << Complex(1.5, -2.25), Complex(0.0, 3.0);
  const json j = matrix_to_json(a, {});
  CHECK(j.at("n_rows") == 1);
  CHECK(j.at("n_cols") == 2);
  CHECK(j.at("re")[0][0] == 1.5);
  CHECK(j.at("im")[0][1] == 3.0);
  CHECK(j.at("meta").is_object());
}

TEST_CASE("matrix JSON rejects malformed payloads") {
  CHECK_THROWS_AS(matrix_from_json(json::parse("{}")), std::runtime_error);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(
          R"({"n_rows":2,"n_cols":1,"re":[[1.0]],"im":[[0.0]]})")),
      std::runtime_error);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(
          R"({"n_rows":1,"n_cols":2,"re":[[1.0]],"im":[[0.0]]})")),
      std::runtime_error);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(
          R"({"n_rows":0,"n_cols":0,"re":[],"im":[]})")),
      std::runtime_error);
}

TEST_CASE("spectral basis JSON round trips") {
  const SpectralBasis b = eig_sym(laplacian(make_cycle(5)), BasisSource::Laplacian);
  const SpectralBasis back = basis_from_json(json::parse(basis_to_json(b).dump()));
  CHECK(back.n == 5);
  CHECK(back.source == BasisSource::Laplacian);
  CHECK(back.psi == b.psi);
  CHECK(back.lambda == b.lambda);
  json broken = basis_to_json(b);
  broken["meta"].erase("lambda");
  CHECK_THROWS_AS(basis_from_json(broken), std::runtime_error);
}

TEST_CASE("csv round trips exactly in shortest form") {
  RealMatrix a(2, 3);
  a << 0.1, -2.0, 1e-17,
       3.5, 0.0, 123456.789;
  std::ostringstream os;
  write_csv(os, a);
  std::istringstream is(os.str());
  const RealMatrix back = read_csv(is);
  CHECK(back == a);
}

TEST_CASE("csv vectors are one value per line") {
  RealMatrix v(3, 1);
  v << 1.0, 2.5, -3.0;
  std::ostringstream os;
  write_csv(os, v);
  CHECK(os.str() == "1\n2.5\n-3\n");
}

TEST_CASE("csv reader reports parse errors and ragged rows") {
  std::istringstream bad("1.0,2.0\nx,3.0\n");
  CHECK_THROWS_WITH_AS(read_csv(bad), doctest::Contains("line 2"), std::runtime_error);
  std::istringstream ragged("1.0,2.0\n3.0\n");
  CHECK_THROWS_AS(read_csv(ragged), std::runtime_error);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), std::runtime_error);
}

TEST_CASE("format_double uses shortest round-trip representation") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  const double v = 0.1 + 0.2;
  CHECK(std::stod(format_double(v)) == v);
}
