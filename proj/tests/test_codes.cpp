#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "gkagc/codes.hpp"
#include "gkagc/io.hpp"

using namespace gkagc;

TEST_CASE("rank basics") {
  const auto f = Field::gf64();
  std::vector<std::vector<Field::Elt>> rows = {
      {1, 0, 0, 5}, {0, 2, 0, 9}, {0, 0, 7, 1}};
  CHECK(rank(*f, rows) == 3);
  rows.push_back(rows[1]);
  CHECK(rank(*f, rows) == 3);
  rows.push_back({0, 0, 0, 0});
  CHECK(rank(*f, rows) == 3);
  CHECK(rank(*f, {}) == 0);
}

TEST_CASE("parity matrices of C_l") {
  const auto params = CurveParams::make(2);
  const auto M1 = parity_matrix_Cl(params, Orbit::O1, 1);
  CHECK(M1.n == 224);
  REQUIRE(M1.rows.size() == 1);
  for (auto v : M1.rows[0]) CHECK(v == 1);

  const auto M2 = parity_matrix_Cl(params, Orbit::O1, 2);
  CHECK(M2.rows.size() == 2);
  CHECK(M2.row_pole_orders == std::vector<long long>{0, 6});
  CHECK(rank(*params.field, M2.rows) == 2);

  // nesting: the rows of C_l are the first rows of C_{l'}
  const auto M5 = parity_matrix_Cl(params, Orbit::O2, 5);
  const auto M3 = parity_matrix_Cl(params, Orbit::O2, 3);
  for (int i = 0; i < 3; ++i) CHECK(M5.rows[i] == M3.rows[i]);

  CHECK_THROWS_AS(parity_matrix_Cl(params, Orbit::O1, 0), std::invalid_argument);
}

TEST_CASE("improved parity matrices") {
  const auto params = CurveParams::make(2);
  const auto M1 = parity_matrix_improved(params, Orbit::O1, 13);
  CHECK(M1.rows.size() == 21);  // r_13 = 21, so k >= 203
  const auto M2 = parity_matrix_improved(params, Orbit::O2, 13);
  CHECK(M2.rows.size() == 20);  // r_13 = 20, so k >= 204
  CHECK(rank(*params.field, M2.rows) == 20);

  // when {i : nu_i < d} is an initial segment the improved code equals C_l
  const auto s = gk_semigroup(2, Orbit::O1);
  const long long d = 3;
  std::vector<long long> picked;
  for (long long i = 0; i <= 2 * s.conductor(); ++i)
    if (s.nu(i) < d) picked.push_back(i);
  REQUIRE(picked == std::vector<long long>{0, 1, 2, 3});
  const auto Mi = parity_matrix_improved(params, Orbit::O1, d);
  const auto Ml = parity_matrix_Cl(params, Orbit::O1, 4);
  CHECK(Mi.rows == Ml.rows);
}

TEST_CASE("exhaustive minimum distances at tiny dimension") {
  const auto params = CurveParams::make(2);
  const auto M = parity_matrix_Cl(params, Orbit::O1, 2);
  CHECK(min_distance_bruteforce(*params.field, {M.rows[0]}) == 224);
  const auto s = gk_semigroup(2, Orbit::O1);
  const long long w2 = min_distance_bruteforce(*params.field, M.rows);
  CHECK(w2 >= 224 - s.rho(2));
  CHECK_THROWS_AS(min_distance_bruteforce(*params.field,
                                          {M.rows[0], M.rows[0], M.rows[0], M.rows[0]}),
                  std::invalid_argument);
}

TEST_CASE("propagation rules") {
  const auto specs = propagate(224, 204, 13);
  std::set<std::tuple<long long, long long, long long>> got;
  for (const auto& c : specs) got.insert({c.n, c.k, c.d});
  CHECK(got.count({224, 204, 13}));  // s = 0
  CHECK(got.count({223, 203, 13}));
  CHECK(got.count({200, 180, 13}));
  CHECK(got.count({224, 204, 1}));
  CHECK(got.count({224, 1, 13}));
  const auto specs2 = propagate(224, 202, 14);
  std::set<std::tuple<long long, long long, long long>> got2;
  for (const auto& c : specs2) got2.insert({c.n, c.k, c.d});
  CHECK(got2.count({210, 188, 14}));
  // every emitted parameter set respects the Singleton bound
  for (const auto& c : specs) CHECK(c.k + c.d <= c.n + 1);
  CHECK_THROWS_AS(propagate(5, 5, 2), std::invalid_argument);
}

TEST_CASE("improved parameter list over GF(64)") {
  const auto rows = improvements_table();
  CHECK(rows.size() == 70);
  std::set<std::tuple<long long, long long, long long>> got;
  for (const auto& c : rows) {
    got.insert({c.n, c.k, c.d});
    CHECK(c.k + c.d <= c.n + 1);
  }
  CHECK(got.count({224, 204, 13}));
  CHECK(got.count({224, 196, 20}));
  CHECK(got.count({210, 187, 15}));
  CHECK(got.count({200, 180, 13}));
  CHECK(got.size() == 70);
}

TEST_CASE("GKMAT output is deterministic and well-formed") {
  const auto params = CurveParams::make(2);
  const auto M = parity_matrix_Cl(params, Orbit::O2, 3);
  std::ostringstream a, b;
  write_gkmat(a, M);
  write_gkmat(b, M);
  CHECK(a.str() == b.str());
  std::istringstream in(a.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "GKMAT/1");
  std::getline(in, line);
  CHECK(line == "p=2 m=6 irr=1,1,0,1,1,0,1");
  std::getline(in, line);
  CHECK(line == "qbar=2 orbit=O2 kind=Cl:3 n=224 rows=3");
  int data_lines = 0;
  while (std::getline(in, line)) ++data_lines;
  CHECK(data_lines == 3);
}
