#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkagc/funcfield.hpp"

using namespace gkagc;

TEST_CASE("O1 generator pole orders") {
  const auto bp2 = BasePoint::o1(CurveParams::make(2));
  REQUIRE(bp2.generators().size() == 3);
  CHECK(bp2.generators()[0].name == "x");
  CHECK(bp2.generators()[0].pole_order == 9);
  CHECK(bp2.generators()[1].pole_order == 6);
  CHECK(bp2.generators()[2].pole_order == 8);
  const auto bp3 = BasePoint::o1(CurveParams::make(3));
  CHECK(bp3.generators()[0].pole_order == 28);
  CHECK(bp3.generators()[1].pole_order == 21);
  CHECK(bp3.generators()[2].pole_order == 27);
}

TEST_CASE("O2 generator pole orders") {
  const auto p2 = CurveParams::make(2);
  const auto bp2 = BasePoint::o2(p2, designated_o2_point(p2));
  std::vector<long long> orders;
  for (const auto& g : bp2.generators()) orders.push_back(g.pole_order);
  CHECK(orders == std::vector<long long>{9, 8, 7, 13});

  const auto p3 = CurveParams::make(3);
  const auto bp3 = BasePoint::o2(p3, designated_o2_point(p3));
  orders.clear();
  for (const auto& g : bp3.generators()) orders.push_back(g.pole_order);
  CHECK(orders == std::vector<long long>{28, 27, 25, 74, 121});
  CHECK(bp3.has_gamma());
}

TEST_CASE("gamma is tied to the designated point") {
  const auto p3 = CurveParams::make(3);
  const auto designated = designated_o2_point(p3);
  CurvePoint other;
  for (const auto& q : enumerate_points(p3))
    if (q.orbit() == Orbit::O2 && !(q == designated)) {
      other = q;
      break;
    }
  const auto bp = BasePoint::o2(p3, other);
  CHECK(!bp.has_gamma());
  CHECK(bp.generators().size() == 4);
  const auto s = gk_semigroup(3, Orbit::O2);
  CHECK(lseries_basis(s, bp, s.index_of(74)).size() == (std::size_t)s.index_of(74));
  CHECK_THROWS_WITH_AS(lseries_basis(s, bp, s.index_of(121)),
                       "gamma known only at the designated point", std::invalid_argument);
}

TEST_CASE("base point validation") {
  const auto p2 = CurveParams::make(2);
  for (const auto& q : enumerate_points(p2)) {
    if (q.orbit() == Orbit::O1 && !q.infinite) {
      CHECK_THROWS_AS(BasePoint::o2(p2, q), std::invalid_argument);
      break;
    }
  }
  CHECK_THROWS_AS(BasePoint::o2(p2, CurvePoint::affine(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("evaluation at the infinite point and at poles") {
  const auto p2 = CurveParams::make(2);
  const auto bp = BasePoint::o2(p2, designated_o2_point(p2));
  const auto v = bp.generator_values(CurvePoint::at_infinity());
  CHECK(v[0] == 0);  // xbar
  CHECK(v[1] == 0);  // ybar
  CHECK(v[2] == 1);  // zbar
  CHECK_THROWS_AS(bp.generator_values(bp.point()), std::invalid_argument);
  const auto o1 = BasePoint::o1(p2);
  CHECK_THROWS_AS(o1.generator_values(CurvePoint::at_infinity()), std::invalid_argument);
}

TEST_CASE("evaluation is linear in the terms") {
  const auto p2 = CurveParams::make(2);
  const auto bp = BasePoint::o2(p2, designated_o2_point(p2));
  const Field& F = *p2.field;
  const auto pts = enumerate_points(p2);
  std::mt19937 rng(13);
  std::uniform_int_distribution<std::uint32_t> coeff(0, 63);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    RationalFunction f, g, sum;
    f.terms.push_back({{expo(rng), expo(rng), expo(rng), expo(rng)}, Field::Elt(coeff(rng))});
    g.terms.push_back({{expo(rng), expo(rng), expo(rng), expo(rng)}, Field::Elt(coeff(rng))});
    sum.terms = f.terms;
    sum.terms.insert(sum.terms.end(), g.terms.begin(), g.terms.end());
    const auto& Q = pts[pick(rng)];
    if (Q == bp.point()) continue;
    const auto vals = bp.generator_values(Q);
    CHECK(sum.evaluate(F, vals) == F.add(f.evaluate(F, vals), g.evaluate(F, vals)));
  }
  // the constant function is 1 everywhere
  RationalFunction one;
  one.terms.push_back({{0, 0, 0, 0}, 1});
  for (const auto& Q : pts) {
    if (Q == bp.point()) continue;
    CHECK(one.evaluate(F, bp.generator_values(Q)) == 1);
  }
}

TEST_CASE("canonical factorization over generator orders") {
  // 12 over {9, 6, 8} needs backtracking past both 9 and 8
  const auto exps = factor_over_generators(12, {9, 6, 8});
  REQUIRE(exps.has_value());
  CHECK(*exps == std::vector<int>{0, 2, 0});
  CHECK(factor_over_generators(24, {9, 6, 8}) == std::vector<int>{2, 1, 0});
  CHECK(!factor_over_generators(5, {9, 6, 8}).has_value());
  CHECK(factor_over_generators(0, {9, 6, 8}) == std::vector<int>{0, 0, 0});
}

TEST_CASE("basis functions realize the first non-gaps") {
  const auto p2 = CurveParams::make(2);
  const auto bp = BasePoint::o2(p2, designated_o2_point(p2));
  const auto s = gk_semigroup(2, Orbit::O2);
  const auto basis = lseries_basis(s, bp, 5);
  REQUIRE(basis.size() == 5);
  const std::vector<long long> orders = {0, 7, 8, 9, 13};
  const std::vector<std::vector<int>> exps = {
      {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}};
  for (int i = 0; i < 5; ++i) {
    CHECK(basis[i].pole_order == orders[i]);
    CHECK(basis[i].terms.size() == 1);
    CHECK(basis[i].terms[0].exps == exps[i]);
  }
  // O1: rho = 12 is realized by y^2
  const auto o1 = BasePoint::o1(p2);
  const auto s1 = gk_semigroup(2, Orbit::O1);
  const auto b1 = lseries_basis(s1, o1, s1.index_of(12));
  CHECK(b1.back().terms[0].exps == std::vector<int>{0, 2, 0});
}

TEST_CASE("denominator plane meets the curve only at the base point") {
  for (int qbar : {2, 3}) {
    const auto params = CurveParams::make(qbar);
    const auto pts = enumerate_points(params);
    const auto bp = BasePoint::o2(params, designated_o2_point(params));
    CHECK(denominator_nonvanishing(bp, pts));
  }
}

TEST_CASE("transformed curve equations hold at every rational point") {
  for (int qbar : {2, 3}) {
    const auto params = CurveParams::make(qbar);
    const auto pts = enumerate_points(params);
    const auto bp = BasePoint::o2(params, designated_o2_point(params));
    CHECK(transformed_curve_equations_hold(bp, pts));
  }
}
