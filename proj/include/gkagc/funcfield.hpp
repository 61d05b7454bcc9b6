#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkagc/curve.hpp"
#include "gkagc/semigroup.hpp"

namespace gkagc {

struct GeneratorFunction {
  std::string name;
  long long pole_order = 0;
  std::string definition;  // human-readable formula, coefficients in w<k> notation
};

/// A polynomial in the generator functions of a base point: a sum of
/// coefficient * product(gen_i ^ e_i) terms. pole_order is the maximum of
/// sum(e_i * pole_order_i) over the terms; for the single-monomial functions
/// produced by lseries_basis this is the exact pole order at the base point.
struct RationalFunction {
  struct Term {
    std::vector<int> exps;  // one exponent per generator function
    Field::Elt coeff = 0;
  };
  std::vector<Term> terms;
  long long pole_order = 0;

  Field::Elt evaluate(const Field& f, const std::vector<Field::Elt>& genvals) const;
};

/// A base point P together with its generator functions. For O1 the base
/// point is always X_inf and the generators are the coordinate functions
/// x, y, z. For O2 the generators are the barred functions
///   xbar = 1 / L,  ybar = (y - b) / L,  zbar = (-a^qbar - x + b^qbar y) / L,
/// with L = -a^q - x + b^q y + c^q z, plus beta (pole order 13 for qbar=2,
/// 74 for qbar=3) and, at the designated GF(729) point, gamma (121).
/// Evaluation at X_inf goes through the projective transform sending P to
/// X_inf, under which (xbar, ybar, zbar)(X_inf) = (0, 0, 1).
class BasePoint {
 public:
  static BasePoint o1(const CurveParams& params);
  static BasePoint o2(const CurveParams& params, const CurvePoint& P);

  const CurveParams& params() const { return params_; }
  Orbit orbit() const { return orbit_; }
  const CurvePoint& point() const { return point_; }
  bool has_gamma() const { return has_gamma_; }
  const std::vector<GeneratorFunction>& generators() const { return gens_; }

  /// Values of all generator functions at Q != P.
  std::vector<Field::Elt> generator_values(const CurvePoint& Q) const;

  /// The expansion of a named generator in (xbar, ybar, zbar) exponents, or
  /// nullopt for the coordinate generators themselves. Exponent vectors are
  /// (e_xbar, e_ybar, e_zbar).
  std::optional<std::vector<RationalFunction::Term>> barred_expansion(const std::string& name) const;

 private:
  BasePoint() = default;
  CurveParams params_;
  Orbit orbit_ = Orbit::O1;
  CurvePoint point_;
  bool has_gamma_ = false;
  std::vector<GeneratorFunction> gens_;
  // precomputed point data for O2 evaluation
  Field::Elt aq_ = 0, bq_ = 0, cq_ = 0;    // a^q, b^q, c^q
  Field::Elt aqb_ = 0, bqb_ = 0;           // a^qbar, b^qbar
  std::vector<RationalFunction::Term> beta_, gamma_;  // expansions in xb,yb,zb
};

/// The designated O2 base point: for qbar=3 the specific point
/// (w^11, w^280, w^88) at which gamma is known; for qbar=2 the first O2
/// point in canonical enumeration order (all O2 points are equivalent).
CurvePoint designated_o2_point(const CurveParams& params);

/// Canonical factorization of target as a nonnegative combination of the
/// given pole orders: greedy on the largest order first with backtracking,
/// i.e. the lexicographically greatest exponent vector in descending-order
/// position. Returns exponents aligned with `orders`; nullopt if target is
/// not representable.
std::optional<std::vector<int>> factor_over_generators(long long target,
                                                       const std::vector<long long>& orders);

/// f_1 .. f_ell with pole orders rho(1) .. rho(ell), each a single monomial
/// in the base point's generator functions.
std::vector<RationalFunction> lseries_basis(const NumericalSemigroup& s, const BasePoint& bp,
                                            long long ell);

/// Checks that the plane -a^q - X + b^q Y + c^q Z meets the curve only at P:
/// the evaluation denominator must be nonzero at every rational Q != P.
bool denominator_nonvanishing(const BasePoint& bp, const std::vector<CurvePoint>& points);

/// Verifies that the images (xbar, ybar, zbar)(Q) satisfy both displayed
/// equations of the transformed curve, for every affine or infinite Q != P.
bool transformed_curve_equations_hold(const BasePoint& bp, const std::vector<CurvePoint>& points);

}  // namespace gkagc
