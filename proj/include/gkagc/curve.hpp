#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "gkagc/field.hpp"

namespace gkagc {

/// A GF(q^2)-rational point of the GK curve: either the single infinite
/// point X_inf = (0:1:0:0) or an affine triple (x,y,z) satisfying
///   z^(qbar^2-qbar+1) = y*h(x)  and  x^qbar + x = y^(qbar+1).
struct CurvePoint {
  bool infinite = false;
  Field::Elt x = 0, y = 0, z = 0;

  Orbit orbit() const { return (infinite || z == 0) ? Orbit::O1 : Orbit::O2; }

  static CurvePoint at_infinity() { return CurvePoint{true, 0, 0, 0}; }
  static CurvePoint affine(Field::Elt x, Field::Elt y, Field::Elt z) {
    return CurvePoint{false, x, y, z};
  }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || (a.x == b.x && a.y == b.y && a.z == b.z);
  }
};

/// The GK curve over GF(q^2), q = qbar^3.
struct CurveParams {
  int qbar = 0;
  long long q = 0;  // qbar^3
  std::shared_ptr<const Field> field;  // GF(q^2)
  long long genus = 0;
  long long expected_points = 0;

  /// qbar in {2,3}; field defaults to Field::gf64()/gf729() when omitted.
  static CurveParams make(int qbar, std::shared_ptr<const Field> field = nullptr);
};

/// Coefficients of h(X) = sum_{i=0}^{qbar} (-1)^(i+1) X^(i(qbar-1)) over
/// GF(p), little-endian, degree qbar(qbar-1).
std::vector<int> h_poly(int qbar, int p);

/// Evaluates a GF(p)-coefficient polynomial at a field element.
Field::Elt eval_prime_poly(const Field& f, const std::vector<int>& coeffs, Field::Elt x);

/// All GF(q^2)-rational points in canonical order: X_inf first, then affine
/// points sorted by (x, y, z) encodings. Length equals expected_points.
std::vector<CurvePoint> enumerate_points(const CurveParams& params);

/// (#O1, #O2); the theorem values are qbar^3+1 and qbar^3(qbar^3+1)(qbar^2-1).
std::pair<long long, long long> orbit_census(const std::vector<CurvePoint>& points);

/// Membership in the Hermitian surface x^q + x = y^(q+1) + z^(q+1).
bool on_hermitian_surface(const CurveParams& params, const CurvePoint& point);

bool on_curve(const CurveParams& params, const CurvePoint& point);

/// Order of the stabilizer of a point in the given orbit under Aut(X).
long long stabilizer_order(int qbar, Orbit orbit);

/// |Aut(X)| = qbar^3 (qbar^3+1)(qbar^2-1)(qbar^2-qbar+1).
long long automorphism_group_order(int qbar);

long long orbit_size(int qbar, Orbit orbit);

}  // namespace gkagc
