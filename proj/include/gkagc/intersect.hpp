#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gkagc/curve.hpp"
#include "gkagc/funcfield.hpp"

namespace gkagc {

/// A nonzero bivariate polynomial over GF(q^2) in the plane variables Y, Z,
/// stored as a map from (degY, degZ) to its nonzero coefficient.
class PlaneCurve {
 public:
  using Key = std::pair<int, int>;

  explicit PlaneCurve(std::shared_ptr<const Field> f) : field_(std::move(f)) {}

  static PlaneCurve monomial(std::shared_ptr<const Field> f, int degY, int degZ,
                             Field::Elt coeff) {
    PlaneCurve p(std::move(f));
    p.add_term(degY, degZ, coeff);
    return p;
  }

  void add_term(int degY, int degZ, Field::Elt c);
  const std::map<Key, Field::Elt>& terms() const { return terms_; }
  const std::shared_ptr<const Field>& field() const { return field_; }
  bool zero() const { return terms_.empty(); }
  int total_degree() const;
  std::string str() const;  // ASCII form, coefficients in w<k> notation

 private:
  std::shared_ptr<const Field> field_;
  std::map<Key, Field::Elt> terms_;
};

struct Multiplicity {
  bool infinite = false;
  long long value = 0;
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

/// Local intersection number of F and G at the origin of the YZ-plane, by
/// the recursive reduction on the Z=0 restrictions: split off Z factors
/// (each contributes the Y-order of the other restriction) and cancel
/// leading univariate terms with polynomial combinations. INFINITE exactly
/// when F and G share a component through the origin.
Multiplicity imult_origin(const PlaneCurve& F, const PlaneCurve& G);

/// The plane section C1 of the cone cut out by the second curve equation,
/// centered at an O2 point P = (a,b,c):
///   (a + b^qbar Y - Z)^qbar + (a + b^qbar Y - Z) - (b + Y)^(qbar+1),
/// expanded over GF(q^2). Its constant term vanishes iff P lies on the
/// curve; a nonzero constant term is rejected.
PlaneCurve c1_curve(const CurveParams& params, const CurvePoint& P);

struct PlaneMonomial {
  int degY = 0, degZ = 0;
  friend bool operator==(const PlaneMonomial&, const PlaneMonomial&) = default;
};

/// Monomial system data for the non-gap machinery: the maximum total degree
/// m and the valuation offset vO_E = -min_i v_O(g_i) on C1 (negative when
/// every monomial vanishes at the origin).
struct LinearSystem {
  std::vector<PlaneMonomial> monomials;
  int m = 0;
  long long vO_E = 0;
};

LinearSystem make_linear_system(const CurveParams& params, const CurvePoint& P,
                                std::vector<PlaneMonomial> monomials);

struct IntersectionReport {
  long long M = 0;  // intersection multiplicity of C1 and the combination
  long long N = 0;  // m(qbar^3+1) - M, a non-gap at P
  std::vector<Field::Elt> combination;
};

/// Certifies the non-gap N = m(qbar^3+1) - M attached to a combination
/// sum_i coeffs[i] * monomials[i] over C1. Also asserts the bracket
/// m(qbar^3-qbar) <= N <= m(qbar^3+1) + vO_E. The degree m defaults to the
/// maximum total degree of the monomials; pass m explicitly when the plane
/// monomials come from degree-m monomials in (X, Y, Z) with X set to 1.
IntersectionReport certify_nongap(const CurveParams& params, const CurvePoint& P,
                                  const std::vector<PlaneMonomial>& monomials,
                                  const std::vector<Field::Elt>& coeffs, int m = -1);

/// Same certificate for a function written in the barred generators: each
/// term xb^i yb^j zb^k maps to the plane monomial Y^j Z^k (all terms must
/// have equal total degree i+j+k = m).
IntersectionReport certify_barred_function(const BasePoint& bp,
                                           const std::vector<RationalFunction::Term>& terms);

struct NongapWitness {
  long long M = 0;
  long long N = 0;
  std::vector<Field::Elt> coeffs;  // lexicographically least witness
};

/// Enumerates all projective coefficient vectors (first nonzero coordinate
/// normalized to 1) over GF(q^2) for the given monomials, computes the
/// intersection multiplicity of each combination with C1, and returns the
/// distinct values found, as non-gaps N = m(qbar^3+1) - M, sorted by N.
/// Exactly v+1 distinct values must appear (v+1 = number of monomials);
/// fewer means the monomials are dependent on C1. Restricted to qbar=2,
/// where the search space has ~266k representatives.
std::vector<NongapWitness> search_nongaps(const CurveParams& params, const CurvePoint& P,
                                          const std::vector<PlaneMonomial>& monomials);

/// The degree-2 monomial system used for the qbar=2 search: the Y,Z parts
/// of XZ, Z^2, Y^2, YZ.
std::vector<PlaneMonomial> standard_search_system();

}  // namespace gkagc
