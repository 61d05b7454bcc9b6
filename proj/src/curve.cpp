#include "gkagc/curve.hpp"

#include <algorithm>
#include <tuple>

namespace gkagc {

CurveParams CurveParams::make(int qbar, std::shared_ptr<const Field> field) {
  if (qbar < 2) throw std::invalid_argument("qbar must be a prime power >= 2");
  if (!field) {
    if (qbar == 2)
      field = Field::gf64();
    else if (qbar == 3)
      field = Field::gf729();
    else
      throw std::invalid_argument("no default field for qbar outside {2,3}");
  }
  CurveParams cp;
  cp.qbar = qbar;
  cp.q = (long long)qbar * qbar * qbar;
  std::uint64_t want = std::uint64_t(cp.q) * std::uint64_t(cp.q);
  if (field->size() != want) throw std::invalid_argument("field size must be qbar^6");
  cp.field = std::move(field);
  cp.genus = (cp.q + 1) * ((long long)qbar * qbar - 2) / 2 + 1;
  cp.expected_points = cp.q * cp.q + 1 + 2 * cp.genus * cp.q;
  return cp;
}

std::vector<int> h_poly(int qbar, int p) {
  std::vector<int> c(std::size_t(qbar) * (qbar - 1) + 1, 0);
  for (int i = 0; i <= qbar; ++i) {
    const int sgn = (i % 2 == 0) ? p - 1 : 1;  // (-1)^(i+1) mod p
    const std::size_t k = std::size_t(i) * (qbar - 1);
    c[k] = (c[k] + sgn) % p;
  }
  return c;
}

Field::Elt eval_prime_poly(const Field& f, const std::vector<int>& coeffs, Field::Elt x) {
  Field::Elt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = f.mul(acc, x);
    // lift the GF(p) coefficient as c * 1 (encoding of small integers is c itself)
    acc = f.add(acc, Field::Elt(((*it % f.p()) + f.p()) % f.p()));
  }
  return acc;
}

std::vector<CurvePoint> enumerate_points(const CurveParams& params) {
  const Field& F = *params.field;
  const int qbar = params.qbar;
  const std::uint32_t Q = F.size();
  const auto hc = h_poly(qbar, F.p());

  // fibers of the GF(qbar)-linear map x -> x^qbar + x
  std::vector<std::vector<Field::Elt>> fiber(Q);
  for (std::uint32_t x = 0; x < Q; ++x)
    fiber[F.add(F.pow(Field::Elt(x), qbar), Field::Elt(x))].push_back(Field::Elt(x));

  // fibers of z -> z^(qbar^2-qbar+1)
  const int d = qbar * qbar - qbar + 1;
  std::vector<std::vector<Field::Elt>> root(Q);
  for (std::uint32_t z = 0; z < Q; ++z)
    root[F.pow(Field::Elt(z), d)].push_back(Field::Elt(z));

  std::vector<CurvePoint> pts;
  pts.reserve(std::size_t(params.expected_points));
  pts.push_back(CurvePoint::at_infinity());
  for (std::uint32_t y = 0; y < Q; ++y) {
    const Field::Elt t = F.pow(Field::Elt(y), qbar + 1);
    for (Field::Elt x : fiber[t]) {
      const Field::Elt w = F.mul(Field::Elt(y), eval_prime_poly(F, hc, x));
      for (Field::Elt z : root[w]) pts.push_back(CurvePoint::affine(x, Field::Elt(y), z));
    }
  }
  std::sort(pts.begin() + 1, pts.end(), [](const CurvePoint& a, const CurvePoint& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  if ((long long)pts.size() != params.expected_points)
    throw invariant_error("point count does not attain the Hasse-Weil bound");
  return pts;
}

std::pair<long long, long long> orbit_census(const std::vector<CurvePoint>& points) {
  long long o1 = 0, o2 = 0;
  for (const auto& p : points) (p.orbit() == Orbit::O1 ? o1 : o2)++;
  return {o1, o2};
}

bool on_curve(const CurveParams& params, const CurvePoint& point) {
  if (point.infinite) return true;
  const Field& F = *params.field;
  const int qbar = params.qbar;
  const auto hc = h_poly(qbar, F.p());
  const bool eq1 = F.pow(point.z, qbar * qbar - qbar + 1) ==
                   F.mul(point.y, eval_prime_poly(F, hc, point.x));
  const bool eq2 = F.add(F.pow(point.x, qbar), point.x) == F.pow(point.y, qbar + 1);
  return eq1 && eq2;
}

bool on_hermitian_surface(const CurveParams& params, const CurvePoint& point) {
  if (point.infinite) throw std::invalid_argument("surface test expects an affine point");
  const Field& F = *params.field;
  const long long q = params.q;
  return F.add(F.pow(point.x, q), point.x) ==
         F.add(F.pow(point.y, q + 1), F.pow(point.z, q + 1));
}

long long stabilizer_order(int qbar, Orbit orbit) {
  const long long q3 = (long long)qbar * qbar * qbar;
  const long long q2 = (long long)qbar * qbar;
  if (orbit == Orbit::O1) return q3 * (q2 - 1) * (q2 - qbar + 1);
  return q2 - qbar + 1;
}

long long automorphism_group_order(int qbar) {
  const long long q3 = (long long)qbar * qbar * qbar;
  const long long q2 = (long long)qbar * qbar;
  return q3 * (q3 + 1) * (q2 - 1) * (q2 - qbar + 1);
}

long long orbit_size(int qbar, Orbit orbit) {
  const long long q3 = (long long)qbar * qbar * qbar;
  const long long q2 = (long long)qbar * qbar;
  if (orbit == Orbit::O1) return q3 + 1;
  return q3 * (q3 + 1) * (q2 - 1);
}

}  // namespace gkagc
