// Independent reference implementations used only by the tests. These stay
// deliberately naive so they cannot share a bug with the library code they
// check.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "gkagc/field.hpp"
#include "gkagc/intersect.hpp"

namespace gkagc::oracle {

// ---- numerical semigroups by plain set closure -------------------------

struct NaiveSemigroup {
  std::set<long long> elements;  // all members up to bound
  long long bound = 0;
  std::vector<long long> gaps;
  long long conductor = 0;

  static NaiveSemigroup closure(const std::vector<long long>& gens, long long bound) {
    NaiveSemigroup s;
    s.bound = bound;
    s.elements.insert(0);
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<long long> cur(s.elements.begin(), s.elements.end());
      for (long long e : cur)
        for (long long g : gens) {
          if (e + g <= bound && !s.elements.count(e + g)) {
            s.elements.insert(e + g);
            changed = true;
          }
        }
    }
    for (long long i = 0; i <= bound; ++i)
      if (!s.elements.count(i)) s.gaps.push_back(i);
    s.conductor = s.gaps.empty() ? 0 : s.gaps.back() + 1;
    return s;
  }

  long long rho(long long l) const {  // 1-based
    if (l < 1 || (std::size_t)l > elements.size())
      throw std::out_of_range("naive semigroup: rho index beyond the stored window");
    auto it = elements.begin();
    std::advance(it, l - 1);
    return *it;
  }

  long long nu(long long l) const {
    const long long t = rho(l + 1);
    long long n = 0;
    for (long long a = 0; a <= t; ++a)
      if (elements.count(a) && elements.count(t - a)) ++n;
    return n;
  }
};

// ---- intersection numbers via resultants --------------------------------

// Determinant over the field by exact elimination
inline Field::Elt det(const Field& f, std::vector<std::vector<Field::Elt>> m) {
  const std::size_t n = m.size();
  Field::Elt result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      result = f.neg(result);
    }
    result = f.mul(result, m[col][col]);
    const Field::Elt inv = f.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Field::Elt factor = f.mul(m[r][col], inv);
      for (std::size_t c = col; c < n; ++c)
        m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
    }
  }
  return result;
}

// Coefficients of F as a polynomial in Z: index = degZ, value = univariate
// poly in Y (little-endian).
inline std::vector<std::vector<Field::Elt>> z_coefficients(const PlaneCurve& F) {
  int dz = 0, dy = 0;
  for (const auto& [k, c] : F.terms()) {
    dy = std::max(dy, k.first);
    dz = std::max(dz, k.second);
  }
  std::vector<std::vector<Field::Elt>> out(std::size_t(dz) + 1,
                                           std::vector<Field::Elt>(std::size_t(dy) + 1, 0));
  for (const auto& [k, c] : F.terms()) out[std::size_t(k.second)][std::size_t(k.first)] = c;
  return out;
}

// Res_Z(F, G) as a univariate polynomial in Y, via per-coefficient
// interpolation-free Sylvester evaluation: build the Sylvester matrix with
// polynomial entries, expand by evaluating at sample points and
// interpolating through Lagrange over the field.
inline std::vector<Field::Elt> resultant_z(const Field& f, const PlaneCurve& F,
                                           const PlaneCurve& G) {
  const auto fc = z_coefficients(F);
  const auto gc = z_coefficients(G);
  const int n = int(fc.size()) - 1, m = int(gc.size()) - 1;
  if (n <= 0 && m <= 0) throw std::invalid_argument("need positive Z-degree");

  auto eval_at = [&](const std::vector<std::vector<Field::Elt>>& coeffs, int zi, Field::Elt y) {
    Field::Elt acc = 0;
    const auto& poly = coeffs[std::size_t(zi)];
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = f.add(f.mul(acc, y), *it);
    return acc;
  };

  // degree bound of the resultant in Y
  int degy_f = 0, degy_g = 0;
  for (const auto& row : fc) degy_f = std::max(degy_f, int(row.size()) - 1);
  for (const auto& row : gc) degy_g = std::max(degy_g, int(row.size()) - 1);
  const int dbound = degy_f * m + degy_g * n;
  if (std::size_t(dbound) + 1 > f.size())
    throw std::invalid_argument("resultant degree exceeds field size");

  // evaluate det(Sylvester) at dbound+1 sample points, then Lagrange-interpolate
  std::vector<Field::Elt> xs, ys;
  for (int s = 0; s <= dbound; ++s) {
    const Field::Elt y = Field::Elt(s);
    std::vector<std::vector<Field::Elt>> syl(std::size_t(n + m),
                                             std::vector<Field::Elt>(std::size_t(n + m), 0));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c <= n; ++c) syl[std::size_t(r)][std::size_t(r + c)] = eval_at(fc, n - c, y);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c <= m; ++c)
        syl[std::size_t(m + r)][std::size_t(r + c)] = eval_at(gc, m - c, y);
    xs.push_back(y);
    ys.push_back(det(f, syl));
  }
  // Lagrange interpolation
  std::vector<Field::Elt> poly(std::size_t(dbound) + 1, 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Field::Elt> basis = {1};
    Field::Elt denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      // basis *= (Y - xs[j])
      std::vector<Field::Elt> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = f.add(next[k + 1], basis[k]);
        next[k] = f.add(next[k], f.mul(basis[k], f.neg(xs[j])));
      }
      basis = next;
      denom = f.mul(denom, f.sub(xs[i], xs[j]));
    }
    const Field::Elt scale = f.mul(ys[i], f.inv(denom));
    for (std::size_t k = 0; k < basis.size(); ++k)
      poly[k] = f.add(poly[k], f.mul(scale, basis[k]));
  }
  return poly;
}

// ord_{Y=0} Res_Z(F,G); -1 encodes the zero resultant (common component).
inline long long resultant_valuation(const Field& f, const PlaneCurve& F, const PlaneCurve& G) {
  const auto res = resultant_z(f, F, G);
  for (std::size_t i = 0; i < res.size(); ++i)
    if (res[i] != 0) return (long long)i;
  return -1;
}

// gcd of F(0,Z) and G(0,Z) is a unit times a power of Z: then the origin is
// the only common point on the line Y=0 over the closure, and with both
// leading Z-coefficients nonvanishing at Y=0 the resultant valuation equals
// the local intersection number at O.
inline bool resultant_oracle_applicable(const Field& f, const PlaneCurve& F,
                                        const PlaneCurve& G) {
  auto restrict_y0 = [&](const PlaneCurve& P) {
    std::vector<Field::Elt> u;
    for (const auto& [k, c] : P.terms()) {
      if (k.first != 0) continue;
      if (std::size_t(k.second) >= u.size()) u.resize(std::size_t(k.second) + 1, 0);
      u[std::size_t(k.second)] = c;
    }
    return u;
  };
  auto deg = [](const std::vector<Field::Elt>& u) {
    int d = int(u.size()) - 1;
    while (d >= 0 && u[std::size_t(d)] == 0) --d;
    return d;
  };
  std::vector<Field::Elt> a = restrict_y0(F), b = restrict_y0(G);
  if (deg(a) < 0 || deg(b) < 0) return false;
  // leading Z-coefficients must not vanish at Y=0
  const auto fc = z_coefficients(F), gc = z_coefficients(G);
  if (fc.back()[0] == 0 || gc.back()[0] == 0) return false;
  // univariate gcd of the Y=0 restrictions
  while (true) {
    const int db = deg(b);
    if (db < 0) break;
    const int da = deg(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    const Field::Elt c = f.div(a[std::size_t(da)], b[std::size_t(db)]);
    for (int k = 0; k <= db; ++k)
      a[std::size_t(da - db + k)] =
          f.sub(a[std::size_t(da - db + k)], f.mul(c, b[std::size_t(k)]));
  }
  const int dg = deg(a);
  if (dg < 0) return false;
  for (int i = 0; i < dg; ++i)
    if (a[std::size_t(i)] != 0) return false;  // gcd has a root other than Z=0
  return true;
}

}  // namespace gkagc::oracle
