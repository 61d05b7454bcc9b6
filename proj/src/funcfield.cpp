#include "gkagc/funcfield.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gkagc {
namespace {

std::string coeff_str(const Field& f, Field::Elt c) {
  if (c == 0) return "0";
  if (c < Field::Elt(f.p())) return std::to_string(int(c));
  std::uint32_t k = 0;
  while (f.gen_pow(k) != c) ++k;
  return "w" + std::to_string(k);
}

std::string term_str(const Field& f, const RationalFunction::Term& t,
                     const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  if (t.coeff != 1) {
    os << coeff_str(f, t.coeff);
    first = false;
  }
  for (std::size_t i = 0; i < t.exps.size(); ++i) {
    if (t.exps[i] == 0) continue;
    if (!first) os << "*";
    os << names[i];
    if (t.exps[i] > 1) os << "^" << t.exps[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string expansion_str(const Field& f, const std::vector<RationalFunction::Term>& terms,
                          const std::vector<std::string>& names) {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    os << term_str(f, terms[i], names);
  }
  return os.str();
}

}  // namespace

Field::Elt RationalFunction::evaluate(const Field& f,
                                      const std::vector<Field::Elt>& genvals) const {
  Field::Elt acc = 0;
  for (const auto& t : terms) {
    Field::Elt v = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i]) v = f.mul(v, f.pow(genvals[i], t.exps[i]));
    acc = f.add(acc, v);
  }
  return acc;
}

CurvePoint designated_o2_point(const CurveParams& params) {
  const Field& F = *params.field;
  if (params.qbar == 3)
    return CurvePoint::affine(F.gen_pow(11), F.gen_pow(280), F.gen_pow(88));
  for (const auto& pt : enumerate_points(params))
    if (pt.orbit() == Orbit::O2) return pt;
  throw invariant_error("curve has no O2 point");
}

BasePoint BasePoint::o1(const CurveParams& params) {
  BasePoint bp;
  bp.params_ = params;
  bp.orbit_ = Orbit::O1;
  bp.point_ = CurvePoint::at_infinity();
  const long long q3 = params.q;
  const int qb = params.qbar;
  bp.gens_ = {
      {"x", q3 + 1, "x"},
      {"y", q3 - (long long)qb * qb + qb, "y"},
      {"z", q3, "z"},
  };
  return bp;
}

BasePoint BasePoint::o2(const CurveParams& params, const CurvePoint& P) {
  if (P.infinite || P.z == 0) throw std::invalid_argument("wrong orbit (O2 needs z != 0)");
  if (!on_curve(params, P)) throw std::invalid_argument("base point not on the curve");
  const Field& F = *params.field;
  const int qb = params.qbar;
  const long long q3 = params.q;

  BasePoint bp;
  bp.params_ = params;
  bp.orbit_ = Orbit::O2;
  bp.point_ = P;
  const Field::Elt a = P.x, b = P.y, c = P.z;
  bp.aq_ = F.pow(a, q3);
  bp.bq_ = F.pow(b, q3);
  bp.cq_ = F.pow(c, q3);
  bp.aqb_ = F.pow(a, qb);
  bp.bqb_ = F.pow(b, qb);

  std::ostringstream den;
  den << "(-" << coeff_str(F, bp.aq_) << " - x + " << coeff_str(F, bp.bq_) << "*y + "
      << coeff_str(F, bp.cq_) << "*z)";
  const std::vector<std::string> barred = {"xb", "yb", "zb"};

  if (qb == 2) {
    // beta = xb*zb + (c^-9 + 1) zb^2 + c^3 yb^2 + c^-3 yb*zb
    bp.beta_ = {
        {{1, 0, 1}, 1},
        {{0, 0, 2}, F.add(F.pow(c, -9), 1)},
        {{0, 2, 0}, F.pow(c, 3)},
        {{0, 1, 1}, F.pow(c, -3)},
    };
    bp.gens_ = {
        {"xb", q3 + 1, "1/" + den.str()},
        {"yb", q3, "(y - " + coeff_str(F, b) + ")/" + den.str()},
        {"zb", q3 - qb + 1,
         "(-" + coeff_str(F, bp.aqb_) + " - x + " + coeff_str(F, bp.bqb_) + "*y)/" + den.str()},
        {"beta", 13, expansion_str(F, bp.beta_, barred)},
    };
  } else if (qb == 3) {
    const Field::Elt two = F.neg(1);
    bp.beta_ = {
        {{2, 0, 1}, 1},
        {{1, 0, 2}, F.pow(c, -28)},
        {{1, 1, 1}, F.pow(c, -7)},
        {{0, 2, 1}, F.pow(c, -14)},
        {{0, 0, 3}, F.add(1, F.pow(c, -56))},
        {{0, 1, 2}, F.mul(two, F.pow(c, -35))},
        {{0, 3, 0}, F.mul(two, F.pow(c, 7))},
    };
    bp.gens_ = {
        {"xb", q3 + 1, "1/" + den.str()},
        {"yb", q3, "(y - " + coeff_str(F, b) + ")/" + den.str()},
        {"zb", q3 - qb + 1,
         "(-" + coeff_str(F, bp.aqb_) + " - x + " + coeff_str(F, bp.bqb_) + "*y)/" + den.str()},
        {"beta", 74, expansion_str(F, bp.beta_, barred)},
    };
    if (P == designated_o2_point(params)) {
      bp.has_gamma_ = true;
      auto wp = [&](long long k) { return F.gen_pow(k); };
      bp.gamma_ = {
          {{2, 3, 0}, wp(588)}, {{4, 0, 1}, wp(336)}, {{3, 1, 1}, wp(448)},
          {{2, 2, 1}, wp(560)}, {{3, 0, 2}, wp(700)}, {{1, 3, 1}, wp(112)},
          {{2, 1, 2}, wp(112)}, {{1, 2, 2}, wp(84)},  {{2, 0, 3}, wp(196)},
          {{0, 3, 2}, two},     {{1, 1, 3}, wp(392)}, {{0, 2, 3}, wp(28)},
          {{1, 0, 4}, wp(504)}, {{0, 1, 4}, wp(644)}, {{0, 0, 5}, wp(280)},
      };
      bp.gens_.push_back({"gamma", 121, expansion_str(F, bp.gamma_, barred)});
    }
  } else {
    throw std::invalid_argument("O2 generator functions known only for qbar in {2,3}");
  }
  return bp;
}

std::vector<Field::Elt> BasePoint::generator_values(const CurvePoint& Q) const {
  const Field& F = *params_.field;
  if (Q == point_) throw std::invalid_argument("pole: cannot evaluate at the base point");
  if (orbit_ == Orbit::O1) {
    if (Q.infinite) throw std::invalid_argument("pole: cannot evaluate at the base point");
    return {Q.x, Q.y, Q.z};
  }
  Field::Elt xb, yb, zb;
  if (Q.infinite) {
    xb = 0;
    yb = 0;
    zb = 1;
  } else {
    // L(Q) = -a^q - x + b^q y + c^q z
    Field::Elt den = F.add(F.neg(F.add(aq_, Q.x)),
                           F.add(F.mul(bq_, Q.y), F.mul(cq_, Q.z)));
    if (den == 0) throw invariant_error("unexpected zero denominator");
    const Field::Elt dinv = F.inv(den);
    xb = dinv;
    yb = F.mul(F.sub(Q.y, point_.y), dinv);
    zb = F.mul(F.sub(F.mul(bqb_, Q.y), F.add(aqb_, Q.x)), dinv);
  }
  std::vector<Field::Elt> vals = {xb, yb, zb};
  const std::vector<Field::Elt> base = {xb, yb, zb};
  auto expand = [&](const std::vector<RationalFunction::Term>& terms) {
    Field::Elt acc = 0;
    for (const auto& t : terms) {
      Field::Elt v = t.coeff;
      for (int i = 0; i < 3; ++i)
        if (t.exps[i]) v = F.mul(v, F.pow(base[i], t.exps[i]));
      acc = F.add(acc, v);
    }
    return acc;
  };
  vals.push_back(expand(beta_));
  if (has_gamma_) vals.push_back(expand(gamma_));
  return vals;
}

std::optional<std::vector<RationalFunction::Term>> BasePoint::barred_expansion(
    const std::string& name) const {
  if (name == "beta" && orbit_ == Orbit::O2) return beta_;
  if (name == "gamma" && has_gamma_) return gamma_;
  return std::nullopt;
}

std::optional<std::vector<int>> factor_over_generators(long long target,
                                                       const std::vector<long long>& orders) {
  if (target < 0) return std::nullopt;
  const std::size_t n = orders.size();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return orders[a] > orders[b]; });

  std::vector<int> exps(n, 0);
  std::vector<int> out(n, 0);
  // DFS taking as many of the largest order as possible first; the first
  // complete solution is the canonical one
  std::function<bool(std::size_t, long long)> rec = [&](std::size_t i, long long rem) -> bool {
    if (rem == 0) {
      for (std::size_t j = i; j < n; ++j) exps[j] = 0;
      return true;
    }
    if (i == n) return false;
    for (long long e = rem / orders[idx[i]]; e >= 0; --e) {
      exps[i] = int(e);
      if (rec(i + 1, rem - e * orders[idx[i]])) return true;
    }
    return false;
  };
  if (!rec(0, target)) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) out[idx[i]] = exps[i];
  return out;
}

std::vector<RationalFunction> lseries_basis(const NumericalSemigroup& s, const BasePoint& bp,
                                            long long ell) {
  if (ell < 1) throw std::invalid_argument("basis length must be >= 1");
  std::vector<long long> orders;
  for (const auto& g : bp.generators()) orders.push_back(g.pole_order);
  std::vector<RationalFunction> out;
  out.reserve(std::size_t(ell));
  for (long long l = 1; l <= ell; ++l) {
    const long long target = s.rho(l);
    auto exps = factor_over_generators(target, orders);
    if (!exps) {
      if (bp.params().qbar == 3 && bp.orbit() == Orbit::O2 && !bp.has_gamma())
        throw std::invalid_argument("gamma known only at the designated point");
      throw invariant_error("pole order not representable over the generator functions");
    }
    RationalFunction f;
    f.terms.push_back({*exps, 1});
    f.pole_order = target;
    out.push_back(std::move(f));
  }
  return out;
}

bool denominator_nonvanishing(const BasePoint& bp, const std::vector<CurvePoint>& points) {
  if (bp.orbit() != Orbit::O2) return true;
  const Field& F = *bp.params().field;
  const long long q3 = bp.params().q;
  const Field::Elt aq = F.pow(bp.point().x, q3);
  const Field::Elt bq = F.pow(bp.point().y, q3);
  const Field::Elt cq = F.pow(bp.point().z, q3);
  for (const auto& Q : points) {
    if (Q.infinite || Q == bp.point()) continue;
    const Field::Elt den =
        F.add(F.neg(F.add(aq, Q.x)), F.add(F.mul(bq, Q.y), F.mul(cq, Q.z)));
    if (den == 0) return false;
  }
  return true;
}

bool transformed_curve_equations_hold(const BasePoint& bp, const std::vector<CurvePoint>& points) {
  if (bp.orbit() != Orbit::O2) return true;
  const Field& F = *bp.params().field;
  const int qb = bp.params().qbar;
  const long long q3 = bp.params().q;
  const Field::Elt a = bp.point().x, b = bp.point().y, c = bp.point().z;
  const auto hc = h_poly(qb, F.p());
  const Field::Elt cq_inv = F.pow(c, -q3);
  const Field::Elt bdiff = F.mul(F.sub(F.pow(b, qb), F.pow(b, q3)), cq_inv);
  for (const auto& Q : points) {
    if (Q == bp.point()) continue;
    const auto v = bp.generator_values(Q);
    const Field::Elt xt = v[0], yt = v[1], zt = v[2];
    // w = a*xt + b^qbar*yt - zt appears in both equations
    const Field::Elt w = F.sub(F.add(F.mul(a, xt), F.mul(F.pow(b, qb), yt)), zt);
    const Field::Elt lhsB = F.add(F.mul(xt, F.pow(w, qb)), F.mul(F.pow(xt, qb), w));
    const Field::Elt rhsB = F.pow(F.add(F.mul(b, xt), yt), qb + 1);
    if (lhsB != rhsB) return false;
    const Field::Elt t = F.add(F.add(cq_inv, F.mul(c, xt)),
                               F.sub(F.mul(bdiff, yt), F.mul(zt, cq_inv)));
    const Field::Elt lhsA = F.pow(t, qb * qb - qb + 1);
    const Field::Elt rhsA = F.mul(F.add(F.mul(b, xt), yt), eval_prime_poly(F, hc, w));
    if (lhsA != rhsA) return false;
  }
  return true;
}

}  // namespace gkagc
