#include "gkagc/intersect.hpp"

#include <algorithm>
#include <sstream>

namespace gkagc {

void PlaneCurve::add_term(int degY, int degZ, Field::Elt c) {
  if (degY < 0 || degZ < 0) throw std::invalid_argument("negative degree");
  const Key k{degY, degZ};
  auto it = terms_.find(k);
  const Field::Elt v = field_->add(it == terms_.end() ? Field::Elt(0) : it->second, c);
  if (v == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[k] = v;
  }
}

int PlaneCurve::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

std::string PlaneCurve::str() const {
  if (terms_.empty()) return "0";
  const Field& F = *field_;
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (c != 1 || (k.first == 0 && k.second == 0)) {
      if (c < Field::Elt(F.p())) {
        os << int(c);
      } else {
        std::uint32_t e = 0;
        while (F.gen_pow(e) != c) ++e;
        os << "w" << e;
      }
      printed = true;
    }
    if (k.first) {
      if (printed) os << "*";
      os << "Y";
      if (k.first > 1) os << "^" << k.first;
      printed = true;
    }
    if (k.second) {
      if (printed) os << "*";
      os << "Z";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

namespace {

// Internal polynomial form for the recursion: sorted (degY,degZ)->coeff maps
// copied from PlaneCurve. Small polynomials, so std::map is fine.
using Terms = std::map<PlaneCurve::Key, Field::Elt>;

bool vanishes_at_origin(const Terms& t) { return t.find({0, 0}) == t.end(); }

// restriction to Z=0 as a univariate map deg -> coeff
std::map<int, Field::Elt> restrict_z0(const Terms& t) {
  std::map<int, Field::Elt> u;
  for (const auto& [k, c] : t)
    if (k.second == 0) u[k.first] = c;
  return u;
}

Terms div_z(const Terms& t) {
  Terms out;
  for (const auto& [k, c] : t) out[{k.first, k.second - 1}] = c;
  return out;
}

Terms scale(const Field& F, const Terms& t, Field::Elt s) {
  Terms out;
  if (s == 0) return out;
  for (const auto& [k, c] : t) out[k] = F.mul(c, s);
  return out;
}

// a += s * Y^shift * b
void add_scaled_shifted(const Field& F, Terms& a, const Terms& b, Field::Elt s, int shift) {
  if (s == 0) return;
  for (const auto& [k, c] : b) {
    const PlaneCurve::Key key{k.first + shift, k.second};
    const Field::Elt v = F.add(a.count(key) ? a[key] : Field::Elt(0), F.mul(c, s));
    if (v == 0)
      a.erase(key);
    else
      a[key] = v;
  }
}

// The loop accumulates exact valuation increments, so if the true local
// number is finite it never exceeds the global Bezout bound deg(F)*deg(G);
// crossing that bound certifies a common component through the origin
// (on which the reduction would otherwise cycle forever).
Multiplicity imult_loop(const Field& F, Terms A, Terms B, long long cap) {
  long long acc = 0;
  while (true) {
    if (A.empty() || B.empty()) return {true, 0};  // one became a multiple of the other
    if (!vanishes_at_origin(A) || !vanishes_at_origin(B)) return {false, acc};
    auto a = restrict_z0(A);
    auto b = restrict_z0(B);
    if (a.empty() && b.empty()) return {true, 0};  // common component Z through O
    if (a.empty() || b.empty()) {
      if (a.empty()) {
        std::swap(A, B);
        std::swap(a, b);
      }
      // now B = Z * B1: I(A, Z*B1) = ord_Y(A|_{Z=0}) + I(A, B1)
      acc += a.begin()->first;
      if (acc > cap) return {true, 0};
      B = div_z(B);
      continue;
    }
    int r = a.rbegin()->first;
    int s = b.rbegin()->first;
    if (r > s) {
      std::swap(A, B);
      std::swap(a, b);
      std::swap(r, s);
    }
    // B' = lc(a)*B - lc(b)*Y^(s-r)*A  lowers the Z=0 restriction degree of B
    Terms Bp = scale(F, B, a.at(r));
    add_scaled_shifted(F, Bp, A, F.neg(b.at(s)), s - r);
    B = std::move(Bp);
  }
}

}  // namespace

Multiplicity imult_origin(const PlaneCurve& F, const PlaneCurve& G) {
  if (F.zero() || G.zero()) throw std::invalid_argument("zero polynomial");
  if (F.field().get() != G.field().get()) throw std::invalid_argument("mixed field specs");
  const long long cap = (long long)F.total_degree() * G.total_degree();
  return imult_loop(*F.field(), F.terms(), G.terms(), cap);
}

PlaneCurve c1_curve(const CurveParams& params, const CurvePoint& P) {
  if (P.infinite || P.z == 0) throw std::invalid_argument("wrong orbit (O2 needs z != 0)");
  const Field& F = *params.field;
  const int qb = params.qbar;
  const Field::Elt a = P.x, b = P.y;

  // lin = a + b^qbar * Y - Z
  PlaneCurve lin(params.field);
  lin.add_term(0, 0, a);
  lin.add_term(1, 0, F.pow(b, qb));
  lin.add_term(0, 1, F.neg(1));

  auto mul = [&](const PlaneCurve& X, const PlaneCurve& Y) {
    PlaneCurve out(params.field);
    for (const auto& [kx, cx] : X.terms())
      for (const auto& [ky, cy] : Y.terms())
        out.add_term(kx.first + ky.first, kx.second + ky.second, F.mul(cx, cy));
    return out;
  };

  PlaneCurve acc = lin;
  for (int i = 1; i < qb; ++i) acc = mul(acc, lin);  // lin^qbar
  PlaneCurve out = acc;
  for (const auto& [k, c] : lin.terms()) out.add_term(k.first, k.second, c);

  PlaneCurve byp(params.field);  // b + Y
  byp.add_term(0, 0, P.y);
  byp.add_term(1, 0, 1);
  PlaneCurve acc2 = byp;
  for (int i = 1; i < qb + 1; ++i) acc2 = mul(acc2, byp);
  for (const auto& [k, c] : acc2.terms()) out.add_term(k.first, k.second, F.neg(c));

  if (out.terms().count({0, 0})) throw std::invalid_argument("P not on curve");
  return out;
}

LinearSystem make_linear_system(const CurveParams& params, const CurvePoint& P,
                                std::vector<PlaneMonomial> monomials) {
  if (monomials.empty()) throw std::invalid_argument("empty monomial system");
  for (std::size_t i = 0; i < monomials.size(); ++i)
    for (std::size_t j = i + 1; j < monomials.size(); ++j)
      if (monomials[i] == monomials[j]) throw std::invalid_argument("duplicate monomials");
  const PlaneCurve C1 = c1_curve(params, P);
  // valuations of the coordinate functions at the origin of C1 (a smooth point)
  const auto vy = imult_origin(C1, PlaneCurve::monomial(params.field, 1, 0, 1));
  const auto vz = imult_origin(C1, PlaneCurve::monomial(params.field, 0, 1, 1));
  if (vy.infinite || vz.infinite) throw invariant_error("C1 contains a coordinate axis");
  LinearSystem sys;
  sys.monomials = std::move(monomials);
  long long minval = 0;
  bool first = true;
  for (const auto& mon : sys.monomials) {
    sys.m = std::max(sys.m, mon.degY + mon.degZ);
    const long long v = mon.degY * vy.value + mon.degZ * vz.value;
    minval = first ? v : std::min(minval, v);
    first = false;
  }
  sys.vO_E = -minval;
  return sys;
}

IntersectionReport certify_nongap(const CurveParams& params, const CurvePoint& P,
                                  const std::vector<PlaneMonomial>& monomials,
                                  const std::vector<Field::Elt>& coeffs, int m) {
  if (coeffs.size() != monomials.size())
    throw std::invalid_argument("coefficient count does not match monomial count");
  LinearSystem sys = make_linear_system(params, P, monomials);
  if (m >= 0) {
    if (m < sys.m) throw std::invalid_argument("m below the maximum monomial degree");
    sys.m = m;
  }
  PlaneCurve comb(params.field);
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (coeffs[i]) comb.add_term(monomials[i].degY, monomials[i].degZ, coeffs[i]);
  if (comb.zero()) throw std::invalid_argument("zero combination");
  const PlaneCurve C1 = c1_curve(params, P);
  const Multiplicity M = imult_origin(C1, comb);
  if (M.infinite) throw invariant_error("common component");
  IntersectionReport rep;
  rep.M = M.value;
  rep.N = (long long)sys.m * (params.q + 1) - M.value;
  rep.combination = coeffs;
  const long long lo = (long long)sys.m * (params.q - params.qbar);
  const long long hi = (long long)sys.m * (params.q + 1) + sys.vO_E;
  if (rep.N < lo || rep.N > hi) throw invariant_error("non-gap outside the theorem bracket");
  return rep;
}

IntersectionReport certify_barred_function(const BasePoint& bp,
                                           const std::vector<RationalFunction::Term>& terms) {
  if (terms.empty()) throw std::invalid_argument("zero combination");
  int m = 0;
  for (const auto& t : terms) m = std::max(m, t.exps[0] + t.exps[1] + t.exps[2]);
  for (const auto& t : terms)
    if (t.exps[0] + t.exps[1] + t.exps[2] != m)
      throw std::invalid_argument("terms must have equal total degree");
  std::vector<PlaneMonomial> mons;
  std::vector<Field::Elt> coeffs;
  for (const auto& t : terms) {
    mons.push_back({t.exps[1], t.exps[2]});
    coeffs.push_back(t.coeff);
  }
  return certify_nongap(bp.params(), bp.point(), mons, coeffs, m);
}

std::vector<PlaneMonomial> standard_search_system() {
  return {{0, 1}, {0, 2}, {2, 0}, {1, 1}};
}

std::vector<NongapWitness> search_nongaps(const CurveParams& params, const CurvePoint& P,
                                          const std::vector<PlaneMonomial>& monomials) {
  if (params.qbar != 2)
    throw std::invalid_argument("non-gap search is tractable only for qbar=2");
  const Field& F = *params.field;
  const LinearSystem sys = make_linear_system(params, P, monomials);
  const PlaneCurve C1 = c1_curve(params, P);
  const std::size_t v = monomials.size() - 1;
  const std::uint32_t Q = F.size();

  std::map<long long, std::vector<Field::Elt>> found;  // M -> first witness
  std::vector<Field::Elt> coeffs(monomials.size(), 0);

  // projective representatives in lexicographic order: leading zeros, then a
  // 1, then free coordinates; lex order over full vectors means scanning the
  // leading-one position from the right
  for (int lead = int(v); lead >= 0; --lead) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    coeffs[std::size_t(lead)] = 1;
    const std::size_t free = v - std::size_t(lead);
    std::vector<std::uint32_t> digits(free, 0);
    while (true) {
      for (std::size_t i = 0; i < free; ++i)
        coeffs[std::size_t(lead) + 1 + i] = Field::Elt(digits[i]);
      PlaneCurve comb(params.field);
      for (std::size_t i = 0; i < monomials.size(); ++i)
        if (coeffs[i]) comb.add_term(monomials[i].degY, monomials[i].degZ, coeffs[i]);
      const Multiplicity M = imult_origin(C1, comb);
      if (M.infinite) throw invariant_error("common component");
      found.emplace(M.value, coeffs);  // keeps the first (lex-least) witness
      // odometer over the free coordinates, last digit fastest
      std::size_t i = free;
      while (i > 0) {
        if (++digits[i - 1] < Q) break;
        digits[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }

  if (found.size() != v + 1)
    throw invariant_error("monomials dependent on C1 (fewer than v+1 multiplicities)");
  std::vector<NongapWitness> out;
  for (const auto& [M, wit] : found)
    out.push_back({M, (long long)sys.m * (params.q + 1) - M, wit});
  std::sort(out.begin(), out.end(),
            [](const NongapWitness& a, const NongapWitness& b) { return a.N < b.N; });
  return out;
}

}  // namespace gkagc
