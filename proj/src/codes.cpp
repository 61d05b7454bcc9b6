#include "gkagc/codes.hpp"

#include <algorithm>
#include <map>

namespace gkagc {
namespace {

BasePoint make_base(const CurveParams& params, Orbit orbit,
                    const std::optional<CurvePoint>& base_point) {
  if (orbit == Orbit::O1) {
    if (base_point && !(base_point->infinite))
      throw std::invalid_argument("O1 codes use the infinite base point");
    return BasePoint::o1(params);
  }
  return BasePoint::o2(params, base_point ? *base_point : designated_o2_point(params));
}

// point-major evaluation: generator values once per point, then monomial rows
std::vector<std::vector<Field::Elt>> evaluate_basis(const BasePoint& bp,
                                                    const std::vector<RationalFunction>& basis,
                                                    long long* n_out) {
  const Field& F = *bp.params().field;
  const auto all = enumerate_points(bp.params());
  std::vector<std::vector<Field::Elt>> genvals;
  genvals.reserve(all.size());
  for (const auto& Q : all) {
    if (Q == bp.point()) continue;
    genvals.push_back(bp.generator_values(Q));
  }
  *n_out = (long long)genvals.size();
  std::vector<std::vector<Field::Elt>> rows(basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    rows[r].resize(genvals.size());
    for (std::size_t c = 0; c < genvals.size(); ++c)
      rows[r][c] = basis[r].evaluate(F, genvals[c]);
  }
  return rows;
}

}  // namespace

long long rank(const Field& f, std::vector<std::vector<Field::Elt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix");
  std::size_t rk = 0;
  for (std::size_t col = 0; col < ncols && rk < rows.size(); ++col) {
    std::size_t piv = rk;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rk], rows[piv]);
    const Field::Elt inv = f.inv(rows[rk][col]);
    for (std::size_t c = col; c < ncols; ++c) rows[rk][c] = f.mul(rows[rk][c], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rk || rows[r][col] == 0) continue;
      const Field::Elt factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rk][c]));
    }
    ++rk;
  }
  return (long long)rk;
}

EvalMatrix parity_matrix_Cl(const CurveParams& params, Orbit orbit, long long ell,
                            const std::optional<CurvePoint>& base_point, bool verify_rank) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  const BasePoint bp = make_base(params, orbit, base_point);
  const NumericalSemigroup S = gk_semigroup(params.qbar, orbit);
  const auto basis = lseries_basis(S, bp, ell);

  EvalMatrix M;
  M.field = params.field;
  M.qbar = params.qbar;
  M.orbit = orbit;
  M.kind = "Cl";
  M.param = ell;
  M.rows = evaluate_basis(bp, basis, &M.n);
  if (S.rho(ell) >= M.n) throw std::invalid_argument("rho_ell must be < n");
  for (const auto& f : basis) M.row_pole_orders.push_back(f.pole_order);
  if (verify_rank && rank(*params.field, M.rows) != ell)
    throw invariant_error("independence failure");
  return M;
}

EvalMatrix parity_matrix_improved(const CurveParams& params, Orbit orbit, long long d,
                                  const std::optional<CurvePoint>& base_point) {
  if (d < 2) throw std::invalid_argument("improved codes need d >= 2");
  const BasePoint bp = make_base(params, orbit, base_point);
  const NumericalSemigroup S = gk_semigroup(params.qbar, orbit);

  // indices i >= 0 with nu_i < d; the rows are h_{i+1}
  std::vector<long long> picked;
  const long long stop = std::max(2 * S.conductor() - S.genus() - 1, d + S.genus() - 1);
  for (long long i = 0; i <= stop; ++i)
    if (S.nu(i) < d) picked.push_back(i + 1);
  if ((long long)picked.size() != S.r_d(d))
    throw invariant_error("row count disagrees with r_d");

  const long long lmax = picked.empty() ? 1 : picked.back();
  const auto basis = lseries_basis(S, bp, lmax);
  std::vector<RationalFunction> rows_basis;
  for (long long l : picked) rows_basis.push_back(basis[std::size_t(l - 1)]);

  EvalMatrix M;
  M.field = params.field;
  M.qbar = params.qbar;
  M.orbit = orbit;
  M.kind = "Ctilde";
  M.param = d;
  M.rows = evaluate_basis(bp, rows_basis, &M.n);
  for (const auto& f : rows_basis) M.row_pole_orders.push_back(f.pole_order);
  return M;
}

long long min_distance_bruteforce(const Field& f,
                                  const std::vector<std::vector<Field::Elt>>& generator_rows,
                                  int k_limit) {
  const int k = int(generator_rows.size());
  if (k == 0) throw std::invalid_argument("empty generator matrix");
  if (k > k_limit) throw std::invalid_argument("too large for exhaustive search");
  const std::size_t n = generator_rows[0].size();
  const std::uint32_t q = f.size();

  std::vector<std::uint32_t> digits(std::size_t(k), 0);
  std::vector<Field::Elt> word(n, 0);
  long long best = (long long)n + 1;
  while (true) {
    // odometer; digit k-1 moves fastest
    std::size_t i = std::size_t(k);
    while (i > 0) {
      if (++digits[i - 1] < q) break;
      digits[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    std::fill(word.begin(), word.end(), 0);
    for (int r = 0; r < k; ++r) {
      const Field::Elt c = Field::Elt(digits[std::size_t(r)]);
      if (c == 0) continue;
      const auto& row = generator_rows[std::size_t(r)];
      for (std::size_t j = 0; j < n; ++j)
        if (row[j]) word[j] = f.add(word[j], f.mul(c, row[j]));
    }
    long long wt = 0;
    for (auto v : word) wt += (v != 0);
    best = std::min(best, wt);
  }
  return best;
}

std::vector<CodeSpec> propagate(long long n, long long k, long long d) {
  if (!(n > k && k >= 1 && d >= 1)) throw std::invalid_argument("need n > k >= 1, d >= 1");
  std::vector<CodeSpec> out;
  for (long long s = 0; s < d; ++s) out.push_back({n, k, d - s, "distance-reduction"});
  for (long long s = 0; s < k; ++s) out.push_back({n, k - s, d, "expurgation"});
  for (long long s = 0; s < k; ++s) out.push_back({n - s, k - s, d, "shortening"});
  for (long long s = 0; s < std::min(n - k - 1, d); ++s)
    out.push_back({n - s, k, d - s, "puncturing"});
  return out;
}

std::vector<CodeSpec> improvements_table() {
  const NumericalSemigroup S1 = gk_semigroup(2, Orbit::O1);
  const NumericalSemigroup S2 = gk_semigroup(2, Orbit::O2);
  const long long n = 224;
  struct Seed {
    long long d;
    long long n_floor;
  };
  // published improvement ranges: lengths 200..224 at codimension 20 (d=13)
  // and 210..224 at codimensions 22, 23, 28 (d=14, 15, 20)
  const std::vector<Seed> seeds = {{13, 200}, {14, 210}, {15, 210}, {20, 210}};

  std::map<std::pair<long long, long long>, CodeSpec> best;  // (n,k) -> max-d spec
  for (const auto& seed : seeds) {
    const long long k = n - std::min(S1.r_d(seed.d), S2.r_d(seed.d));
    for (long long s = 0; s + seed.n_floor <= n; ++s) {
      const CodeSpec cs{n - s, k - s, seed.d, s == 0 ? "Ctilde" : "shortening"};
      const auto key = std::make_pair(cs.n, cs.k);
      auto it = best.find(key);
      if (it == best.end() || it->second.d < cs.d) best[key] = cs;
    }
  }
  std::vector<CodeSpec> out;
  for (const auto& [key, cs] : best) out.push_back(cs);
  std::sort(out.begin(), out.end(), [](const CodeSpec& a, const CodeSpec& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.n > b.n;
  });
  return out;
}

}  // namespace gkagc
