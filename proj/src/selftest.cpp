#include "gkagc/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "gkagc/codes.hpp"
#include "gkagc/intersect.hpp"

namespace gkagc {
namespace {

struct CodeRow {
  long long k, rho, nu, dord;
};
struct RdRow {
  long long d, rd;
};
struct ImprovedRow {
  long long k, d;
  int orbit;
};
struct Nkd {
  long long n, k, d;
};

// Reference rows for the GF(64) code tables: printed (k, rho, nu, d_ord), n = 224.
constexpr CodeRow kGf64O1Rows[] = {
    {223, 0, 2, 2}, {222, 6, 2, 2}, {222, 8, 2, 2}, {220, 9, 3, 3},
    {219, 12, 4, 3}, {218, 14, 4, 3}, {217, 15, 3, 3}, {216, 16, 4, 4},
    {215, 17, 5, 5}, {214, 18, 6, 6}, {213, 20, 6, 6}, {212, 21, 6, 6},
    {211, 22, 8, 6}, {210, 23, 9, 6}, {209, 24, 6, 6}, {208, 25, 10, 8},
    {207, 26, 8, 8}, {206, 27, 9, 9}, {205, 28, 12, 12}, {204, 29, 13, 12},
    {203, 30, 12, 12}, {202, 31, 15, 14}, {201, 32, 14, 14}, {200, 33, 15, 15},
    {199, 34, 16, 16}, {198, 35, 17, 17}, {197, 36, 18, 18}, {196, 37, 20, 20},
    {195, 38, 20, 20},
};
constexpr CodeRow kGf64O2Rows[] = {
    {223, 0, 2, 2}, {222, 7, 2, 2}, {221, 8, 2, 2}, {220, 9, 2, 2},
    {219, 13, 3, 3}, {218, 14, 4, 3}, {217, 15, 5, 3}, {216, 16, 4, 3},
    {215, 17, 3, 3}, {214, 18, 4, 4}, {213, 20, 6, 6}, {212, 21, 8, 7},
    {211, 22, 8, 7}, {210, 23, 8, 7}, {209, 24, 8, 7}, {208, 25, 7, 7},
    {207, 26, 8, 8}, {206, 27, 9, 9}, {205, 28, 12, 12}, {204, 29, 13, 13},
    {203, 30, 14, 13}, {202, 31, 13, 13}, {201, 32, 14, 14}, {200, 33, 15, 15},
    {199, 34, 16, 16}, {198, 35, 17, 17}, {197, 36, 18, 18}, {196, 37, 20, 20},
    {195, 38, 20, 20},
};

// Reference (d, r_d) rows for the improved codes over GF(64).
constexpr RdRow kGf64O1Improved[] = {
    {3, 4}, {4, 6}, {5, 9}, {6, 10}, {7, 14}, {8, 14},
    {9, 16}, {10, 18}, {11, 19}, {12, 19}, {13, 21}, {14, 22},
    {15, 23}, {16, 25}, {17, 26}, {18, 27}, {19, 28}, {20, 28},
};
constexpr RdRow kGf64O2Improved[] = {
    {3, 5}, {4, 7}, {5, 10}, {6, 11}, {7, 12}, {8, 13},
    {9, 18}, {10, 19}, {11, 19}, {12, 19}, {13, 20}, {14, 22},
    {15, 24}, {16, 25}, {17, 26}, {18, 27}, {19, 28}, {20, 28},
};

// Reference rows for the GF(729) improved-code table: {k, d, orbit(1|2)}.
constexpr ImprovedRow kGf729ImprovedRows[] = {
    {6074, 2, 1}, {6071, 3, 1}, {6068, 4, 1}, {6063, 5, 1},
    {6062, 6, 1}, {6055, 7, 1}, {6053, 8, 1}, {6048, 9, 1},
    {6045, 10, 1}, {6042, 11, 1}, {6041, 12, 1}, {6032, 13, 1},
    {6031, 14, 1}, {6027, 15, 1}, {6024, 16, 1}, {6020, 17, 1},
    {6019, 18, 1}, {6013, 19, 1}, {6012, 20, 1}, {6008, 21, 1},
    {6004, 22, 1}, {6003, 23, 1}, {6002, 24, 1}, {5996, 25, 2},
    {5995, 26, 1}, {5994, 27, 1}, {5992, 28, 1}, {5987, 30, 1},
    {5983, 32, 1}, {5981, 33, 1}, {5980, 34, 1}, {5979, 35, 1},
    {5978, 36, 1}, {5973, 37, 1}, {5972, 38, 1}, {5970, 39, 1},
    {5969, 40, 1}, {5966, 42, 1}, {5961, 44, 1}, {5960, 45, 1},
    {5958, 46, 1}, {5956, 48, 1}, {5952, 50, 2}, {5951, 51, 2},
    {5949, 52, 2}, {5946, 53, 1}, {5945, 54, 1}, {5942, 55, 1},
    {5940, 56, 1}, {5938, 57, 1}, {5937, 60, 1}, {5932, 62, 1},
    {5931, 63, 1}, {5929, 64, 1}, {5928, 65, 1}, {5927, 66, 1},
    {5926, 68, 1}, {5924, 69, 1}, {5922, 70, 1}, {5919, 71, 1},
    {5918, 72, 1}, {5917, 74, 2}, {5916, 75, 2}, {5915, 76, 2},
    {5914, 77, 2}, {5913, 78, 2}, {5910, 79, 2}, {5908, 80, 1},
    {5906, 81, 1}, {5905, 82, 1}, {5904, 83, 1}, {5902, 84, 1},
    {5899, 85, 1}, {5898, 86, 1}, {5897, 90, 1}, {5894, 91, 1},
    {5892, 92, 1}, {5891, 94, 1}, {5890, 96, 2}, {5889, 99, 2},
    {5888, 100, 2}, {5885, 101, 2}, {5884, 102, 2}, {5880, 103, 1},
    {5878, 104, 1}, {5877, 105, 1}, {5875, 106, 1}, {5874, 108, 1},
    {5872, 109, 1}, {5871, 110, 1}, {5869, 111, 1}, {5868, 112, 1},
    {5866, 114, 1}, {5865, 115, 1}, {5864, 117, 1}, {5863, 120, 2},
    {5862, 121, 2}, {5860, 124, 2}, {5857, 125, 2}, {5854, 126, 1},
    {5852, 128, 1}, {5851, 129, 1}, {5849, 130, 1}, {5848, 131, 1},
    {5847, 132, 1}, {5846, 133, 1}, {5844, 134, 1}, {5843, 135, 1},
    {5842, 136, 1}, {5841, 137, 1}, {5840, 138, 1}, {5838, 139, 1},
    {5837, 140, 1}, {5836, 144, 1}, {5835, 146, 2}, {5832, 148, 2},
    {5830, 149, 2}, {5829, 150, 1}, {5828, 151, 1}, {5827, 152, 1},
    {5825, 153, 1}, {5823, 154, 1}, {5822, 156, 1}, {5821, 157, 1},
    {5820, 158, 1}, {5818, 159, 1}, {5817, 160, 1}, {5816, 161, 1},
    {5815, 162, 1}, {5814, 163, 1}, {5813, 164, 1}, {5812, 165, 1},
    {5811, 166, 1}, {5810, 167, 1}, {5809, 168, 1}, {5808, 171, 1},
    {5806, 172, 1}, {5805, 173, 2}, {5804, 174, 2}, {5802, 175, 1},
    {5801, 177, 1}, {5800, 178, 1}, {5798, 179, 1}, {5797, 180, 1},
    {5796, 181, 1}, {5795, 182, 1}, {5794, 183, 1}, {5793, 184, 1},
    {5792, 185, 1}, {5791, 186, 1}, {5790, 187, 1}, {5789, 188, 1},
    {5788, 189, 1}, {5787, 190, 1}, {5786, 191, 1}, {5785, 192, 1},
    {5784, 193, 1}, {5783, 194, 1}, {5782, 195, 1}, {5781, 196, 1},
    {5780, 198, 1},
};

// The 70 improved [n,k,d] parameters over GF(64).
constexpr Nkd kGf64Improvements[] = {
    {200, 180, 13}, {201, 181, 13}, {202, 182, 13}, {203, 183, 13}, {204, 184, 13},
    {205, 185, 13}, {206, 186, 13}, {207, 187, 13}, {208, 188, 13}, {209, 189, 13},
    {210, 182, 20}, {210, 187, 15}, {210, 188, 14}, {210, 190, 13}, {211, 183, 20},
    {211, 188, 15}, {211, 189, 14}, {211, 191, 13}, {212, 184, 20}, {212, 189, 15},
    {212, 190, 14}, {212, 192, 13}, {213, 185, 20}, {213, 190, 15}, {213, 191, 14},
    {213, 193, 13}, {214, 186, 20}, {214, 191, 15}, {214, 192, 14}, {214, 194, 13},
    {215, 187, 20}, {215, 192, 15}, {215, 193, 14}, {215, 195, 13}, {216, 188, 20},
    {216, 193, 15}, {216, 194, 14}, {216, 196, 13}, {217, 189, 20}, {217, 194, 15},
    {217, 195, 14}, {217, 197, 13}, {218, 190, 20}, {218, 195, 15}, {218, 196, 14},
    {218, 198, 13}, {219, 191, 20}, {219, 196, 15}, {219, 197, 14}, {219, 199, 13},
    {220, 192, 20}, {220, 197, 15}, {220, 198, 14}, {220, 200, 13}, {221, 193, 20},
    {221, 198, 15}, {221, 199, 14}, {221, 201, 13}, {222, 194, 20}, {222, 199, 15},
    {222, 200, 14}, {222, 202, 13}, {223, 195, 20}, {223, 200, 15}, {223, 201, 14},
    {223, 203, 13}, {224, 196, 20}, {224, 201, 15}, {224, 202, 14}, {224, 204, 13},
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Runner {
  std::vector<CriterionResult> results;
  int filter;
  bool big;

  bool wants(int qbar) const { return filter == 0 || filter == qbar; }

  template <typename Fn>
  void run(int id, const std::string& label, Fn&& fn) {
    CriterionResult r;
    r.id = id;
    r.label = label;
    const auto t0 = Clock::now();
    try {
      std::ostringstream detail;
      r.pass = fn(detail);
      r.detail = detail.str();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = seconds_since(t0);
    results.push_back(std::move(r));
  }
};

}  // namespace

std::vector<CriterionResult> run_selftest(int qbar_filter, bool with_big) {
  Runner R;
  R.filter = qbar_filter;
  R.big = with_big || qbar_filter == 0;

  R.run(1, "point counts attain the Hasse-Weil bound", [&](std::ostringstream& out) {
    bool ok = true;
    for (int qbar : {2, 3}) {
      if (!R.wants(qbar)) continue;
      const auto t0 = Clock::now();
      const auto params = CurveParams::make(qbar);
      const auto pts = enumerate_points(params);
      const double dt = seconds_since(t0);
      const double budget = qbar == 2 ? 1.0 : 30.0;
      ok &= (long long)pts.size() == params.expected_points && dt < budget;
      out << "qbar=" << qbar << ": " << pts.size() << "/" << params.expected_points
          << " points in " << dt << "s; ";
    }
    return ok;
  });

  R.run(2, "orbit census and stabilizer products", [&](std::ostringstream& out) {
    bool ok = true;
    for (int qbar : {2, 3}) {
      if (!R.wants(qbar)) continue;
      const auto params = CurveParams::make(qbar);
      const auto [o1, o2] = orbit_census(enumerate_points(params));
      const long long aut = automorphism_group_order(qbar);
      ok &= o1 == orbit_size(qbar, Orbit::O1) && o2 == orbit_size(qbar, Orbit::O2);
      ok &= o1 * stabilizer_order(qbar, Orbit::O1) == aut;
      ok &= o2 * stabilizer_order(qbar, Orbit::O2) == aut;
      out << "qbar=" << qbar << ": (" << o1 << ", " << o2 << "), |Aut|=" << aut << "; ";
    }
    return ok;
  });

  R.run(3, "Hermitian surface membership", [&](std::ostringstream& out) {
    bool ok = true;
    for (int qbar : {2, 3}) {
      if (!R.wants(qbar)) continue;
      const auto params = CurveParams::make(qbar);
      long long checked = 0;
      for (const auto& p : enumerate_points(params)) {
        if (p.infinite) continue;
        ok &= on_hermitian_surface(params, p);
        ++checked;
      }
      out << "qbar=" << qbar << ": " << checked << " affine points; ";
    }
    return ok;
  });

  R.run(4, "Weierstrass semigroup genera", [&](std::ostringstream& out) {
    const auto t0 = Clock::now();
    bool ok = true;
    for (int qbar : {2, 3}) {
      if (!R.wants(qbar)) continue;
      const long long want = CurveParams::make(qbar).genus;
      for (Orbit orbit : {Orbit::O1, Orbit::O2}) {
        const auto s = gk_semigroup(qbar, orbit);
        ok &= s.genus() == want;
        out << "qbar=" << qbar << " " << to_string(orbit) << ": g=" << s.genus() << "; ";
      }
    }
    const double dt = seconds_since(t0);
    out << "in " << dt << "s";
    return ok && dt < 0.1;
  });

  R.run(5, "GF(64) code tables (rho, nu, d_ord, k)", [&](std::ostringstream& out) {
    if (!R.wants(2)) {
      out << "skipped (qbar filter)";
      return true;
    }
    bool ok = true;
    std::vector<std::pair<Orbit, const CodeRow*>> tables = {{Orbit::O1, kGf64O1Rows},
                                                            {Orbit::O2, kGf64O2Rows}};
    for (const auto& [orbit, rows] : tables) {
      const auto s = gk_semigroup(2, orbit);
      std::vector<long long> printed_k_mismatch;
      for (long long l = 1; l <= 29; ++l) {
        const CodeRow& row = rows[l - 1];
        ok &= s.rho(l) == row.rho && s.nu(l) == row.nu && s.order_bound(l) == row.dord;
        const long long k = 224 - l;  // dimension certificate: k = n - ell
        if (k != row.k) printed_k_mismatch.push_back(row.rho);
      }
      if (orbit == Orbit::O1) {
        // the table prints k=222 for both rho=6 and rho=8; under k = n - ell
        // the rho=8 row is 221, so exactly that row must disagree
        ok &= printed_k_mismatch == std::vector<long long>{8};
        out << "O1: 29 rows ok, printed k disagrees only at rho=8 (222 printed, 221 computed;"
               " rho=6/rho=8 rows share a printed k); ";
      } else {
        ok &= printed_k_mismatch.empty();
        out << "O2: 29 rows ok; ";
      }
    }
    return ok;
  });

  R.run(6, "GF(64) improved-code tables (d, r_d, k >= n - r_d)", [&](std::ostringstream& out) {
    if (!R.wants(2)) {
      out << "skipped (qbar filter)";
      return true;
    }
    bool ok = true;
    std::vector<std::pair<Orbit, const RdRow*>> tables = {{Orbit::O1, kGf64O1Improved},
                                                          {Orbit::O2, kGf64O2Improved}};
    for (const auto& [orbit, rows] : tables) {
      const auto s = gk_semigroup(2, orbit);
      for (int i = 0; i < 18; ++i) ok &= s.r_d(rows[i].d) == rows[i].rd;
      out << to_string(orbit) << ": 18 rows ok; ";
    }
    return ok;
  });

  R.run(7, "70 improved parameters over GF(64)", [&](std::ostringstream& out) {
    if (!R.wants(2)) {
      out << "skipped (qbar filter)";
      return true;
    }
    const auto got = improvements_table();
    std::set<std::tuple<long long, long long, long long>> a, b;
    for (const auto& c : got) a.insert({c.n, c.k, c.d});
    for (const auto& r : kGf64Improvements) b.insert({r.n, r.k, r.d});
    out << got.size() << " generated rows";
    return got.size() == 70 && a == b;
  });

  R.run(8, "GF(729) improved-code table (k = n - r_d)", [&](std::ostringstream& out) {
    if (!R.wants(3)) {
      out << "skipped (qbar filter)";
      return true;
    }
    const auto t0 = Clock::now();
    const auto s1 = gk_semigroup(3, Orbit::O1);
    const auto s2 = gk_semigroup(3, Orbit::O2);
    bool ok = true;
    long long count = 0;
    for (const auto& row : kGf729ImprovedRows) {
      const auto& s = row.orbit == 1 ? s1 : s2;
      ok &= 6075 - s.r_d(row.d) == row.k;
      ++count;
    }
    const double dt = seconds_since(t0);
    out << count << " rows in " << dt << "s";
    return ok && dt < 5.0;
  });

  R.run(9, "rank certificates for C_ell parity matrices", [&](std::ostringstream& out) {
    bool ok = true;
    if (R.wants(2)) {
      const auto params = CurveParams::make(2);
      for (Orbit orbit : {Orbit::O1, Orbit::O2}) {
        const auto s = gk_semigroup(2, orbit);
        long long lmax = 0;
        while (s.rho(lmax + 1) <= 38) ++lmax;
        const auto M = parity_matrix_Cl(params, orbit, lmax, std::nullopt, false);
        for (long long l = 1; l <= lmax; ++l) {
          std::vector<std::vector<Field::Elt>> prefix(M.rows.begin(), M.rows.begin() + l);
          ok &= rank(*params.field, prefix) == l;
        }
        out << "qbar=2 " << to_string(orbit) << ": l=1.." << lmax << " ok; ";
      }
    }
    if (R.wants(3) && R.big) {
      const auto params = CurveParams::make(3);
      for (Orbit orbit : {Orbit::O1, Orbit::O2}) {
        const auto s = gk_semigroup(3, orbit);
        long long lmax = 0;
        while (s.rho(lmax + 1) <= 198) ++lmax;
        const auto M = parity_matrix_Cl(params, orbit, lmax, std::nullopt, false);
        // full row independence implies rank = l for every prefix
        const long long rk = rank(*params.field, M.rows);
        ok &= rk == lmax;
        out << "qbar=3 " << to_string(orbit) << ": rank " << rk << " of " << lmax << " rows; ";
      }
    } else if (R.wants(3)) {
      out << "qbar=3 ranks skipped (needs --big); ";
    }
    return ok;
  });

  R.run(10, "intersection-multiplicity certificates for beta and gamma",
        [&](std::ostringstream& out) {
          bool ok = true;
          if (R.wants(2)) {
            const auto params = CurveParams::make(2);
            const auto bp = BasePoint::o2(params, designated_o2_point(params));
            const auto rep = certify_barred_function(bp, *bp.barred_expansion("beta"));
            ok &= rep.M == 5 && rep.N == 13;
            out << "qbar=2 beta: M=" << rep.M << " N=" << rep.N << "; ";
          }
          if (R.wants(3)) {
            const auto params = CurveParams::make(3);
            const auto bp = BasePoint::o2(params, designated_o2_point(params));
            const auto repB = certify_barred_function(bp, *bp.barred_expansion("beta"));
            const auto repG = certify_barred_function(bp, *bp.barred_expansion("gamma"));
            ok &= repB.M == 10 && repB.N == 74;
            ok &= repG.M == 19 && repG.N == 121;
            out << "qbar=3 beta: M=" << repB.M << " N=" << repB.N << ", gamma: M=" << repG.M
                << " N=" << repG.N << "; ";
          }
          return ok;
        });

  R.run(11, "non-gap search over the degree-2 system (qbar=2)", [&](std::ostringstream& out) {
    if (!R.wants(2)) {
      out << "skipped (qbar filter)";
      return true;
    }
    const auto t0 = Clock::now();
    const auto params = CurveParams::make(2);
    const auto wits = search_nongaps(params, designated_o2_point(params),
                                     standard_search_system());
    const double dt = seconds_since(t0);
    bool ok = wits.size() == 4 && dt < 300.0;
    bool has13 = false;
    out << "N = {";
    for (const auto& w : wits) {
      ok &= w.N >= 12 && w.N <= 16;
      has13 |= w.N == 13;
      out << " " << w.N;
    }
    out << " } in " << dt << "s";
    return ok && has13;
  });

  R.run(12, "exhaustive minimum distances at dimension <= 3 (qbar=2)",
        [&](std::ostringstream& out) {
          if (!R.wants(2)) {
            out << "skipped (qbar filter)";
            return true;
          }
          const auto t0 = Clock::now();
          const auto params = CurveParams::make(2);
          bool ok = true;
          for (Orbit orbit : {Orbit::O1, Orbit::O2}) {
            const auto s = gk_semigroup(2, orbit);
            const auto M = parity_matrix_Cl(params, orbit, 3);
            for (long long l = 1; l <= 3; ++l) {
              std::vector<std::vector<Field::Elt>> gen(M.rows.begin(), M.rows.begin() + l);
              const long long w = min_distance_bruteforce(*params.field, gen);
              ok &= w >= 224 - s.rho(l);
              out << to_string(orbit) << " l=" << l << ": w=" << w << ">=" << 224 - s.rho(l)
                  << "; ";
            }
          }
          const double dt = seconds_since(t0);
          out << "in " << dt << "s";
          return ok && dt < 60.0;
        });

  R.run(13, "order-bound tail nu_l = l+1-g", [&](std::ostringstream& out) {
    bool ok = true;
    for (int qbar : {2, 3}) {
      if (!R.wants(qbar)) continue;
      for (Orbit orbit : {Orbit::O1, Orbit::O2}) {
        const auto s = gk_semigroup(qbar, orbit);
        const long long W = 2 * s.conductor() - s.genus() - 1;
        for (long long l = W; l <= 2 * s.conductor() + 50; ++l)
          ok &= s.nu(l) == l + 1 - s.genus();
        out << "qbar=" << qbar << " " << to_string(orbit) << " l=" << W << ".."
            << 2 * s.conductor() + 50 << "; ";
      }
    }
    return ok;
  });

  return R.results;
}

}  // namespace gkagc
