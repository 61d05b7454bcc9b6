#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkagc/funcfield.hpp"

namespace gkagc {

/// Parity-check rows of a one-point code: evaluations of the L-series basis
/// functions at every rational point other than the base point, in canonical
/// point order (X_inf first when present, then affine points by encoding).
struct EvalMatrix {
  std::shared_ptr<const Field> field;
  int qbar = 0;
  Orbit orbit = Orbit::O1;
  std::string kind;                      // "Cl" or "Ctilde"
  long long param = 0;                   // ell for Cl, d for Ctilde
  long long n = 0;                       // columns = rational points - 1
  std::vector<std::vector<Field::Elt>> rows;
  std::vector<long long> row_pole_orders;
};

/// Row rank over the field, by exact Gaussian elimination with deterministic
/// pivoting (first nonzero column, first available row).
long long rank(const Field& f, std::vector<std::vector<Field::Elt>> rows);

/// Parity-check matrix of C_ell(P): rows f_1..f_ell evaluated at D. The rank
/// is verified to equal ell (this is the operational certificate for the
/// generator pole orders); failure throws invariant_error("independence
/// failure").
EvalMatrix parity_matrix_Cl(const CurveParams& params, Orbit orbit, long long ell,
                            const std::optional<CurvePoint>& base_point = std::nullopt,
                            bool verify_rank = true);

/// Parity-check matrix of the improved code C~_d(P): rows h_{i+1} for all
/// i >= 0 with nu_i < d; the row count is r_d.
EvalMatrix parity_matrix_improved(const CurveParams& params, Orbit orbit, long long d,
                                  const std::optional<CurvePoint>& base_point = std::nullopt);

/// Exact minimum weight of the code spanned by the given generator rows,
/// by exhaustive enumeration of all q^k - 1 nonzero codewords. Refuses
/// k > k_limit.
long long min_distance_bruteforce(const Field& f,
                                  const std::vector<std::vector<Field::Elt>>& generator_rows,
                                  int k_limit = 3);

struct CodeSpec {
  long long n = 0, k = 0, d = 0;
  std::string kind;  // "Cl", "Ctilde", "seed", or the propagation rule used
};

/// The four propagation rule families applied to an [n,k,d] code:
///   (n, k, d-s) for 0 <= s < d,      (n, k-s, d) for 0 <= s < k,
///   (n-s, k-s, d) for 0 <= s < k,    (n-s, k, d-s) for 0 <= s < min(n-k-1, d).
std::vector<CodeSpec> propagate(long long n, long long k, long long d);

/// The 70 improved [n,k,d] parameters over GF(64): seeds are the best
/// improved codes at d in {13,14,15,20} (k = n - r_d at the better orbit),
/// extended by the shortening rule (n-s, k-s, d) down to the published
/// length floors (200 for d=13, 210 otherwise). Sorted by (d, -n).
std::vector<CodeSpec> improvements_table();

}  // namespace gkagc
