#pragma once

#include <vector>

#include "gkagc/common.hpp"

namespace gkagc {

/// A numerical semigroup given by generators with gcd 1. Stores the full
/// non-gap list up to conductor + 2*max(generator); every query beyond that
/// range is answered by the arithmetic tail (all integers >= conductor are
/// non-gaps, and the l-th non-gap is l + genus - 1 once it exceeds the
/// conductor).
///
/// Indexing conventions, fixed so that the order-bound tables over GF(64)
/// and GF(729) come out right:
///   rho(l), l >= 1:  l-th smallest non-gap, rho(1) = 0.
///   nu(l),  l >= 0:  number of ordered pairs of non-gap VALUES (a,b) with
///                    a + b = rho(l+1). In particular nu(0) = 1, counting
///                    (0,0), and nu(l) = l + 1 - genus for l >= 2c - g - 1.
///   order_bound(l) = min{ nu(m) : m >= l }.
///   r_d(d)         = #{ i >= 0 : nu(i) < d }.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::vector<long long> gens);

  const std::vector<long long>& generators() const { return gens_; }
  long long conductor() const { return conductor_; }
  long long genus() const { return genus_; }
  const std::vector<long long>& gaps() const { return gaps_; }
  /// Sorted non-gaps up to the storage bound (conductor + 2*max generator).
  const std::vector<long long>& elements() const { return elements_; }

  bool contains(long long n) const;

  long long rho(long long l) const;
  long long nu(long long l) const;
  long long order_bound(long long l) const;
  long long r_d(long long d) const;

  /// Index l with rho(l) == value; throws if value is a gap.
  long long index_of(long long value) const;

 private:
  NumericalSemigroup() = default;
  std::vector<long long> gens_;
  std::vector<bool> member_;  // membership below the storage bound
  std::vector<long long> elements_;
  std::vector<long long> gaps_;
  long long conductor_ = 0;
  long long genus_ = 0;
};

/// Weierstrass semigroup of the GK curve at a point of the given orbit:
/// O1 -> <qbar^3-qbar^2+qbar, qbar^3, qbar^3+1> for any qbar;
/// O2 -> <7,8,9,13> (qbar=2) or <25,27,28,74,121> (qbar=3), otherwise
/// unknown and an error.
NumericalSemigroup gk_semigroup(int qbar, Orbit orbit);

}  // namespace gkagc
