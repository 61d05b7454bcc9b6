#include "gkagc/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace gkagc {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long long> gens) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  for (auto g : gens)
    if (g <= 0) throw std::invalid_argument("generators must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  long long g = 0;
  for (auto x : gens) g = std::gcd(g, x);
  if (g != 1) throw std::invalid_argument("infinite gaps (generators have gcd > 1)");

  NumericalSemigroup s;
  s.gens_ = gens;
  const long long gmin = gens.front(), gmax = gens.back();

  // grow the DP window until a run of gmin consecutive members appears;
  // from there on every integer is a member
  long long bound = gmax * gmax + 2 * gmax + 8;
  while (true) {
    std::vector<bool> mem(std::size_t(bound) + 1, false);
    mem[0] = true;
    for (long long i = 1; i <= bound; ++i)
      for (auto gen : gens)
        if (gen <= i && mem[std::size_t(i - gen)]) {
          mem[std::size_t(i)] = true;
          break;
        }
    long long run = 0, start = -1;
    for (long long i = 0; i <= bound; ++i) {
      run = mem[std::size_t(i)] ? run + 1 : 0;
      if (run == gmin) {
        start = i - run + 1;
        break;
      }
    }
    if (start >= 0) {
      long long lastgap = -1;
      for (long long i = start - 1; i >= 0; --i)
        if (!mem[std::size_t(i)]) {
          lastgap = i;
          break;
        }
      s.conductor_ = lastgap + 1;
      const long long keep = s.conductor_ + 2 * gmax;
      s.member_.assign(std::size_t(keep) + 1, false);
      for (long long i = 0; i <= keep; ++i)
        s.member_[std::size_t(i)] = (i >= s.conductor_) || mem[std::size_t(i)];
      for (long long i = 0; i <= keep; ++i)
        (s.member_[std::size_t(i)] ? s.elements_ : s.gaps_).push_back(i);
      s.gaps_.erase(std::remove_if(s.gaps_.begin(), s.gaps_.end(),
                                   [&](long long v) { return v >= s.conductor_; }),
                    s.gaps_.end());
      s.genus_ = (long long)s.gaps_.size();
      return s;
    }
    bound *= 2;
  }
}

bool NumericalSemigroup::contains(long long n) const {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return member_[std::size_t(n)];
}

long long NumericalSemigroup::rho(long long l) const {
  if (l < 1) throw std::invalid_argument("rho index must be >= 1");
  if (l <= (long long)elements_.size()) return elements_[std::size_t(l - 1)];
  return l + genus_ - 1;  // beyond the stored window everything is a non-gap
}

long long NumericalSemigroup::index_of(long long value) const {
  if (!contains(value)) throw std::invalid_argument("value is a gap");
  if (value >= conductor_) return value - genus_ + 1;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
  return (it - elements_.begin()) + 1;
}

long long NumericalSemigroup::nu(long long l) const {
  if (l < 0) throw std::invalid_argument("nu index must be >= 0");
  const long long t = rho(l + 1);
  long long count = 0;
  for (long long a = 0; a <= t; ++a)
    if (contains(a) && contains(t - a)) ++count;
  return count;
}

long long NumericalSemigroup::order_bound(long long l) const {
  if (l < 0) throw std::invalid_argument("order bound index must be >= 0");
  const long long W = 2 * conductor_ - genus_ - 1;
  if (l >= W) return l + 1 - genus_;  // nu is exactly m+1-g from W on
  long long best = nu(l);
  for (long long m = l + 1; m <= W; ++m) best = std::min(best, nu(m));
  return best;
}

long long NumericalSemigroup::r_d(long long d) const {
  if (d < 2) throw std::invalid_argument("r_d requires d >= 2");
  const long long W = 2 * conductor_ - genus_ - 1;
  const long long stop = std::max(W, d + genus_ - 1);
  long long count = 0;
  for (long long i = 0; i <= stop; ++i)
    if (nu(i) < d) ++count;
  return count;
}

NumericalSemigroup gk_semigroup(int qbar, Orbit orbit) {
  const long long q3 = (long long)qbar * qbar * qbar;
  if (orbit == Orbit::O1)
    return NumericalSemigroup::from_generators({q3 - qbar * qbar + qbar, q3, q3 + 1});
  if (qbar == 2) return NumericalSemigroup::from_generators({7, 8, 9, 13});
  if (qbar == 3) return NumericalSemigroup::from_generators({25, 27, 28, 74, 121});
  throw std::invalid_argument("semigroup unknown for O2 points with qbar outside {2,3}");
}

}  // namespace gkagc
