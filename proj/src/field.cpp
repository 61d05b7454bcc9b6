#include "gkagc/field.hpp"

#include <algorithm>
#include <numeric>

namespace gkagc {
namespace {

// Dense little-endian polynomials over GF(p), used only during field
// construction (irreducibility test, generator search seed arithmetic).
using Poly = std::vector<int>;

int pdeg(const Poly& a) {
  int d = int(a.size()) - 1;
  while (d >= 0 && a[d] == 0) --d;
  return d;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& irr, int p) {
  const int m = int(irr.size()) - 1;
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int d = int(prod.size()) - 1; d >= m; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int k = 0; k <= m; ++k)
      prod[d - m + k] = ((prod[d - m + k] - c * irr[k]) % p + p) % p;
  }
  prod.resize(m, 0);
  if (prod.empty()) prod.push_back(0);
  return prod;
}

Poly pgcd(Poly a, Poly b, int p) {
  while (true) {
    const int db = pdeg(b);
    if (db < 0) return a;
    const int da = pdeg(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    // kill a's leading term with a shifted multiple of b
    int binv = 1;
    while ((b[db] * binv) % p != 1) ++binv;
    const int c = (a[da] * binv) % p;
    for (int k = 0; k <= db; ++k)
      a[da - db + k] = ((a[da - db + k] - c * b[k]) % p + p) % p;
  }
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const Poly& irr, int p, int m) {
  if (m == 1) return true;
  // no roots in GF(p)
  for (int a = 0; a < p; ++a) {
    int v = 0, ap = 1;
    for (int k = 0; k <= m; ++k) {
      v = (v + irr[k] * ap) % p;
      ap = (ap * a) % p;
    }
    if (v == 0) return false;
  }
  // x^(p^j) mod irr for j = 0..m via repeated p-th powering
  Poly x(m, 0);
  if (m >= 2) x[1] = 1;
  std::vector<Poly> powers{x};
  Poly cur = x;
  for (int j = 0; j < m; ++j) {
    Poly acc = cur;
    for (int t = 0; t < p - 1; ++t) acc = pmulmod(acc, cur, irr, p);
    cur = acc;
    powers.push_back(cur);
  }
  if (powers[m] != x) return false;  // x^(p^m) must equal x
  for (auto l : prime_divisors(m)) {
    Poly diff = powers[m / l];
    diff[1] = ((diff[1] - 1) % p + p) % p;
    if (pdeg(pgcd(irr, diff, p)) > 0) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::create(int p, int m, std::vector<int> irr) {
  if (p != 2 && p != 3) throw std::invalid_argument("unsupported characteristic (p must be 2 or 3)");
  if (m < 1 || int(irr.size()) != m + 1)
    throw std::invalid_argument("modulus must have degree m (m+1 coefficients)");
  for (auto& c : irr) c = ((c % p) + p) % p;
  if (irr[m] != 1) throw std::invalid_argument("modulus must be monic");
  std::uint64_t q64 = 1;
  for (int i = 0; i < m; ++i) q64 *= std::uint64_t(p);
  if (q64 > 4096) throw std::invalid_argument("field too large (p^m > 4096)");
  if (!is_irreducible(irr, p, m)) throw std::invalid_argument("not irreducible");

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = std::uint32_t(q64);
  f->irr_ = std::move(irr);
  const std::uint32_t q = f->q_;

  // addition / negation by digitwise arithmetic, then frozen into tables
  f->neg_.resize(q);
  f->add_.resize(std::size_t(q) * q);
  std::vector<std::vector<int>> digits(q, std::vector<int>(m));
  for (std::uint32_t e = 0; e < q; ++e) {
    std::uint32_t t = e;
    for (int i = 0; i < m; ++i) {
      digits[e][i] = int(t % p);
      t /= p;
    }
  }
  auto encode = [&](const std::vector<int>& c) {
    std::uint32_t e = 0;
    for (int i = m - 1; i >= 0; --i) e = e * p + std::uint32_t(c[i]);
    return Elt(e);
  };
  std::vector<int> tmp(m);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (int i = 0; i < m; ++i) tmp[i] = (p - digits[a][i]) % p;
    f->neg_[a] = encode(tmp);
    for (std::uint32_t b = a; b < q; ++b) {
      for (int i = 0; i < m; ++i) tmp[i] = (digits[a][i] + digits[b][i]) % p;
      const Elt s = encode(tmp);
      f->add_[std::size_t(a) * q + b] = s;
      f->add_[std::size_t(b) * q + a] = s;
    }
  }

  // multiplication of encodings via construction-time polynomial arithmetic
  auto mul_slow = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    Poly pa(digits[a].begin(), digits[a].end());
    Poly pb(digits[b].begin(), digits[b].end());
    return encode(pmulmod(pa, pb, f->irr_, p));
  };
  auto pow_slow = [&](std::uint32_t a, std::uint64_t n) {
    std::uint32_t r = 1, base = a;
    while (n) {
      if (n & 1) r = mul_slow(r, base);
      base = mul_slow(base, base);
      n >>= 1;
    }
    return r;
  };

  // generator: smallest encoding of full order q-1
  const std::uint64_t n = q - 1;
  const auto divisors = prime_divisors(n);
  f->gen_ = 0;
  for (std::uint32_t e = 1; e < q; ++e) {
    bool full = true;
    for (auto d : divisors) {
      if (pow_slow(e, n / d) == 1) {
        full = false;
        break;
      }
    }
    if (full || n == 1) {
      f->gen_ = Elt(e);
      break;
    }
  }
  if (f->gen_ == 0) throw invariant_error("no multiplicative generator found");

  f->exp_.resize(n == 0 ? 1 : 2 * n);
  f->log_.assign(q, 0);
  std::uint32_t acc = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    f->exp_[i] = Elt(acc);
    f->log_[acc] = Elt(i);
    acc = mul_slow(acc, f->gen_);
  }
  if (acc != 1) throw invariant_error("generator order mismatch");
  for (std::uint64_t i = n; i < 2 * n; ++i) f->exp_[i] = f->exp_[i - n];
  return f;
}

std::shared_ptr<const Field> Field::gf64(const std::vector<int>* irr_override) {
  if (irr_override) return create(2, 6, *irr_override);
  static const std::shared_ptr<const Field> f = create(2, 6, {1, 1, 0, 1, 1, 0, 1});
  return f;
}

std::shared_ptr<const Field> Field::gf729() {
  // X^6 - X^4 + X^2 - X - 1 over GF(3)
  static const std::shared_ptr<const Field> f = create(3, 6, {2, 2, 1, 0, 2, 0, 1});
  return f;
}

Field::Elt Field::pow(Elt a, long long n) const {
  if (a == 0) {
    if (n < 0) throw std::invalid_argument("division by zero");
    return n == 0 ? 1 : 0;
  }
  const long long ord = (long long)(q_)-1;
  long long e = ((long long)(log_[a]) * (n % ord)) % ord;
  if (e < 0) e += ord;
  return exp_[e];
}

Field::Elt Field::frobenius(Elt a, int r) const {
  if (r < 0) throw std::invalid_argument("frobenius exponent must be >= 0");
  if (a == 0) return 0;
  const std::uint64_t ord = q_ - 1;
  std::uint64_t e = 1 % ord;
  for (int i = 0; i < r; ++i) e = (e * std::uint64_t(p_)) % ord;
  return exp_[(std::uint64_t(log_[a]) * e) % ord];
}

std::vector<int> Field::coords(Elt a) const {
  std::vector<int> c(m_);
  std::uint32_t t = a;
  for (int i = 0; i < m_; ++i) {
    c[i] = int(t % p_);
    t /= p_;
  }
  return c;
}

Field::Elt Field::from_coords(const std::vector<int>& c) const {
  if (int(c.size()) != m_) throw std::invalid_argument("coordinate vector has wrong length");
  std::uint32_t e = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    const int d = ((c[i] % p_) + p_) % p_;
    e = e * p_ + std::uint32_t(d);
  }
  return Elt(e);
}

std::uint32_t Field::order(Elt a) const {
  if (a == 0) throw std::invalid_argument("order of zero is undefined");
  std::uint32_t o = q_ - 1;
  for (auto d : prime_divisors(q_ - 1))
    while (o % d == 0 && pow(a, o / d) == 1) o /= std::uint32_t(d);
  return o;
}

}  // namespace gkagc
