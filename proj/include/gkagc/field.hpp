#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gkagc/common.hpp"

namespace gkagc {

/// Exact arithmetic in GF(p^m), p in {2,3}, with a configurable monic
/// irreducible modulus. Elements are identified with their little-endian
/// base-p integer encoding enc(e) = sum coords[i] * p^i, a bijection onto
/// [0, p^m). All operations are table-driven and pure; a Field is immutable
/// after construction and safe to share between threads.
class Field {
 public:
  using Elt = std::uint16_t;

  /// Builds GF(p^m) from a monic irreducible polynomial (little-endian
  /// coefficients, length m+1). Throws std::invalid_argument with message
  /// "not irreducible" if the modulus is reducible over GF(p).
  static std::shared_ptr<const Field> create(int p, int m, std::vector<int> irr);

  /// GF(64) with modulus X^6+X^4+X^3+X+1 (primitive), or a caller override.
  static std::shared_ptr<const Field> gf64(const std::vector<int>* irr_override = nullptr);
  /// GF(729) with modulus X^6-X^4+X^2-X-1, the representation in which all
  /// literal GF(729) constants in this library are expressed.
  static std::shared_ptr<const Field> gf729();

  int p() const { return p_; }
  int m() const { return m_; }
  std::uint32_t size() const { return q_; }
  const std::vector<int>& modulus() const { return irr_; }

  /// Smallest encoding whose multiplicative order is p^m - 1.
  Elt generator() const { return gen_; }

  Elt add(Elt a, Elt b) const { return add_[std::size_t(a) * q_ + b]; }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[std::size_t(log_[a]) + log_[b]];
  }
  Elt inv(Elt a) const {
    if (a == 0) throw std::invalid_argument("division by zero");
    return exp_[q_ - 1 - log_[a]];
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  /// a^n for any integer n (negative n uses the inverse; 0^0 = 1).
  Elt pow(Elt a, long long n) const;

  /// Frobenius iterate a -> a^(p^r), r >= 0.
  Elt frobenius(Elt a, int r) const;

  /// gen^k reduced mod p^m - 1 (k may be any integer).
  Elt gen_pow(long long k) const { return pow(gen_, k); }

  std::vector<int> coords(Elt a) const;
  Elt from_coords(const std::vector<int>& c) const;

  /// Multiplicative order of a nonzero element.
  std::uint32_t order(Elt a) const;

  bool same(const Field& other) const { return this == &other; }

 private:
  Field() = default;

  int p_ = 0, m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<int> irr_;
  Elt gen_ = 0;
  std::vector<Elt> exp_;   // size 2(q-1): gen^i, doubled to skip a mod
  std::vector<Elt> log_;   // size q, log_[0] unused
  std::vector<Elt> add_;   // size q*q
  std::vector<Elt> neg_;   // size q
};

/// Element-with-field wrapper enforcing that both operands live in the same
/// field. Heavy inner loops use the raw Field::Elt interface instead.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::shared_ptr<const Field> f, Field::Elt v) : f_(std::move(f)), v_(v) {}

  Field::Elt value() const { return v_; }
  const std::shared_ptr<const Field>& field() const { return f_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return {a.f_, a.f_->add(a.v_, b.v_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return {a.f_, a.f_->sub(a.v_, b.v_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return {a.f_, a.f_->mul(a.v_, b.v_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return {a.f_, a.f_->div(a.v_, b.v_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return a.v_ == b.v_;
  }

  FieldElement inv() const { return {f_, f_->inv(v_)}; }
  FieldElement pow(long long n) const { return {f_, f_->pow(v_, n)}; }
  FieldElement frobenius(int r) const { return {f_, f_->frobenius(v_, r)}; }

 private:
  void check(const FieldElement& o) const {
    if (f_.get() != o.f_.get()) throw std::invalid_argument("mixed field specs");
  }
  std::shared_ptr<const Field> f_;
  Field::Elt v_ = 0;
};

}  // namespace gkagc
