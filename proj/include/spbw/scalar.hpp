// Exact field scalars: arbitrary-precision rationals and prime residue fields.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace spbw {

// p == 0 selects the rationals, p > 0 a prime residue field.
struct FieldSpec {
  unsigned long p = 0;

  bool rational() const { return p == 0; }
  bool operator==(const FieldSpec& o) const { return p == o.p; }
  bool operator!=(const FieldSpec& o) const { return p != o.p; }

  std::string to_string() const {
    return rational() ? std::string("rationals") : "prime " + std::to_string(p);
  }
};

inline std::optional<std::string> validate_field(const FieldSpec& f) {
  if (f.rational()) return std::nullopt;
  if (f.p < 2) return "field modulus must be at least 2";
  if (f.p >= (1ull << 62)) return "field modulus too large";
  mpz_class m(static_cast<unsigned long>(f.p));
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    return "field modulus " + std::to_string(f.p) + " is not prime";
  return std::nullopt;
}

// Exact scalar. Rationals are kept reduced with positive denominator (mpq
// canonical form); residues are integers in [0, p).
class Scalar {
 public:
  Scalar() : p_(0), v_(0) {}

  static Scalar zero(const FieldSpec& f) { return Scalar(f.p, mpq_class(0)); }
  static Scalar one(const FieldSpec& f) { return from_long(f, 1); }

  static Scalar from_long(const FieldSpec& f, long v) {
    Scalar s(f.p, mpq_class(v));
    s.normalize();
    return s;
  }

  static Scalar from_mpq(const FieldSpec& f, const mpq_class& v) {
    if (!f.rational() && mpz_divisible_ui_p(v.get_den().get_mpz_t(), f.p))
      throw std::invalid_argument("denominator not invertible modulo " + std::to_string(f.p));
    Scalar s(f.p, v);
    s.canonicalize();
    s.normalize();
    return s;
  }

  // Accepts an optionally signed integer or a fraction "a/b".
  static Scalar parse(const FieldSpec& f, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    mpq_class v;
    if (v.set_str(text, 10) != 0)
      throw std::invalid_argument("bad scalar literal: " + text);
    // Canonicalization divides by the denominator; catch 0 before it runs.
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    v.canonicalize();
    return from_mpq(f, v);
  }

  FieldSpec field() const { return FieldSpec{p_}; }
  bool same_field(const Scalar& o) const { return p_ == o.p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const {
    Scalar r(p_, -v_);
    r.normalize();
    return r;
  }

  Scalar operator+(const Scalar& o) const {
    check(o);
    Scalar r(p_, v_ + o.v_);
    r.normalize();
    return r;
  }

  Scalar operator-(const Scalar& o) const {
    check(o);
    Scalar r(p_, v_ - o.v_);
    r.normalize();
    return r;
  }

  Scalar operator*(const Scalar& o) const {
    check(o);
    Scalar r(p_, v_ * o.v_);
    r.normalize();
    return r;
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (p_ == 0) return Scalar(0, 1 / v_);
    mpz_class inv, m(static_cast<unsigned long>(p_));
    if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), m.get_mpz_t()) == 0)
      throw std::domain_error("residue not invertible");
    return Scalar(p_, mpq_class(inv));
  }

  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    check(o);
    return v_ == o.v_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rationals print as "a" or "a/b", residues as the canonical representative.
  std::string to_string() const { return v_.get_str(); }

  const mpq_class& value() const { return v_; }

 private:
  Scalar(unsigned long p, mpq_class v) : p_(p), v_(std::move(v)) {}

  void canonicalize() { v_.canonicalize(); }

  void normalize() {
    if (p_ == 0) return;
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class num = v_.get_num(), den = v_.get_den();
    if (den != 1) {
      mpz_class dinv;
      if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("denominator not invertible in residue field");
      num *= dinv;
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
    v_ = mpq_class(r);
  }

  void check(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalars from different fields");
  }

  unsigned long p_;
  mpq_class v_;
};

}  // namespace spbw
