#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace s4lie {

class Scalar;

// Ground field: Q (discriminant 0) or Q(sqrt d) with d square-free, d != 0, 1.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field{}; }
  static Field quadratic(std::int64_t d);

  // Accepts "Q", "Qsqrt:-1", "Qsqrt:-3", ...
  static Field parse(std::string_view descriptor);
  std::string descriptor() const;

  std::int64_t discriminant() const noexcept { return d_; }
  bool is_rational() const noexcept { return d_ == 0; }
  bool has_sqrt_minus_one() const noexcept { return d_ == -1; }

  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long v) const;
  Scalar rational(long num, long den) const;
  Scalar make(const mpq_class& a, const mpq_class& b = 0) const;
  // sqrt(d); throws for Q.
  Scalar radical() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::int64_t d) : d_(d) {}
  std::int64_t d_ = 0;
};

// a + b*sqrt(d). Fractions are kept canonical by GMP; b is always 0 over Q.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& f, mpq_class a, mpq_class b = 0);

  Field field() const;
  std::int64_t discriminant() const noexcept { return d_; }
  const mpq_class& rational_part() const noexcept { return a_; }
  const mpq_class& radical_part() const noexcept { return b_; }

  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const noexcept { return sgn(b_) == 0 && a_ == 1; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  // this += x * y, without a temporary when everything is rational.
  void add_product(const Scalar& x, const Scalar& y);
  void sub_product(const Scalar& x, const Scalar& y);

  Scalar inverse() const;
  // Field norm a^2 - d b^2 (rational).
  mpq_class norm() const;

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }
  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.d_ == r.d_ && l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }

  // "a/b", "a/b+c/e*r" or "a/b-c/e*r" where r stands for sqrt(d).
  std::string to_string() const;
  static Scalar parse(std::string_view text, const Field& f);

 private:
  void check_context(const Scalar& o) const;

  mpq_class a_;
  mpq_class b_;
  std::int64_t d_ = 0;
};

}  // namespace s4lie
