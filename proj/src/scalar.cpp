#include "s4lie/scalar.hpp"

#include <charconv>

#include "s4lie/errors.hpp"

namespace s4lie {

namespace {

bool square_free(std::int64_t d) {
  std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

mpq_class parse_fraction(std::string_view text) {
  if (text.empty()) throw FormatError("empty fraction");
  if (text.front() == '+') throw FormatError("'+' sign not allowed in scalar: " + std::string(text));
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (den.empty() || den.front() == '-' || den.front() == '+')
    throw FormatError("bad denominator in scalar: " + std::string(text));
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw FormatError("bad fraction: " + std::string(text));
  if (d == 0) throw FormatError("zero denominator: " + std::string(text));
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string fraction_text(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

Field Field::quadratic(std::int64_t d) {
  if (d == 0 || d == 1 || !square_free(d))
    throw Error(ErrorKind::format, "discriminant must be square-free and not 0 or 1: " + std::to_string(d));
  return Field(d);
}

Field Field::parse(std::string_view s) {
  if (s == "Q") return rationals();
  constexpr std::string_view prefix = "Qsqrt:";
  if (s.substr(0, prefix.size()) == prefix) {
    auto rest = s.substr(prefix.size());
    std::int64_t d = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
    if (ec != std::errc{} || ptr != rest.data() + rest.size())
      throw FormatError("bad field descriptor: " + std::string(s));
    return quadratic(d);
  }
  throw FormatError("bad field descriptor: " + std::string(s));
}

std::string Field::descriptor() const {
  return d_ == 0 ? "Q" : "Qsqrt:" + std::to_string(d_);
}

Scalar Field::zero() const { return Scalar(*this, 0); }
Scalar Field::one() const { return Scalar(*this, 1); }
Scalar Field::integer(long v) const { return Scalar(*this, v); }
Scalar Field::rational(long num, long den) const {
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(*this, q);
}
Scalar Field::make(const mpq_class& a, const mpq_class& b) const { return Scalar(*this, a, b); }
Scalar Field::radical() const {
  if (d_ == 0) throw Error(ErrorKind::field_capability, "Q has no radical element");
  return Scalar(*this, 0, 1);
}

Scalar::Scalar(const Field& f, mpq_class a, mpq_class b)
    : a_(std::move(a)), b_(std::move(b)), d_(f.discriminant()) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 0 && sgn(b_) != 0) throw ContextError("radical part over Q");
}

Field Scalar::field() const { return d_ == 0 ? Field::rationals() : Field::quadratic(d_); }

void Scalar::check_context(const Scalar& o) const {
  if (d_ != o.d_)
    throw ContextError("mixed field contexts: d=" + std::to_string(d_) + " and d=" + std::to_string(o.d_));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  mpq_neg(r.a_.get_mpq_t(), r.a_.get_mpq_t());
  if (sgn(r.b_) != 0) mpq_neg(r.b_.get_mpq_t(), r.b_.get_mpq_t());
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_context(o);
  a_ += o.a_;
  if (sgn(o.b_) != 0) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_context(o);
  a_ -= o.a_;
  if (sgn(o.b_) != 0) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_context(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  // (a + b r)(c + e r) = (ac + d b e) + (ae + bc) r
  mpq_class na = a_ * o.a_ + mpq_class(d_) * b_ * o.b_;
  mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

void Scalar::add_product(const Scalar& x, const Scalar& y) {
  check_context(x);
  check_context(y);
  if (sgn(x.b_) == 0 && sgn(y.b_) == 0) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), x.a_.get_mpq_t(), y.a_.get_mpq_t());
    a_ += t;
    return;
  }
  *this += x * y;
}

void Scalar::sub_product(const Scalar& x, const Scalar& y) {
  check_context(x);
  check_context(y);
  if (sgn(x.b_) == 0 && sgn(y.b_) == 0) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), x.a_.get_mpq_t(), y.a_.get_mpq_t());
    a_ -= t;
    return;
  }
  *this -= x * y;
}

mpq_class Scalar::norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::precondition, "division by zero");
  Scalar r;
  r.d_ = d_;
  if (sgn(b_) == 0) {
    r.a_ = 1 / a_;
    return r;
  }
  mpq_class n = norm();
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_context(o);
  if (sgn(o.b_) == 0) {
    if (sgn(o.a_) == 0) throw Error(ErrorKind::precondition, "division by zero");
    a_ /= o.a_;
    if (sgn(b_) != 0) b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  std::string s = fraction_text(a_);
  if (sgn(b_) > 0) s += "+";
  if (sgn(b_) != 0) s += fraction_text(b_) + "*r";
  return s;
}

Scalar Scalar::parse(std::string_view text, const Field& f) {
  std::string_view rational = text;
  std::string_view radical;
  // separator: a sign after the first character that does not follow another sign
  std::size_t sep = std::string_view::npos;
  for (std::size_t i = 1; i < text.size(); ++i)
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '+' && text[i - 1] != '-') {
      sep = i;
      break;
    }
  if (sep != std::string_view::npos) {
    rational = text.substr(0, sep);
    radical = text.substr(text[sep] == '+' ? sep + 1 : sep);
  } else if (text.size() >= 2 && text.substr(text.size() - 2) == "*r") {
    rational = {};
    radical = text;
  }
  mpq_class a = rational.empty() ? mpq_class(0) : parse_fraction(rational);
  mpq_class b = 0;
  if (!radical.empty()) {
    if (radical.size() < 2 || radical.substr(radical.size() - 2) != "*r")
      throw FormatError("bad radical part in scalar: " + std::string(text));
    if (f.is_rational()) throw ContextError("radical part in a Q scalar: " + std::string(text));
    b = parse_fraction(radical.substr(0, radical.size() - 2));
  }
  return Scalar(f, a, b);
}

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::format: return "format";
    case ErrorKind::context: return "context";
    case ErrorKind::shape: return "shape";
    case ErrorKind::invalid_involution: return "invalid-involution";
    case ErrorKind::invalid_form: return "invalid-form";
    case ErrorKind::missing_structure: return "missing-structure";
    case ErrorKind::axiom: return "axiom";
    case ErrorKind::construction: return "construction";
    case ErrorKind::underdetermined: return "underdetermined";
    case ErrorKind::not_a_triple: return "not-a-triple";
    case ErrorKind::containment: return "containment";
    case ErrorKind::field_capability: return "field-capability";
    case ErrorKind::action_structure: return "action-structure";
    case ErrorKind::grading: return "grading";
    case ErrorKind::unknown_name: return "unknown-name";
    case ErrorKind::precondition: return "precondition";
  }
  return "unknown";
}

}  // namespace s4lie
