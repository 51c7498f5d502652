#pragma once

// Exact arithmetic: rationals, elements of Q(sqrt d), and univariate
// polynomials / rational functions over those fields.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "arrlab/error.hpp"

namespace arrlab {

/// Arbitrary-precision rational in lowest terms, positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& v) : v_(v) {}

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  static Rational parse(std::string_view text);

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Squarefree part of a nonzero integer, sign preserved (e.g. -12 -> -3).
std::int64_t squarefree_part(const mpz_class& v);
bool is_squarefree(std::int64_t d);

/// a + b*sqrt(d) with d squarefree. Any value with b == 0 is stored with
/// d == 1, so plain rationals combine with every field.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : a_(v) {}                 // NOLINT(google-explicit-constructor)
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, std::int64_t d);

  /// sqrt(d) itself.
  static QuadExt sqrt_of(std::int64_t d) { return QuadExt(Rational(0), Rational(1), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Canonical order: rational part, then radical coefficient, then d.
  friend bool operator<(const QuadExt& x, const QuadExt& y);

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }
  QuadExt inverse() const;
  /// x * conj(x), always rational.
  Rational norm() const;

  /// "a+b*sqrt(d)" (or just "a" when rational); parse() reads it back exactly.
  std::string str() const;
  static QuadExt parse(std::string_view text);

 private:
  void canonicalize();

  Rational a_;
  Rational b_;
  std::int64_t d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// The radicand shared by both operands; throws MixedField when they live
/// in different quadratic fields.
std::int64_t common_field(std::int64_t d1, std::int64_t d2);

/// Univariate polynomial over Q(sqrt d), coefficients lowest degree first.
class Poly {
 public:
  Poly() = default;
  Poly(QuadExt c);  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<QuadExt> coeffs);
  explicit Poly(std::vector<QuadExt> coeffs);

  /// The monomial t.
  static Poly t() { return Poly({0, 1}); }

  const std::vector<QuadExt>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  QuadExt coeff(int i) const;
  QuadExt leading() const { return c_.empty() ? QuadExt() : c_.back(); }
  bool is_rational() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  QuadExt evaluate(const QuadExt& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly conjugate() const;
  /// Scales a rational polynomial to coprime integer coefficients with
  /// positive leading coefficient.
  Poly primitive() const;

  std::string str(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<QuadExt> c_;
};

/// Quotient and remainder; throws DivisionByZero on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// p / gcd(p, p'), monic.
Poly squarefree(const Poly& p);
/// Discriminant of a quadratic, b^2 - 4ac.
QuadExt discriminant(const Poly& quadratic);

struct PolyRoot {
  QuadExt value;
  int multiplicity = 1;
};

struct QuadraticRoots {
  std::int64_t field_d = 1;  // squarefree part of the discriminant
  std::vector<PolyRoot> roots;
};

/// Roots of a rational polynomial of degree 1 or 2, in canonical order.
/// Throws UnsupportedDegree otherwise.
QuadraticRoots poly_roots_quadratic(const Poly& p);

/// Quotient of polynomials in lowest terms with monic denominator.
class RatFun {
 public:
  RatFun() : num_(), den_(QuadExt(1)) {}
  RatFun(Poly num) : num_(std::move(num)), den_(QuadExt(1)) {}  // NOLINT
  RatFun(Poly num, Poly den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator-() const { return RatFun(-num_, den_); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Throws PoleAtEvaluationPoint when the denominator vanishes at x.
  QuadExt evaluate(const QuadExt& x) const;
  RatFun normalized() const { return RatFun(num_, den_); }

 private:
  Poly num_;
  Poly den_;
};

}  // namespace arrlab

template <>
struct std::hash<arrlab::QuadExt> {
  std::size_t operator()(const arrlab::QuadExt& x) const noexcept {
    return std::hash<std::string>{}(x.str());
  }
};
