#pragma once

// Sparse multivariate polynomials over Q, used for symbolic line placement
// when a construction carries more than one free parameter.

#include <map>
#include <string>
#include <vector>

#include "arrlab/exact.hpp"

namespace arrlab {

class MPoly {
 public:
  using Monomial = std::vector<int>;

  MPoly() = default;
  MPoly(int nvars, const Rational& c);
  static MPoly variable(int nvars, int index);
  /// Embeds a rational univariate polynomial as a polynomial in variable `index`.
  static MPoly from_poly(const Poly& p, int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  int total_degree() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  Rational evaluate(const std::vector<Rational>& point) const;
  /// Requires nvars <= 1.
  Poly to_poly() const;
  /// Divides out the rational content and the gcd monomial.
  MPoly primitive_part() const;
  /// scale * this / x^low; every term must be divisible by x^low.
  MPoly scaled_quotient(const Monomial& low, const Rational& scale) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  int nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

}  // namespace arrlab
