#include "arrlab/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace arrlab {

MPoly::MPoly(int nvars, const Rational& c) : nvars_(nvars) {
  if (!c.is_zero()) terms_[Monomial(static_cast<std::size_t>(nvars), 0)] = c;
}

MPoly MPoly::variable(int nvars, int index) {
  MPoly p(nvars, Rational(0));
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m.at(static_cast<std::size_t>(index)) = 1;
  p.terms_[m] = Rational(1);
  return p;
}

MPoly MPoly::from_poly(const Poly& p, int nvars, int index) {
  if (!p.is_rational()) throw Error(Errc::InvalidArgument, "MPoly needs rational coefficients");
  MPoly r(nvars, Rational(0));
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i).is_zero()) continue;
    Monomial m(static_cast<std::size_t>(nvars), 0);
    if (i > 0) m.at(static_cast<std::size_t>(index)) = i;
    r.terms_[m] = p.coeff(i).a();
  }
  return r;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars_, b.nvars_), Rational(0));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      MPoly::Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) < nvars_) throw Error(Errc::InvalidArgument, "too few evaluation coordinates");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int e = 0; e < m[i]; ++e) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

Poly MPoly::to_poly() const {
  if (nvars_ > 1) throw Error(Errc::InvalidArgument, "to_poly on a multivariate polynomial");
  std::vector<QuadExt> c;
  for (const auto& [m, v] : terms_) {
    std::size_t e = m.empty() ? 0 : static_cast<std::size_t>(m[0]);
    if (c.size() <= e) c.resize(e + 1);
    c[e] = QuadExt(v);
  }
  return Poly(std::move(c));
}

MPoly MPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Monomial low = terms_.begin()->first;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], m[i]);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  return scaled_quotient(low, Rational(mpq_class(den_lcm, num_gcd)));
}

MPoly MPoly::scaled_quotient(const Monomial& low, const Rational& scale) const {
  MPoly r(nvars_, Rational(0));
  for (const auto& [m, c] : terms_) {
    Monomial shifted = m;
    for (std::size_t i = 0; i < low.size() && i < shifted.size(); ++i) {
      shifted[i] -= low[i];
      if (shifted[i] < 0) throw Error(Errc::InvalidArgument, "monomial does not divide polynomial");
    }
    r.terms_[shifted] = c * scale;
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.str();
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*u" << i;
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

}  // namespace arrlab
