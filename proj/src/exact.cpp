#include "arrlab/exact.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace arrlab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MixedField: return "MixedField";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case Errc::EqualLines: return "EqualLines";
    case Errc::EqualPoints: return "EqualPoints";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::InconsistentStructure: return "InconsistentStructure";
    case Errc::ConsistencyViolation: return "ConsistencyViolation";
    case Errc::NoFrame: return "NoFrame";
    case Errc::OutsideTheorem: return "OutsideTheorem";
    case Errc::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t squarefree_part(const mpz_class& v) {
  if (v == 0) throw Error(Errc::InvalidArgument, "squarefree part of zero");
  mpz_class rest = abs(v);
  mpz_class result = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    if (p > 100000000) throw Error(Errc::UnsupportedDegree, "discriminant too large to factor: " + v.get_str());
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e % 2 == 1) result *= p;
  }
  result *= rest;
  if (!result.fits_slong_p()) throw Error(Errc::UnsupportedDegree, "radicand out of range: " + v.get_str());
  return sgn(v) * result.get_si();
}

bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  return squarefree_part(mpz_class(static_cast<long>(d))) == d;
}

// ----------------------------------------------------------------- QuadExt

std::int64_t common_field(std::int64_t d1, std::int64_t d2) {
  if (d1 == 1) return d2;
  if (d2 == 1 || d1 == d2) return d1;
  throw Error(Errc::MixedField, "Q(sqrt " + std::to_string(d1) + ") vs Q(sqrt " + std::to_string(d2) + ")");
}

QuadExt::QuadExt(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!is_squarefree(d)) throw Error(Errc::InvalidArgument, "radicand " + std::to_string(d) + " is not squarefree");
  canonicalize();
}

void QuadExt::canonicalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = Rational(0);
  }
  if (b_.is_zero()) d_ = 1;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = common_field(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  canonicalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = common_field(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  canonicalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  std::int64_t d = common_field(d_, o.d_);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(static_cast<long>(d));
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  canonicalize();
  return *this;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(static_cast<long>(d_)); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Rational n = norm();
  return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  common_field(d_, o.d_);
  return *this *= o.inverse();
}

bool operator<(const QuadExt& x, const QuadExt& y) {
  if (!(x.a_ == y.a_)) return x.a_ < y.a_;
  if (!(x.b_ == y.b_)) return x.b_ < y.b_;
  return x.d_ < y.d_;
}

std::string QuadExt::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out = a_.str();
  out += b_.sign() > 0 ? "+" : "-";
  out += (b_.sign() > 0 ? b_ : -b_).str();
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

QuadExt QuadExt::parse(std::string_view text) {
  auto bad = [&] { return Error(Errc::ParseError, "malformed field element '" + std::string(text) + "'"); };
  const std::string_view marker = "*sqrt(";
  auto m = text.find(marker);
  if (m == std::string_view::npos) return QuadExt(Rational::parse(text));
  if (text.back() != ')') throw bad();
  std::string_view radicand = text.substr(m + marker.size(), text.size() - m - marker.size() - 1);
  std::string_view head = text.substr(0, m);
  // The split sign is the last '+'/'-' that is not the leading sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  Rational a(0);
  Rational b;
  if (split == std::string_view::npos) {
    b = Rational::parse(head);
  } else {
    a = Rational::parse(head.substr(0, split));
    b = Rational::parse(head.substr(split + 1));
    if (head[split] == '-') b = -b;
  }
  std::string_view rad_digits = radicand;
  if (!rad_digits.empty() && rad_digits.front() == '-') rad_digits.remove_prefix(1);
  if (!all_digits(rad_digits) || rad_digits.size() > 18) throw bad();
  std::int64_t d = std::stoll(std::string(radicand));
  if (!is_squarefree(d)) throw Error(Errc::ParseError, "radicand not squarefree in '" + std::string(text) + "'");
  return QuadExt(a, b, d);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

// -------------------------------------------------------------------- Poly

Poly::Poly(QuadExt c) : c_{std::move(c)} { trim(); }
Poly::Poly(std::initializer_list<QuadExt> coeffs) : c_(coeffs) { trim(); }
Poly::Poly(std::vector<QuadExt> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QuadExt Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return QuadExt();
  return c_[static_cast<std::size_t>(i)];
}

bool Poly::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const QuadExt& c) { return c.is_rational(); });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<QuadExt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

QuadExt Poly::evaluate(const QuadExt& x) const {
  QuadExt acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<QuadExt> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * QuadExt(static_cast<long>(i)));
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  QuadExt inv = c_.back().inverse();
  Poly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

Poly Poly::conjugate() const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.conjugate();
  return r;
}

Poly Poly::primitive() const {
  if (c_.empty()) return *this;
  if (!is_rational()) throw Error(Errc::InvalidArgument, "primitive() needs rational coefficients");
  mpz_class lcm_den = 1;
  for (const auto& c : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.a().denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpq_class scaled = c.a().value() * lcm_den;
    ints.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (ints.back() < 0) g = -g;
  std::vector<QuadExt> r;
  for (auto& v : ints) r.emplace_back(Rational(mpz_class(v / g)));
  return Poly(std::move(r));
}

std::string Poly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c_[i] == QuadExt(1) && i > 0;
    if (!unit) os << (c_[i].is_rational() ? c_[i].str() : "(" + c_[i].str() + ")");
    if (i > 0) os << (unit ? "" : "*") << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<QuadExt> rem = num.coeffs();
  int dn = den.degree();
  if (num.degree() < dn) return {Poly(), num};
  std::vector<QuadExt> quo(static_cast<std::size_t>(num.degree() - dn + 1));
  QuadExt lead_inv = den.leading().inverse();
  for (int i = num.degree(); i >= dn; --i) {
    QuadExt q = rem[static_cast<std::size_t>(i)] * lead_inv;
    quo[static_cast<std::size_t>(i - dn)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(i - dn + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    // Keep intermediate coefficients small.
    x = y.monic();
    y = r.monic();
  }
  return x.monic();
}

Poly squarefree(const Poly& p) {
  if (p.degree() < 1) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

QuadExt discriminant(const Poly& q) {
  if (q.degree() != 2) throw Error(Errc::UnsupportedDegree, "discriminant of non-quadratic");
  return q.coeff(1) * q.coeff(1) - QuadExt(4) * q.coeff(2) * q.coeff(0);
}

QuadraticRoots poly_roots_quadratic(const Poly& p) {
  if (p.degree() < 1 || p.degree() > 2) {
    throw Error(Errc::UnsupportedDegree, "root extraction supports degree 1 or 2, got " + std::to_string(p.degree()));
  }
  if (!p.is_rational()) throw Error(Errc::InvalidArgument, "root extraction needs rational coefficients");
  QuadraticRoots out;
  if (p.degree() == 1) {
    out.roots.push_back({-p.coeff(0) / p.coeff(1), 1});
    return out;
  }
  Rational a = p.coeff(2).a();
  Rational b = p.coeff(1).a();
  Rational disc = discriminant(p).a();
  Rational two_a = Rational(2) * a;
  if (disc.is_zero()) {
    out.roots.push_back({QuadExt(-b / two_a), 2});
    return out;
  }
  // disc = n/m  =>  sqrt(disc) = sqrt(n*m)/m = k*sqrt(D)/m with n*m = k^2 * D.
  mpz_class nm = disc.numerator() * disc.denominator();
  std::int64_t D = squarefree_part(nm);
  mpz_class k2 = nm / D;
  mpz_class k = sqrt(k2);
  Rational root_coeff = Rational(mpq_class(k, disc.denominator()));
  out.field_d = D;
  QuadExt sq = D == 1 ? QuadExt(root_coeff) : QuadExt(Rational(0), root_coeff, D);
  QuadExt r1 = (QuadExt(-b) + sq) / QuadExt(two_a);
  QuadExt r2 = (QuadExt(-b) - sq) / QuadExt(two_a);
  if (r2 < r1) std::swap(r1, r2);
  out.roots.push_back({r1, 1});
  out.roots.push_back({r2, 1});
  return out;
}

// ------------------------------------------------------------------ RatFun

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(QuadExt(1));
    return;
  }
  Poly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  QuadExt lc_inv = den.leading().inverse();
  num_ = num * Poly(lc_inv);
  den_ = den * Poly(lc_inv);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

QuadExt RatFun::evaluate(const QuadExt& x) const {
  QuadExt d = den_.evaluate(x);
  if (d.is_zero()) throw Error(Errc::PoleAtEvaluationPoint, "pole at " + x.str());
  return num_.evaluate(x) / d;
}

}  // namespace arrlab
