#include "arrlab/geometry.hpp"

#include <algorithm>
#include <set>

#include "arrlab/lattice.hpp"

namespace arrlab {

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

QuadExt dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

bool is_zero(const Vec3& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

Vec3 canonical(const Vec3& v) {
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    QuadExt inv = c.inverse();
    return {v[0] * inv, v[1] * inv, v[2] * inv};
  }
  throw Error(Errc::InvalidArgument, "zero homogeneous vector");
}

std::int64_t field_of(const Vec3& v) {
  std::int64_t d = 1;
  for (const auto& c : v) d = common_field(d, c.d());
  return d;
}

namespace {

std::string triple_str(const Vec3& v) {
  return "[" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + "]";
}

}  // namespace

std::string ProjPoint::str() const { return triple_str(c_); }
std::string ProjLine::str() const { return triple_str(c_); }

ProjLine ProjLine::conjugate() const {
  return ProjLine(c_[0].conjugate(), c_[1].conjugate(), c_[2].conjugate());
}

ProjPoint intersect(const ProjLine& l1, const ProjLine& l2) {
  Vec3 p = cross(l1.coeffs(), l2.coeffs());
  if (is_zero(p)) throw Error(Errc::EqualLines, "intersecting a line with itself: " + l1.str());
  return ProjPoint(p);
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  Vec3 l = cross(p.coords(), q.coords());
  if (is_zero(l)) throw Error(Errc::EqualPoints, "line through a doubled point " + p.str());
  return ProjLine(l);
}

// ------------------------------------------------------------- Arrangement

namespace {

std::int64_t field_of_lines(const std::vector<ProjLine>& lines) {
  std::int64_t d = 1;
  for (const auto& l : lines) d = common_field(d, field_of(l.coeffs()));
  return d;
}

}  // namespace

Arrangement::Arrangement(std::vector<ProjLine> lines) : Arrangement(lines, field_of_lines(lines)) {}

Arrangement::Arrangement(std::vector<ProjLine> lines, std::int64_t field_d)
    : lines_(std::move(lines)), field_d_(field_d) {
  if (!is_squarefree(field_d_)) throw Error(Errc::InvalidArgument, "field radicand must be squarefree");
  std::int64_t actual = field_of_lines(lines_);
  if (actual != 1 && actual != field_d_) {
    throw Error(Errc::MixedField, "coefficients in Q(sqrt " + std::to_string(actual) + ") but field_d is " +
                                      std::to_string(field_d_));
  }
  std::set<ProjLine> seen;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (!seen.insert(lines_[i]).second) {
      throw Error(Errc::EqualLines, "line " + std::to_string(i + 1) + " repeats " + lines_[i].str());
    }
  }
}

// ----------------------------------------------------------- ProjTransform

ProjTransform::ProjTransform(Matrix m) : m_(std::move(m)) {
  if (determinant().is_zero()) throw Error(Errc::SingularMatrix, "projective transformation with det 0");
}

ProjTransform ProjTransform::identity() {
  return ProjTransform(Matrix{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

QuadExt ProjTransform::determinant() const {
  const auto& m = m_;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ProjTransform::Matrix ProjTransform::adjugate() const {
  const auto& m = m_;
  Matrix a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // cofactor of m[j][i]
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return a;
}

ProjPoint ProjTransform::apply(const ProjPoint& p) const {
  const auto& v = p.coords();
  Vec3 r;
  for (int j = 0; j < 3; ++j) r[j] = v[0] * m_[0][j] + v[1] * m_[1][j] + v[2] * m_[2][j];
  return ProjPoint(r);
}

ProjLine ProjTransform::apply(const ProjLine& l) const {
  Matrix adj = adjugate();
  const auto& v = l.coeffs();
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = adj[i][0] * v[0] + adj[i][1] * v[1] + adj[i][2] * v[2];
  return ProjLine(r);
}

ProjTransform ProjTransform::then(const ProjTransform& next) const {
  Matrix r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = m_[i][0] * next.m_[0][j] + m_[i][1] * next.m_[1][j] + m_[i][2] * next.m_[2][j];
  }
  return ProjTransform(r);
}

// -------------------------------------------------------------- operations

IncidenceStructure incidence_of(const Arrangement& arr) {
  const std::size_t n = arr.size();
  std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
  std::vector<std::vector<int>> multiples;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered[i][j]) continue;
      Vec3 p = cross(arr.line(i).coeffs(), arr.line(j).coeffs());
      std::vector<int> through;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || dot(arr.line(k).coeffs(), p).is_zero()) through.push_back(static_cast<int>(k));
      }
      for (int a : through) {
        for (int b : through) covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
      }
      if (through.size() >= 3) multiples.push_back(std::move(through));
    }
  }
  return IncidenceStructure(static_cast<int>(n), std::move(multiples));
}

Arrangement apply_transform(const Arrangement& arr, const ProjTransform& t) {
  std::vector<ProjLine> out;
  out.reserve(arr.size());
  for (const auto& l : arr.lines()) out.push_back(t.apply(l));
  Arrangement probe(out);
  return Arrangement(std::move(out), common_field(arr.field_d(), probe.field_d()));
}

Arrangement conjugate_arrangement(const Arrangement& arr) {
  std::vector<ProjLine> out;
  out.reserve(arr.size());
  for (const auto& l : arr.lines()) out.push_back(l.conjugate());
  return Arrangement(std::move(out), arr.field_d());
}

}  // namespace arrlab
