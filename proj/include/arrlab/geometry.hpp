#pragma once

// Projective points, lines and arrangements in P^2 over Q(sqrt d).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "arrlab/exact.hpp"

namespace arrlab {

class IncidenceStructure;

using Vec3 = std::array<QuadExt, 3>;

Vec3 cross(const Vec3& u, const Vec3& v);
QuadExt dot(const Vec3& u, const Vec3& v);
bool is_zero(const Vec3& v);
/// Scales so the first nonzero entry is 1. Throws InvalidArgument on zero.
Vec3 canonical(const Vec3& v);
/// Common radicand of the entries (1 if all rational).
std::int64_t field_of(const Vec3& v);

/// Point [x:y:z], stored canonically.
class ProjPoint {
 public:
  explicit ProjPoint(const Vec3& coords) : c_(canonical(coords)) {}
  ProjPoint(QuadExt x, QuadExt y, QuadExt z) : ProjPoint(Vec3{std::move(x), std::move(y), std::move(z)}) {}

  const Vec3& coords() const { return c_; }
  friend bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.c_ == q.c_; }
  friend bool operator<(const ProjPoint& p, const ProjPoint& q) { return p.c_ < q.c_; }
  std::string str() const;

 private:
  Vec3 c_;
};

/// Line ax + by + cz = 0, stored canonically.
class ProjLine {
 public:
  explicit ProjLine(const Vec3& coeffs) : c_(canonical(coeffs)) {}
  ProjLine(QuadExt a, QuadExt b, QuadExt c) : ProjLine(Vec3{std::move(a), std::move(b), std::move(c)}) {}

  const Vec3& coeffs() const { return c_; }
  bool contains(const ProjPoint& p) const { return dot(c_, p.coords()).is_zero(); }
  ProjLine conjugate() const;
  friend bool operator==(const ProjLine& l, const ProjLine& m) { return l.c_ == m.c_; }
  friend bool operator<(const ProjLine& l, const ProjLine& m) { return l.c_ < m.c_; }
  std::string str() const;

 private:
  Vec3 c_;
};

/// Throws EqualLines.
ProjPoint intersect(const ProjLine& l1, const ProjLine& l2);
/// Throws EqualPoints.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

/// Ordered list of pairwise distinct lines over one quadratic field.
class Arrangement {
 public:
  Arrangement() = default;
  /// field_d defaults to the field generated by the coefficients.
  explicit Arrangement(std::vector<ProjLine> lines);
  Arrangement(std::vector<ProjLine> lines, std::int64_t field_d);

  const std::vector<ProjLine>& lines() const { return lines_; }
  const ProjLine& line(std::size_t i) const { return lines_.at(i); }
  std::size_t size() const { return lines_.size(); }
  std::int64_t field_d() const { return field_d_; }

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.field_d_ == b.field_d_ && a.lines_ == b.lines_;
  }

 private:
  std::vector<ProjLine> lines_;
  std::int64_t field_d_ = 1;
};

/// 3x3 matrix acting on the right of row-vector points: p -> p*M.
class ProjTransform {
 public:
  using Matrix = std::array<std::array<QuadExt, 3>, 3>;

  /// Throws SingularMatrix when det(M) = 0.
  explicit ProjTransform(Matrix m);
  static ProjTransform identity();

  const Matrix& matrix() const { return m_; }
  QuadExt determinant() const;
  Matrix adjugate() const;

  ProjPoint apply(const ProjPoint& p) const;
  /// Image line: adj(M) * l, so p on l iff p*M on the image.
  ProjLine apply(const ProjLine& l) const;

  /// Point action of (*this) followed by `next`.
  ProjTransform then(const ProjTransform& next) const;

 private:
  Matrix m_;
};

IncidenceStructure incidence_of(const Arrangement& arr);
Arrangement apply_transform(const Arrangement& arr, const ProjTransform& t);
Arrangement conjugate_arrangement(const Arrangement& arr);

}  // namespace arrlab
