#pragma once

// Shared generators for the property tests. Everything is seeded, so a
// failure reproduces exactly.

#include <algorithm>
#include <random>
#include <vector>

#include "arrlab/geometry.hpp"
#include "arrlab/lattice.hpp"

namespace arrlab::testing {

inline Rational small_rational(std::mt19937_64& rng, long range = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline QuadExt random_quad(std::mt19937_64& rng, std::int64_t d) {
  return QuadExt(small_rational(rng), small_rational(rng), d);
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Random invertible matrix over Q(sqrt d).
inline ProjTransform random_transform(std::mt19937_64& rng, std::int64_t d) {
  for (;;) {
    ProjTransform::Matrix m;
    for (auto& row : m)
      for (auto& x : row) x = d == 1 ? QuadExt(small_rational(rng)) : random_quad(rng, d);
    try {
      return ProjTransform(m);
    } catch (const Error&) {
    }
  }
}

/// n distinct rational lines placed one at a time: through two existing
/// intersection points, through one of them, or at random. Concurrencies
/// arise often enough to exercise every classification branch.
inline Arrangement random_rational_arrangement(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick(0, 99);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::vector<ProjLine> lines;
  auto present = [&](const ProjLine& l) { return std::find(lines.begin(), lines.end(), l) != lines.end(); };
  auto random_point = [&] { return ProjPoint(Vec3{QuadExt(coef(rng)), QuadExt(coef(rng)), QuadExt(1)}); };
  while (static_cast<int>(lines.size()) < n) {
    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) pts.push_back(intersect(lines[i], lines[j]));
    const int roll = pick(rng);
    Vec3 c;
    if (pts.size() >= 2 && roll < 50) {
      std::uniform_int_distribution<std::size_t> ip(0, pts.size() - 1);
      const auto& p = pts[ip(rng)];
      const auto& q = pts[ip(rng)];
      if (p == q) continue;
      c = cross(p.coords(), q.coords());
    } else if (!pts.empty() && roll < 80) {
      std::uniform_int_distribution<std::size_t> ip(0, pts.size() - 1);
      ProjPoint p = pts[ip(rng)];
      ProjPoint q = random_point();
      if (p == q) continue;
      c = cross(p.coords(), q.coords());
    } else {
      c = Vec3{QuadExt(coef(rng)), QuadExt(coef(rng)), QuadExt(coef(rng))};
    }
    if (is_zero(c)) continue;
    ProjLine l(c);
    if (!present(l)) lines.push_back(l);
  }
  return Arrangement(std::move(lines), 1);
}

}  // namespace arrlab::testing
