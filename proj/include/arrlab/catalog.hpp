#pragma once

// Exact coordinates of the named arrangements, each paired with the lattice
// it is expected to realize.

#include <string>
#include <vector>

#include "arrlab/geometry.hpp"
#include "arrlab/lattice.hpp"

namespace arrlab::catalog {

enum class Sign { Plus, Minus };

struct CatalogEntry {
  std::string name;
  Arrangement arrangement;
  IncidenceStructure expected_lattice;
  std::vector<std::string> line_labels;
  std::string notes;
};

/// gamma_+/- = (1 +/- sqrt 5)/2, the roots of x^2 - x - 1.
QuadExt gamma(Sign s);

/// xy(x-z)(y-z)(x-y)(x-wz)(y-wz)((w-1)x-y+z), w = (1 +/- sqrt -3)/2.
CatalogEntry maclane(Sign s);
/// L1..L4, K1..K4, H9 over Q(sqrt 5).
CatalogEntry falk_sturmfels(Sign s);
/// Nine lines over Q(i) with ten triple points.
CatalogEntry a_pm_i(Sign s);
/// The three 9_3 configurations ('a', 'b', 'c'), rational coordinates.
CatalogEntry nine_three(char which);
/// Falk-Sturmfels plus H10: y = (1/gamma - 1)x + z.
CatalogEntry extended_falk_sturmfels(Sign s);

/// The 3x3 matrix sending FS+ to FS- (acting on the right of points).
ProjTransform fs_exchange_matrix();
/// 0-based image index in FS- (resp. extended FS-) of each FS+ line under
/// fs_exchange_matrix().
std::vector<int> fs_exchange_permutation(bool extended);

/// Names accepted by entry(): maclane+, maclane-, fs+, fs-, a_pm_i+, a_pm_i-,
/// nine_three_a, nine_three_b, nine_three_c, ext_fs+, ext_fs-.
const std::vector<std::string>& names();
/// Throws UnknownName.
CatalogEntry entry(const std::string& name);

}  // namespace arrlab::catalog
