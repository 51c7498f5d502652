#include "arrlab/catalog.hpp"

namespace arrlab::catalog {

namespace {

int sgn(Sign s) { return s == Sign::Plus ? 1 : -1; }
std::string suffix(Sign s) { return s == Sign::Plus ? "+" : "-"; }

/// (a + sign*b*sqrt d) with small rational parts.
QuadExt surd(Rational a, Rational b, std::int64_t d, Sign s) {
  return QuadExt(std::move(a), Rational(sgn(s)) * b, d);
}

/// 1-based blocks, as read off the figures.
IncidenceStructure lattice(int n, std::vector<Block> one_based) {
  for (auto& b : one_based) {
    for (int& x : b) --x;
  }
  return IncidenceStructure(n, std::move(one_based));
}

/// y = m x + c  ->  m x - y + c z = 0
ProjLine slope_line(Rational m, Rational c) { return ProjLine(QuadExt(m), QuadExt(-1), QuadExt(c)); }
ProjLine vertical(Rational c) { return ProjLine(1, 0, QuadExt(-c)); }
ProjLine horizontal(Rational c) { return ProjLine(0, 1, QuadExt(-c)); }

std::vector<ProjLine> falk_sturmfels_lines(Sign s) {
  const QuadExt g = gamma(s);
  return {
      ProjLine(1, 0, 0),                  // L1: x = 0
      ProjLine(1, -g, g),                 // L2: x = g(y - z)
      ProjLine(0, 1, -1),                 // L3: y = z
      ProjLine(1, 1, -1),                 // L4: x + y = z
      ProjLine(1, 0, -1),                 // K1: x = z
      ProjLine(1, -g, 0),                 // K2: x = g y
      ProjLine(0, 1, 0),                  // K3: y = 0
      ProjLine(1, 1, -(g + QuadExt(1))),  // K4: x + y = (g + 1) z
      ProjLine(0, 0, 1),                  // H9: z = 0
  };
}

const std::vector<Block> kFalkSturmfels = {{1, 2, 3, 4}, {1, 5, 9}, {1, 6, 7}, {2, 5, 8}, {2, 6, 9},
                                           {3, 6, 8},    {3, 7, 9}, {4, 5, 7}, {4, 8, 9}};

}  // namespace

QuadExt gamma(Sign s) { return surd(Rational(1, 2), Rational(1, 2), 5, s); }

CatalogEntry maclane(Sign s) {
  const QuadExt w = surd(Rational(1, 2), Rational(1, 2), -3, s);
  std::vector<ProjLine> lines = {
      ProjLine(1, 0, 0),  ProjLine(0, 1, 0),  ProjLine(1, 0, -1), ProjLine(0, 1, -1),
      ProjLine(1, -1, 0), ProjLine(1, 0, -w), ProjLine(0, 1, -w), ProjLine(w - QuadExt(1), -1, 1),
  };
  return {"maclane" + suffix(s),
          Arrangement(std::move(lines), -3),
          lattice(8, {{1, 2, 5}, {1, 3, 6}, {1, 4, 8}, {2, 4, 7}, {2, 6, 8}, {3, 4, 5}, {3, 7, 8}, {5, 6, 7}}),
          {"x", "y", "x-z", "y-z", "x-y", "x-wz", "y-wz", "(w-1)x-y+z"},
          "MacLane arrangement, eight lines and eight triple points, w = (1" + suffix(s) + "sqrt(-3))/2"};
}

CatalogEntry falk_sturmfels(Sign s) {
  return {"fs" + suffix(s),
          Arrangement(falk_sturmfels_lines(s), 5),
          lattice(9, kFalkSturmfels),
          {"L1", "L2", "L3", "L4", "K1", "K2", "K3", "K4", "H9"},
          "Falk-Sturmfels arrangement over Q(sqrt 5), gamma = (1" + suffix(s) + "sqrt(5))/2"};
}

CatalogEntry a_pm_i(Sign s) {
  const QuadExt i = surd(0, 1, -1, s);
  std::vector<ProjLine> lines = {
      ProjLine(1, 0, 0),  ProjLine(0, 1, 0),  ProjLine(1, 0, -1),
      ProjLine(0, 1, -1), ProjLine(1, 0, -i), ProjLine(0, 1, -i),
      ProjLine(1, -1, 0), ProjLine(i - QuadExt(1), i, 1), ProjLine(QuadExt(1) - i, 1, -1),
  };
  return {"a_pm_i" + suffix(s),
          Arrangement(std::move(lines), -1),
          lattice(9, {{1, 2, 7}, {1, 3, 5}, {1, 4, 9}, {1, 6, 8}, {2, 4, 6},
                      {2, 8, 9}, {3, 4, 7}, {3, 6, 9}, {4, 5, 8}, {5, 6, 7}}),
          {"x", "y", "x-z", "y-z", "x-iz", "y-iz", "x-y", "(i-1)x+iy+z", "(1-i)x+y-z"},
          "nine lines, ten triple points, i = " + suffix(s) + "sqrt(-1)"};
}

CatalogEntry nine_three(char which) {
  // L1..L3 horizontal, L4..L6 vertical; L7..L9 as plotted.
  std::vector<ProjLine> lines = {horizontal(0), horizontal(1), horizontal(2),
                                 vertical(0),   vertical(1),   vertical(3)};
  std::vector<Block> blocks;
  switch (which) {
    case 'a':
      lines.push_back(slope_line(1, 1));
      lines.push_back(slope_line(Rational(2, 3), 0));
      lines.push_back(slope_line(Rational(1, 2), Rational(-1, 2)));
      blocks = {{1, 2, 3}, {1, 4, 8}, {1, 5, 9}, {2, 4, 7}, {2, 6, 9}, {3, 5, 7}, {3, 6, 8}, {4, 5, 6}, {7, 8, 9}};
      break;
    case 'b':
      lines.push_back(slope_line(1, 1));
      lines.push_back(slope_line(Rational(-2, 3), 2));
      lines.push_back(slope_line(2, -2));
      blocks = {{1, 2, 3}, {1, 5, 9}, {1, 6, 8}, {2, 4, 7}, {2, 8, 9}, {3, 4, 8}, {3, 5, 7}, {4, 5, 6}, {6, 7, 9}};
      break;
    case 'c':
      lines.push_back(slope_line(1, 0));
      lines.push_back(slope_line(Rational(1, 3), 1));
      lines.push_back(slope_line(-1, 3));
      blocks = {{1, 2, 3}, {1, 4, 7}, {1, 6, 9}, {2, 4, 8}, {2, 5, 7}, {3, 5, 9}, {3, 6, 8}, {4, 5, 6}, {7, 8, 9}};
      break;
    default:
      throw Error(Errc::UnknownName, std::string("no 9_3 configuration '") + which + "'");
  }
  return {std::string("nine_three_") + which,
          Arrangement(std::move(lines), 1),
          lattice(9, std::move(blocks)),
          {"L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9"},
          std::string("9_3 configuration (") + which + "), rational realization"};
}

CatalogEntry extended_falk_sturmfels(Sign s) {
  const QuadExt g = gamma(s);
  auto lines = falk_sturmfels_lines(s);
  lines.emplace_back(g.inverse() - QuadExt(1), -1, 1);  // H10: y = (1/g - 1)x + z
  auto blocks = kFalkSturmfels;
  blocks[0].push_back(10);
  blocks.push_back({5, 6, 10});
  blocks.push_back({7, 8, 10});
  return {"ext_fs" + suffix(s),
          Arrangement(std::move(lines), 5),
          lattice(10, std::move(blocks)),
          {"L1", "L2", "L3", "L4", "K1", "K2", "K3", "K4", "H9", "H10"},
          "extended Falk-Sturmfels arrangement, H10 through L1^L2, K1^K2, K3^K4"};
}

ProjTransform fs_exchange_matrix() {
  const QuadExt gm = gamma(Sign::Minus);
  return ProjTransform(ProjTransform::Matrix{{{-gm, -1, 0}, {-gm, 0, 0}, {gm, 1, 1}}});
}

std::vector<int> fs_exchange_permutation(bool extended) {
  // L1->L3, L2->L4, L3->L2, L4->L1, K1->K3, K2->K4, K3->K2, K4->K1, H9->H9 (, H10->H10)
  std::vector<int> perm = {2, 3, 1, 0, 6, 7, 5, 4, 8};
  if (extended) perm.push_back(9);
  return perm;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {"maclane+",     "maclane-",     "fs+",          "fs-",
                                                  "a_pm_i+",      "a_pm_i-",      "nine_three_a", "nine_three_b",
                                                  "nine_three_c", "ext_fs+",      "ext_fs-"};
  return kNames;
}

CatalogEntry entry(const std::string& name) {
  if (name == "maclane+") return maclane(Sign::Plus);
  if (name == "maclane-") return maclane(Sign::Minus);
  if (name == "fs+") return falk_sturmfels(Sign::Plus);
  if (name == "fs-") return falk_sturmfels(Sign::Minus);
  if (name == "a_pm_i+") return a_pm_i(Sign::Plus);
  if (name == "a_pm_i-") return a_pm_i(Sign::Minus);
  if (name == "nine_three_a") return nine_three('a');
  if (name == "nine_three_b") return nine_three('b');
  if (name == "nine_three_c") return nine_three('c');
  if (name == "ext_fs+") return extended_falk_sturmfels(Sign::Plus);
  if (name == "ext_fs-") return extended_falk_sturmfels(Sign::Minus);
  throw Error(Errc::UnknownName, "no catalog entry named '" + name + "'");
}

}  // namespace arrlab::catalog
