#pragma once

// Decision procedure for lattices of nine lines. Each verdict carries evidence
// that validate_evidence() can re-check without rerunning the search.

#include <optional>
#include <string>
#include <vector>

#include "arrlab/lattice.hpp"

namespace arrlab {

enum class NineLineTag { IrreducibleModuli, ContainsMacLane, FalkSturmfels, APlusMinusI };
std::string_view to_string(NineLineTag t);

enum class EvidenceKind {
  DeletedLineSimple,   // a line with <= 2 multiple points; the rest is simple C<=3
  DeletedLineMacLane,  // a line with <= 2 multiple points; the rest is the MacLane lattice
  SimpleCle3,          // the lattice itself is simple C<=3
  SparseLineAtHighPoint,  // m >= 5 and a line through the big point has <= 2 multiple points
  CatalogIso,          // isomorphic to a catalog lattice
  MacLaneSubLattice,   // eight of the lines carry the MacLane lattice
};
std::string_view to_string(EvidenceKind k);

struct ClassEvidence {
  EvidenceKind kind = EvidenceKind::SimpleCle3;
  int deleted_line = -1;         // DeletedLine*, SparseLineAtHighPoint
  int high_point = -1;           // SparseLineAtHighPoint: index into multiples()
  SimpleResult simple;           // DeletedLineSimple (on the rest), SimpleCle3
  std::vector<int> kept_lines;   // MacLaneSubLattice: the eight lines, in order
  std::string catalog_name;      // CatalogIso, DeletedLineMacLane, MacLaneSubLattice
  Permutation iso;               // from the (sub)lattice to the catalog lattice
};

struct NineLineClass {
  NineLineTag tag = NineLineTag::IrreducibleModuli;
  ClassEvidence evidence;
  std::vector<std::string> trace;  // branches tried, in order
};

/// Throws InvalidArgument unless n = 9 and the profile passes the Hirzebruch
/// filter; throws OutsideTheorem (message = branch trace) if no branch fires.
NineLineClass classify_nine(const IncidenceStructure& s);

/// Re-checks the evidence against s from scratch.
bool validate_evidence(const IncidenceStructure& s, const NineLineClass& c);

struct SubLatticeMatch {
  std::vector<int> kept_lines;  // sorted, 0-based in the parent
  Permutation iso;              // restricted lattice -> MacLane lattice
};
/// First 8-subset (lexicographic) whose restriction is isomorphic to MacLane.
std::optional<SubLatticeMatch> find_maclane_sublattice(const IncidenceStructure& s);

}  // namespace arrlab
