#pragma once

// Exhaustive enumeration of nine-line lattices under fixed counting
// constraints, up to isomorphism, with a moduli verdict for each survivor.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrlab/lattice.hpp"
#include "arrlab/moduli.hpp"

namespace arrlab {

/// Search constraints. The prefix blocks fix labels without loss of
/// generality (e.g. line 1 and its partners); the search adds further blocks
/// in lexicographic order.
struct CensusConstraints {
  std::string description;
  int n = 9;
  std::vector<Block> prefix;
  std::vector<int> triple_counts;  // accepted totals of 3-blocks
  int quadruples = 0;              // number of 4-blocks (all must be in the prefix)
  int min_degree = 0;              // multiple points per line
  int max_degree = 4;
};

struct ProfileCheck {
  MultiplicityProfile profile;
  bool pair_count = false;
  bool incidence = false;   // every line can carry >= 3 multiple points
  FilterVerdict hirzebruch = FilterVerdict::NotApplicable;
  bool survives() const { return pair_count && incidence && hirzebruch != FilterVerdict::Fail; }
};

struct CensusStructure {
  IncidenceStructure lattice;
  bool simple_c_le_3 = false;
  std::string catalog_match;         // empty when no 9-line catalog lattice is isomorphic
  bool has_as_witness = false;
  bool has_maclane_sublattice = false;
  bool excluded = false;             // dropped by the census filters, kept for the record
  std::string exclusion_reason;
  ModuliReport moduli;
};

struct CensusResult {
  std::string name;
  CensusConstraints constraints;
  std::int64_t nodes = 0;            // search nodes visited
  std::int64_t labeled_leaves = 0;   // complete labeled families before isomorph rejection
  std::vector<CensusStructure> structures;   // pairwise non-isomorphic, deterministic order
  std::vector<ProfileCheck> profile_checks;  // profile exhaustion, where applicable
  std::vector<std::string> violations;       // consistency problems; empty on success
  double seconds = 0;
};

/// Worker count from ARRLAB_THREADS (default 1, at least 1).
int census_threads();

/// Raw search: every family satisfying the constraints, reduced to one
/// representative per isomorphism class (the lexicographically smallest
/// labeled leaf), sorted.
std::vector<IncidenceStructure> enumerate_families(const CensusConstraints& c, int threads,
                                                   std::int64_t* nodes = nullptr, std::int64_t* leaves = nullptr);

CensusResult enumerate_933(int threads = census_threads());
CensusResult enumerate_ten_triples(int threads = census_threads());
CensusResult enumerate_quadruple_case(int threads = census_threads());
/// Nine lines, triple points only, 11 or 12 of them.
CensusResult check_triple_bound(int threads = census_threads());

/// Every profile with n = 9, m = 4, n_4 = k (k in [lo, hi]) and only triple
/// and double points otherwise, with its filter outcomes.
std::vector<ProfileCheck> quadruple_profiles(int lo, int hi);

}  // namespace arrlab
