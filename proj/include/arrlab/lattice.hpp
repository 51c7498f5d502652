#pragma once

// Abstract intersection lattices of line arrangements. A lattice is stored as
// the family of concurrent index-sets of size >= 3; double points are implied.
// Line indices are 0-based in the API and 1-based in every serialized form.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrlab/exact.hpp"

namespace arrlab {

using Block = std::vector<int>;

class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Sorts and deduplicates. Throws InconsistentStructure if two sets share
  /// two lines, a set is smaller than 3, or an index is out of range.
  IncidenceStructure(int n, std::vector<Block> multiples);

  int n() const { return n_; }
  const std::vector<Block>& multiples() const { return multiples_; }

  /// Index into multiples() of the set containing both lines, or -1.
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a * n_ + b)]; }
  /// Number of multiple points on line i.
  int degree(int i) const { return degree_[static_cast<std::size_t>(i)]; }
  bool concurrent(int a, int b, int c) const;

  /// Relabel line i as perm[i].
  IncidenceStructure relabeled(const std::vector<int>& perm) const;
  /// Keep the listed lines (in the given order), dropping sets below size 3.
  IncidenceStructure restricted(const std::vector<int>& keep) const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.n_ == b.n_ && a.multiples_ == b.multiples_;
  }
  friend bool operator<(const IncidenceStructure& a, const IncidenceStructure& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.multiples_ < b.multiples_;
  }

  /// 1-based, e.g. "n=8 {1,2,5} {1,3,6} ...".
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Block> multiples_;
  std::vector<int> meet_;
  std::vector<int> degree_;
};

struct MultiplicityProfile {
  int n = 0;
  std::map<int, std::int64_t> counts;  // r -> n_r for r >= 2, zero entries omitted
  int m_max = 2;

  std::int64_t count(int r) const {
    auto it = counts.find(r);
    return it == counts.end() ? 0 : it->second;
  }
  friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;
};

/// Derives n_2 from the pair-count identity; throws InconsistentStructure when
/// the multiple points account for more than C(n,2) pairs.
MultiplicityProfile profile_of(const IncidenceStructure& s);
/// Builds a profile from explicit counts r -> n_r (r >= 2), filling m_max.
MultiplicityProfile make_profile(int n, std::map<int, std::int64_t> counts);
/// C(n,2) == sum_r n_r * C(r,2).
bool pair_count_holds(const MultiplicityProfile& p);

enum class FilterVerdict { Pass, Fail, NotApplicable };
std::string_view to_string(FilterVerdict v);

/// Hirzebruch's inequality n_2 + 3/4 n_3 >= t + sum_{r>=5} (2r-9) n_r,
/// applicable when n_t = n_{t-1} = n_{t-2} = 0.
FilterVerdict hirzebruch_filter(const MultiplicityProfile& p);

using Permutation = std::vector<int>;

/// Smallest (lexicographic) permutation phi with phi(multiples(s1)) = multiples(s2).
std::optional<Permutation> find_isomorphism(const IncidenceStructure& s1, const IncidenceStructure& s2);
/// Every isomorphism, in lexicographic order.
std::vector<Permutation> all_isomorphisms(const IncidenceStructure& s1, const IncidenceStructure& s2);
bool is_isomorphism(const IncidenceStructure& s1, const IncidenceStructure& s2, const Permutation& phi);
/// Iteratively refined line colouring; equal structures up to relabeling have
/// equal sorted colour multisets.
std::vector<std::uint64_t> refined_colors(const IncidenceStructure& s);
/// Relabeling-invariant fingerprint used to bucket structures before iso tests.
std::uint64_t invariant_hash(const IncidenceStructure& s);

struct CoverResult {
  bool holds = false;
  std::vector<int> cover;  // at most three lines covering every multiple point
};

/// All multiple points lie on at most three lines.
CoverResult is_C_le_3(const IncidenceStructure& s);

struct SimpleResult {
  bool holds = false;
  int clause = 0;  // 1: cover lines concurrent, 2: sparse cover line; 0 when false
  std::array<int, 3> cover{-1, -1, -1};
  int sparse_line = -1;  // the cover line that fired clause 2
};

/// C_{<=3} plus: the cover lines are concurrent, or one of them carries at most
/// one multiple point besides those at pairwise intersections of the cover.
SimpleResult is_simple_C_le_3(const IncidenceStructure& s);

/// Six lines in two concurrent triples whose nine cross intersections are
/// double points of the six-line sub-arrangement.
struct SubArrangementWitness {
  std::array<int, 3> first;   // L1 L2 L3
  std::array<int, 3> second;  // L4 L5 L6
  int first_point = -1;       // index of the multiple set through `first`
  int second_point = -1;
  /// cross[i][j] = {first[i], second[j]}  (the point Q_ij)
  std::array<std::array<std::array<int, 2>, 3>, 3> cross() const;
};

bool is_valid_witness(const IncidenceStructure& s, const SubArrangementWitness& w);
/// Lexicographically smallest witness; throws ConsistencyViolation when none
/// exists although s is not simple C_{<=3}.
std::optional<SubArrangementWitness> find_As(const IncidenceStructure& s);
std::vector<SubArrangementWitness> all_As(const IncidenceStructure& s);

std::vector<int> lines_with_few_multiples(const IncidenceStructure& s, int k);
IncidenceStructure delete_line(const IncidenceStructure& s, int i);

}  // namespace arrlab
