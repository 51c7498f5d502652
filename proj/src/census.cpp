#include "arrlab/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>
#include <unordered_map>

#include "arrlab/catalog.hpp"
#include "arrlab/classify.hpp"

namespace arrlab {

int census_threads() {
  const char* env = std::getenv("ARRLAB_THREADS");
  if (env == nullptr) return 1;
  int v = std::atoi(env);
  return std::max(1, v);
}

namespace {

struct SearchState {
  int n = 0;
  std::vector<Block> blocks;
  std::vector<std::uint8_t> pair_used;  // n*n
  std::vector<int> degree;
  int triples = 0;
};

class Search {
 public:
  explicit Search(const CensusConstraints& c) : c_(c), max_triples_(*std::max_element(c.triple_counts.begin(), c.triple_counts.end())) {
    // candidate 3-blocks grouped by their smallest line
    by_min_.assign(static_cast<std::size_t>(c.n), {});
    for (int a = 0; a < c.n; ++a)
      for (int b = a + 1; b < c.n; ++b)
        for (int d = b + 1; d < c.n; ++d) by_min_[static_cast<std::size_t>(a)].push_back({a, b, d});
  }

  SearchState initial() const {
    SearchState s;
    s.n = c_.n;
    s.pair_used.assign(static_cast<std::size_t>(c_.n * c_.n), 0);
    s.degree.assign(static_cast<std::size_t>(c_.n), 0);
    for (const auto& b : c_.prefix) {
      if (!fits(s, b)) throw Error(Errc::InvalidArgument, "census prefix blocks overlap");
      add(s, b);
    }
    return s;
  }

  /// Runs the search from `s` at line x, starting at candidate `start`.
  /// With a frontier pointer, stops when line `stop_line` is reached and
  /// records the state instead of descending.
  void run(SearchState& s, int x, std::size_t start, std::vector<IncidenceStructure>& leaves,
           std::vector<SearchState>* frontier, int stop_line, std::int64_t& nodes) const {
    ++nodes;
    if (x == c_.n) {
      if (std::find(c_.triple_counts.begin(), c_.triple_counts.end(), s.triples) != c_.triple_counts.end()) {
        leaves.emplace_back(c_.n, s.blocks);
      }
      return;
    }
    if (frontier != nullptr && x == stop_line && start == 0) {
      frontier->push_back(s);
      return;
    }
    // close line x
    if (s.degree[static_cast<std::size_t>(x)] >= c_.min_degree && feasible_after(s, x)) {
      run(s, x + 1, 0, leaves, frontier, stop_line, nodes);
    }
    if (s.triples >= max_triples_) return;
    const auto& cands = by_min_[static_cast<std::size_t>(x)];
    for (std::size_t i = start; i < cands.size(); ++i) {
      const Block& b = cands[i];
      if (!fits(s, b)) continue;
      add(s, b);
      run(s, x, i + 1, leaves, frontier, stop_line, nodes);
      remove(s, b);
    }
  }

 private:
  bool fits(const SearchState& s, const Block& b) const {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (s.degree[static_cast<std::size_t>(b[i])] >= c_.max_degree) return false;
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (s.pair_used[static_cast<std::size_t>(b[i] * s.n + b[j])]) return false;
      }
    }
    return true;
  }

  static void mark(SearchState& s, const Block& b, std::uint8_t v) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (i != j) s.pair_used[static_cast<std::size_t>(b[i] * s.n + b[j])] = v;
      }
    }
  }

  static void add(SearchState& s, const Block& b) {
    mark(s, b, 1);
    for (int x : b) ++s.degree[static_cast<std::size_t>(x)];
    if (b.size() == 3) ++s.triples;
    s.blocks.push_back(b);
  }

  static void remove(SearchState& s, const Block& b) {
    mark(s, b, 0);
    for (int x : b) --s.degree[static_cast<std::size_t>(x)];
    if (b.size() == 3) --s.triples;
    s.blocks.pop_back();
  }

  /// After line x is closed, each later line y still short of min_degree must
  /// find its missing blocks among lines > x, and the triple total must stay reachable.
  bool feasible_after(const SearchState& s, int x) const {
    int deficit = 0;
    for (int y = x + 1; y < c_.n; ++y) {
      int missing = c_.min_degree - s.degree[static_cast<std::size_t>(y)];
      if (missing <= 0) continue;
      // y meets at most (n-1-x-1) unused partners above x, two per new triple
      int partners = 0;
      for (int z = x + 1; z < c_.n; ++z) {
        if (z != y && !s.pair_used[static_cast<std::size_t>(y * s.n + z)]) ++partners;
      }
      if (2 * missing > partners) return false;
      deficit += missing;
    }
    // each new triple raises the degree of three lines
    int needed_blocks = (deficit + 2) / 3;
    if (needed_blocks > max_triples_ - s.triples) return false;
    return true;
  }

  const CensusConstraints& c_;
  int max_triples_;
  std::vector<std::vector<Block>> by_min_;
};

/// One representative per isomorphism class: scan sorted leaves, keep the first of each class.
std::vector<IncidenceStructure> isomorph_reject(std::vector<IncidenceStructure> leaves) {
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<IncidenceStructure> reps;
  for (auto& s : leaves) {
    auto& bucket = buckets[invariant_hash(s)];
    bool seen = false;
    for (std::size_t k : bucket) {
      if (find_isomorphism(s, reps[k])) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(s));
    }
  }
  return reps;
}

std::string catalog_match(const IncidenceStructure& s) {
  for (const auto& name : catalog::names()) {
    auto e = catalog::entry(name);
    if (e.expected_lattice.n() != s.n()) continue;
    if (find_isomorphism(s, e.expected_lattice)) return name;
  }
  return "";
}

ModuliReport safe_moduli(const IncidenceStructure& s) {
  try {
    return solve_moduli(s);
  } catch (const Error& e) {
    ModuliReport r;
    r.status = ModuliStatus::Unsupported;
    r.reason = e.what();
    return r;
  }
}

CensusStructure describe(const IncidenceStructure& s) {
  CensusStructure out;
  out.lattice = s;
  out.simple_c_le_3 = is_simple_C_le_3(s).holds;
  out.catalog_match = catalog_match(s);
  out.has_as_witness = !all_As(s).empty();
  out.moduli = safe_moduli(s);
  return out;
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

std::vector<IncidenceStructure> enumerate_families(const CensusConstraints& c, int threads, std::int64_t* nodes,
                                                   std::int64_t* leaves) {
  Search search(c);
  SearchState root = search.initial();
  std::vector<SearchState> frontier;
  std::vector<IncidenceStructure> early;
  std::int64_t node_count = 0;
  // split below the first two lines; subtrees are independent
  const int stop_line = std::min(2, c.n);
  search.run(root, 0, 0, early, &frontier, stop_line, node_count);

  std::vector<std::vector<IncidenceStructure>> per_item(frontier.size());
  std::vector<std::int64_t> per_nodes(frontier.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < frontier.size(); i = next++) {
      SearchState s = frontier[i];
      search.run(s, stop_line, 0, per_item[i], nullptr, -1, per_nodes[i]);
    }
  };
  const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(frontier.size())));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<IncidenceStructure> all = std::move(early);
  for (std::size_t i = 0; i < per_item.size(); ++i) {
    node_count += per_nodes[i];
    for (auto& s : per_item[i]) all.push_back(std::move(s));
  }
  if (leaves != nullptr) *leaves = static_cast<std::int64_t>(all.size());
  if (nodes != nullptr) *nodes = node_count;
  return isomorph_reject(std::move(all));
}

std::vector<ProfileCheck> quadruple_profiles(int lo, int hi) {
  std::vector<ProfileCheck> out;
  const int n = 9;
  const int pairs = n * (n - 1) / 2;
  for (int n4 = lo; n4 <= hi; ++n4) {
    for (int n3 = 0; 6 * n4 + 3 * n3 <= pairs; ++n3) {
      ProfileCheck pc;
      const int n2 = pairs - 6 * n4 - 3 * n3;
      std::map<int, std::int64_t> counts{{4, n4}, {3, n3}, {2, n2}};
      pc.profile = make_profile(n, counts);
      pc.pair_count = pair_count_holds(pc.profile);
      pc.incidence = 4 * n4 + 3 * n3 >= 3 * n;
      pc.hirzebruch = hirzebruch_filter(pc.profile);
      out.push_back(pc);
    }
  }
  return out;
}

CensusResult enumerate_933(int threads) {
  const auto t0 = Clock::now();
  CensusResult r;
  r.name = "nine_three";
  r.constraints = {"n=9, 9 triple points, no other multiple points, every line on exactly 3 triples", 9,
                   {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}, {9}, 0, 3, 3};
  for (const auto& s : enumerate_families(r.constraints, threads, &r.nodes, &r.labeled_leaves)) {
    r.structures.push_back(describe(s));
  }
  if (r.structures.size() != 3) r.violations.push_back("expected 3 structures, found " + std::to_string(r.structures.size()));
  for (const auto& cs : r.structures) {
    if (cs.catalog_match.rfind("nine_three", 0) != 0) r.violations.push_back("no catalog 9_3 match for " + cs.lattice.str());
    if (cs.moduli.status != ModuliStatus::IrreducibleFamily) {
      r.violations.push_back("moduli not irreducible_family for " + cs.lattice.str());
    }
  }
  r.seconds = since(t0);
  return r;
}

CensusResult enumerate_ten_triples(int threads) {
  const auto t0 = Clock::now();
  CensusResult r;
  r.name = "ten_triples";
  // 30 incidences on 9 lines with at most 4 triples per line (8 partners, 2 per
  // triple) forces three lines with 4 triples; one of them is labeled line 1.
  r.constraints = {"n=9, 10 triple points, no other multiple points, every line on 3 or 4 triples", 9,
                   {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 7, 8}}, {10}, 0, 3, 4};
  for (const auto& s : enumerate_families(r.constraints, threads, &r.nodes, &r.labeled_leaves)) {
    r.structures.push_back(describe(s));
  }
  int non_simple = 0;
  for (const auto& cs : r.structures) {
    int fours = 0;
    for (int i = 0; i < 9; ++i) fours += cs.lattice.degree(i) == 4 ? 1 : 0;
    if (fours != 3) r.violations.push_back("degree split is not 3 x 4 + 6 x 3 for " + cs.lattice.str());
    if (cs.simple_c_le_3) continue;
    ++non_simple;
    if (cs.catalog_match.rfind("a_pm_i", 0) != 0) r.violations.push_back("non-simple survivor is not A^(+-i): " + cs.lattice.str());
    if (cs.moduli.status != ModuliStatus::Points || cs.moduli.point_count != 2) {
      r.violations.push_back("non-simple survivor does not have 2 moduli points");
    }
  }
  if (non_simple != 1) r.violations.push_back("expected 1 non-simple structure, found " + std::to_string(non_simple));
  r.seconds = since(t0);
  return r;
}

CensusResult enumerate_quadruple_case(int threads) {
  const auto t0 = Clock::now();
  CensusResult r;
  r.name = "quadruple";
  r.profile_checks = quadruple_profiles(1, 6);
  std::vector<int> n3_allowed;
  for (const auto& pc : r.profile_checks) {
    const auto n4 = pc.profile.count(4);
    if (n4 >= 2 && pc.survives()) {
      r.violations.push_back("profile with n4 = " + std::to_string(n4) + ", n3 = " + std::to_string(pc.profile.count(3)) +
                             " survives the filters");
    }
    if (n4 == 1 && pc.survives()) n3_allowed.push_back(static_cast<int>(pc.profile.count(3)));
  }
  r.constraints = {"n=9, one quadruple point, otherwise triples, every line on >= 3 multiple points", 9,
                   {{0, 1, 2, 3}}, n3_allowed, 1, 3, 4};
  if (!n3_allowed.empty()) {
    for (const auto& s : enumerate_families(r.constraints, threads, &r.nodes, &r.labeled_leaves)) {
      r.structures.push_back(describe(s));
    }
  }
  int non_simple = 0;
  for (const auto& cs : r.structures) {
    if (cs.simple_c_le_3) continue;
    ++non_simple;
    if (cs.catalog_match.rfind("fs", 0) != 0) r.violations.push_back("non-simple survivor is not FS: " + cs.lattice.str());
  }
  if (non_simple != 1) r.violations.push_back("expected 1 non-simple structure, found " + std::to_string(non_simple));
  r.seconds = since(t0);
  return r;
}

CensusResult check_triple_bound(int threads) {
  const auto t0 = Clock::now();
  CensusResult r;
  r.name = "triple_bound";
  // 36 = 3 n3 + n2 caps n3 at 12; with 11 or 12 triples some line carries 4.
  r.constraints = {"n=9, 11 or 12 triple points, no other multiple points", 9,
                   {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 7, 8}}, {11, 12}, 0, 0, 4};
  for (const auto& s : enumerate_families(r.constraints, threads, &r.nodes, &r.labeled_leaves)) {
    CensusStructure cs = describe(s);
    cs.has_maclane_sublattice = find_maclane_sublattice(s).has_value();
    if (cs.simple_c_le_3) {
      cs.excluded = true;
      cs.exclusion_reason = "simple C<=3";
    } else if (!cs.has_as_witness) {
      cs.excluded = true;
      cs.exclusion_reason = "no A_s witness";
      r.violations.push_back("non-simple structure without A_s witness: " + s.str());
    } else if (cs.has_maclane_sublattice) {
      cs.excluded = true;
      cs.exclusion_reason = "contains a MacLane sub-lattice";
    }
    if (!cs.excluded && (cs.moduli.status == ModuliStatus::Points || cs.moduli.status == ModuliStatus::IrreducibleFamily)) {
      r.violations.push_back("realizable survivor with " + std::to_string(s.multiples().size()) + " triples: " + s.str());
    }
    r.structures.push_back(std::move(cs));
  }
  r.seconds = since(t0);
  return r;
}

}  // namespace arrlab
