#include "arrlab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace arrlab {

IncidenceStructure::IncidenceStructure(int n, std::vector<Block> multiples) : n_(n) {
  if (n < 0) throw Error(Errc::InconsistentStructure, "negative line count");
  for (auto& b : multiples) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw Error(Errc::InconsistentStructure, "repeated line index in a multiple point");
    }
    if (b.size() < 3) throw Error(Errc::InconsistentStructure, "multiple point with fewer than 3 lines");
    if (b.front() < 0 || b.back() >= n) throw Error(Errc::InconsistentStructure, "line index out of range");
  }
  std::sort(multiples.begin(), multiples.end());
  multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());
  multiples_ = std::move(multiples);

  meet_.assign(static_cast<std::size_t>(n * n), -1);
  degree_.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t s = 0; s < multiples_.size(); ++s) {
    const auto& b = multiples_[s];
    for (int x : b) {
      ++degree_[static_cast<std::size_t>(x)];
      for (int y : b) {
        if (x == y) continue;
        auto& slot = meet_[static_cast<std::size_t>(x * n + y)];
        if (slot != -1) {
          throw Error(Errc::InconsistentStructure,
                      "lines " + std::to_string(x + 1) + " and " + std::to_string(y + 1) + " meet twice");
        }
        slot = static_cast<int>(s);
      }
    }
  }
}

bool IncidenceStructure::concurrent(int a, int b, int c) const {
  int m = meet(a, b);
  return m != -1 && m == meet(a, c);
}

IncidenceStructure IncidenceStructure::relabeled(const std::vector<int>& perm) const {
  std::vector<Block> out;
  out.reserve(multiples_.size());
  for (const auto& b : multiples_) {
    Block nb;
    for (int x : b) nb.push_back(perm.at(static_cast<std::size_t>(x)));
    out.push_back(std::move(nb));
  }
  return IncidenceStructure(n_, std::move(out));
}

IncidenceStructure IncidenceStructure::restricted(const std::vector<int>& keep) const {
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) pos.at(static_cast<std::size_t>(keep[k])) = static_cast<int>(k);
  std::vector<Block> out;
  for (const auto& b : multiples_) {
    Block nb;
    for (int x : b) {
      if (pos[static_cast<std::size_t>(x)] >= 0) nb.push_back(pos[static_cast<std::size_t>(x)]);
    }
    if (nb.size() >= 3) out.push_back(std::move(nb));
  }
  return IncidenceStructure(static_cast<int>(keep.size()), std::move(out));
}

std::string IncidenceStructure::str() const {
  std::ostringstream os;
  os << "n=" << n_;
  for (const auto& b : multiples_) {
    os << " {";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i] + 1;
    os << "}";
  }
  return os.str();
}

// ----------------------------------------------------------------- profiles

MultiplicityProfile make_profile(int n, std::map<int, std::int64_t> counts) {
  MultiplicityProfile p;
  p.n = n;
  for (auto& [r, c] : counts) {
    if (c != 0) p.counts[r] = c;
  }
  p.m_max = 2;
  for (const auto& [r, c] : p.counts) {
    if (r > p.m_max && c > 0) p.m_max = r;
  }
  return p;
}

MultiplicityProfile profile_of(const IncidenceStructure& s) {
  std::map<int, std::int64_t> counts;
  std::int64_t pairs = 0;
  for (const auto& b : s.multiples()) {
    auto r = static_cast<std::int64_t>(b.size());
    ++counts[static_cast<int>(r)];
    pairs += r * (r - 1) / 2;
  }
  const std::int64_t total = static_cast<std::int64_t>(s.n()) * (s.n() - 1) / 2;
  if (pairs > total) {
    throw Error(Errc::InconsistentStructure, "multiple points account for " + std::to_string(pairs) + " of " +
                                                 std::to_string(total) + " line pairs");
  }
  counts[2] = total - pairs;
  return make_profile(s.n(), std::move(counts));
}

bool pair_count_holds(const MultiplicityProfile& p) {
  std::int64_t lhs = static_cast<std::int64_t>(p.n) * (p.n - 1) / 2;
  std::int64_t rhs = 0;
  for (const auto& [r, c] : p.counts) {
    if (c < 0) return false;
    rhs += c * r * (r - 1) / 2;
  }
  return lhs == rhs;
}

std::string_view to_string(FilterVerdict v) {
  switch (v) {
    case FilterVerdict::Pass: return "pass";
    case FilterVerdict::Fail: return "fail";
    case FilterVerdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

FilterVerdict hirzebruch_filter(const MultiplicityProfile& p) {
  const int t = p.n;
  if (p.count(t) != 0 || p.count(t - 1) != 0 || p.count(t - 2) != 0) return FilterVerdict::NotApplicable;
  // Scaled by 4 to stay in integers.
  std::int64_t lhs = 4 * p.count(2) + 3 * p.count(3);
  std::int64_t rhs = 4 * static_cast<std::int64_t>(t);
  for (const auto& [r, c] : p.counts) {
    if (r >= 5) rhs += 4 * (2 * static_cast<std::int64_t>(r) - 9) * c;
  }
  return lhs >= rhs ? FilterVerdict::Pass : FilterVerdict::Fail;
}

// -------------------------------------------------------------- isomorphism

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 step over the running hash
  std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + v;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_seq(std::vector<std::uint64_t> v, std::uint64_t seed) {
  std::sort(v.begin(), v.end());
  std::uint64_t h = seed;
  for (auto x : v) h = mix(h, x);
  return h;
}

}  // namespace

std::vector<std::uint64_t> refined_colors(const IncidenceStructure& s) {
  const int n = s.n();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < s.multiples().size(); ++k) {
    for (int x : s.multiples()[k]) incident[static_cast<std::size_t>(x)].push_back(static_cast<int>(k));
  }
  std::vector<std::uint64_t> color(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> sizes;
    for (int k : incident[static_cast<std::size_t>(i)]) sizes.push_back(s.multiples()[static_cast<std::size_t>(k)].size());
    color[static_cast<std::size_t>(i)] = hash_seq(sizes, 17);
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> parts;
      for (int k : incident[static_cast<std::size_t>(i)]) {
        std::vector<std::uint64_t> others;
        for (int y : s.multiples()[static_cast<std::size_t>(k)]) {
          if (y != i) others.push_back(color[static_cast<std::size_t>(y)]);
        }
        parts.push_back(hash_seq(others, s.multiples()[static_cast<std::size_t>(k)].size()));
      }
      // Lines meeting i only in a double point.
      std::vector<std::uint64_t> loose;
      for (int j = 0; j < n; ++j) {
        if (j != i && s.meet(i, j) == -1) loose.push_back(color[static_cast<std::size_t>(j)]);
      }
      next[static_cast<std::size_t>(i)] =
          mix(mix(color[static_cast<std::size_t>(i)], hash_seq(parts, 31)), hash_seq(loose, 47));
    }
    color = std::move(next);
  }
  return color;
}

std::uint64_t invariant_hash(const IncidenceStructure& s) {
  return mix(hash_seq(refined_colors(s), static_cast<std::uint64_t>(s.n())), s.multiples().size());
}

bool is_isomorphism(const IncidenceStructure& s1, const IncidenceStructure& s2, const Permutation& phi) {
  if (s1.n() != s2.n() || static_cast<int>(phi.size()) != s1.n()) return false;
  std::vector<int> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < s1.n(); ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) return false;
  }
  return s1.relabeled(phi) == s2;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const IncidenceStructure& a, const IncidenceStructure& b, bool all)
      : a_(a), b_(b), all_(all), n_(a.n()) {}

  std::vector<Permutation> run() {
    if (a_.n() != b_.n() || a_.multiples().size() != b_.multiples().size()) return {};
    ca_ = refined_colors(a_);
    cb_ = refined_colors(b_);
    auto sa = ca_, sb = cb_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return {};
    phi_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
    extend(0);
    return std::move(found_);
  }

 private:
  bool consistent(int i, int j) const {
    for (int x = 0; x < i; ++x) {
      int px = phi_[static_cast<std::size_t>(x)];
      int ma = a_.meet(x, i);
      int mb = b_.meet(px, j);
      if ((ma == -1) != (mb == -1)) return false;
      if (ma == -1) continue;
      if (a_.multiples()[static_cast<std::size_t>(ma)].size() != b_.multiples()[static_cast<std::size_t>(mb)].size()) {
        return false;
      }
      for (int y = x + 1; y < i; ++y) {
        bool in_a = a_.meet(y, i) == ma;
        bool in_b = b_.meet(phi_[static_cast<std::size_t>(y)], j) == mb;
        if (in_a != in_b) return false;
      }
    }
    return true;
  }

  bool extend(int i) {
    if (i == n_) {
      if (is_isomorphism(a_, b_, phi_)) {
        found_.push_back(phi_);
        return !all_;
      }
      return false;
    }
    for (int j = 0; j < n_; ++j) {
      if (used_[static_cast<std::size_t>(j)] || ca_[static_cast<std::size_t>(i)] != cb_[static_cast<std::size_t>(j)]) continue;
      if (!consistent(i, j)) continue;
      phi_[static_cast<std::size_t>(i)] = j;
      used_[static_cast<std::size_t>(j)] = true;
      bool done = extend(i + 1);
      used_[static_cast<std::size_t>(j)] = false;
      phi_[static_cast<std::size_t>(i)] = -1;
      if (done) return true;
    }
    return false;
  }

  const IncidenceStructure& a_;
  const IncidenceStructure& b_;
  bool all_;
  int n_;
  std::vector<std::uint64_t> ca_, cb_;
  Permutation phi_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::optional<Permutation> find_isomorphism(const IncidenceStructure& s1, const IncidenceStructure& s2) {
  auto found = IsoSearch(s1, s2, false).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<Permutation> all_isomorphisms(const IncidenceStructure& s1, const IncidenceStructure& s2) {
  return IsoSearch(s1, s2, true).run();
}

// ---------------------------------------------------------- C<=3 predicates

namespace {

bool covers(const IncidenceStructure& s, const std::vector<int>& lines) {
  for (const auto& b : s.multiples()) {
    bool hit = std::any_of(lines.begin(), lines.end(),
                           [&](int l) { return std::binary_search(b.begin(), b.end(), l); });
    if (!hit) return false;
  }
  return true;
}

}  // namespace

CoverResult is_C_le_3(const IncidenceStructure& s) {
  if (s.multiples().empty()) return {true, {}};
  const int n = s.n();
  for (int a = 0; a < n; ++a) {
    if (covers(s, {a})) return {true, {a}};
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (covers(s, {a, b})) return {true, {a, b}};
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (covers(s, {a, b, c})) return {true, {a, b, c}};
      }
    }
  }
  return {false, {}};
}

SimpleResult is_simple_C_le_3(const IncidenceStructure& s) {
  const int n = s.n();
  if (n < 3) {
    SimpleResult r;
    r.holds = true;
    r.clause = 2;
    return r;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        std::array<int, 3> cover{a, b, c};
        if (!covers(s, {a, b, c})) continue;
        for (int k = 0; k < 3; ++k) {
          int line = cover[static_cast<std::size_t>(k)];
          int others = 0;
          for (const auto& blk : s.multiples()) {
            if (!std::binary_search(blk.begin(), blk.end(), line)) continue;
            bool at_cover_meet = false;
            for (int o : cover) {
              if (o != line && std::binary_search(blk.begin(), blk.end(), o)) at_cover_meet = true;
            }
            if (!at_cover_meet) ++others;
          }
          if (others <= 1) return {true, 2, cover, line};
        }
        if (s.concurrent(a, b, c)) return {true, 1, cover, -1};
      }
    }
  }
  return {};
}

// ------------------------------------------------------------------ A_s

std::array<std::array<std::array<int, 2>, 3>, 3> SubArrangementWitness::cross() const {
  std::array<std::array<std::array<int, 2>, 3>, 3> q{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) q[i][j] = {first[i], second[j]};
  }
  return q;
}

bool is_valid_witness(const IncidenceStructure& s, const SubArrangementWitness& w) {
  std::vector<int> six(w.first.begin(), w.first.end());
  six.insert(six.end(), w.second.begin(), w.second.end());
  auto sorted = six;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int x : six) {
    if (x < 0 || x >= s.n()) return false;
  }
  if (!s.concurrent(w.first[0], w.first[1], w.first[2])) return false;
  if (!s.concurrent(w.second[0], w.second[1], w.second[2])) return false;
  for (int i : w.first) {
    for (int j : w.second) {
      int m = s.meet(i, j);
      if (m == -1) continue;
      for (int k : six) {
        if (k != i && k != j && s.meet(i, k) == m) return false;
      }
    }
  }
  return true;
}

std::vector<SubArrangementWitness> all_As(const IncidenceStructure& s) {
  std::vector<SubArrangementWitness> out;
  const auto& ms = s.multiples();
  auto triples = [](const Block& b) {
    std::vector<std::array<int, 3>> t;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        for (std::size_t k = j + 1; k < b.size(); ++k) t.push_back({b[i], b[j], b[k]});
    return t;
  };
  for (std::size_t p = 0; p < ms.size(); ++p) {
    for (std::size_t q = 0; q < ms.size(); ++q) {
      if (p == q) continue;
      for (const auto& f : triples(ms[p])) {
        for (const auto& g : triples(ms[q])) {
          if (!(f < g)) continue;  // each unordered pair once, smaller triple first
          SubArrangementWitness w{f, g, static_cast<int>(p), static_cast<int>(q)};
          if (is_valid_witness(s, w)) out.push_back(w);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  return out;
}

std::optional<SubArrangementWitness> find_As(const IncidenceStructure& s) {
  auto all = all_As(s);
  if (!all.empty()) return all.front();
  if (!is_simple_C_le_3(s).holds) {
    throw Error(Errc::ConsistencyViolation, "structure is not simple C<=3 but has no A_s sub-arrangement: " + s.str());
  }
  return std::nullopt;
}

std::vector<int> lines_with_few_multiples(const IncidenceStructure& s, int k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "k must be non-negative");
  std::vector<int> out;
  for (int i = 0; i < s.n(); ++i) {
    if (s.degree(i) <= k) out.push_back(i);
  }
  return out;
}

IncidenceStructure delete_line(const IncidenceStructure& s, int i) {
  if (i < 0 || i >= s.n()) throw Error(Errc::InvalidArgument, "line index out of range");
  std::vector<int> keep;
  for (int j = 0; j < s.n(); ++j) {
    if (j != i) keep.push_back(j);
  }
  return s.restricted(keep);
}

}  // namespace arrlab
