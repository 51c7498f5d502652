#include <doctest.h>

#include <algorithm>

#include "arrlab/catalog.hpp"
#include "arrlab/lattice.hpp"
#include "support.hpp"

using namespace arrlab;

namespace {

IncidenceStructure lat(const std::string& name) { return catalog::entry(name).expected_lattice; }

IncidenceStructure one_based(int n, std::vector<Block> blocks) {
  for (auto& b : blocks)
    for (int& x : b) --x;
  return IncidenceStructure(n, std::move(blocks));
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("structures are validated and canonicalized") {
  IncidenceStructure s(5, {{4, 2, 0}, {1, 3, 0}});
  CHECK(s.multiples() == std::vector<Block>{{0, 1, 3}, {0, 2, 4}});
  CHECK(s.meet(2, 4) == 1);
  CHECK(s.meet(1, 2) == -1);
  CHECK(s.degree(0) == 2);
  CHECK_THROWS_AS(IncidenceStructure(5, {{0, 1, 2}, {0, 1, 3}}), Error);
  CHECK_THROWS_AS(IncidenceStructure(5, {{0, 1}}), Error);
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 1, 5}}), Error);
}

TEST_CASE("profiles from the intersection formula") {
  CHECK(profile_of(lat("maclane+")) == make_profile(8, {{3, 8}, {2, 4}}));
  MultiplicityProfile fs = profile_of(lat("fs+"));
  CHECK(fs == make_profile(9, {{4, 1}, {3, 8}, {2, 6}}));
  CHECK(fs.m_max == 4);
  MultiplicityProfile tri = profile_of(IncidenceStructure(3, {}));
  CHECK(tri.count(2) == 3);
  CHECK(tri.m_max == 2);
  for (const auto& name : catalog::names()) CHECK(pair_count_holds(profile_of(lat(name))));
}

TEST_CASE("Hirzebruch filter") {
  CHECK(hirzebruch_filter(profile_of(lat("maclane+"))) == FilterVerdict::Pass);
  CHECK(hirzebruch_filter(make_profile(9, {{5, 2}, {3, 5}, {2, 1}})) == FilterVerdict::Fail);
  CHECK(hirzebruch_filter(make_profile(9, {{7, 1}, {2, 15}})) == FilterVerdict::NotApplicable);
  CHECK(to_string(FilterVerdict::NotApplicable) == "not_applicable");
}

TEST_CASE("isomorphism examples") {
  auto w = find_isomorphism(lat("maclane+"), lat("maclane-"));
  REQUIRE(w);
  CHECK(is_isomorphism(lat("maclane+"), lat("maclane-"), *w));
  CHECK_FALSE(find_isomorphism(lat("fs+"), lat("maclane+")));
  auto id = find_isomorphism(lat("fs+"), lat("fs+"));
  REQUIRE(id);
  for (int i = 0; i < 9; ++i) CHECK((*id)[static_cast<std::size_t>(i)] == i);
  CHECK_FALSE(find_isomorphism(lat("nine_three_a"), lat("nine_three_b")));
}

TEST_CASE("random relabelings are always recognized") {
  std::mt19937_64 rng(1234);
  std::vector<IncidenceStructure> pool;
  for (const auto& name : catalog::names()) pool.push_back(lat(name));
  for (int it = 0; it < 10000; ++it) {
    const auto& s = pool[static_cast<std::size_t>(it) % pool.size()];
    Permutation p = testing::random_permutation(rng, s.n());
    IncidenceStructure t = s.relabeled(p);
    REQUIRE(is_isomorphism(s, t, p));
    auto w = find_isomorphism(s, t);
    REQUIRE(w);
    REQUIRE(is_isomorphism(s, t, *w));
    // the witness inverts
    Permutation inv(w->size());
    for (std::size_t i = 0; i < w->size(); ++i) inv[static_cast<std::size_t>((*w)[i])] = static_cast<int>(i);
    REQUIRE(is_isomorphism(t, s, inv));
    REQUIRE(invariant_hash(s) == invariant_hash(t));
  }
}

TEST_CASE("all_isomorphisms counts automorphisms") {
  // AG(2,3) minus a point: the MacLane lattice has 48 automorphisms
  CHECK(all_isomorphisms(lat("maclane+"), lat("maclane+")).size() == 48);
  for (const auto& p : all_isomorphisms(lat("fs+"), lat("fs-"))) CHECK(is_isomorphism(lat("fs+"), lat("fs-"), p));
}

TEST_CASE("C<=3 predicate") {
  IncidenceStructure one_line = one_based(6, {{1, 2, 3}, {1, 4, 5}});
  auto c = is_C_le_3(one_line);
  CHECK(c.holds);
  CHECK(c.cover.size() <= 3);
  CHECK(std::find(c.cover.begin(), c.cover.end(), 0) != c.cover.end());
  CHECK_FALSE(is_C_le_3(lat("maclane+")).holds);
  CHECK_FALSE(is_C_le_3(lat("a_pm_i+")).holds);
}

TEST_CASE("simple C<=3 predicate") {
  CHECK(is_simple_C_le_3(IncidenceStructure(5, {})).holds);
  CHECK_FALSE(is_simple_C_le_3(lat("fs+")).holds);
  auto np = is_simple_C_le_3(one_based(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}}));
  CHECK(np.holds);
  CHECK(np.clause == 2);
  // simple implies C<=3
  std::mt19937_64 rng(8);
  for (int it = 0; it < 300; ++it) {
    IncidenceStructure s = incidence_of(testing::random_rational_arrangement(rng, 8));
    if (is_simple_C_le_3(s).holds) REQUIRE(is_C_le_3(s).holds);
  }
}

TEST_CASE("A_s witnesses") {
  auto mac = find_As(lat("maclane+"));
  REQUIRE(mac);
  CHECK(is_valid_witness(lat("maclane+"), *mac));

  const IncidenceStructure fs = lat("fs+");
  bool quad_is_cross = false;
  for (const auto& w : all_As(fs)) {
    REQUIRE(is_valid_witness(fs, w));
    for (const auto& row : w.cross())
      for (const auto& q : row) {
        int m = fs.meet(q[0], q[1]);
        if (m >= 0 && fs.multiples()[static_cast<std::size_t>(m)].size() == 4) quad_is_cross = true;
      }
  }
  CHECK(quad_is_cross);
  CHECK_FALSE(find_As(IncidenceStructure(4, {})));
  for (const auto& name : catalog::names()) {
    if (!is_simple_C_le_3(lat(name)).holds) CHECK(find_As(lat(name)));
  }
}

TEST_CASE("sparse lines and deletion") {
  CHECK(lines_with_few_multiples(lat("fs+"), 2).empty());
  CHECK(lines_with_few_multiples(IncidenceStructure(4, {}), 0).size() == 4);
  CHECK(delete_line(IncidenceStructure(3, {}), 1) == IncidenceStructure(2, {}));

  // MacLane plus a generic ninth line
  auto mac = lat("maclane+");
  IncidenceStructure nine(9, mac.multiples());
  CHECK(delete_line(nine, 8) == mac);

  auto no_h9 = delete_line(lat("fs+"), 8);
  CHECK(no_h9.n() == 8);
  bool has_quad = false;
  for (const auto& b : no_h9.multiples()) has_quad |= b.size() == 4;
  CHECK(has_quad);
}

TEST_CASE("a line on a five-fold point of nine lines is sparse") {
  // pencil of five lines plus four lines in general position
  IncidenceStructure s = one_based(9, {{1, 2, 3, 4, 5}, {1, 6, 7}, {2, 8, 9}});
  bool found = false;
  for (int x : lines_with_few_multiples(s, 2)) found |= x < 5;
  CHECK(found);
}

}  // TEST_SUITE
