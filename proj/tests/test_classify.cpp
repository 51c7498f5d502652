#include <doctest.h>

#include "arrlab/catalog.hpp"
#include "arrlab/census.hpp"
#include "arrlab/classify.hpp"
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

TEST_SUITE("classify") {

TEST_CASE("catalog lattices") {
  struct Row {
    const char* name;
    NineLineTag tag;
  };
  for (Row r : {Row{"fs+", NineLineTag::FalkSturmfels}, Row{"fs-", NineLineTag::FalkSturmfels},
                Row{"a_pm_i+", NineLineTag::APlusMinusI}, Row{"nine_three_a", NineLineTag::IrreducibleModuli},
                Row{"nine_three_b", NineLineTag::IrreducibleModuli}, Row{"nine_three_c", NineLineTag::IrreducibleModuli}}) {
    CAPTURE(r.name);
    NineLineClass c = classify_nine(lat(r.name));
    CHECK(c.tag == r.tag);
    CHECK(validate_evidence(lat(r.name), c));
    CHECK_FALSE(c.trace.empty());
  }
  CHECK(classify_nine(lat("fs+")).evidence.kind == EvidenceKind::CatalogIso);
}

TEST_CASE("MacLane plus a ninth line") {
  auto mac = lat("maclane+");
  IncidenceStructure generic(9, mac.multiples());
  NineLineClass c = classify_nine(generic);
  CHECK(c.tag == NineLineTag::ContainsMacLane);
  CHECK(c.evidence.kind == EvidenceKind::DeletedLineMacLane);
  CHECK(c.evidence.deleted_line == 8);
  CHECK(validate_evidence(generic, c));

  // the ninth line through two of MacLane's double points
  auto p = profile_of(mac);
  std::vector<Block> blocks = mac.multiples();
  std::vector<std::pair<int, int>> doubles;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (mac.meet(i, j) < 0) doubles.emplace_back(i, j);
  REQUIRE(static_cast<std::int64_t>(doubles.size()) == p.count(2));
  auto [a, b] = doubles.front();
  for (auto [x, y] : doubles) {
    if (x != a && x != b && y != a && y != b) {
      blocks.push_back({a, b, 8});
      blocks.push_back({x, y, 8});
      break;
    }
  }
  IncidenceStructure through(9, blocks);
  NineLineClass d = classify_nine(through);
  CHECK(d.tag == NineLineTag::ContainsMacLane);
  CHECK(validate_evidence(through, d));
}

TEST_CASE("simple lattices") {
  NineLineClass c = classify_nine(IncidenceStructure(9, {}));
  CHECK(c.tag == NineLineTag::IrreducibleModuli);
  CHECK(validate_evidence(IncidenceStructure(9, {}), c));

  // a pencil of five through one point, every other line sparse
  auto big = one_based(9, {{1, 2, 3, 4, 5}, {1, 6, 7}, {2, 6, 8}, {3, 7, 8}});
  NineLineClass d = classify_nine(big);
  CHECK(d.tag == NineLineTag::IrreducibleModuli);
  CHECK(validate_evidence(big, d));
}

TEST_CASE("tampered evidence is rejected") {
  auto s = lat("fs+");
  NineLineClass c = classify_nine(s);
  NineLineClass bad = c;
  std::swap(bad.evidence.iso[0], bad.evidence.iso[4]);
  CHECK_FALSE(validate_evidence(s, bad));
  NineLineClass wrong_tag = c;
  wrong_tag.tag = NineLineTag::APlusMinusI;
  CHECK_FALSE(validate_evidence(s, wrong_tag));
  NineLineClass other = c;
  other.evidence.kind = EvidenceKind::SimpleCle3;
  CHECK_FALSE(validate_evidence(s, other));
}

TEST_CASE("preconditions") {
  auto expect = [](const IncidenceStructure& s) {
    try {
      classify_nine(s);
      FAIL("expected InvalidArgument");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidArgument);
    }
  };
  expect(lat("maclane+"));
  expect(IncidenceStructure(10, {}));
  // two quadruple and seven triple points leave only three double points
  auto dense = one_based(9, {{1, 2, 8, 9}, {1, 3, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7},
                             {3, 4, 7, 9}, {3, 6, 8}, {4, 5, 8}, {5, 6, 9}});
  CHECK(hirzebruch_filter(profile_of(dense)) == FilterVerdict::Fail);
  expect(dense);
}

TEST_CASE("sub-lattice search") {
  auto mac = lat("maclane+");
  auto m = find_maclane_sublattice(IncidenceStructure(9, mac.multiples()));
  REQUIRE(m);
  CHECK(m->kept_lines == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK_FALSE(find_maclane_sublattice(lat("fs+")));
}

TEST_CASE("census survivors classify with valid evidence") {
  for (const auto& r : {enumerate_933(1), enumerate_ten_triples(1), enumerate_quadruple_case(1), check_triple_bound(1)}) {
    CAPTURE(r.name);
    for (const auto& s : r.structures) {
      NineLineClass c = classify_nine(s.lattice);
      CHECK(validate_evidence(s.lattice, c));
      if (s.excluded) CHECK(c.tag == NineLineTag::ContainsMacLane);
    }
  }
}

TEST_CASE("random rational nine-line arrangements") {
  std::mt19937_64 rng(909);
  int classified = 0;
  for (int it = 0; it < 200; ++it) {
    auto s = incidence_of(testing::random_rational_arrangement(rng, 9));
    if (hirzebruch_filter(profile_of(s)) == FilterVerdict::Fail) continue;
    NineLineClass c = classify_nine(s);
    REQUIRE(validate_evidence(s, c));
    ++classified;
  }
  CHECK(classified > 100);
}

}  // TEST_SUITE
