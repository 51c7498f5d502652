#include "arrlab/verify.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "arrlab/census.hpp"
#include "arrlab/classify.hpp"
#include "arrlab/moduli.hpp"

namespace arrlab {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unsupported: return "unsupported";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerifyReport::ok() const { return count(CheckStatus::Fail) == 0; }

int VerifyReport::count(CheckStatus s) const {
  int c = 0;
  for (const auto& ch : checks) c += ch.status == s ? 1 : 0;
  return c;
}

namespace {

using catalog::CatalogEntry;

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string d = "") { return {CheckStatus::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {CheckStatus::Fail, std::move(d)}; }

class Runner {
 public:
  explicit Runner(const VerifyOptions& o) : opts_(o) {}

  template <class F>
  void check(const std::string& name, const std::string& citation, bool slow, F&& body) {
    CheckResult r;
    r.name = name;
    r.citation = citation;
    if (slow && opts_.skip_slow) {
      r.status = CheckStatus::Skipped;
      r.detail = "slow check skipped";
      report_.checks.push_back(std::move(r));
      return;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      r.status = o.status;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(r));
  }

  CatalogEntry entry(const std::string& name) const { return opts_.catalog(name); }
  const VerifyOptions& opts() const { return opts_; }
  VerifyReport take() { return std::move(report_); }

 private:
  const VerifyOptions& opts_;
  VerifyReport report_;
};

std::vector<int> degrees(const IncidenceStructure& s) {
  std::vector<int> d;
  for (int i = 0; i < s.n(); ++i) d.push_back(s.degree(i));
  return d;
}

/// Entry lattice as computed from its coordinates, required to equal the stored one.
IncidenceStructure checked_lattice(const CatalogEntry& e) {
  IncidenceStructure got = incidence_of(e.arrangement);
  if (!(got == e.expected_lattice)) {
    throw Error(Errc::ConsistencyViolation, e.name + ": coordinates give " + got.str() + ", expected " + e.expected_lattice.str());
  }
  return got;
}

Outcome moduli_pair(Runner& run, const std::string& name, std::int64_t d) {
  CatalogEntry e = run.entry(name);
  IncidenceStructure lat = checked_lattice(e);
  ModuliReport rep = solve_moduli(lat);
  std::ostringstream os;
  os << "status " << to_string(rep.status) << ", points " << rep.point_count << ", d " << rep.splitting_field_d
     << ", closure " << rep.nondegenerate_closure.str("t");
  if (rep.status != ModuliStatus::Points || rep.point_count != 2 || rep.splitting_field_d != d) return fail(os.str());
  // the discriminant squareclass of the closure must match too
  const Poly& q = rep.nondegenerate_closure;
  if (q.degree() != 2) return fail(os.str() + "; closure not quadratic");
  if (squarefree_part(discriminant(q).a().numerator() * discriminant(q).a().denominator()) != d) {
    return fail(os.str() + "; discriminant squareclass differs");
  }
  bool matched = false;
  for (const auto& r : rep.realizations) {
    if (!(incidence_of(r) == lat)) return fail(os.str() + "; realization with wrong lattice");
    matched |= realizations_equivalent(r, e.arrangement, LineMatching::Identity);
  }
  if (!matched) return fail(os.str() + "; no realization equivalent to the catalog coordinates");
  return pass(os.str());
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  Runner run(opts);

  run.check("catalog.maclane_incidence", "MacLane arrangement: 8 lines, 8 triple points, each line on exactly 3", false, [&] {
    for (const char* nm : {"maclane+", "maclane-"}) {
      IncidenceStructure s = checked_lattice(run.entry(nm));
      MultiplicityProfile p = profile_of(s);
      if (s.n() != 8 || p.count(3) != 8 || p.m_max != 3) return fail(std::string(nm) + ": profile differs");
      for (int d : degrees(s)) {
        if (d != 3) return fail(std::string(nm) + ": a line is not on exactly 3 triples");
      }
    }
    return pass("both signs");
  });

  run.check("catalog.fs_incidence", "Falk-Sturmfels arrangement: profile {4:1, 3:8, 2:6}, a line on four triples", false, [&] {
    for (const char* nm : {"fs+", "fs-"}) {
      IncidenceStructure s = checked_lattice(run.entry(nm));
      MultiplicityProfile p = profile_of(s);
      if (p != make_profile(9, {{4, 1}, {3, 8}, {2, 6}})) return fail(std::string(nm) + ": profile differs");
      bool four = false;
      for (int i = 0; i < 9; ++i) {
        int triples = 0;
        for (const auto& b : s.multiples()) triples += (b.size() == 3 && std::binary_search(b.begin(), b.end(), i)) ? 1 : 0;
        four |= triples == 4;
      }
      if (!four) return fail(std::string(nm) + ": no line on four triple points");
    }
    return pass("both signs");
  });

  run.check("catalog.a_pm_i_incidence",
            "A^(+-i): 10 triple points, three non-concurrent lines on 4 triples, six lines on 3", false, [&] {
              for (const char* nm : {"a_pm_i+", "a_pm_i-"}) {
                IncidenceStructure s = checked_lattice(run.entry(nm));
                if (profile_of(s) != make_profile(9, {{3, 10}, {2, 6}})) return fail(std::string(nm) + ": profile differs");
                std::vector<int> four, three;
                for (int i = 0; i < 9; ++i) (s.degree(i) == 4 ? four : three).push_back(i);
                if (four.size() != 3 || three.size() != 6) return fail(std::string(nm) + ": degree split differs");
                if (s.concurrent(four[0], four[1], four[2])) return fail(std::string(nm) + ": 4-triple lines concurrent");
              }
              return pass("both signs");
            });

  run.check("catalog.nine_three_incidence", "9_3 configurations: 9 triples, 3 per line, three distinct types", false, [&] {
    std::vector<IncidenceStructure> lats;
    for (const char* nm : {"nine_three_a", "nine_three_b", "nine_three_c"}) {
      IncidenceStructure s = checked_lattice(run.entry(nm));
      if (profile_of(s) != make_profile(9, {{3, 9}, {2, 9}})) return fail(std::string(nm) + ": profile differs");
      for (int d : degrees(s)) {
        if (d != 3) return fail(std::string(nm) + ": a line is not on exactly 3 triples");
      }
      lats.push_back(s);
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (find_isomorphism(lats[i], lats[j])) return fail("two 9_3 entries are isomorphic");
      }
    return pass();
  });

  run.check("counting.pair_count", "intersection formula C(n,2) = sum n_r C(r,2) on every catalog entry", false, [&] {
    for (const auto& nm : catalog::names()) {
      if (!pair_count_holds(profile_of(checked_lattice(run.entry(nm))))) return fail(nm);
    }
    return pass(std::to_string(catalog::names().size()) + " entries");
  });

  run.check("counting.hirzebruch", "Hirzebruch inequality passes or does not apply on every catalog entry", false, [&] {
    std::ostringstream os;
    for (const auto& nm : catalog::names()) {
      FilterVerdict v = hirzebruch_filter(profile_of(checked_lattice(run.entry(nm))));
      os << nm << ":" << to_string(v) << " ";
      if (v == FilterVerdict::Fail) return fail(os.str());
    }
    return pass(os.str());
  });

  run.check("lattice.predicates", "MacLane and A^(+-i) are not C<=3, FS is not simple C<=3, each has an A_s witness", false, [&] {
    IncidenceStructure mac = checked_lattice(run.entry("maclane+"));
    IncidenceStructure fs = checked_lattice(run.entry("fs+"));
    IncidenceStructure api = checked_lattice(run.entry("a_pm_i+"));
    if (is_C_le_3(mac).holds) return fail("MacLane is C<=3");
    if (is_C_le_3(api).holds) return fail("A^(+-i) is C<=3");
    if (is_simple_C_le_3(fs).holds) return fail("FS is simple C<=3");
    for (const auto* s : {&mac, &fs, &api}) {
      auto w = find_As(*s);
      if (!w || !is_valid_witness(*s, *w)) return fail("missing A_s witness on " + s->str());
    }
    return pass();
  });

  run.check("moduli.maclane", "MacLane moduli: two points over Q(sqrt -3)", false, [&] { return moduli_pair(run, "maclane+", -3); });
  run.check("moduli.fs", "Falk-Sturmfels moduli: two points, closure x^2 - x - 1 up to reparametrization", false,
            [&] { return moduli_pair(run, "fs+", 5); });
  run.check("moduli.a_pm_i", "A^(+-i) moduli: two points over Q(i)", false, [&] { return moduli_pair(run, "a_pm_i+", -1); });

  run.check("moduli.nine_three", "9_3 moduli spaces are irreducible", false, [&] {
    std::ostringstream os;
    for (const char* nm : {"nine_three_a", "nine_three_b", "nine_three_c"}) {
      ModuliReport rep = solve_moduli(checked_lattice(run.entry(nm)));
      os << nm << ":" << to_string(rep.status) << "(dim " << rep.free_dimension << ") ";
      if (rep.status != ModuliStatus::IrreducibleFamily) return fail(os.str());
    }
    return pass(os.str());
  });

  run.check("ext_fs.exchange_matrix", "the exchange matrix maps FS+ to FS- under the stated line permutation, H10+ to H10-",
            false, [&] {
              const ProjTransform a = catalog::fs_exchange_matrix();
              const CatalogEntry plus = run.entry("ext_fs+");
              const CatalogEntry minus = run.entry("ext_fs-");
              const auto perm = catalog::fs_exchange_permutation(true);
              if (plus.arrangement.size() != perm.size() || minus.arrangement.size() != perm.size()) return fail("size mismatch");
              for (std::size_t i = 0; i < perm.size(); ++i) {
                ProjLine img = a.apply(plus.arrangement.line(i));
                if (!(img == minus.arrangement.line(static_cast<std::size_t>(perm[i])))) {
                  return fail("line " + std::to_string(i + 1) + " maps to " + img.str());
                }
              }
              return pass();
            });

  run.check("ext_fs.h10_points", "H10 passes through L1^L2, K1^K2 and K3^K4 of FS", false, [&] {
    for (const char* nm : {"ext_fs+", "ext_fs-"}) {
      const CatalogEntry e = run.entry(nm);
      const auto& L = e.arrangement;
      const ProjLine& h10 = L.line(9);
      for (auto [i, j] : {std::pair{0, 1}, std::pair{4, 5}, std::pair{6, 7}}) {
        if (!h10.contains(intersect(L.line(static_cast<std::size_t>(i)), L.line(static_cast<std::size_t>(j))))) {
          return fail(std::string(nm) + ": H10 misses line " + std::to_string(i + 1) + " ^ line " + std::to_string(j + 1));
        }
      }
      checked_lattice(e);
    }
    auto iso = find_isomorphism(run.entry("ext_fs+").expected_lattice, run.entry("ext_fs-").expected_lattice);
    if (!iso) return fail("extended lattices not isomorphic");
    return pass();
  });

  run.check("classify.catalog", "classification of the catalog nine-line lattices", false, [&] {
    const std::vector<std::pair<std::string, NineLineTag>> expect = {
        {"fs+", NineLineTag::FalkSturmfels},       {"fs-", NineLineTag::FalkSturmfels},
        {"a_pm_i+", NineLineTag::APlusMinusI},     {"a_pm_i-", NineLineTag::APlusMinusI},
        {"nine_three_a", NineLineTag::IrreducibleModuli}, {"nine_three_b", NineLineTag::IrreducibleModuli},
        {"nine_three_c", NineLineTag::IrreducibleModuli}};
    for (const auto& [nm, tag] : expect) {
      IncidenceStructure s = checked_lattice(run.entry(nm));
      NineLineClass c = classify_nine(s);
      if (c.tag != tag || !validate_evidence(s, c)) return fail(nm + " -> " + std::string(to_string(c.tag)));
    }
    return pass(std::to_string(expect.size()) + " lattices");
  });

  auto census_check = [&](const std::string& name, const std::string& citation, CensusResult (*fn)(int)) {
    run.check(name, citation, true, [&] {
      CensusResult r = fn(run.opts().threads);
      std::ostringstream os;
      os << r.structures.size() << " structures from " << r.labeled_leaves << " labeled families";
      for (const auto& v : r.violations) os << "; " << v;
      return r.violations.empty() ? pass(os.str()) : fail(os.str());
    });
  };
  census_check("census.nine_three", "9_3 census: three types, each with irreducible moduli", enumerate_933);
  census_check("census.ten_triples", "ten-triple census: the only non-simple lattice is A^(+-i), with two moduli points",
               enumerate_ten_triples);
  census_check("census.quadruple", "quadruple-point census: n4 <= 1, the only non-simple lattice is FS",
               enumerate_quadruple_case);
  census_check("census.triple_bound", "at most 10 triple points: no realizable candidate with 11 or 12",
               check_triple_bound);

  return run.take();
}

Json to_json(const VerifyReport& r, bool timings) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"citation", c.citation},
                      {"detail", c.detail}});
    if (timings) checks.back()["seconds"] = c.seconds;
  }
  return Json{{"ok", r.ok()},
              {"pass", r.count(CheckStatus::Pass)},
              {"fail", r.count(CheckStatus::Fail)},
              {"skipped", r.count(CheckStatus::Skipped)},
              {"checks", checks}};
}

std::string to_text(const VerifyReport& r, bool timings) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << std::left << std::setw(12) << ("[" + std::string(to_string(c.status)) + "]") << std::setw(30) << c.name << " " << c.citation;
    if (timings) os << " (" << std::fixed << std::setprecision(3) << c.seconds << " s)";
    if (!c.detail.empty()) os << "\n            " << c.detail;
    os << "\n";
  }
  os << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail) << " fail, " << r.count(CheckStatus::Skipped)
     << " skipped\n";
  return os.str();
}

}  // namespace arrlab
