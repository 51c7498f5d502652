#include "arrlab/classify.hpp"

#include <algorithm>
#include <sstream>

#include "arrlab/catalog.hpp"

namespace arrlab {

std::string_view to_string(NineLineTag t) {
  switch (t) {
    case NineLineTag::IrreducibleModuli: return "IrreducibleModuli";
    case NineLineTag::ContainsMacLane: return "ContainsMacLane";
    case NineLineTag::FalkSturmfels: return "FalkSturmfels";
    case NineLineTag::APlusMinusI: return "APlusMinusI";
  }
  return "?";
}

std::string_view to_string(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::DeletedLineSimple: return "deleted_line_simple";
    case EvidenceKind::DeletedLineMacLane: return "deleted_line_maclane";
    case EvidenceKind::SimpleCle3: return "simple_c_le_3";
    case EvidenceKind::SparseLineAtHighPoint: return "sparse_line_at_high_point";
    case EvidenceKind::CatalogIso: return "catalog_iso";
    case EvidenceKind::MacLaneSubLattice: return "maclane_sublattice";
  }
  return "?";
}

namespace {

const IncidenceStructure& catalog_lattice(const std::string& name) {
  static const std::vector<std::pair<std::string, IncidenceStructure>> cache = [] {
    std::vector<std::pair<std::string, IncidenceStructure>> v;
    for (const char* nm : {"maclane+", "fs+", "a_pm_i+", "nine_three_a", "nine_three_b", "nine_three_c"}) {
      v.emplace_back(nm, catalog::entry(nm).expected_lattice);
    }
    return v;
  }();
  for (const auto& [nm, lat] : cache) {
    if (nm == name) return lat;
  }
  throw Error(Errc::UnknownName, "no cached catalog lattice '" + name + "'");
}

bool in_block(const Block& b, int x) { return std::binary_search(b.begin(), b.end(), x); }

/// Checks a simple-C<=3 claim from its cover alone.
bool certifies_simple(const IncidenceStructure& s, const SimpleResult& r) {
  if (!r.holds) return false;
  if (s.n() < 3) return true;
  std::vector<int> cover;
  for (int x : r.cover) {
    if (x < 0 || x >= s.n()) return false;
    cover.push_back(x);
  }
  if (cover.size() != 3 || cover[0] == cover[1] || cover[0] == cover[2] || cover[1] == cover[2]) return false;
  for (const auto& b : s.multiples()) {
    if (!in_block(b, cover[0]) && !in_block(b, cover[1]) && !in_block(b, cover[2])) return false;
  }
  if (r.clause == 1) return s.concurrent(cover[0], cover[1], cover[2]);
  if (r.clause != 2 || std::find(cover.begin(), cover.end(), r.sparse_line) == cover.end()) return false;
  int others = 0;
  for (const auto& b : s.multiples()) {
    if (!in_block(b, r.sparse_line)) continue;
    bool at_meet = false;
    for (int o : cover) at_meet |= o != r.sparse_line && in_block(b, o);
    if (!at_meet) ++others;
  }
  return others <= 1;
}

std::string join(const std::vector<std::string>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "; " : "") << v[i];
  return os.str();
}

}  // namespace

std::optional<SubLatticeMatch> find_maclane_sublattice(const IncidenceStructure& s) {
  const IncidenceStructure& mac = catalog_lattice("maclane+");
  if (s.n() < 8) return std::nullopt;
  const int n = s.n();
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + 8, true);
  // prev_permutation over a leading-true mask walks subsets in lexicographic order.
  do {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) keep.push_back(i);
    }
    IncidenceStructure sub = s.restricted(keep);
    if (sub.multiples().size() < 8) continue;
    if (auto iso = find_isomorphism(sub, mac)) return SubLatticeMatch{keep, *iso};
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

NineLineClass classify_nine(const IncidenceStructure& s) {
  if (s.n() != 9) throw Error(Errc::InvalidArgument, "classify_nine needs 9 lines, got " + std::to_string(s.n()));
  const MultiplicityProfile prof = profile_of(s);
  if (hirzebruch_filter(prof) == FilterVerdict::Fail) {
    throw Error(Errc::InvalidArgument, "profile fails the Hirzebruch inequality: " + s.str());
  }
  NineLineClass out;
  auto& trace = out.trace;

  // (i) delete a line with at most two multiple points
  for (int line : lines_with_few_multiples(s, 2)) {
    IncidenceStructure rest = delete_line(s, line);
    SimpleResult sr = is_simple_C_le_3(rest);
    if (sr.holds) {
      trace.push_back("delete line " + std::to_string(line + 1) + ": rest simple C<=3");
      out.tag = NineLineTag::IrreducibleModuli;
      out.evidence.kind = EvidenceKind::DeletedLineSimple;
      out.evidence.deleted_line = line;
      out.evidence.simple = sr;
      return out;
    }
    if (auto iso = find_isomorphism(rest, catalog_lattice("maclane+"))) {
      trace.push_back("delete line " + std::to_string(line + 1) + ": rest is MacLane");
      out.tag = NineLineTag::ContainsMacLane;
      out.evidence.kind = EvidenceKind::DeletedLineMacLane;
      out.evidence.deleted_line = line;
      out.evidence.catalog_name = "maclane+";
      out.evidence.iso = *iso;
      return out;
    }
    trace.push_back("delete line " + std::to_string(line + 1) + ": rest neither simple nor MacLane");
  }
  if (trace.empty()) trace.push_back("no line with <= 2 multiple points");

  // (ii)
  if (SimpleResult sr = is_simple_C_le_3(s); sr.holds) {
    trace.push_back("simple C<=3, clause " + std::to_string(sr.clause));
    out.tag = NineLineTag::IrreducibleModuli;
    out.evidence.kind = EvidenceKind::SimpleCle3;
    out.evidence.simple = sr;
    return out;
  }
  trace.push_back("not simple C<=3");

  // (iii)
  if (prof.m_max >= 5) {
    for (std::size_t k = 0; k < s.multiples().size(); ++k) {
      const Block& big = s.multiples()[k];
      if (static_cast<int>(big.size()) < 5) continue;
      for (int line : big) {
        if (s.degree(line) > 2) continue;
        trace.push_back("m >= 5: line " + std::to_string(line + 1) + " through the big point is sparse");
        out.tag = NineLineTag::IrreducibleModuli;
        out.evidence.kind = EvidenceKind::SparseLineAtHighPoint;
        out.evidence.deleted_line = line;
        out.evidence.high_point = static_cast<int>(k);
        return out;
      }
    }
    trace.push_back("m >= 5 but no sparse line through a big point");
  }

  // (iv)
  if (prof.m_max == 4) {
    if (auto iso = find_isomorphism(s, catalog_lattice("fs+"))) {
      trace.push_back("m = 4: isomorphic to FS");
      out.tag = NineLineTag::FalkSturmfels;
      out.evidence.kind = EvidenceKind::CatalogIso;
      out.evidence.catalog_name = "fs+";
      out.evidence.iso = *iso;
      return out;
    }
    trace.push_back("m = 4: not isomorphic to FS");
  }

  // (v)
  if (prof.m_max == 3) {
    for (const char* nm : {"nine_three_a", "nine_three_b", "nine_three_c"}) {
      if (auto iso = find_isomorphism(s, catalog_lattice(nm))) {
        trace.push_back(std::string("m = 3: isomorphic to ") + nm);
        out.tag = NineLineTag::IrreducibleModuli;
        out.evidence.kind = EvidenceKind::CatalogIso;
        out.evidence.catalog_name = nm;
        out.evidence.iso = *iso;
        return out;
      }
    }
    if (prof.count(3) == 10) {
      if (auto iso = find_isomorphism(s, catalog_lattice("a_pm_i+"))) {
        trace.push_back("m = 3, ten triples: isomorphic to A^(+-i)");
        out.tag = NineLineTag::APlusMinusI;
        out.evidence.kind = EvidenceKind::CatalogIso;
        out.evidence.catalog_name = "a_pm_i+";
        out.evidence.iso = *iso;
        return out;
      }
    }
    trace.push_back("m = 3: no 9_3 or A^(+-i) match");
  }

  if (auto sub = find_maclane_sublattice(s)) {
    trace.push_back("eight lines carry the MacLane lattice");
    out.tag = NineLineTag::ContainsMacLane;
    out.evidence.kind = EvidenceKind::MacLaneSubLattice;
    out.evidence.kept_lines = sub->kept_lines;
    out.evidence.catalog_name = "maclane+";
    out.evidence.iso = sub->iso;
    return out;
  }
  trace.push_back("no MacLane sub-lattice");
  throw Error(Errc::OutsideTheorem, s.str() + " | " + join(trace));
}

bool validate_evidence(const IncidenceStructure& s, const NineLineClass& c) {
  const ClassEvidence& e = c.evidence;
  try {
    switch (e.kind) {
      case EvidenceKind::DeletedLineSimple:
        return c.tag == NineLineTag::IrreducibleModuli && e.deleted_line >= 0 && e.deleted_line < s.n() &&
               s.degree(e.deleted_line) <= 2 && certifies_simple(delete_line(s, e.deleted_line), e.simple);
      case EvidenceKind::DeletedLineMacLane:
        return c.tag == NineLineTag::ContainsMacLane && e.deleted_line >= 0 && e.deleted_line < s.n() &&
               s.degree(e.deleted_line) <= 2 &&
               is_isomorphism(delete_line(s, e.deleted_line), catalog::entry(e.catalog_name).expected_lattice, e.iso);
      case EvidenceKind::SimpleCle3:
        return c.tag == NineLineTag::IrreducibleModuli && certifies_simple(s, e.simple);
      case EvidenceKind::SparseLineAtHighPoint: {
        if (c.tag != NineLineTag::IrreducibleModuli) return false;
        if (e.high_point < 0 || e.high_point >= static_cast<int>(s.multiples().size())) return false;
        const Block& big = s.multiples()[static_cast<std::size_t>(e.high_point)];
        return big.size() >= 5 && in_block(big, e.deleted_line) && s.degree(e.deleted_line) <= 2;
      }
      case EvidenceKind::CatalogIso: {
        const IncidenceStructure target = catalog::entry(e.catalog_name).expected_lattice;
        if (!is_isomorphism(s, target, e.iso)) return false;
        if (e.catalog_name.rfind("fs", 0) == 0) return c.tag == NineLineTag::FalkSturmfels;
        if (e.catalog_name.rfind("a_pm_i", 0) == 0) return c.tag == NineLineTag::APlusMinusI;
        if (e.catalog_name.rfind("nine_three", 0) == 0) return c.tag == NineLineTag::IrreducibleModuli;
        return false;
      }
      case EvidenceKind::MacLaneSubLattice:
        return c.tag == NineLineTag::ContainsMacLane && e.kept_lines.size() == 8 &&
               is_isomorphism(s.restricted(e.kept_lines), catalog::entry(e.catalog_name).expected_lattice, e.iso);
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

}  // namespace arrlab
