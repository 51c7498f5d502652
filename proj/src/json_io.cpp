#include "arrlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace arrlab {

Json to_json(const Arrangement& a) {
  Json lines = Json::array();
  for (const auto& l : a.lines()) {
    lines.push_back({l.coeffs()[0].str(), l.coeffs()[1].str(), l.coeffs()[2].str()});
  }
  return Json{{"field_d", a.field_d()}, {"lines", lines}};
}

Json to_json(const IncidenceStructure& s) {
  Json mult = Json::array();
  for (const auto& b : s.multiples()) {
    Json blk = Json::array();
    for (int x : b) blk.push_back(x + 1);
    mult.push_back(blk);
  }
  return Json{{"n", s.n()}, {"multiples", mult}};
}

Json to_json(const MultiplicityProfile& p) {
  Json counts = Json::object();
  for (auto it = p.counts.rbegin(); it != p.counts.rend(); ++it) counts[std::to_string(it->first)] = it->second;
  return Json{{"n", p.n}, {"counts", counts}, {"m_max", p.m_max}};
}

Json to_json(const Poly& p) {
  Json c = Json::array();
  for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).str());
  return c;
}

Json permutation_json(const Permutation& p) {
  Json out = Json::array();
  for (int x : p) out.push_back(x + 1);
  return out;
}

namespace {

Json slot_json(const PlanSlot& s) {
  Json through = Json::array();
  for (int k : s.through) through.push_back(k);
  return Json{{"line", s.line + 1}, {"kind", std::string(to_string(s.kind))}, {"through", through}, {"params", s.params}};
}

Json simple_json(const SimpleResult& r) {
  Json cover = Json::array();
  for (int x : r.cover) {
    if (x >= 0) cover.push_back(x + 1);
  }
  Json j{{"holds", r.holds}, {"clause", r.clause}, {"cover", cover}};
  if (r.sparse_line >= 0) j["sparse_line"] = r.sparse_line + 1;
  return j;
}

std::string verdict_string(FilterVerdict v) { return std::string(to_string(v)); }

}  // namespace

Json to_json(const ModuliReport& r) {
  Json slots = Json::array();
  for (const auto& s : r.plan.slots) slots.push_back(slot_json(s));
  Json frame = Json::array();
  for (int f : r.plan.frame) frame.push_back(f + 1);
  Json constraints = Json::array();
  for (const auto& c : r.constraints) {
    constraints.push_back({{"line", c.line + 1}, {"multiple", c.multiple}, {"automatic", c.automatic}, {"poly", c.poly.str()}});
  }
  Json params = Json::array();
  for (const auto& v : r.parameter_values) params.push_back(v.str());
  Json reals = Json::array();
  for (const auto& a : r.realizations) reals.push_back(to_json(a));
  Json j{{"status", std::string(to_string(r.status))},
         {"reason", r.reason},
         {"plan", {{"frame", frame}, {"slots", slots}, {"residual_params", r.plan.residual_params},
                   {"constraint_count", r.plan.constraint_count}}},
         {"constraints", constraints},
         {"closure_polynomial", to_json(r.closure_polynomial)},
         {"nondegenerate_closure", to_json(r.nondegenerate_closure)}};
  if (!r.family_constraint.is_zero()) j["family_constraint"] = r.family_constraint.str();
  j["point_count"] = r.point_count;
  j["splitting_field_d"] = r.splitting_field_d;
  j["free_dimension"] = r.free_dimension;
  j["degenerate_roots_rejected"] = r.degenerate_roots_rejected;
  j["parameter_values"] = params;
  Json rejected = Json::array();
  for (const auto& v : r.rejected_parameter_values) rejected.push_back(v.str());
  j["rejected_parameter_values"] = rejected;
  j["realizations"] = reals;
  return j;
}

Json to_json(const NineLineClass& c) {
  const ClassEvidence& e = c.evidence;
  Json ev{{"kind", std::string(to_string(e.kind))}};
  if (e.deleted_line >= 0) ev["deleted_line"] = e.deleted_line + 1;
  if (e.high_point >= 0) ev["high_point"] = e.high_point;
  if (e.kind == EvidenceKind::DeletedLineSimple || e.kind == EvidenceKind::SimpleCle3) ev["simple"] = simple_json(e.simple);
  if (!e.kept_lines.empty()) ev["kept_lines"] = permutation_json(e.kept_lines);
  if (!e.catalog_name.empty()) ev["catalog"] = e.catalog_name;
  if (!e.iso.empty()) ev["iso"] = permutation_json(e.iso);
  return Json{{"class", std::string(to_string(c.tag))}, {"evidence", ev}, {"trace", c.trace}};
}

Json to_json(const CensusResult& r) {
  Json prefix = Json::array();
  for (const auto& b : r.constraints.prefix) {
    Json blk = Json::array();
    for (int x : b) blk.push_back(x + 1);
    prefix.push_back(blk);
  }
  Json structs = Json::array();
  for (const auto& s : r.structures) {
    Json js{{"lattice", to_json(s.lattice)},
            {"simple_c_le_3", s.simple_c_le_3},
            {"catalog_match", s.catalog_match},
            {"as_witness", s.has_as_witness},
            {"maclane_sublattice", s.has_maclane_sublattice},
            {"excluded", s.excluded}};
    if (s.excluded) js["exclusion_reason"] = s.exclusion_reason;
    js["moduli"] = {{"status", std::string(to_string(s.moduli.status))},
                    {"point_count", s.moduli.point_count},
                    {"splitting_field_d", s.moduli.splitting_field_d},
                    {"free_dimension", s.moduli.free_dimension},
                    {"reason", s.moduli.reason}};
    structs.push_back(js);
  }
  Json profiles = Json::array();
  for (const auto& p : r.profile_checks) {
    profiles.push_back({{"profile", to_json(p.profile)},
                        {"pair_count", p.pair_count},
                        {"incidence", p.incidence},
                        {"hirzebruch", verdict_string(p.hirzebruch)},
                        {"survives", p.survives()}});
  }
  Json j{{"census", r.name},
         {"constraints",
          {{"description", r.constraints.description},
           {"n", r.constraints.n},
           {"prefix", prefix},
           {"triple_counts", r.constraints.triple_counts},
           {"quadruples", r.constraints.quadruples},
           {"min_degree", r.constraints.min_degree},
           {"max_degree", r.constraints.max_degree}}},
         {"labeled_leaves", r.labeled_leaves},
         {"structures", structs}};
  if (!profiles.empty()) j["profile_checks"] = profiles;
  j["violations"] = r.violations;
  return j;
}

// ----------------------------------------------------------------- readers

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

QuadExt coeff_from_json(const Json& c) {
  try {
    if (c.is_string()) return QuadExt::parse(c.get<std::string>());
    if (c.is_number_integer()) return QuadExt(Rational(c.get<long>()));
  } catch (const Error& e) {
    bad(std::string("bad coefficient: ") + e.what());
  }
  bad("coefficient must be a string or an integer");
}

}  // namespace

Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array()) bad("arrangement needs a \"lines\" array");
  std::vector<ProjLine> lines;
  for (const auto& l : j["lines"]) {
    if (!l.is_array() || l.size() != 3) bad("each line needs three coefficients");
    Vec3 v{coeff_from_json(l[0]), coeff_from_json(l[1]), coeff_from_json(l[2])};
    if (is_zero(v)) bad("zero line");
    lines.emplace_back(v);
  }
  try {
    if (j.contains("field_d")) {
      if (!j["field_d"].is_number_integer()) bad("field_d must be an integer");
      return Arrangement(std::move(lines), j["field_d"].get<std::int64_t>());
    }
    return Arrangement(std::move(lines));
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    bad(std::string("invalid arrangement: ") + e.what());
  }
}

IncidenceStructure lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) bad("lattice needs an integer \"n\"");
  if (!j.contains("multiples") || !j["multiples"].is_array()) bad("lattice needs a \"multiples\" array");
  const int n = j["n"].get<int>();
  if (n < 0) bad("negative n");
  std::vector<Block> blocks;
  for (const auto& b : j["multiples"]) {
    if (!b.is_array()) bad("each multiple point is a list of line indices");
    Block blk;
    for (const auto& x : b) {
      if (!x.is_number_integer()) bad("line indices are integers");
      blk.push_back(x.get<int>() - 1);
    }
    blocks.push_back(std::move(blk));
  }
  // structural problems (overlaps, range) surface as InconsistentStructure
  return IncidenceStructure(n, std::move(blocks));
}

LoadedInput input_from_json(const Json& j) {
  if (j.is_object() && j.contains("lines")) {
    Arrangement a = arrangement_from_json(j);
    return {incidence_of(a), a};
  }
  if (j.is_object() && j.contains("multiples")) return {lattice_from_json(j), std::nullopt};
  bad("input is neither an arrangement (\"lines\") nor a lattice (\"multiples\")");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace arrlab
