// arrlab: command-line front end.
//
// Exit codes: 0 success, 1 input error, 2 consistency or theorem violation,
// 3 negative answer (no isomorphism, infeasible moduli).

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arrlab/catalog.hpp"
#include "arrlab/census.hpp"
#include "arrlab/classify.hpp"
#include "arrlab/json_io.hpp"
#include "arrlab/moduli.hpp"
#include "arrlab/verify.hpp"

using namespace arrlab;

namespace {

constexpr int kOk = 0;
constexpr int kInput = 1;
constexpr int kViolation = 2;
constexpr int kNegative = 3;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::InconsistentStructure:
    case Errc::ConsistencyViolation:
    case Errc::OutsideTheorem:
      return kViolation;
    default:
      return kInput;
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

LoadedInput load(const std::string& path) { return input_from_json(parse_json(read_text_file(path))); }

std::string text_entry(const catalog::CatalogEntry& e) {
  std::ostringstream os;
  os << e.name << "  (field d = " << e.arrangement.field_d() << ")\n" << e.notes << "\n";
  for (std::size_t i = 0; i < e.arrangement.size(); ++i) {
    os << "  " << i + 1 << "  " << (i < e.line_labels.size() ? e.line_labels[i] : "") << "  " << e.arrangement.line(i).str()
       << "\n";
  }
  os << "lattice: " << e.expected_lattice.str() << "\n";
  return os.str();
}

int cmd_catalog_list(const std::string& format) {
  if (format == "json") {
    emit(Json(catalog::names()));
  } else {
    for (const auto& n : catalog::names()) std::cout << n << "\n";
  }
  return kOk;
}

int cmd_catalog_show(const std::string& name, const std::string& format) {
  auto e = catalog::entry(name);
  if (format == "text") {
    std::cout << text_entry(e);
    return kOk;
  }
  emit(Json{{"name", e.name},
            {"notes", e.notes},
            {"line_labels", e.line_labels},
            {"arrangement", to_json(e.arrangement)},
            {"lattice", to_json(e.expected_lattice)}});
  return kOk;
}

int cmd_incidence(const std::string& path) {
  Arrangement a = arrangement_from_json(parse_json(read_text_file(path)));
  IncidenceStructure s = incidence_of(a);
  MultiplicityProfile p = profile_of(s);
  emit(Json{{"lattice", to_json(s)}, {"profile", to_json(p)}, {"hirzebruch", std::string(to_string(hirzebruch_filter(p)))}});
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
  auto sa = load(a).lattice;
  auto sb = load(b).lattice;
  auto iso = find_isomorphism(sa, sb);
  if (!iso) {
    std::cout << "none\n";
    return kNegative;
  }
  std::cout << permutation_json(*iso).dump() << "\n";
  return kOk;
}

int cmd_classify(const std::string& path) {
  auto in = load(path);
  emit(to_json(classify_nine(in.lattice)));
  return kOk;
}

int cmd_moduli(const std::string& path, int frame_rank) {
  auto in = load(path);
  ModuliReport r = solve_moduli(in.lattice, PlanOptions{frame_rank});
  emit(to_json(r));
  return r.status == ModuliStatus::Infeasible ? kNegative : kOk;
}

int cmd_census(const std::string& which) {
  const int threads = census_threads();
  CensusResult r;
  if (which == "nine_three") r = enumerate_933(threads);
  else if (which == "ten_triples") r = enumerate_ten_triples(threads);
  else if (which == "quadruple") r = enumerate_quadruple_case(threads);
  else r = check_triple_bound(threads);
  emit(to_json(r));
  return r.violations.empty() ? kOk : kViolation;
}

int cmd_verify(bool skip_slow, const std::string& format, bool timings) {
  VerifyOptions opts;
  opts.skip_slow = skip_slow;
  opts.threads = census_threads();
  VerifyReport r = run_verify(opts);
  if (format == "json") {
    emit(to_json(r, timings));
  } else {
    std::cout << to_text(r, timings);
  }
  return r.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact line-arrangement lattices, moduli and nine-line classification"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string name, file_a, file_b, census_name, skip;
  int frame_rank = 0;
  bool timings = false;

  auto* cat = app.add_subcommand("catalog", "named arrangements");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entry names");
  cat_list->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  auto* cat_show = cat->add_subcommand("show", "print one entry");
  cat_show->add_option("name", name)->required();
  cat_show->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* inc = app.add_subcommand("incidence", "lattice, profile and Hirzebruch verdict of an arrangement file");
  inc->add_option("file", file_a)->required();

  auto* iso = app.add_subcommand("iso", "lattice isomorphism between two lattice or arrangement files");
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();

  auto* cls = app.add_subcommand("classify", "classify a nine-line lattice");
  cls->add_option("file", file_a)->required();

  auto* mod = app.add_subcommand("moduli", "solve the moduli problem of a lattice");
  mod->add_option("file", file_a)->required();
  mod->add_option("--frame-rank", frame_rank, "use the k-th ranked frame")->check(CLI::NonNegativeNumber);

  auto* cen = app.add_subcommand("census", "run one of the constrained enumerations");
  cen->add_option("which", census_name)
      ->required()
      ->check(CLI::IsMember({"nine_three", "ten_triples", "quadruple", "triple_bound"}));

  std::string vformat = "text";
  auto* ver = app.add_subcommand("verify-paper", "run every reproducible check");
  ver->add_option("--skip", skip, "skip a class of checks")->check(CLI::IsMember({"slow"}));
  ver->add_option("--format", vformat)->check(CLI::IsMember({"json", "text"}));
  ver->add_flag("--timings", timings, "include elapsed times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (cat->parsed()) {
      if (cat_list->parsed()) return cmd_catalog_list(format == "json" && cat_list->count("--format") == 0 ? "text" : format);
      return cmd_catalog_show(name, format);
    }
    if (inc->parsed()) return cmd_incidence(file_a);
    if (iso->parsed()) return cmd_iso(file_a, file_b);
    if (cls->parsed()) return cmd_classify(file_a);
    if (mod->parsed()) return cmd_moduli(file_a, frame_rank);
    if (cen->parsed()) return cmd_census(census_name);
    if (ver->parsed()) return cmd_verify(skip == "slow", vformat, timings);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
