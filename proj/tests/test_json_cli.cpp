#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "arrlab/catalog.hpp"
#include "arrlab/json_io.hpp"
#include "arrlab/moduli.hpp"
#include "arrlab/verify.hpp"

using namespace arrlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ARRLAB_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / "arrlab_cli_test";
  fs::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string write_entry(const std::string& name, bool as_lattice) {
  auto e = catalog::entry(name);
  return write(name + (as_lattice ? ".lat.json" : ".arr.json"),
               (as_lattice ? to_json(e.expected_lattice) : to_json(e.arrangement)).dump());
}

}  // namespace

TEST_SUITE("json_cli") {

TEST_CASE("arrangements and lattices round-trip through JSON") {
  for (const auto& name : catalog::names()) {
    auto e = catalog::entry(name);
    CAPTURE(name);
    CHECK(arrangement_from_json(parse_json(to_json(e.arrangement).dump())) == e.arrangement);
    CHECK(lattice_from_json(parse_json(to_json(e.expected_lattice).dump())) == e.expected_lattice);
  }
  auto j = to_json(catalog::entry("maclane+").expected_lattice);
  CHECK(j["multiples"][0][0] == 1);  // 1-based on the wire
}

TEST_CASE("reader errors are ParseError") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code_of([] { parse_json("{\"lines\": [}"); }) == Errc::ParseError);
  CHECK(code_of([] { arrangement_from_json(parse_json(R"({"lines": [[1, 0]]})")); }) == Errc::ParseError);
  CHECK(code_of([] { arrangement_from_json(parse_json(R"({"lines": [["x", 0, 1]]})")); }) == Errc::ParseError);
  CHECK(code_of([] { arrangement_from_json(parse_json(R"({"lines": [[0, 0, 0]]})")); }) == Errc::ParseError);
  CHECK(code_of([] { input_from_json(parse_json(R"({"foo": 1})")); }) == Errc::ParseError);
  CHECK(code_of([] { lattice_from_json(parse_json(R"({"n": 4, "multiples": [[1, 2, 3], [1, 2, 4]]})")); }) ==
        Errc::InconsistentStructure);
}

TEST_CASE("moduli reports serialize their status and points") {
  Json j = to_json(solve_moduli(catalog::entry("fs+").expected_lattice));
  CHECK(j["status"] == "points");
  CHECK(j["point_count"] == 2);
  CHECK(j["splitting_field_d"] == 5);
  CHECK(j["realizations"].size() == 2);
}

TEST_CASE("catalog subcommands") {
  Run list = run("catalog list");
  CHECK(list.code == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 11);
  CHECK(run("catalog list --format json").code == 0);
  Run show = run("catalog show fs+");
  CHECK(show.code == 0);
  auto j = parse_json(show.out);
  CHECK(j["name"] == "fs+");
  CHECK(arrangement_from_json(j["arrangement"]) == catalog::entry("fs+").arrangement);
  CHECK(run("catalog show nosuch").code == 1);
  CHECK(run("catalog show fs+ --format text").code == 0);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("incidence subcommand") {
  Run r = run("incidence " + write_entry("fs+", false));
  REQUIRE(r.code == 0);
  auto j = parse_json(r.out);
  CHECK(j["profile"]["counts"]["4"] == 1);
  CHECK(j["profile"]["counts"]["3"] == 8);
  CHECK(j["profile"]["counts"]["2"] == 6);
  CHECK(j["hirzebruch"] == "pass");

  Run two = run("incidence " + write("two.json", R"({"lines": [[1, 0, 0], [0, 1, 0]]})"));
  REQUIRE(two.code == 0);
  CHECK(parse_json(two.out)["lattice"]["multiples"].empty());

  CHECK(run("incidence " + write("bad.json", "{\"lines\": ")).code == 1);
  CHECK(run("incidence " + (scratch() / "missing.json").string()).code == 1);
  CHECK(run("incidence " + write("dup.json", R"({"lines": [[1, 0, 0], [2, 0, 0]]})")).code == 1);
}

TEST_CASE("iso subcommand") {
  Run yes = run("iso " + write_entry("maclane+", true) + " " + write_entry("maclane-", false));
  CHECK(yes.code == 0);
  CHECK(parse_json(yes.out).size() == 8);
  Run no = run("iso " + write_entry("fs+", true) + " " + write_entry("maclane+", true));
  CHECK(no.code == 3);
  CHECK(no.out == "none\n");
  CHECK(run("iso " + write("overlap.json", R"({"n": 4, "multiples": [[1, 2, 3], [1, 2, 4]]})") + " " +
            write_entry("fs+", true))
            .code == 2);
}

TEST_CASE("classify and moduli subcommands") {
  Run c = run("classify " + write_entry("a_pm_i-", false));
  REQUIRE(c.code == 0);
  CHECK(parse_json(c.out)["class"] == "APlusMinusI");
  CHECK(run("classify " + write_entry("maclane+", true)).code == 1);

  Run m = run("moduli " + write_entry("maclane+", true));
  REQUIRE(m.code == 0);
  CHECK(parse_json(m.out)["splitting_field_d"] == -3);
  CHECK(run("moduli " + write_entry("maclane+", true) + " --frame-rank 3").code == 0);

  const std::string degenerate = write("degenerate.json", R"({"n": 10, "multiples": [[1,2,3,4,10],[1,6,7],[2,5,8],
    [2,6,9],[3,6,8],[3,7,9],[4,5,7],[4,8,9],[5,6,10],[7,8,10]]})");
  Run inf = run("moduli " + degenerate);
  CHECK(inf.code == 3);
  CHECK(parse_json(inf.out)["status"] == "infeasible");
}

TEST_CASE("output is deterministic") {
  const std::string f = write_entry("ext_fs+", true);
  CHECK(run("moduli " + f).out == run("moduli " + f).out);
  CHECK(run("census ten_triples").out == run("census ten_triples").out);
  CHECK(run("verify-paper --skip slow --format json").out == run("verify-paper --skip slow --format json").out);
}

TEST_CASE("verify-paper") {
  Run fast = run("verify-paper --skip slow --format json");
  CHECK(fast.code == 0);
  auto j = parse_json(fast.out);
  int skipped = 0;
  for (const auto& c : j["checks"]) {
    const std::string name = c["name"];
    if (name.rfind("census.", 0) == 0) {
      CHECK(c["status"] == "skipped");
      ++skipped;
    } else {
      CHECK(c["status"] == "pass");
    }
    CHECK_FALSE(c.contains("seconds"));
  }
  CHECK(skipped == 4);
  CHECK(parse_json(run("verify-paper --skip slow --format json --timings").out)["checks"][0].contains("seconds"));
}

TEST_CASE("a tampered catalog surfaces as a failed check") {
  VerifyOptions opts;
  opts.skip_slow = true;
  opts.catalog = [](const std::string& name) {
    auto e = catalog::entry(name);
    if (name == "fs+") {
      std::vector<ProjLine> lines = e.arrangement.lines();
      lines[8] = ProjLine(1, 2, 3);
      e.arrangement = Arrangement(lines, 5);
    }
    return e;
  };
  VerifyReport r = run_verify(opts);
  CHECK_FALSE(r.ok());
  bool cited = false;
  for (const auto& c : r.checks) {
    if (c.status != CheckStatus::Fail) continue;
    CHECK_FALSE(c.citation.empty());
    cited |= c.name == "catalog.fs_incidence";
  }
  CHECK(cited);
  CHECK(to_text(r).find("[fail]") != std::string::npos);
}

}  // TEST_SUITE
