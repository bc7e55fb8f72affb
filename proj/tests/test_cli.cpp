#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reslat/algfile.hpp"
#include "reslat/cli.hpp"
#include "reslat/fixtures.hpp"

using namespace reslat;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_subcommand(args, out, err);
  return {code, out.str(), err.str()};
}

// Per-process scratch directory; tests clean up what they create.
fs::path scratch() {
  fs::path p = fs::temp_directory_path() / "reslat-cli-tests";
  fs::create_directories(p);
  return p;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("examples writes parseable fixture files") {
  fs::path dir = scratch() / "examples";
  Run r = run({"examples", "--out", dir.string()});
  CHECK(r.code == 0);
  for (const char* name : {"ex1.alg", "ex2.alg", "ex3.alg"}) {
    AlgebraFile f = parse_algebra_file(slurp(dir / name));
    CHECK(f.elements.size() >= 2);
    CHECK(f.arrow.has_value());
  }
  AlgebraFile ex2 = parse_algebra_file(slurp(dir / "ex2.alg"));
  ResiduatedLattice six = fixtures::six_element_dnl();
  CHECK(ex2.join == six.lattice.join);
  CHECK(ex2.otimes == six.otimes);
  CHECK(*ex2.arrow == six.arrow);
}

TEST_CASE("parse-render-parse is the identity") {
  fs::path dir = scratch() / "examples";
  run({"examples", "--out", dir.string()});
  for (const char* name : {"ex1.alg", "ex2.alg", "ex3.alg"}) {
    std::string text = slurp(dir / name);
    AlgebraFile f = parse_algebra_file(text);
    CHECK(render_algebra_file(f) == text);
  }
}

TEST_CASE("check reports the six-element algebra's property profile") {
  fs::path dir = scratch() / "examples";
  run({"examples", "--out", dir.string()});
  Run r = run({"check", (dir / "ex2.alg").string()});
  CHECK(r.code == 1);  // prelinearity and divisibility fail
  CHECK(contains(r.out, "FAIL"));
  CHECK(contains(r.out, "prelinearity"));
  CHECK(contains(r.out, "divisibility"));
  CHECK(contains(r.out, "double_negation"));

  Run r3 = run({"check", (dir / "ex3.alg").string()});
  CHECK(r3.code == 1);  // double negation fails on the Goedel chain

  Run r1 = run({"check", (dir / "ex1.alg").string()});
  CHECK(r1.code == 0);  // the MV fixture passes everything
}

TEST_CASE("roundtrip and couple succeed on a DNL algebra") {
  fs::path dir = scratch() / "examples";
  run({"examples", "--out", dir.string()});
  CHECK(run({"roundtrip", (dir / "ex2.alg").string()}).code == 0);
  Run c = run({"couple", (dir / "ex2.alg").string()});
  CHECK(c.code == 0);
  // the emitted coupled file parses and round-trips through the CLI
  CoupledFile cf = parse_coupled_file(c.out.substr(0, c.out.find("algebra ex2")));
  fs::path coupled = write_temp("ex2.cpl", render_coupled_file(cf));
  CHECK(run({"roundtrip", coupled.string()}).code == 0);
  CHECK(run({"decouple", coupled.string()}).code == 0);
  CHECK(run({"untie", coupled.string()}).code == 0);
}

TEST_CASE("couple refuses an algebra without double negation") {
  fs::path dir = scratch() / "examples";
  run({"examples", "--out", dir.string()});
  Run r = run({"couple", (dir / "ex3.alg").string()});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "double_negation"));
}

TEST_CASE("tie prints the second carrier") {
  fs::path dir = scratch() / "examples";
  run({"examples", "--out", dir.string()});
  Run r = run({"tie", (dir / "ex3.alg").string(), "--subuniverse", "0,a,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "B = {0, 1}"));

  Run bad = run({"tie", (dir / "ex2.alg").string(), "--subuniverse", "0,b,1"});
  CHECK(bad.code == 1);
}

TEST_CASE("subuniverses and tieable listings") {
  fs::path dir = scratch() / "examples";
  run({"examples", "--out", dir.string()});
  Run r = run({"subuniverses", (dir / "ex1.alg").string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "{0, 1}\n"));
  CHECK(contains(r.out, "{0, a, na, 1}"));
  CHECK(!contains(r.out, "{0, b, nb, 1}"));
  Run t = run({"tieable", (dir / "ex1.alg").string()});
  CHECK(t.code == 0);
  CHECK(t.out == r.out);  // every subuniverse of an MV fixture is tieable
}

TEST_CASE("parse errors exit 2 and carry a line number") {
  fs::path short_row = write_temp("short_row.alg",
                                  "algebra bad\n"
                                  "elements 0 1\n"
                                  "bottom 0\n"
                                  "top 1\n"
                                  "table join\n"
                                  "0 1\n"
                                  "1\n"
                                  "end\n");
  Run r = run({"check", short_row.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 7"));
  CHECK(contains(r.err, "expected 2 entries"));

  fs::path unknown = write_temp("unknown.alg",
                                "algebra bad\n"
                                "elements 0 1\n"
                                "bottom 0\n"
                                "top 1\n"
                                "table join\n"
                                "0 1\n"
                                "1 q\n"
                                "end\n");
  r = run({"check", unknown.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 7"));
  CHECK(contains(r.err, "unknown token 'q'"));

  fs::path no_end = write_temp("no_end.alg",
                               "algebra bad\n"
                               "elements 0 1\n"
                               "bottom 0\n"
                               "top 1\n"
                               "table join\n"
                               "0 1\n"
                               "1 1\n");
  r = run({"check", no_end.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "missing 'end'"));

  fs::path dup = write_temp("dup.alg",
                            "algebra bad\n"
                            "elements 0 1\n"
                            "bottom 0\n"
                            "top 1\n"
                            "table join\n"
                            "0 1\n"
                            "1 1\n"
                            "table join\n"
                            "0 1\n"
                            "1 1\n"
                            "end\n");
  r = run({"check", dup.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "duplicate table 'join'"));

  fs::path missing = write_temp("missing.alg",
                                "algebra bad\n"
                                "elements 0 1\n"
                                "bottom 0\n"
                                "top 1\n"
                                "table join\n"
                                "0 1\n"
                                "1 1\n"
                                "end\n");
  r = run({"check", missing.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "missing required table 'meet'"));
}

TEST_CASE("axiom violations exit 1 with a structured report") {
  // join table is not commutative: (0 v 1, 1 v 0) disagree
  fs::path bad = write_temp("noncomm.alg",
                            "algebra bad\n"
                            "elements 0 1\n"
                            "bottom 0\n"
                            "top 1\n"
                            "table join\n"
                            "0 1\n"
                            "0 1\n"
                            "table meet\n"
                            "0 0\n"
                            "0 1\n"
                            "table otimes\n"
                            "0 0\n"
                            "0 1\n"
                            "end\n");
  Run r = run({"check", bad.string()});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL"));
}

TEST_CASE("json output is deterministic and structured") {
  fs::path dir = scratch() / "examples";
  run({"examples", "--out", dir.string()});
  Run a = run({"check", (dir / "ex2.alg").string(), "--json"});
  Run b = run({"check", (dir / "ex2.alg").string(), "--json"});
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["algebra"] == "ex2");
  CHECK(doc.contains("version"));
  CHECK(doc["checks"].is_array());
  CHECK(doc["summary"]["failed"].get<int>() >= 2);
  bool saw_prelinearity = false;
  for (const auto& c : doc["checks"])
    if (c["name"] == "prelinearity") {
      saw_prelinearity = true;
      CHECK(c["status"] == "fail");
      // first failing pair in scan order
      CHECK(c["witnesses"][0]["x"] == "b");
      CHECK(c["witnesses"][0]["y"] == "c");
    }
  CHECK(saw_prelinearity);
}

TEST_CASE("a printed derived table with one bad entry is pinpointed") {
  ResiduatedLattice six = fixtures::six_element_dnl();
  AlgebraFile f = to_algebra_file(six, "ex2printed");
  f.oplus = fixtures::six_element_printed_oplus();
  fs::path p = write_temp("ex2printed.alg", render_algebra_file(f));
  Run r = run({"check", p.string(), "--json"});
  CHECK(r.code == 1);
  auto doc = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& c : doc["checks"])
    if (c["name"] == "oplus_matches_derivation") {
      found = true;
      CHECK(c["status"] == "fail");
      REQUIRE(c["witnesses"].size() == 1);  // exactly one divergent entry
      CHECK(c["witnesses"][0]["x"] == "b");
      CHECK(c["witnesses"][0]["y"] == "c");
      CHECK(c["witnesses"][0]["note"] == "given c, derived 1");
    }
  CHECK(found);

  // the same file in text mode names the divergence
  Run t = run({"check", p.string()});
  CHECK(t.code == 1);
  CHECK(contains(t.out, "given c, derived 1"));
}

TEST_CASE("a correct printed derived table passes") {
  ResiduatedLattice mv = fixtures::mv_basic6();
  AlgebraFile f = to_algebra_file(mv, "mv");
  f.oplus = fixtures::mv_basic6_printed_oplus();
  fs::path p = write_temp("mv_oplus.alg", render_algebra_file(f));
  CHECK(run({"check", p.string()}).code == 0);
}

TEST_CASE("derive prints the residuum and derived operations") {
  // strip the arrow so derive has to compute it
  ResiduatedLattice g3 = fixtures::godel_chain3();
  AlgebraFile f = to_algebra_file(g3, "g3");
  f.arrow.reset();
  fs::path p = write_temp("g3_noarrow.alg", render_algebra_file(f));
  Run r = run({"derive", p.string(), "--json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["arrow"][1][0] == "0");  // a -> 0 = 0 in the Goedel chain
  CHECK(doc["neg"] == nlohmann::json({"1", "0", "0"}));
}

TEST_CASE("enumerate exports a corpus with a manifest") {
  fs::path dir = scratch() / "corpus3";
  fs::remove_all(dir);
  Run r = run({"enumerate", "--max-size", "3", "--out", dir.string()});
  CHECK(r.code == 0);
  auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest["count"] == 3);
  CHECK(manifest["tallies"]["dnl"] == 2);
  int alg_files = 0;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".alg") {
      ++alg_files;
      // each exported algebra satisfies the defining axioms; only the
      // optional property checks may fail
      Run c = run({"check", e.path().string(), "--json"});
      auto doc = nlohmann::json::parse(c.out);
      for (const auto& chk : doc["checks"])
        if (chk["status"] == "fail") {
          std::string name = chk["name"];
          CHECK((name == "double_negation" || name == "prelinearity" ||
                 name == "divisibility" || name == "mv"));
        }
    }
  CHECK(alg_files == 3);
}

TEST_CASE("enumerate output is byte-identical across thread counts") {
  fs::path d1 = scratch() / "corpus4-t1";
  fs::path d4 = scratch() / "corpus4-t4";
  fs::remove_all(d1);
  fs::remove_all(d4);
  CHECK(run({"enumerate", "--max-size", "4", "--out", d1.string(), "--threads", "1"}).code == 0);
  CHECK(run({"enumerate", "--max-size", "4", "--out", d4.string(), "--threads", "4"}).code == 0);
  CHECK(slurp(d1 / "manifest.json") == slurp(d4 / "manifest.json"));
  for (const auto& e : fs::directory_iterator(d1))
    CHECK(slurp(e.path()) == slurp(d4 / e.path().filename()));
}

TEST_CASE("verify-corpus is clean and deterministic") {
  Run a = run({"verify-corpus", "--max-size", "4", "--threads", "1", "--json"});
  Run b = run({"verify-corpus", "--max-size", "4", "--threads", "4", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"tie"}).code == 2);                      // missing required options
  CHECK(run({"frobnicate", "x.alg"}).code == 2);      // unknown subcommand
  CHECK(run({"check", "/no/such/file.alg"}).code == 2);
}
