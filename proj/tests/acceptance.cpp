// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses the public library
// surface (plus the CLI entry point for the determinism criterion).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "reslat/cli.hpp"
#include "reslat/coupled.hpp"
#include "reslat/fixtures.hpp"
#include "reslat/render.hpp"
#include "reslat/search.hpp"
#include "reslat/subuniverse.hpp"

using namespace reslat;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool first_fail_witness(const CheckReport& r, const std::string& check, int x,
                        int y) {
  const Check* c = r.find(check);
  if (!c || c->status != Status::Fail || c->witnesses.empty()) return false;
  const auto& p = c->witnesses.front().parts;
  return p.size() == 2 && p[0].second == x && p[1].second == y;
}

// Unpruned brute force over all commutative unit-top tables; filters by
// associativity and full adjointness. Independent of enumerate_residuated.
int brute_force_residuated_count(const BoundedLattice& lat) {
  const int n = lat.size();
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (i != lat.top && j != lat.top) cells.push_back({i, j});
  int count = 0;
  std::vector<int> vals(cells.size(), 0);
  while (true) {
    BinOpTable t(n);
    for (int i = 0; i < n; ++i) {
      t.at(i, lat.top) = i;
      t.at(lat.top, i) = i;
    }
    for (size_t k = 0; k < cells.size(); ++k) {
      t.at(cells[k].first, cells[k].second) = vals[k];
      t.at(cells[k].second, cells[k].first) = vals[k];
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (t(t(x, y), z) != t(x, t(y, z))) ok = false;
    if (ok) {
      BinOpTable arrow(n);
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) {
          int best = -1;
          for (int x = 0; x < n; ++x)
            if (lat.leq(t(x, y), z) && (best < 0 || lat.leq(best, x))) best = x;
          if (best < 0) {
            ok = false;
            break;
          }
          arrow.at(y, z) = best;
        }
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
          for (int z = 0; z < n && ok; ++z)
            if (lat.leq(x, arrow(y, z)) != lat.leq(t(x, y), z)) ok = false;
    }
    if (ok) ++count;
    size_t k = 0;
    while (k < vals.size() && vals[k] == n - 1) vals[k++] = 0;
    if (k == vals.size()) break;
    ++vals[k];
  }
  return count;
}

int run_cli(const std::vector<std::string>& args, std::string* out_text) {
  std::ostringstream out, err;
  int rc = run_subcommand(args, out, err);
  *out_text = out.str();
  return rc;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Six-element fixture: defining checks and DNL pass; prelinearity fails
//    first at (b, c); divisibility fails first at (b, a); derived neg and
//    arrow match the printed tables entry for entry; all under 1 s.
void criterion1() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    ResiduatedLattice six = fixtures::six_element_dnl();
    if (!check_adjointness(six).ok()) ok = false, detail = "adjointness";
    if (!check_double_negation(six).ok()) ok = false, detail = "dnl";
    if (!first_fail_witness(check_prelinearity(six), "prelinearity", 2, 3))
      ok = false, detail = "prelinearity witness";
    if (!first_fail_witness(check_divisibility(six), "divisibility", 2, 1))
      ok = false, detail = "divisibility witness";
    if (six.neg != fixtures::six_element_printed_neg())
      ok = false, detail = "neg table";
    BinOpTable derived = derive_arrow(six.lattice, six.otimes);
    if (derived != six.arrow) ok = false, detail = "arrow table";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double dt = seconds_since(t0);
  if (dt >= 1.0) ok = false, detail = "too slow";
  report(1, ok,
         "six-element fixture: property profile, witnesses and derived tables",
         detail);
}

// 2. The printed strong-disjunction table diverges from its derivation in
//    exactly one entry, (b, c): printed c, derived 1.
void criterion2() {
  bool ok = true;
  std::string detail;
  try {
    ResiduatedLattice six = fixtures::six_element_dnl();
    BinOpTable printed = fixtures::six_element_printed_oplus();
    int mismatches = 0;
    for (int x = 0; x < six.size(); ++x)
      for (int y = 0; y < six.size(); ++y)
        if (printed(x, y) != six.oplus(x, y)) {
          ++mismatches;
          if (x != 2 || y != 3) ok = false, detail = "wrong location";
          if (printed(x, y) != 3 || six.oplus(x, y) != 5)
            ok = false, detail = "wrong values";
        }
    if (mismatches != 1) ok = false, detail = "mismatch count";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(2, ok, "printed oplus table diverges only at (b, c)", detail);
}

// 3. Coupling: couple() of each DNL fixture passes every general-coupled
//    check, and decouple(couple(.)) reproduces the input exactly; under 1 s.
void criterion3() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    for (const ResiduatedLattice& rl :
         {fixtures::six_element_dnl(), fixtures::mv_basic6()}) {
      CoupledStructure c = couple(rl);
      if (!check_general_coupled(c).ok()) ok = false, detail = "coupled checks";
      if (!(decouple(c) == rl)) ok = false, detail = "decouple(couple)";
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double dt = seconds_since(t0);
  if (dt >= 1.0) ok = false, detail = "too slow";
  report(3, ok, "couple passes all checks and decouple inverts it", detail);
}

// 4. couple(decouple(.)) reproduces the coupled structure exactly.
void criterion4() {
  bool ok = true;
  std::string detail;
  try {
    if (!roundtrip_coupled(couple(fixtures::six_element_dnl())).ok())
      ok = false, detail = "six-element";
    if (!roundtrip_coupled(couple(fixtures::lukasiewicz_chain3())).ok())
      ok = false, detail = "three-element chain";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(4, ok, "coupled round trip on both coupled fixtures", detail);
}

// 5. Tying: the three-element chain ties to B = {0, 1} with oplus = join on
//    B; the MV fixture ties on {0, a, na, 1}; both untie to residuated DNL
//    algebras whose negation is the restricted alpha.
void criterion5() {
  bool ok = true;
  std::string detail;
  try {
    ResiduatedLattice g3 = fixtures::godel_chain3();
    CoupledStructure y3 = reslat::tie(g3, {0, 1, 2});
    if (y3.second.carrier != std::vector<ElementId>{0, 2})
      ok = false, detail = "B carrier";
    for (int x : y3.second.carrier)
      for (int z : y3.second.carrier)
        if (y3.second.mul(x, z) != y3.first.add(x, z))
          ok = false, detail = "oplus|B != join|B";
    if (!check_tied(y3).ok()) ok = false, detail = "tied checks (chain)";

    ResiduatedLattice mv = fixtures::mv_basic6();
    CoupledStructure ymv = reslat::tie(mv, {0, 1, 2, 5});
    if (!check_tied(ymv).ok()) ok = false, detail = "tied checks (mv)";

    for (const CoupledStructure& y : {y3, ymv}) {
      ResiduatedLattice r = untie(y);
      if (!check_adjointness(r).ok()) ok = false, detail = "untie adjointness";
      if (!has_double_negation(r)) ok = false, detail = "untie dnl";
      const auto& b = y.second.carrier;
      for (size_t i = 0; i < b.size(); ++i) {
        int img = y.alpha[b[i]];
        int j = -1;
        for (size_t k = 0; k < b.size(); ++k)
          if (b[k] == img) j = static_cast<int>(k);
        if (j < 0 || r.neg[i] != j) ok = false, detail = "neg != alpha";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(5, ok, "tie and untie on the chain and MV fixtures", detail);
}

// 6. Every residuated structure on every bounded lattice of size <= 5
//    passes the identity suite, and every DNL member passes both round
//    trips; zero failures, within 5 minutes.
void criterion6() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    Corpus corpus = build_corpus(5, 4);
    CorpusTallies tallies;
    CheckReport r = verify_corpus(corpus, &tallies, 4);
    if (!r.ok()) {
      ok = false;
      for (const auto& c : r.checks)
        if (c.status == Status::Fail) {
          detail = c.name;
          break;
        }
    }
    if (tallies.total != static_cast<int>(corpus.entries.size()))
      ok = false, detail = "tally mismatch";
    if (corpus.entries.empty()) ok = false, detail = "empty corpus";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double dt = seconds_since(t0);
  if (dt > 300.0) ok = false, detail = "too slow";
  report(6, ok, "corpus through size 5 verifies with zero failures", detail);
}

// 7. Structure counts on the smallest lattices, cross-checked against an
//    independent unpruned brute force: chain2 -> 1, chain3 -> 2,
//    diamond -> 1.
void criterion7() {
  bool ok = true;
  std::string detail;
  try {
    BoundedLattice chain2 = fixtures::boolean_chain2().lattice;
    BoundedLattice chain3 = fixtures::godel_chain3().lattice;
    BoundedLattice diamond;
    bool have_diamond = false;
    for (const auto& lat : enumerate_bounded_lattices(4)) {
      bool is_chain = true;
      for (int a = 0; a < 4 && is_chain; ++a)
        for (int b = 0; b < 4 && is_chain; ++b)
          if (!lat.leq(a, b) && !lat.leq(b, a)) is_chain = false;
      if (!is_chain) {
        diamond = lat;
        have_diamond = true;
      }
    }
    if (!have_diamond) ok = false, detail = "no diamond";
    const std::pair<const BoundedLattice*, int> expected[] = {
        {&chain2, 1}, {&chain3, 2}, {&diamond, 1}};
    for (auto [lat, n] : expected) {
      int fast = static_cast<int>(enumerate_residuated(*lat).size());
      int slow = brute_force_residuated_count(*lat);
      if (fast != n || slow != n) {
        ok = false;
        detail = "got " + std::to_string(fast) + "/" + std::to_string(slow) +
                 " expected " + std::to_string(n);
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(7, ok, "residuated structure counts match the brute-force oracle",
         detail);
}

// 8. enumerate and verify-corpus produce byte-identical output regardless
//    of the parallelism degree.
void criterion8() {
  bool ok = true;
  std::string detail;
  try {
    fs::path base = fs::temp_directory_path() / "reslat-acceptance";
    fs::remove_all(base);
    fs::path d1 = base / "t1", d4 = base / "t4";
    std::string o1, o4;
    if (run_cli({"enumerate", "--max-size", "4", "--out", d1.string(),
                 "--threads", "1"},
                &o1) != 0)
      ok = false, detail = "enumerate t1 failed";
    if (run_cli({"enumerate", "--max-size", "4", "--out", d4.string(),
                 "--threads", "4"},
                &o4) != 0)
      ok = false, detail = "enumerate t4 failed";
    if (ok) {
      for (const auto& e : fs::directory_iterator(d1))
        if (slurp(e.path()) != slurp(d4 / e.path().filename()))
          ok = false, detail = "enumerate output differs";
      std::string v1, v4;
      int r1 = run_cli({"verify-corpus", "--max-size", "4", "--threads", "1",
                        "--json"},
                       &v1);
      int r4 = run_cli({"verify-corpus", "--max-size", "4", "--threads", "4",
                        "--json"},
                       &v4);
      if (r1 != 0 || r4 != 0) ok = false, detail = "verify-corpus failed";
      if (v1 != v4) ok = false, detail = "verify-corpus output differs";
    }
    fs::remove_all(base);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(8, ok, "byte-identical output across thread counts", detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
