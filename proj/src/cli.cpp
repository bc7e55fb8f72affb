#include "reslat/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "reslat/algfile.hpp"
#include "reslat/driver.hpp"
#include "reslat/fixtures.hpp"
#include "reslat/render.hpp"
#include "reslat/search.hpp"
#include "reslat/subuniverse.hpp"

#include <json.hpp>

namespace reslat {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write file '" + path.string() + "'");
  out << text;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<ElementId> tokens_to_ids(const std::vector<std::string>& toks,
                                     const std::vector<std::string>& elements) {
  std::vector<ElementId> ids;
  for (const auto& t : toks) {
    auto it = std::find(elements.begin(), elements.end(), t);
    if (it == elements.end())
      throw StructuralError("unknown element token '" + t + "'");
    ids.push_back(static_cast<int>(it - elements.begin()));
  }
  return ids;
}

std::string set_text(const std::vector<ElementId>& s,
                     const std::vector<std::string>& elements) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += elements[s[i]];
  }
  return out + "}";
}

int emit_report(std::ostream& out, const std::string& name,
                const CheckReport& report, const std::vector<std::string>& tokens,
                const RenderOptions& opt) {
  out << (opt.json ? render_report_json(name, report, tokens, opt)
                   : render_report_text(name, report, tokens, opt));
  return report.ok() ? 0 : 1;
}

// Rebuilds a residuated lattice from a file, emitting the failing report
// itself when the defining axioms do not hold.
std::optional<ResiduatedLattice> load_or_report(const AlgebraFile& f,
                                                std::ostream& out,
                                                const RenderOptions& opt,
                                                int* exit_code) {
  auto lat = build_lattice(f.elements, f.join, f.meet, f.bottom, f.top);
  CheckReport report = lat.report;
  if (lat.ok()) {
    auto rl = build_residuated(*lat.value, f.otimes, f.arrow);
    report.merge(rl.report);
    if (rl.ok()) return std::move(*rl.value);
  }
  *exit_code = emit_report(out, f.name, report, f.elements, opt);
  if (*exit_code == 0) *exit_code = 1;
  return std::nullopt;
}

nlohmann::ordered_json table_json(const BinOpTable& t,
                                  const std::vector<std::string>& tokens) {
  auto rows = nlohmann::ordered_json::array();
  for (int r = 0; r < t.size(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < t.size(); ++c) row.push_back(tokens[t(r, c)]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int run_subcommand(const std::vector<std::string>& argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"finite residuated lattices, coupled semirings and their constructions"};
  app.require_subcommand(1);

  std::string file, subuniverse_arg, out_dir;
  bool json = false;
  int max_witnesses = 5;
  int max_size = 5;
  int threads = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "emit a JSON report");
    sub->add_option("--witnesses", max_witnesses, "max witnesses shown per check");
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "input file")->required();
  };

  CLI::App* c_check = app.add_subcommand("check", "run the full axiom and property suite");
  add_file(c_check); add_common(c_check);
  CLI::App* c_derive = app.add_subcommand("derive", "derive the residuum and negation operations");
  add_file(c_derive); add_common(c_derive);
  CLI::App* c_couple = app.add_subcommand("couple", "build the general coupled semiring of a DNL algebra");
  add_file(c_couple); add_common(c_couple);
  CLI::App* c_decouple = app.add_subcommand("decouple", "rebuild the residuated lattice of a coupled structure");
  add_file(c_decouple); add_common(c_decouple);
  CLI::App* c_round = app.add_subcommand("roundtrip", "verify the coupling round trip");
  add_file(c_round); add_common(c_round);
  CLI::App* c_tie = app.add_subcommand("tie", "build the tied semiring of a subuniverse");
  add_file(c_tie); add_common(c_tie);
  c_tie->add_option("--subuniverse", subuniverse_arg, "comma-separated element tokens")->required();
  CLI::App* c_untie = app.add_subcommand("untie", "rebuild the residuated lattice on the second carrier");
  add_file(c_untie); add_common(c_untie);
  CLI::App* c_subs = app.add_subcommand("subuniverses", "list all subuniverses");
  add_file(c_subs); add_common(c_subs);
  c_subs->add_option("--max-size", max_size, "carrier size cap")->default_val(8);
  CLI::App* c_tieable = app.add_subcommand("tieable", "list subuniverses usable for tying");
  add_file(c_tieable); add_common(c_tieable);
  c_tieable->add_option("--max-size", max_size, "carrier size cap")->default_val(8);
  CLI::App* c_enum = app.add_subcommand("enumerate", "export the corpus of small algebras");
  c_enum->add_option("--max-size", max_size, "largest carrier size");
  c_enum->add_option("--out", out_dir, "output directory")->required();
  c_enum->add_option("--threads", threads, "worker threads");
  CLI::App* c_verify = app.add_subcommand("verify-corpus", "verify the identity and round-trip suites over the corpus");
  add_common(c_verify);
  c_verify->add_option("--max-size", max_size, "largest carrier size");
  c_verify->add_option("--threads", threads, "worker threads");
  CLI::App* c_examples = app.add_subcommand("examples", "write the embedded fixture files");
  c_examples->add_option("--out", out_dir, "output directory")->required();

  // CLI11 wants mutable argc/argv in reverse order.
  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  RenderOptions opt{json, max_witnesses};

  try {
    if (app.got_subcommand(c_check)) {
      AlgebraFile f = parse_algebra_file(read_file(file));
      CheckOutcome res = run_full_check(f);
      return emit_report(out, f.name, res.report, f.elements, opt);
    }

    if (app.got_subcommand(c_derive)) {
      AlgebraFile f = parse_algebra_file(read_file(file));
      int rc = 0;
      auto rl = load_or_report(f, out, opt, &rc);
      if (!rl) return rc;
      if (json) {
        nlohmann::ordered_json doc;
        doc["algebra"] = f.name;
        doc["version"] = kToolVersion;
        doc["arrow"] = table_json(rl->arrow, f.elements);
        auto negs = nlohmann::ordered_json::array();
        for (int x = 0; x < rl->size(); ++x) negs.push_back(f.elements[rl->neg[x]]);
        doc["neg"] = std::move(negs);
        doc["oplus"] = table_json(rl->oplus, f.elements);
        out << doc.dump(2) << "\n";
      } else {
        out << render_table(rl->arrow, f.elements, "arrow");
        out << render_unary(rl->neg, f.elements, "neg");
        out << render_table(rl->oplus, f.elements, "oplus");
      }
      return 0;
    }

    if (app.got_subcommand(c_couple)) {
      AlgebraFile f = parse_algebra_file(read_file(file));
      int rc = 0;
      auto rl = load_or_report(f, out, opt, &rc);
      if (!rl) return rc;
      CheckReport dnl = check_double_negation(*rl);
      if (!dnl.ok()) return emit_report(out, f.name, dnl, f.elements, opt);
      CoupledStructure c = couple(*rl);
      CheckReport report = check_general_coupled(c);
      if (!json) out << render_coupled_file(to_coupled_file(c, f.name));
      return emit_report(out, f.name, report, f.elements, opt);
    }

    if (app.got_subcommand(c_decouple)) {
      CoupledFile f = parse_coupled_file(read_file(file));
      CoupledStructure c = to_coupled_structure(f);
      CheckReport report = check_general_coupled(c);
      if (!report.ok()) return emit_report(out, f.name, report, f.elements, opt);
      ResiduatedLattice rl = decouple(c);
      if (!json) out << render_algebra_file(to_algebra_file(rl, f.name));
      return emit_report(out, f.name, report, f.elements, opt);
    }

    if (app.got_subcommand(c_round)) {
      std::string text = read_file(file);
      if (sniff_file_kind(text) == "coupled") {
        CoupledFile f = parse_coupled_file(text);
        CoupledStructure c = to_coupled_structure(f);
        CheckReport pre = check_general_coupled(c);
        if (!pre.ok()) return emit_report(out, f.name, pre, f.elements, opt);
        return emit_report(out, f.name, roundtrip_coupled(c), f.elements, opt);
      }
      AlgebraFile f = parse_algebra_file(text);
      int rc = 0;
      auto rl = load_or_report(f, out, opt, &rc);
      if (!rl) return rc;
      CheckReport dnl = check_double_negation(*rl);
      if (!dnl.ok()) return emit_report(out, f.name, dnl, f.elements, opt);
      return emit_report(out, f.name, roundtrip_lattice(*rl), f.elements, opt);
    }

    if (app.got_subcommand(c_tie)) {
      AlgebraFile f = parse_algebra_file(read_file(file));
      int rc = 0;
      auto rl = load_or_report(f, out, opt, &rc);
      if (!rl) return rc;
      std::vector<ElementId> a = tokens_to_ids(split_commas(subuniverse_arg), f.elements);
      Checked<CoupledStructure> tied = tie_checked(*rl, a);
      CheckReport report = tied.report;
      if (tied.ok()) {
        report.merge(check_tied(*tied.value));
        if (!json)
          out << "B = " << set_text(tied.value->second.carrier, f.elements) << "\n";
      }
      return emit_report(out, f.name, report, f.elements, opt);
    }

    if (app.got_subcommand(c_untie)) {
      CoupledFile f = parse_coupled_file(read_file(file));
      CoupledStructure c = to_coupled_structure(f);
      c.kind = CoupledKind::Tied;  // a general structure is tied with B = A
      CheckReport report = check_tied(c);
      if (!report.ok()) return emit_report(out, f.name, report, f.elements, opt);
      ResiduatedLattice rl = untie(c);
      if (!json) out << render_algebra_file(to_algebra_file(rl, f.name));
      return emit_report(out, f.name, report, f.elements, opt);
    }

    if (app.got_subcommand(c_subs) || app.got_subcommand(c_tieable)) {
      AlgebraFile f = parse_algebra_file(read_file(file));
      int rc = 0;
      auto rl = load_or_report(f, out, opt, &rc);
      if (!rl) return rc;
      auto subs = app.got_subcommand(c_subs) ? enumerate_subuniverses(*rl, max_size)
                                             : find_tieable(*rl, max_size);
      if (json) {
        nlohmann::ordered_json doc;
        doc["algebra"] = f.name;
        doc["version"] = kToolVersion;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& s : subs) {
          auto one = nlohmann::ordered_json::array();
          for (int x : s) one.push_back(f.elements[x]);
          arr.push_back(std::move(one));
        }
        doc["subuniverses"] = std::move(arr);
        out << doc.dump(2) << "\n";
      } else {
        for (const auto& s : subs) out << set_text(s, f.elements) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_enum)) {
      Corpus corpus = build_corpus(max_size, threads);
      CorpusTallies tallies;
      (void)verify_corpus(corpus, &tallies, threads);
      std::filesystem::create_directories(out_dir);
      for (const auto& e : corpus.entries)
        write_file(std::filesystem::path(out_dir) / (e.name + ".alg"),
                   render_algebra_file(to_algebra_file(e.algebra, e.name)));
      write_file(std::filesystem::path(out_dir) / "manifest.json",
                 render_manifest_json(corpus, tallies));
      out << "wrote " << corpus.entries.size() << " algebras to " << out_dir << "\n";
      return 0;
    }

    if (app.got_subcommand(c_verify)) {
      Corpus corpus = build_corpus(max_size, threads);
      CorpusTallies tallies;
      CheckReport report = verify_corpus(corpus, &tallies, threads);
      const std::string name = "corpus(max_size=" + std::to_string(max_size) + ")";
      if (!json)
        out << "tallies: total=" << tallies.total << " dnl=" << tallies.dnl
            << " prelinear=" << tallies.prelinear
            << " divisible=" << tallies.divisible << " mv=" << tallies.mv << "\n";
      return emit_report(out, name, report, {}, opt);
    }

    if (app.got_subcommand(c_examples)) {
      std::filesystem::create_directories(out_dir);
      write_file(std::filesystem::path(out_dir) / "ex1.alg",
                 render_algebra_file(to_algebra_file(fixtures::mv_basic6(), "ex1")));
      write_file(std::filesystem::path(out_dir) / "ex2.alg",
                 render_algebra_file(to_algebra_file(fixtures::six_element_dnl(), "ex2")));
      write_file(std::filesystem::path(out_dir) / "ex3.alg",
                 render_algebra_file(to_algebra_file(fixtures::godel_chain3(), "ex3")));
      out << "wrote ex1.alg ex2.alg ex3.alg to " << out_dir << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    // Named construction errors (DnlRequired, NotSubuniverse, ...) mean a
    // semantic precondition failed after a clean parse.
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace reslat
