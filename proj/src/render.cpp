#include "reslat/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "reslat/residuated.hpp"

namespace reslat {

namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

std::string witness_text(const Witness& w, const std::vector<std::string>& tokens) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.parts.size(); ++i) {
    if (i) os << ", ";
    os << w.parts[i].first << "=";
    const int e = w.parts[i].second;
    if (e >= 0 && e < static_cast<int>(tokens.size()))
      os << tokens[e];
    else
      os << e;
  }
  os << ")";
  if (!w.note.empty()) os << " [" << w.note << "]";
  return os.str();
}

std::string key_hex(const CanonicalKey& key) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

}  // namespace

std::string render_report_text(const std::string& algebra_name,
                               const CheckReport& report,
                               const std::vector<std::string>& tokens,
                               const RenderOptions& opt) {
  std::ostringstream os;
  os << "algebra " << algebra_name << "\n";

  size_t width = 4;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());

  auto emit = [&](const Check& c) {
    os << (c.status == Status::Fail ? "FAIL" : c.status == Status::Skip ? "skip" : "pass")
       << "  " << std::left << std::setw(static_cast<int>(width)) << c.name;
    if (!c.witnesses.empty()) {
      os << "  witnesses:";
      int shown = 0;
      for (const auto& w : c.witnesses) {
        if (shown++ == opt.max_witnesses) {
          os << " ... (" << c.witnesses.size() << " total)";
          break;
        }
        os << " " << witness_text(w, tokens);
      }
    }
    os << "\n";
  };

  for (const auto& c : report.checks)
    if (c.status == Status::Fail) emit(c);
  for (const auto& c : report.checks)
    if (c.status != Status::Fail) emit(c);

  os << "summary: passed=" << report.count(Status::Pass)
     << " failed=" << report.count(Status::Fail)
     << " skipped=" << report.count(Status::Skip) << "\n";
  return os.str();
}

std::string render_report_json(const std::string& algebra_name,
                               const CheckReport& report,
                               const std::vector<std::string>& tokens,
                               const RenderOptions& opt) {
  nlohmann::ordered_json doc;
  doc["algebra"] = algebra_name;
  doc["version"] = kToolVersion;
  auto& checks = doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = status_name(c.status);
    auto& ws = jc["witnesses"] = nlohmann::ordered_json::array();
    int shown = 0;
    for (const auto& w : c.witnesses) {
      if (shown++ == opt.max_witnesses) break;
      nlohmann::ordered_json jw;
      for (const auto& [role, e] : w.parts)
        jw[role] = (e >= 0 && e < static_cast<int>(tokens.size()))
                       ? tokens[e]
                       : std::to_string(e);
      if (!w.note.empty()) jw["note"] = w.note;
      ws.push_back(std::move(jw));
    }
    checks.push_back(std::move(jc));
  }
  doc["summary"] = {{"passed", report.count(Status::Pass)},
                    {"failed", report.count(Status::Fail)},
                    {"skipped", report.count(Status::Skip)}};
  return doc.dump(2) + "\n";
}

std::string render_manifest_json(const Corpus& corpus,
                                 const CorpusTallies& tallies) {
  nlohmann::ordered_json doc;
  doc["version"] = kToolVersion;
  doc["max_size"] = corpus.max_size;
  doc["count"] = corpus.entries.size();
  doc["tallies"] = {{"total", tallies.total},
                    {"dnl", tallies.dnl},
                    {"prelinear", tallies.prelinear},
                    {"divisible", tallies.divisible},
                    {"mv", tallies.mv}};
  auto& algs = doc["algebras"] = nlohmann::ordered_json::array();
  for (const auto& e : corpus.entries) {
    nlohmann::ordered_json ja;
    ja["name"] = e.name;
    ja["size"] = e.algebra.size();
    ja["key"] = key_hex(e.key);
    ja["dnl"] = has_double_negation(e.algebra);
    ja["prelinear"] = check_prelinearity(e.algebra).ok();
    ja["divisible"] = check_divisibility(e.algebra).ok();
    ja["mv"] = check_mv(e.algebra).ok();
    algs.push_back(std::move(ja));
  }
  return doc.dump(2) + "\n";
}

std::string render_table(const BinOpTable& t, const std::vector<std::string>& tokens,
                         const std::string& title) {
  size_t w = 1;
  for (const auto& s : tokens) w = std::max(w, s.size());
  std::ostringstream os;
  os << title << "\n";
  os << std::right << std::setw(static_cast<int>(w)) << "" << " |";
  for (int c = 0; c < t.size(); ++c)
    os << " " << std::setw(static_cast<int>(w)) << tokens[c];
  os << "\n";
  for (int r = 0; r < t.size(); ++r) {
    os << std::setw(static_cast<int>(w)) << tokens[r] << " |";
    for (int c = 0; c < t.size(); ++c)
      os << " " << std::setw(static_cast<int>(w)) << tokens[t(r, c)];
    os << "\n";
  }
  return os.str();
}

std::string render_unary(const UnaryTable& t, const std::vector<std::string>& tokens,
                         const std::string& title) {
  std::ostringstream os;
  os << title << "\n";
  for (size_t i = 0; i < t.size(); ++i)
    os << (i ? " " : "") << tokens[i] << "->" << tokens[t[i]];
  os << "\n";
  return os.str();
}

}  // namespace reslat
