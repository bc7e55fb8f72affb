#ifndef RESLAT_RENDER_HPP
#define RESLAT_RENDER_HPP

#include <string>
#include <vector>

#include "reslat/report.hpp"
#include "reslat/search.hpp"

namespace reslat {

inline constexpr const char* kToolVersion = "0.1.0";

struct RenderOptions {
  bool json = false;
  int max_witnesses = 5;
};

/// Plain-text report: failing checks first, witnesses as token tuples.
std::string render_report_text(const std::string& algebra_name,
                               const CheckReport& report,
                               const std::vector<std::string>& tokens,
                               const RenderOptions& opt = {});

/// Deterministic JSON document with keys algebra, version, checks,
/// summary. Byte-identical across runs on the same input.
std::string render_report_json(const std::string& algebra_name,
                               const CheckReport& report,
                               const std::vector<std::string>& tokens,
                               const RenderOptions& opt = {});

/// Corpus manifest: canonical keys and tallies, deterministic.
std::string render_manifest_json(const Corpus& corpus,
                                 const CorpusTallies& tallies);

std::string render_table(const BinOpTable& t, const std::vector<std::string>& tokens,
                         const std::string& title);
std::string render_unary(const UnaryTable& t, const std::vector<std::string>& tokens,
                         const std::string& title);

}  // namespace reslat

#endif
