#ifndef RESLAT_ALGFILE_HPP
#define RESLAT_ALGFILE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reslat/coupled.hpp"
#include "reslat/residuated.hpp"

namespace reslat {

/// Parsed `algebra` file: structural validation only, axiom checking is
/// separate. join, meet and otimes are required; arrow and oplus are
/// optional (arrow is derived downstream when absent; a supplied oplus is
/// checked against the definitional derivation).
struct AlgebraFile {
  std::string name;
  std::vector<std::string> elements;
  ElementId bottom = 0;
  ElementId top = 0;
  BinOpTable join;
  BinOpTable meet;
  BinOpTable otimes;
  std::optional<BinOpTable> arrow;
  std::optional<BinOpTable> oplus;
};

/// Parsed `coupled` file. Tables are ambient n x n over `elements`;
/// `subset_b`, when present, selects the second carrier (tied kind),
/// otherwise the structure is general.
struct CoupledFile {
  std::string name;
  std::vector<std::string> elements;
  ElementId bottom = 0;
  ElementId top = 0;
  std::optional<std::vector<ElementId>> subset_b;
  BinOpTable add1, mul1, add2, mul2;
  std::vector<ElementId> alpha;
};

/// First keyword of a file: "algebra" or "coupled".
std::string sniff_file_kind(std::string_view text);

AlgebraFile parse_algebra_file(std::string_view text);
std::string render_algebra_file(const AlgebraFile& f);

CoupledFile parse_coupled_file(std::string_view text);
std::string render_coupled_file(const CoupledFile& f);

CoupledStructure to_coupled_structure(const CoupledFile& f);
CoupledFile to_coupled_file(const CoupledStructure& c, const std::string& name);

/// Algebra file view of a validated residuated lattice (arrow included,
/// derived operations omitted).
AlgebraFile to_algebra_file(const ResiduatedLattice& rl, const std::string& name);

}  // namespace reslat

#endif
