#ifndef RESLAT_DRIVER_HPP
#define RESLAT_DRIVER_HPP

#include <optional>
#include <string>

#include "reslat/algfile.hpp"
#include "reslat/report.hpp"
#include "reslat/residuated.hpp"

namespace reslat {

/// Full check pipeline for a parsed algebra file: lattice laws, monoid,
/// adjointness (or residuum derivation when arrow is absent), the derived
/// arrow compared against a supplied one, double negation, prelinearity,
/// divisibility, MV aggregate, lemma suite, and the oplus-vs-derivation
/// comparison when an oplus table was supplied. The algebra is present
/// iff it validated far enough to be built.
struct CheckOutcome {
  CheckReport report;
  std::optional<ResiduatedLattice> algebra;
};

CheckOutcome run_full_check(const AlgebraFile& file);

/// Builds the residuated lattice from a file, throwing StructuralError
/// with a readable message when any validation fails. Used by
/// subcommands whose real work starts after validation.
ResiduatedLattice load_residuated(const AlgebraFile& file);

}  // namespace reslat

#endif
