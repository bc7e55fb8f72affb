#ifndef RESLAT_RESIDUATED_HPP
#define RESLAT_RESIDUATED_HPP

#include <optional>

#include "reslat/lattice.hpp"

namespace reslat {

/// Residuated lattice: bounded lattice + commutative monoid (otimes, top)
/// + residuum (arrow) linked by adjointness. neg and oplus are derived:
/// neg(x) = x -> bottom, x (+) y = neg(neg x * neg y).
struct ResiduatedLattice {
  BoundedLattice lattice;
  BinOpTable otimes;
  BinOpTable arrow;
  UnaryTable neg;
  BinOpTable oplus;

  int size() const { return lattice.size(); }
  ElementId bottom() const { return lattice.bottom; }
  ElementId top() const { return lattice.top; }
  bool leq(int a, int b) const { return lattice.leq(a, b); }
  const std::vector<std::string>& elements() const { return lattice.elements; }

  bool operator==(const ResiduatedLattice& o) const {
    return lattice == o.lattice && otimes == o.otimes && arrow == o.arrow;
  }
};

/// Both directions of x <= y->z iff x*y <= z, scanned over all triples.
CheckReport check_adjointness(const BoundedLattice& lat,
                              const BinOpTable& otimes,
                              const BinOpTable& arrow);
CheckReport check_adjointness(const ResiduatedLattice& rl);

/// Computes the residuum: arrow(y, z) = greatest x with x*y <= z.
/// Throws NoResiduumError(y, z) when the candidate set has no maximum.
BinOpTable derive_arrow(const BoundedLattice& lat, const BinOpTable& otimes);

/// neg(x) = arrow(x, bottom); oplus(x, y) = neg(otimes(neg x, neg y)).
std::pair<UnaryTable, BinOpTable> derive_negation_ops(const BoundedLattice& lat,
                                                      const BinOpTable& otimes,
                                                      const BinOpTable& arrow);

/// Validating constructor. Runs the monoid and adjointness checks; when
/// `arrow` is absent it is derived (NoResiduumError surfaces as a failed
/// "residuum_exists" check). neg and oplus are always derived.
Checked<ResiduatedLattice> build_residuated(const BoundedLattice& lattice,
                                            const BinOpTable& otimes,
                                            std::optional<BinOpTable> arrow);

/// Constructor for internally generated tables already known valid.
ResiduatedLattice make_residuated_unchecked(BoundedLattice lattice,
                                            BinOpTable otimes,
                                            BinOpTable arrow);

CheckReport check_double_negation(const ResiduatedLattice& rl);
bool has_double_negation(const ResiduatedLattice& rl);

/// (x->y) v (y->x) = top for all x, y.
CheckReport check_prelinearity(const ResiduatedLattice& rl);

/// x * (x->y) = x ^ y for all x, y.
CheckReport check_divisibility(const ResiduatedLattice& rl);

/// MV = double negation + prelinearity + divisibility; embeds the three
/// sub-reports plus an aggregate "mv" check.
CheckReport check_mv(const ResiduatedLattice& rl);

/// The standard identities valid in every residuated lattice, plus the
/// ones that additionally need the double negation law (those are marked
/// skipped when it fails).
CheckReport verify_lemma_suite(const ResiduatedLattice& rl);

}  // namespace reslat

#endif
