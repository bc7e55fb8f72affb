#ifndef RESLAT_COUPLED_HPP
#define RESLAT_COUPLED_HPP

#include <vector>

#include "reslat/residuated.hpp"

namespace reslat {

/// Commutative semiring living on a sub-carrier of an ambient element
/// universe. Tables are ambient-sized; laws are quantified over the
/// carrier. Role-mapped: for the second semiring of a coupled structure
/// the additive neutral is the lattice top, so annihilation reads
/// x * zero = zero with zero = top.
struct RoleMappedSemiring {
  std::vector<ElementId> carrier;  // sorted
  BinOpTable add;
  BinOpTable mul;
  ElementId zero = 0;  // additive neutral
  ElementId one = 0;   // multiplicative neutral
};

/// Carrier closure, both monoids, distributivity, annihilation.
CheckReport check_semiring(const RoleMappedSemiring& s,
                           const std::string& prefix = "");

enum class CoupledKind { General, Tied };

/// Two role-mapped semirings over carriers A and B (B subset of A) joined
/// by a unary map alpha. General structures have B = A with alpha
/// bijective; tied structures only need alpha surjective onto B and
/// involutive on B.
struct CoupledStructure {
  std::vector<std::string> elements;  // ambient tokens
  RoleMappedSemiring first;           // (A, v, ., 0, 1)
  RoleMappedSemiring second;          // (B, ^, *, 1, 0)
  std::vector<ElementId> alpha;       // total on the ambient universe
  CoupledKind kind = CoupledKind::General;

  int size() const { return static_cast<int>(elements.size()); }
};

/// Entry-wise equality on carriers, tables restricted to carriers, units
/// and alpha restricted to the first carrier.
bool coupled_equal(const CoupledStructure& a, const CoupledStructure& b);

/// C: residuated lattice with double negation -> general coupled semiring
/// ((L, v, *, 0, 1), (L, ^, (+), 1, 0), neg). Throws DnlRequiredError.
CoupledStructure couple(const ResiduatedLattice& rl);

/// All general-coupled axioms: both semirings, lattice laws, alpha an
/// involutive isomorphism, and the order condition x <= y iff
/// alpha(x) * y = top.
CheckReport check_general_coupled(const CoupledStructure& c);

/// L: general coupled semiring -> residuated lattice with
/// arrow(x, y) = alpha(x) * y. Throws InvalidCoupledError when the input
/// fails check_general_coupled.
ResiduatedLattice decouple(const CoupledStructure& c);

/// decouple(couple(rl)) compared entry-wise against rl.
CheckReport roundtrip_lattice(const ResiduatedLattice& rl);

/// couple(decouple(c)) compared entry-wise against c.
CheckReport roundtrip_coupled(const CoupledStructure& c);

/// Y: restricts to a subuniverse A with neg A also a subuniverse and the
/// De Morgan condition neg(x*y) = neg x (+) neg y on A. Throws
/// NotSubuniverseError / NegNotSubuniverseError / DeMorganFailsError.
CoupledStructure tie(const ResiduatedLattice& rl,
                     const std::vector<ElementId>& subuniverse);

/// Same as tie but reports each precondition as a named check instead of
/// throwing; the value is present iff all preconditions hold.
Checked<CoupledStructure> tie_checked(const ResiduatedLattice& rl,
                                      const std::vector<ElementId>& subuniverse);

/// All tied-semiring axioms (quantified over B where the definition says
/// so), including the explicit meet-closure check on B.
CheckReport check_tied(const CoupledStructure& c);

/// A: tied semiring -> residuated lattice on the second carrier B,
/// reindexed to a compact carrier. Throws InvalidTiedError, or
/// ClosureFailsError when B is not closed under join or product.
ResiduatedLattice untie(const CoupledStructure& c);

}  // namespace reslat

#endif
