#ifndef RESLAT_FIXTURES_HPP
#define RESLAT_FIXTURES_HPP

#include "reslat/residuated.hpp"

namespace reslat::fixtures {

/// Two-element Boolean chain {0, 1} with otimes = meet.
ResiduatedLattice boolean_chain2();

/// Three-element chain 0 < a < 1 with otimes = meet (Goedel structure);
/// fails the double negation law.
ResiduatedLattice godel_chain3();

/// Three-element chain with a * a = 0 (Lukasiewicz structure); satisfies
/// the double negation law.
ResiduatedLattice lukasiewicz_chain3();

/// Six-element lattice 0 < a < {b, c} < d < 1 with the non-prelinear,
/// non-divisible otimes/arrow pair; satisfies double negation. (ex2)
ResiduatedLattice six_element_dnl();

/// Six-element MV-algebra on {0, a, a', b, b', 1}. (ex1)
ResiduatedLattice mv_basic6();

/// Printed companion tables used by regression tests. six_element_oplus
/// reproduces the printed table verbatim, including its single
/// inconsistent entry at (b, c); the derivation gives 1 there.
UnaryTable six_element_printed_neg();
BinOpTable six_element_printed_oplus();
BinOpTable godel_chain3_printed_oplus();
UnaryTable godel_chain3_printed_neg();
BinOpTable mv_basic6_printed_oplus();

}  // namespace reslat::fixtures

#endif
