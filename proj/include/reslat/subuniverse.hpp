#ifndef RESLAT_SUBUNIVERSE_HPP
#define RESLAT_SUBUNIVERSE_HPP

#include <vector>

#include "reslat/residuated.hpp"

namespace reslat {

/// Subsets are sorted index lists; a subuniverse contains bottom and top
/// and is closed under join, meet, otimes and arrow.
using Subuniverse = std::vector<ElementId>;

/// True iff `s` (assumed sorted) is a subuniverse of rl.
bool is_subuniverse(const ResiduatedLattice& rl, const Subuniverse& s);

/// Smallest subuniverse containing seed plus the constants; fixed-point
/// closure under the four binary operations.
Subuniverse closure(const ResiduatedLattice& rl,
                    const std::vector<ElementId>& seed);

/// All subuniverses, ascending by (size, lexicographic carrier). Subset
/// scan; throws CapExceededError above `cap` elements.
std::vector<Subuniverse> enumerate_subuniverses(const ResiduatedLattice& rl,
                                                int cap = 8);

/// The image of neg, which equals the fixed points of double negation.
std::vector<ElementId> neg_fixed(const ResiduatedLattice& rl);

/// All subuniverses A such that neg A is also a subuniverse and
/// neg(x*y) = neg x (+) neg y holds on A; exactly the A for which tie
/// succeeds.
std::vector<Subuniverse> find_tieable(const ResiduatedLattice& rl,
                                      int cap = 8);

}  // namespace reslat

#endif
