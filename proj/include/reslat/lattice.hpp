#ifndef RESLAT_LATTICE_HPP
#define RESLAT_LATTICE_HPP

#include <string>
#include <vector>

#include "reslat/report.hpp"
#include "reslat/table.hpp"

namespace reslat {

/// Finite bounded lattice stored as join and meet tables. The order is
/// always derived from the join table, never input.
struct BoundedLattice {
  std::vector<std::string> elements;
  BinOpTable join;
  BinOpTable meet;
  ElementId bottom = 0;
  ElementId top = 0;
  InducedOrder order;

  int size() const { return static_cast<int>(elements.size()); }
  bool leq(int a, int b) const { return order.leq(a, b); }

  bool operator==(const BoundedLattice& o) const {
    return elements == o.elements && join == o.join && meet == o.meet &&
           bottom == o.bottom && top == o.top;
  }
};

/// Validates all bounded-lattice laws. Throws StructuralError on a
/// dimension mismatch; axiom violations land in the report instead.
Checked<BoundedLattice> build_lattice(std::vector<std::string> elements,
                                      const BinOpTable& join,
                                      const BinOpTable& meet,
                                      ElementId bottom, ElementId top);

/// Commutativity, associativity and both unit laws of (table, unit).
CheckReport check_commutative_monoid(const BinOpTable& table, ElementId unit,
                                     const std::string& prefix = "");

}  // namespace reslat

#endif
