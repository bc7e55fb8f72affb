#include "reslat/fixtures.hpp"

#include <initializer_list>

namespace reslat::fixtures {

namespace {

BinOpTable T(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<ElementId>> r;
  for (const auto& row : rows) r.emplace_back(row);
  return BinOpTable::from_rows(r);
}

// Builds the bounded lattice determined by a reflexive order matrix.
BoundedLattice lattice_from_leq(std::vector<std::string> elements,
                                const std::vector<std::vector<int>>& leq,
                                int bottom, int top) {
  const int n = static_cast<int>(elements.size());
  BinOpTable join(n), meet(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int lub = -1, glb = -1;
      for (int c = 0; c < n; ++c) {
        if (leq[a][c] && leq[b][c] && (lub < 0 || leq[c][lub])) lub = c;
        if (leq[c][a] && leq[c][b] && (glb < 0 || leq[glb][c])) glb = c;
      }
      join.at(a, b) = lub;
      meet.at(a, b) = glb;
    }
  auto built = build_lattice(std::move(elements), join, meet, bottom, top);
  if (!built.ok()) throw StructuralError("fixture order is not a lattice");
  return *built.value;
}

ResiduatedLattice build_or_throw(const BoundedLattice& lat, const BinOpTable& otimes,
                                 std::optional<BinOpTable> arrow) {
  auto rl = build_residuated(lat, otimes, std::move(arrow));
  if (!rl.ok()) throw StructuralError("fixture fails residuated-lattice checks");
  return *rl.value;
}

BoundedLattice chain(int n) {
  std::vector<std::string> toks;
  toks.push_back("0");
  for (int i = 1; i + 1 < n; ++i) toks.push_back(std::string(1, 'a' + i - 1));
  toks.push_back("1");
  std::vector<std::vector<int>> leq(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq[a][b] = 1;
  return lattice_from_leq(std::move(toks), leq, 0, n - 1);
}

}  // namespace

ResiduatedLattice boolean_chain2() {
  BoundedLattice lat = chain(2);
  return build_or_throw(lat, lat.meet, std::nullopt);
}

ResiduatedLattice godel_chain3() {
  BoundedLattice lat = chain(3);
  BinOpTable arrow = T({{2, 2, 2},
                        {0, 2, 2},
                        {0, 1, 2}});
  return build_or_throw(lat, lat.meet, arrow);
}

ResiduatedLattice lukasiewicz_chain3() {
  BoundedLattice lat = chain(3);
  BinOpTable otimes = T({{0, 0, 0},
                         {0, 0, 1},
                         {0, 1, 2}});
  return build_or_throw(lat, otimes, std::nullopt);
}

// Elements 0 a b c d 1 with 0 < a < {b, c} < d < 1.
ResiduatedLattice six_element_dnl() {
  std::vector<std::vector<int>> leq = {
      {1, 1, 1, 1, 1, 1},   // 0
      {0, 1, 1, 1, 1, 1},   // a
      {0, 0, 1, 0, 1, 1},   // b
      {0, 0, 0, 1, 1, 1},   // c
      {0, 0, 0, 0, 1, 1},   // d
      {0, 0, 0, 0, 0, 1}};  // 1
  BoundedLattice lat =
      lattice_from_leq({"0", "a", "b", "c", "d", "1"}, leq, 0, 5);
  BinOpTable otimes = T({{0, 0, 0, 0, 0, 0},
                         {0, 0, 0, 0, 0, 1},
                         {0, 0, 2, 0, 2, 2},
                         {0, 0, 0, 3, 3, 3},
                         {0, 0, 2, 3, 4, 4},
                         {0, 1, 2, 3, 4, 5}});
  BinOpTable arrow = T({{5, 5, 5, 5, 5, 5},
                        {4, 5, 5, 5, 5, 5},
                        {3, 3, 5, 3, 5, 5},
                        {2, 2, 2, 5, 5, 5},
                        {1, 1, 2, 3, 5, 5},
                        {0, 1, 2, 3, 4, 5}});
  return build_or_throw(lat, otimes, arrow);
}

// Elements 0 a na b nb 1 (na, nb are the complements of a, b).
ResiduatedLattice mv_basic6() {
  BinOpTable join = T({{0, 1, 2, 3, 4, 5},
                       {1, 1, 5, 4, 4, 5},
                       {2, 5, 2, 2, 5, 5},
                       {3, 4, 2, 3, 4, 5},
                       {4, 4, 5, 4, 4, 5},
                       {5, 5, 5, 5, 5, 5}});
  BinOpTable meet = T({{0, 0, 0, 0, 0, 0},
                       {0, 1, 0, 0, 1, 1},
                       {0, 0, 2, 3, 3, 2},
                       {0, 0, 3, 3, 3, 3},
                       {0, 1, 3, 3, 4, 4},
                       {0, 1, 2, 3, 4, 5}});
  auto lat = build_lattice({"0", "a", "na", "b", "nb", "1"}, join, meet, 0, 5);
  if (!lat.ok()) throw StructuralError("fixture order is not a lattice");
  BinOpTable otimes = T({{0, 0, 0, 0, 0, 0},
                         {0, 1, 0, 0, 1, 1},
                         {0, 0, 2, 3, 3, 2},
                         {0, 0, 3, 0, 0, 3},
                         {0, 1, 3, 0, 1, 4},
                         {0, 1, 2, 3, 4, 5}});
  BinOpTable arrow = T({{5, 5, 5, 5, 5, 5},
                        {2, 5, 2, 2, 5, 5},
                        {1, 1, 5, 4, 4, 5},
                        {4, 4, 5, 5, 5, 5},
                        {3, 4, 2, 2, 5, 5},
                        {0, 1, 2, 3, 4, 5}});
  return build_or_throw(*lat.value, otimes, arrow);
}

UnaryTable six_element_printed_neg() { return {5, 4, 3, 2, 1, 0}; }

BinOpTable six_element_printed_oplus() {
  return T({{0, 1, 2, 3, 4, 5},
            {1, 1, 2, 3, 5, 5},
            {2, 2, 2, 3, 5, 5},   // entry (b, c) is the printed value
            {3, 3, 5, 3, 5, 5},
            {4, 5, 5, 5, 5, 5},
            {5, 5, 5, 5, 5, 5}});
}

UnaryTable godel_chain3_printed_neg() { return {2, 0, 0}; }

BinOpTable godel_chain3_printed_oplus() {
  return T({{0, 2, 2},
            {2, 2, 2},
            {2, 2, 2}});
}

BinOpTable mv_basic6_printed_oplus() {
  return T({{0, 1, 2, 3, 4, 5},
            {1, 1, 5, 4, 4, 5},
            {2, 5, 2, 2, 5, 5},
            {3, 4, 2, 2, 5, 5},
            {4, 4, 5, 5, 5, 5},
            {5, 5, 5, 5, 5, 5}});
}

}  // namespace reslat::fixtures
