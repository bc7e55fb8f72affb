#include "reslat/lattice.hpp"

namespace reslat {

namespace {

Witness w2(const char* r1, int a, const char* r2, int b) {
  Witness w;
  w.parts = {{r1, a}, {r2, b}};
  return w;
}

Witness w3(int a, int b, int c) {
  Witness w;
  w.parts = {{"a", a}, {"b", b}, {"c", c}};
  return w;
}

Check check_commutative(const BinOpTable& t, const std::string& name) {
  Check c = Check::pass(name);
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (t(a, b) != t(b, a)) {
        c.status = Status::Fail;
        c.witnesses.push_back(w2("a", a, "b", b));
      }
  return c;
}

Check check_associative(const BinOpTable& t, const std::string& name) {
  Check c = Check::pass(name);
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x)
        if (t(t(a, b), x) != t(a, t(b, x))) {
          c.status = Status::Fail;
          c.witnesses.push_back(w3(a, b, x));
        }
  return c;
}

Check check_idempotent(const BinOpTable& t, const std::string& name) {
  Check c = Check::pass(name);
  for (int a = 0; a < t.size(); ++a)
    if (t(a, a) != a) {
      c.status = Status::Fail;
      Witness w;
      w.parts = {{"a", a}};
      c.witnesses.push_back(w);
    }
  return c;
}

Check check_unit(const BinOpTable& t, ElementId unit, const std::string& name) {
  Check c = Check::pass(name);
  for (int a = 0; a < t.size(); ++a)
    if (t(unit, a) != a || t(a, unit) != a) {
      c.status = Status::Fail;
      Witness w;
      w.parts = {{"a", a}};
      c.witnesses.push_back(w);
    }
  return c;
}

}  // namespace

CheckReport check_commutative_monoid(const BinOpTable& table, ElementId unit,
                                     const std::string& prefix) {
  CheckReport r;
  r.add(check_commutative(table, prefix + "commutative"));
  r.add(check_associative(table, prefix + "associative"));
  r.add(check_unit(table, unit, prefix + "unit"));
  return r;
}

Checked<BoundedLattice> build_lattice(std::vector<std::string> elements,
                                      const BinOpTable& join,
                                      const BinOpTable& meet,
                                      ElementId bottom, ElementId top) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw StructuralError("empty element list");
  if (join.size() != n || meet.size() != n)
    throw StructuralError("table dimension does not match element count");
  if (bottom < 0 || bottom >= n || top < 0 || top >= n)
    throw StructuralError("bottom/top out of range");

  CheckReport r;
  r.add(check_commutative(join, "join_commutative"));
  r.add(check_associative(join, "join_associative"));
  r.add(check_idempotent(join, "join_idempotent"));
  r.add(check_commutative(meet, "meet_commutative"));
  r.add(check_associative(meet, "meet_associative"));
  r.add(check_idempotent(meet, "meet_idempotent"));

  {
    Check c = Check::pass("absorption");  // a v (a ^ b) = a and a ^ (a v b) = a
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (join(a, meet(a, b)) != a || meet(a, join(a, b)) != a) {
          c.status = Status::Fail;
          c.witnesses.push_back(w2("a", a, "b", b));
        }
    r.add(c);
  }
  {
    Check c = Check::pass("order_consistency");  // a v b = b iff a ^ b = a
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((join(a, b) == b) != (meet(a, b) == a)) {
          c.status = Status::Fail;
          c.witnesses.push_back(w2("a", a, "b", b));
        }
    r.add(c);
  }
  {
    Check c = Check::pass("bottom_neutral_join");
    for (int a = 0; a < n; ++a)
      if (join(bottom, a) != a) {
        c.status = Status::Fail;
        Witness w;
        w.parts = {{"a", a}};
        c.witnesses.push_back(w);
      }
    r.add(c);
  }
  {
    Check c = Check::pass("top_neutral_meet");
    for (int a = 0; a < n; ++a)
      if (meet(top, a) != a) {
        c.status = Status::Fail;
        Witness w;
        w.parts = {{"a", a}};
        c.witnesses.push_back(w);
      }
    r.add(c);
  }

  Checked<BoundedLattice> out;
  out.report = std::move(r);
  if (out.report.ok()) {
    BoundedLattice lat;
    lat.elements = std::move(elements);
    lat.join = join;
    lat.meet = meet;
    lat.bottom = bottom;
    lat.top = top;
    lat.order = InducedOrder(join);
    out.value = std::move(lat);
  }
  return out;
}

}  // namespace reslat
