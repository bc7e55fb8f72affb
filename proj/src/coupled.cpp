#include "reslat/coupled.hpp"

#include <algorithm>
#include <utility>

namespace reslat {

namespace {

Witness wxy(int x, int y) {
  Witness w;
  w.parts = {{"x", x}, {"y", y}};
  return w;
}

Witness wx(int x) {
  Witness w;
  w.parts = {{"x", x}};
  return w;
}

bool in_carrier(const std::vector<ElementId>& carrier, int x) {
  return std::binary_search(carrier.begin(), carrier.end(), x);
}

}  // namespace

CheckReport check_semiring(const RoleMappedSemiring& s,
                           const std::string& prefix) {
  CheckReport r;
  const auto& A = s.carrier;

  {
    Check c = Check::pass(prefix + "carrier_closure");
    if (!in_carrier(A, s.zero) || !in_carrier(A, s.one)) {
      c.status = Status::Fail;
      Witness w;
      w.parts = {{"zero", s.zero}, {"one", s.one}};
      w.note = "neutral element outside carrier";
      c.witnesses.push_back(std::move(w));
    }
    for (int x : A)
      for (int y : A) {
        if (!in_carrier(A, s.add(x, y)) || !in_carrier(A, s.mul(x, y))) {
          c.status = Status::Fail;
          c.witnesses.push_back(wxy(x, y));
        }
      }
    r.add(std::move(c));
    if (!r.ok()) return r;  // the monoid laws presuppose closure
  }

  auto monoid = [&](const BinOpTable& t, ElementId unit, const std::string& tag) {
    Check comm = Check::pass(prefix + tag + "_commutative");
    Check assoc = Check::pass(prefix + tag + "_associative");
    Check un = Check::pass(prefix + tag + "_unit");
    for (size_t i = 0; i < A.size(); ++i) {
      const int x = A[i];
      if (t(unit, x) != x || t(x, unit) != x) {
        un.status = Status::Fail;
        un.witnesses.push_back(wx(x));
      }
      for (size_t j = i + 1; j < A.size(); ++j)
        if (t(x, A[j]) != t(A[j], x)) {
          comm.status = Status::Fail;
          comm.witnesses.push_back(wxy(x, A[j]));
        }
      for (int y : A)
        for (int z : A)
          if (t(t(x, y), z) != t(x, t(y, z))) {
            assoc.status = Status::Fail;
            Witness w;
            w.parts = {{"x", x}, {"y", y}, {"z", z}};
            assoc.witnesses.push_back(std::move(w));
          }
    }
    r.add(std::move(comm));
    r.add(std::move(assoc));
    r.add(std::move(un));
  };
  monoid(s.add, s.zero, "add");
  monoid(s.mul, s.one, "mul");

  {
    Check c = Check::pass(prefix + "distributivity");
    for (int x : A)
      for (int y : A)
        for (int z : A)
          if (s.mul(x, s.add(y, z)) != s.add(s.mul(x, y), s.mul(x, z))) {
            c.status = Status::Fail;
            Witness w;
            w.parts = {{"x", x}, {"y", y}, {"z", z}};
            c.witnesses.push_back(std::move(w));
          }
    r.add(std::move(c));
  }
  {
    Check c = Check::pass(prefix + "annihilation");
    for (int x : A)
      if (s.mul(x, s.zero) != s.zero) {
        c.status = Status::Fail;
        c.witnesses.push_back(wx(x));
      }
    r.add(std::move(c));
  }
  return r;
}

bool coupled_equal(const CoupledStructure& a, const CoupledStructure& b) {
  if (a.elements != b.elements) return false;
  auto semi_eq = [](const RoleMappedSemiring& x, const RoleMappedSemiring& y) {
    if (x.carrier != y.carrier || x.zero != y.zero || x.one != y.one)
      return false;
    for (int p : x.carrier)
      for (int q : x.carrier)
        if (x.add(p, q) != y.add(p, q) || x.mul(p, q) != y.mul(p, q))
          return false;
    return true;
  };
  if (!semi_eq(a.first, b.first) || !semi_eq(a.second, b.second)) return false;
  for (int x : a.first.carrier)
    if (a.alpha[x] != b.alpha[x]) return false;
  return a.kind == b.kind;
}

CoupledStructure couple(const ResiduatedLattice& rl) {
  if (!has_double_negation(rl)) throw DnlRequiredError();
  const int n = rl.size();
  std::vector<ElementId> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  CoupledStructure c;
  c.elements = rl.elements();
  c.first = {all, rl.lattice.join, rl.otimes, rl.bottom(), rl.top()};
  c.second = {all, rl.lattice.meet, rl.oplus, rl.top(), rl.bottom()};
  c.alpha = rl.neg;
  c.kind = CoupledKind::General;
  return c;
}

namespace {

// Checks shared by the general and tied axiom sets. The general case is
// the tied case with B = A plus bijectivity of alpha.
CheckReport check_coupled_common(const CoupledStructure& c) {
  CheckReport r;
  const auto& A = c.first.carrier;
  const auto& B = c.second.carrier;

  {
    Check sub = Check::pass("second_carrier_contained");
    for (int x : B)
      if (!in_carrier(A, x)) {
        sub.status = Status::Fail;
        sub.witnesses.push_back(wx(x));
      }
    r.add(std::move(sub));
  }

  r.merge(check_semiring(c.first, "first_semiring."));
  r.merge(check_semiring(c.second, "second_semiring."));

  // (A, v, ^) lattice laws; join is the first addition, meet the second.
  const auto& join = c.first.add;
  const auto& meet = c.second.add;
  {
    Check c1 = Check::pass("lattice_absorption");
    Check c2 = Check::pass("lattice_meet_commutative");
    Check c3 = Check::pass("lattice_meet_associative");
    for (int x : A)
      for (int y : A) {
        if (join(x, meet(x, y)) != x || meet(x, join(x, y)) != x) {
          c1.status = Status::Fail;
          c1.witnesses.push_back(wxy(x, y));
        }
        if (meet(x, y) != meet(y, x)) {
          c2.status = Status::Fail;
          c2.witnesses.push_back(wxy(x, y));
        }
        for (int z : A)
          if (meet(meet(x, y), z) != meet(x, meet(y, z))) {
            c3.status = Status::Fail;
            Witness w;
            w.parts = {{"x", x}, {"y", y}, {"z", z}};
            c3.witnesses.push_back(std::move(w));
          }
      }
    r.add(std::move(c1));
    r.add(std::move(c2));
    r.add(std::move(c3));
  }

  // alpha: homomorphism from (A, v, ., 0, 1) onto (B, ^, *, 1, 0).
  {
    Check img = Check::pass("alpha_image_in_second_carrier");
    Check hom = Check::pass("alpha_homomorphism");
    for (int x : A) {
      if (!in_carrier(B, c.alpha[x])) {
        img.status = Status::Fail;
        img.witnesses.push_back(wx(x));
      }
      for (int y : A) {
        if (c.alpha[join(x, y)] != meet(c.alpha[x], c.alpha[y]) ||
            c.alpha[c.first.mul(x, y)] !=
                c.second.mul(c.alpha[x], c.alpha[y])) {
          hom.status = Status::Fail;
          hom.witnesses.push_back(wxy(x, y));
        }
      }
    }
    if (c.alpha[c.first.zero] != c.second.zero ||
        c.alpha[c.first.one] != c.second.one) {
      hom.status = Status::Fail;
      Witness w;
      w.parts = {{"zero", c.first.zero}, {"one", c.first.one}};
      w.note = "constants not preserved";
      hom.witnesses.push_back(std::move(w));
    }
    r.add(std::move(img));
    r.add(std::move(hom));

    Check sur = Check::pass("alpha_surjective");
    for (int b : B) {
      bool hit = false;
      for (int x : A)
        if (c.alpha[x] == b) {
          hit = true;
          break;
        }
      if (!hit) {
        sur.status = Status::Fail;
        sur.witnesses.push_back(wx(b));
      }
    }
    r.add(std::move(sur));
  }

  // alpha restricted to B: homomorphism back into (A, v, ., 0, 1).
  {
    Check hom = Check::pass("alpha_restricted_homomorphism");
    for (int x : B)
      for (int y : B)
        if (c.alpha[meet(x, y)] != join(c.alpha[x], c.alpha[y]) ||
            c.alpha[c.second.mul(x, y)] !=
                c.first.mul(c.alpha[x], c.alpha[y])) {
          hom.status = Status::Fail;
          hom.witnesses.push_back(wxy(x, y));
        }
    if (c.alpha[c.second.zero] != c.first.zero ||
        c.alpha[c.second.one] != c.first.one) {
      hom.status = Status::Fail;
      Witness w;
      w.parts = {{"zero", c.second.zero}, {"one", c.second.one}};
      w.note = "constants not preserved";
      hom.witnesses.push_back(std::move(w));
    }
    r.add(std::move(hom));
  }

  {
    Check inv = Check::pass("alpha_involution");
    for (int x : B)
      if (c.alpha[c.alpha[x]] != x) {
        inv.status = Status::Fail;
        inv.witnesses.push_back(wx(x));
      }
    r.add(std::move(inv));
  }

  // Order condition: x <= y iff alpha(x) * y = top, with the order
  // induced by join and the top being the second additive neutral.
  {
    Check ord = Check::pass("order_condition");
    const int top = c.second.zero;
    for (int x : B)
      for (int y : B) {
        const bool le = join(x, y) == y;
        const bool eq = c.second.mul(c.alpha[x], y) == top;
        if (le != eq) {
          ord.status = Status::Fail;
          Witness w = wxy(x, y);
          w.note = le ? "x <= y but alpha(x)*y != top"
                      : "alpha(x)*y = top but not x <= y";
          ord.witnesses.push_back(std::move(w));
        }
      }
    r.add(std::move(ord));
  }
  return r;
}

}  // namespace

CheckReport check_general_coupled(const CoupledStructure& c) {
  CheckReport r;
  {
    Check same = Check::pass("carriers_coincide");
    if (c.first.carrier != c.second.carrier) {
      same.status = Status::Fail;
      Witness w;
      w.note = "general coupling needs both semirings on the same carrier";
      same.witnesses.push_back(std::move(w));
    }
    r.add(std::move(same));
    if (!r.ok()) return r;
  }
  r.merge(check_coupled_common(c));
  {
    // Surjective + involutive on B = A already forces injectivity; the
    // explicit check keeps the report self-contained.
    Check bij = Check::pass("alpha_bijective");
    for (size_t i = 0; i < c.first.carrier.size(); ++i)
      for (size_t j = i + 1; j < c.first.carrier.size(); ++j) {
        const int x = c.first.carrier[i], y = c.first.carrier[j];
        if (c.alpha[x] == c.alpha[y]) {
          bij.status = Status::Fail;
          bij.witnesses.push_back(wxy(x, y));
        }
      }
    r.add(std::move(bij));
  }
  return r;
}

CheckReport check_tied(const CoupledStructure& c) {
  CheckReport r = check_coupled_common(c);
  // The second carrier must be meet-closed for the lattice restriction
  // to make sense; the definition leaves this implicit.
  Check cls = Check::pass("second_carrier_meet_closed");
  for (int x : c.second.carrier)
    for (int y : c.second.carrier)
      if (!in_carrier(c.second.carrier, c.second.add(x, y))) {
        cls.status = Status::Fail;
        cls.witnesses.push_back(wxy(x, y));
      }
  r.add(std::move(cls));
  return r;
}

ResiduatedLattice decouple(const CoupledStructure& c) {
  if (c.kind != CoupledKind::General)
    throw InvalidCoupledError("structure is not of general kind");
  CheckReport pre = check_general_coupled(c);
  if (!pre.ok()) {
    for (const auto& chk : pre.checks)
      if (chk.status == Status::Fail)
        throw InvalidCoupledError("check failed: " + chk.name);
  }

  const int n = c.size();
  auto lat = build_lattice(c.elements, c.first.add, c.second.add,
                           c.first.zero, c.second.zero);
  if (!lat.ok()) throw InvalidCoupledError("lattice laws fail");

  BinOpTable arrow(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) arrow.at(x, y) = c.second.mul(c.alpha[x], y);

  auto rl = build_residuated(*lat.value, c.first.mul, arrow);
  if (!rl.ok()) throw InvalidCoupledError("residuated-lattice laws fail");
  if (!has_double_negation(*rl.value))
    throw InvalidCoupledError("double negation law fails on the result");
  for (int x = 0; x < n; ++x)
    if (rl.value->neg[x] != c.alpha[x])
      throw InvalidCoupledError("negation does not coincide with alpha");
  return *rl.value;
}

namespace {

void compare_tables(Check& c, const BinOpTable& got, const BinOpTable& want,
                    const std::vector<ElementId>& carrier, const char* tag) {
  for (int x : carrier)
    for (int y : carrier)
      if (got(x, y) != want(x, y)) {
        c.status = Status::Fail;
        Witness w = wxy(x, y);
        w.note = tag;
        c.witnesses.push_back(std::move(w));
      }
}

}  // namespace

CheckReport roundtrip_lattice(const ResiduatedLattice& rl) {
  const ResiduatedLattice back = decouple(couple(rl));
  const int n = rl.size();
  std::vector<ElementId> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  CheckReport r;
  Check c = Check::pass("roundtrip_lattice");
  compare_tables(c, back.lattice.join, rl.lattice.join, all, "join");
  compare_tables(c, back.lattice.meet, rl.lattice.meet, all, "meet");
  compare_tables(c, back.otimes, rl.otimes, all, "otimes");
  compare_tables(c, back.arrow, rl.arrow, all, "arrow");
  if (back.bottom() != rl.bottom() || back.top() != rl.top()) {
    c.status = Status::Fail;
    Witness w;
    w.note = "constants differ";
    c.witnesses.push_back(std::move(w));
  }
  r.add(std::move(c));
  return r;
}

CheckReport roundtrip_coupled(const CoupledStructure& c) {
  const CoupledStructure back = couple(decouple(c));
  CheckReport r;
  Check chk = Check::pass("roundtrip_coupled");
  compare_tables(chk, back.first.add, c.first.add, c.first.carrier, "first.add");
  compare_tables(chk, back.first.mul, c.first.mul, c.first.carrier, "first.mul");
  compare_tables(chk, back.second.add, c.second.add, c.second.carrier,
                 "second.add");
  compare_tables(chk, back.second.mul, c.second.mul, c.second.carrier,
                 "second.mul");
  for (int x : c.first.carrier)
    if (back.alpha[x] != c.alpha[x]) {
      chk.status = Status::Fail;
      Witness w = wx(x);
      w.note = "alpha";
      chk.witnesses.push_back(std::move(w));
    }
  if (back.first.zero != c.first.zero || back.first.one != c.first.one ||
      back.second.zero != c.second.zero || back.second.one != c.second.one) {
    chk.status = Status::Fail;
    Witness w;
    w.note = "constants differ";
    chk.witnesses.push_back(std::move(w));
  }
  r.add(std::move(chk));
  return r;
}

namespace {

bool closed_under(const ResiduatedLattice& rl, const std::vector<ElementId>& s,
                  int* wx_out, int* wy_out) {
  auto in = [&](int v) { return std::binary_search(s.begin(), s.end(), v); };
  if (!in(rl.bottom()) || !in(rl.top())) {
    if (wx_out) *wx_out = in(rl.bottom()) ? rl.top() : rl.bottom();
    if (wy_out) *wy_out = -1;
    return false;
  }
  for (int x : s)
    for (int y : s) {
      if (!in(rl.lattice.join(x, y)) || !in(rl.lattice.meet(x, y)) ||
          !in(rl.otimes(x, y)) || !in(rl.arrow(x, y))) {
        if (wx_out) *wx_out = x;
        if (wy_out) *wy_out = y;
        return false;
      }
    }
  return true;
}

CoupledStructure make_tied(const ResiduatedLattice& rl,
                           const std::vector<ElementId>& A,
                           const std::vector<ElementId>& B) {
  CoupledStructure c;
  c.elements = rl.elements();
  c.first = {A, rl.lattice.join, rl.otimes, rl.bottom(), rl.top()};
  c.second = {B, rl.lattice.meet, rl.oplus, rl.top(), rl.bottom()};
  c.alpha = rl.neg;
  c.kind = CoupledKind::Tied;
  return c;
}

}  // namespace

Checked<CoupledStructure> tie_checked(const ResiduatedLattice& rl,
                                      const std::vector<ElementId>& subuniverse) {
  Checked<CoupledStructure> out;
  std::vector<ElementId> A = subuniverse;
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  for (int x : A)
    if (x < 0 || x >= rl.size())
      throw StructuralError("subuniverse element out of range");

  int wxv = -1, wyv = -1;
  {
    Check c = Check::pass("a_subuniverse");
    if (!closed_under(rl, A, &wxv, &wyv)) {
      c.status = Status::Fail;
      Witness w;
      w.parts = {{"x", wxv}};
      if (wyv >= 0) w.parts.push_back({"y", wyv});
      c.witnesses.push_back(std::move(w));
    }
    out.report.add(std::move(c));
  }

  std::vector<ElementId> B;
  for (int x : A) B.push_back(rl.neg[x]);
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());

  if (out.report.ok()) {
    Check c = Check::pass("neg_a_subuniverse");
    if (!closed_under(rl, B, &wxv, &wyv)) {
      c.status = Status::Fail;
      Witness w;
      w.parts = {{"x", wxv}};
      if (wyv >= 0) w.parts.push_back({"y", wyv});
      c.witnesses.push_back(std::move(w));
    }
    out.report.add(std::move(c));
  }

  if (out.report.ok()) {
    Check c = Check::pass("de_morgan_on_a");
    for (int x : A)
      for (int y : A)
        if (rl.neg[rl.otimes(x, y)] != rl.oplus(rl.neg[x], rl.neg[y])) {
          c.status = Status::Fail;
          c.witnesses.push_back(wxy(x, y));
        }
    out.report.add(std::move(c));
  }

  if (out.report.ok()) out.value = make_tied(rl, A, B);
  return out;
}

CoupledStructure tie(const ResiduatedLattice& rl,
                     const std::vector<ElementId>& subuniverse) {
  auto out = tie_checked(rl, subuniverse);
  if (out.ok()) return *out.value;
  for (const auto& c : out.report.checks) {
    if (c.status != Status::Fail) continue;
    if (c.name == "a_subuniverse")
      throw NotSubuniverseError("A is not closed under the signature");
    if (c.name == "neg_a_subuniverse")
      throw NegNotSubuniverseError("neg A is not closed under the signature");
    if (c.name == "de_morgan_on_a" && !c.witnesses.empty())
      throw DeMorganFailsError(c.witnesses[0].parts[0].second,
                               c.witnesses[0].parts[1].second);
  }
  throw StructuralError("tie preconditions fail");
}

ResiduatedLattice untie(const CoupledStructure& c) {
  if (c.kind != CoupledKind::Tied && c.kind != CoupledKind::General)
    throw InvalidTiedError("unknown kind");
  CheckReport pre = check_tied(c);
  if (!pre.ok()) {
    for (const auto& chk : pre.checks)
      if (chk.status == Status::Fail)
        throw InvalidTiedError("check failed: " + chk.name);
  }

  const auto& B = c.second.carrier;
  // Closure of B under join and product follows from the tied axioms;
  // verify rather than assume.
  auto inB = [&](int v) { return std::binary_search(B.begin(), B.end(), v); };
  for (int x : B)
    for (int y : B) {
      if (!inB(c.first.add(x, y)))
        throw ClosureFailsError("join of (" + std::to_string(x) + ", " +
                                std::to_string(y) + ") leaves the carrier");
      if (!inB(c.first.mul(x, y)))
        throw ClosureFailsError("product of (" + std::to_string(x) + ", " +
                                std::to_string(y) + ") leaves the carrier");
    }

  // Reindex B to a compact carrier.
  const int m = static_cast<int>(B.size());
  std::vector<int> pos(c.size(), -1);
  for (int i = 0; i < m; ++i) pos[B[i]] = i;
  std::vector<std::string> toks;
  for (int x : B) toks.push_back(c.elements[x]);

  BinOpTable join(m), meet(m), otimes(m), arrow(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      join.at(i, j) = pos[c.first.add(B[i], B[j])];
      meet.at(i, j) = pos[c.second.add(B[i], B[j])];
      otimes.at(i, j) = pos[c.first.mul(B[i], B[j])];
      arrow.at(i, j) = pos[c.second.mul(c.alpha[B[i]], B[j])];
    }
  const int bot = pos[c.first.zero];
  const int top = pos[c.second.zero];
  if (bot < 0 || top < 0)
    throw InvalidTiedError("constants missing from the second carrier");

  auto lat = build_lattice(toks, join, meet, bot, top);
  if (!lat.ok()) throw InvalidTiedError("lattice laws fail on the carrier");
  auto rl = build_residuated(*lat.value, otimes, arrow);
  if (!rl.ok()) throw InvalidTiedError("residuated-lattice laws fail");
  if (!has_double_negation(*rl.value))
    throw InvalidTiedError("double negation law fails on the result");
  for (int i = 0; i < m; ++i)
    if (rl.value->neg[i] != pos[c.alpha[B[i]]])
      throw InvalidTiedError("negation does not coincide with alpha");
  return *rl.value;
}

}  // namespace reslat
