#include "reslat/driver.hpp"

namespace reslat {

CheckOutcome run_full_check(const AlgebraFile& file) {
  CheckOutcome out;

  auto lat = build_lattice(file.elements, file.join, file.meet, file.bottom,
                           file.top);
  out.report.merge(lat.report);
  if (!lat.ok()) return out;

  auto rl = build_residuated(*lat.value, file.otimes, file.arrow);
  out.report.merge(rl.report);
  if (!rl.ok()) return out;

  // Supplied arrow vs the residuum computed from otimes. The adjointness
  // check already passed, so a mismatch cannot occur; the comparison
  // keeps the report explicit about it.
  if (file.arrow) {
    Check c = Check::pass("arrow_matches_residuum");
    try {
      BinOpTable derived = derive_arrow(*lat.value, file.otimes);
      for (int y = 0; y < derived.size(); ++y)
        for (int z = 0; z < derived.size(); ++z)
          if (derived(y, z) != (*file.arrow)(y, z)) {
            c.status = Status::Fail;
            Witness w;
            w.parts = {{"y", y}, {"z", z}};
            c.witnesses.push_back(std::move(w));
          }
    } catch (const NoResiduumError& e) {
      c.status = Status::Fail;
      Witness w;
      w.parts = {{"y", e.y}, {"z", e.z}};
      w.note = "no residuum";
      c.witnesses.push_back(std::move(w));
    }
    out.report.add(std::move(c));
  }

  out.report.merge(check_double_negation(*rl.value));
  out.report.merge(check_prelinearity(*rl.value));
  out.report.merge(check_divisibility(*rl.value));
  {
    // Aggregate MV verdict over the three checks above.
    Check agg = Check::pass("mv");
    if (!check_mv(*rl.value).ok()) agg.status = Status::Fail;
    out.report.add(std::move(agg));
  }
  out.report.merge(verify_lemma_suite(*rl.value));

  // A supplied oplus table is compared against the definitional
  // derivation; any divergence is reported entry by entry.
  if (file.oplus) {
    Check c = Check::pass("oplus_matches_derivation");
    const auto& tokens = rl.value->elements();
    for (int x = 0; x < rl.value->size(); ++x)
      for (int y = 0; y < rl.value->size(); ++y)
        if ((*file.oplus)(x, y) != rl.value->oplus(x, y)) {
          c.status = Status::Fail;
          Witness w;
          w.parts = {{"x", x}, {"y", y}};
          w.note = "given " + tokens[(*file.oplus)(x, y)] + ", derived " +
                   tokens[rl.value->oplus(x, y)];
          c.witnesses.push_back(std::move(w));
        }
    out.report.add(std::move(c));
  }

  out.algebra = std::move(*rl.value);
  return out;
}

ResiduatedLattice load_residuated(const AlgebraFile& file) {
  // Only the defining axioms are required here; optional properties like
  // prelinearity are not validation failures.
  auto lat = build_lattice(file.elements, file.join, file.meet, file.bottom,
                           file.top);
  CheckReport report = lat.report;
  std::optional<ResiduatedLattice> alg;
  if (lat.ok()) {
    auto rl = build_residuated(*lat.value, file.otimes, file.arrow);
    report.merge(rl.report);
    if (rl.ok()) alg = std::move(*rl.value);
  }
  if (!alg) {
    std::string first;
    for (const auto& c : report.checks)
      if (c.status == Status::Fail) {
        first = c.name;
        break;
      }
    throw StructuralError("algebra '" + file.name +
                          "' fails validation (first failing check: " + first +
                          ")");
  }
  return std::move(*alg);
}

}  // namespace reslat
