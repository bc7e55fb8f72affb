#include "reslat/subuniverse.hpp"

#include <algorithm>

namespace reslat {

bool is_subuniverse(const ResiduatedLattice& rl, const Subuniverse& s) {
  auto in = [&](int v) { return std::binary_search(s.begin(), s.end(), v); };
  if (!in(rl.bottom()) || !in(rl.top())) return false;
  for (int x : s)
    for (int y : s)
      if (!in(rl.lattice.join(x, y)) || !in(rl.lattice.meet(x, y)) ||
          !in(rl.otimes(x, y)) || !in(rl.arrow(x, y)))
        return false;
  return true;
}

Subuniverse closure(const ResiduatedLattice& rl,
                    const std::vector<ElementId>& seed) {
  const int n = rl.size();
  std::vector<char> in(n, 0);
  in[rl.bottom()] = in[rl.top()] = 1;
  for (int x : seed) {
    if (x < 0 || x >= n) throw StructuralError("seed element out of range");
    in[x] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      if (!in[x]) continue;
      for (int y = 0; y < n; ++y) {
        if (!in[y]) continue;
        for (int v : {rl.lattice.join(x, y), rl.lattice.meet(x, y),
                      rl.otimes(x, y), rl.arrow(x, y)})
          if (!in[v]) {
            in[v] = 1;
            changed = true;
          }
      }
    }
  }
  Subuniverse out;
  for (int x = 0; x < n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<Subuniverse> enumerate_subuniverses(const ResiduatedLattice& rl,
                                                int cap) {
  const int n = rl.size();
  if (n > cap)
    throw CapExceededError("carrier size " + std::to_string(n) + " > cap " +
                           std::to_string(cap));
  std::vector<Subuniverse> out;
  // Scan every subset containing bottom and top.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << rl.bottom())) || !(mask & (1u << rl.top()))) continue;
    Subuniverse s;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) s.push_back(x);
    if (is_subuniverse(rl, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subuniverse& a, const Subuniverse& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<ElementId> neg_fixed(const ResiduatedLattice& rl) {
  std::vector<ElementId> image;
  for (int x = 0; x < rl.size(); ++x) image.push_back(rl.neg[x]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  std::vector<ElementId> fixed;
  for (int x = 0; x < rl.size(); ++x)
    if (rl.neg[rl.neg[x]] == x) fixed.push_back(x);
  // Triple negation forces these two sets to coincide.
  if (image != fixed)
    throw StructuralError("negation image differs from double-negation fixed points");
  return image;
}

std::vector<Subuniverse> find_tieable(const ResiduatedLattice& rl, int cap) {
  std::vector<Subuniverse> out;
  for (const Subuniverse& a : enumerate_subuniverses(rl, cap)) {
    Subuniverse b;
    for (int x : a) b.push_back(rl.neg[x]);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (!is_subuniverse(rl, b)) continue;
    bool de_morgan = true;
    for (int x : a) {
      for (int y : a)
        if (rl.neg[rl.otimes(x, y)] != rl.oplus(rl.neg[x], rl.neg[y])) {
          de_morgan = false;
          break;
        }
      if (!de_morgan) break;
    }
    if (de_morgan) out.push_back(a);
  }
  return out;
}

}  // namespace reslat
