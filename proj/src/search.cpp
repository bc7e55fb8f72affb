#include "reslat/search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <thread>

namespace reslat {

namespace {

// Runs fn(i) for i in [0, count) across `threads` workers. Each index is
// independent and results are written into preallocated slots, so the
// outcome does not depend on the partitioning.
template <class Fn>
void parallel_for(int count, int threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::string relabel_key(const ResiduatedLattice& rl, const std::vector<int>& sigma) {
  const int n = rl.size();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[sigma[i]] = i;
  std::string key;
  key.reserve(1 + 3 * n * n);
  key.push_back(static_cast<char>(n));
  for (const BinOpTable* t : {&rl.lattice.join, &rl.lattice.meet, &rl.otimes})
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        key.push_back(static_cast<char>(sigma[(*t)(inv[a], inv[b])]));
  return key;
}

}  // namespace

CanonicalKey canonical_key(const ResiduatedLattice& rl) {
  const int n = rl.size();
  std::vector<int> interior;
  for (int i = 0; i < n; ++i)
    if (i != rl.bottom() && i != rl.top()) interior.push_back(i);

  // Any isomorphism fixes bottom and top (they are order-definable), so
  // only interior relabelings are searched.
  std::string best;
  std::vector<int> perm = interior;
  do {
    std::vector<int> sigma(n);
    sigma[rl.bottom()] = 0;
    sigma[rl.top()] = n - 1;
    // perm[k] is the element placed at canonical slot 1+k.
    for (size_t k = 0; k < perm.size(); ++k) sigma[perm[k]] = 1 + static_cast<int>(k);
    std::string key = relabel_key(rl, sigma);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_isomorphic(const ResiduatedLattice& a, const ResiduatedLattice& b) {
  if (a.size() != b.size()) return false;
  return canonical_key(a) == canonical_key(b);
}

namespace {

using LeqMatrix = std::vector<std::uint8_t>;  // n*n, row-major

bool leq_at(const LeqMatrix& m, int n, int a, int b) {
  return m[static_cast<size_t>(a) * n + b] != 0;
}

// Joins and meets from an order matrix; false when some pair lacks a
// least upper bound or greatest lower bound.
bool order_to_lattice_tables(const LeqMatrix& m, int n, BinOpTable* join,
                             BinOpTable* meet) {
  *join = BinOpTable(n);
  *meet = BinOpTable(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int lub = -1;
      for (int c = 0; c < n; ++c) {
        if (!leq_at(m, n, a, c) || !leq_at(m, n, b, c)) continue;
        if (lub < 0 || leq_at(m, n, c, lub)) lub = c;
      }
      if (lub < 0) return false;
      for (int c = 0; c < n; ++c)
        if (leq_at(m, n, a, c) && leq_at(m, n, b, c) && !leq_at(m, n, lub, c))
          return false;
      join->at(a, b) = lub;

      int glb = -1;
      for (int c = 0; c < n; ++c) {
        if (!leq_at(m, n, c, a) || !leq_at(m, n, c, b)) continue;
        if (glb < 0 || leq_at(m, n, glb, c)) glb = c;
      }
      if (glb < 0) return false;
      for (int c = 0; c < n; ++c)
        if (leq_at(m, n, c, a) && leq_at(m, n, c, b) && !leq_at(m, n, c, glb))
          return false;
      meet->at(a, b) = glb;
    }
  return true;
}

std::string leq_canonical(const LeqMatrix& m, int n) {
  // Minimize the matrix bytes over permutations of interior elements
  // (slots 1..n-2); bottom is 0 and top is n-1 by construction here.
  std::vector<int> interior;
  for (int i = 1; i + 1 < n; ++i) interior.push_back(i);
  std::string best;
  std::vector<int> perm = interior;
  do {
    std::vector<int> sigma(n);
    sigma[0] = 0;
    sigma[n - 1] = n - 1;
    for (size_t k = 0; k < perm.size(); ++k) sigma[interior[k]] = perm[k];
    std::string key(static_cast<size_t>(n) * n, '\0');
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        key[static_cast<size_t>(sigma[a]) * n + sigma[b]] =
            leq_at(m, n, a, b) ? 1 : 0;
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::string> lattice_tokens(int n) {
  std::vector<std::string> toks;
  toks.push_back("0");
  for (int i = 1; i + 1 < n; ++i) toks.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  if (n > 1) toks.push_back("1");
  return toks;
}

}  // namespace

std::vector<BoundedLattice> enumerate_bounded_lattices(int n) {
  if (n < 2 || n > 6)
    throw StructuralError("lattice size out of supported range [2, 6]");

  // Candidate orders with element indices forming a linear extension:
  // i < j in the order implies i < j as indices. Bottom is 0, top n-1,
  // so only the relations between interior elements vary.
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 1; i + 1 < n; ++i)
    for (int j = i + 1; j + 1 < n; ++j) free_pairs.emplace_back(i, j);

  std::set<std::string> seen;
  std::vector<std::pair<std::string, LeqMatrix>> reps;

  for (unsigned mask = 0; mask < (1u << free_pairs.size()); ++mask) {
    LeqMatrix m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      m[static_cast<size_t>(i) * n + i] = 1;
      m[static_cast<size_t>(0) * n + i] = 1;
      m[static_cast<size_t>(i) * n + (n - 1)] = 1;
    }
    for (size_t k = 0; k < free_pairs.size(); ++k)
      if (mask & (1u << k))
        m[static_cast<size_t>(free_pairs[k].first) * n + free_pairs[k].second] = 1;

    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b) {
        if (!leq_at(m, n, a, b)) continue;
        for (int c = 0; c < n; ++c)
          if (leq_at(m, n, b, c) && !leq_at(m, n, a, c)) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;

    BinOpTable join, meet;
    if (!order_to_lattice_tables(m, n, &join, &meet)) continue;

    std::string key = leq_canonical(m, n);
    if (seen.insert(key).second) reps.emplace_back(std::move(key), std::move(m));
  }

  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<BoundedLattice> out;
  for (auto& [key, m] : reps) {
    // Rebuild from the canonical matrix so the output labeling is itself
    // canonical.
    LeqMatrix cm(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        cm[static_cast<size_t>(a) * n + b] = key[static_cast<size_t>(a) * n + b];
    BinOpTable join, meet;
    order_to_lattice_tables(cm, n, &join, &meet);
    auto built = build_lattice(lattice_tokens(n), join, meet, 0, n - 1);
    if (!built.ok())
      throw StructuralError("enumerated order failed lattice validation");
    out.push_back(std::move(*built.value));
  }
  return out;
}

std::vector<BinOpTable> enumerate_residuated(const BoundedLattice& lat) {
  const int n = lat.size();
  if (n > 6) throw StructuralError("lattice size out of supported range [2, 6]");
  const int bot = lat.bottom, top = lat.top;

  std::vector<std::pair<int, int>> cells;  // free cells, i <= j, interior only
  for (int i = 0; i < n; ++i) {
    if (i == bot || i == top) continue;
    for (int j = i; j < n; ++j) {
      if (j == bot || j == top) continue;
      cells.emplace_back(i, j);
    }
  }

  std::vector<int> assigned(cells.size(), -1);
  std::vector<BinOpTable> out;

  auto value_of = [&](int x, int y, bool* known) -> int {
    *known = true;
    if (x == bot || y == bot) return bot;
    if (x == top) return y;
    if (y == top) return x;
    const int a = std::min(x, y), b = std::max(x, y);
    for (size_t k = 0; k < cells.size(); ++k)
      if (cells[k].first == a && cells[k].second == b) {
        if (assigned[k] < 0) {
          *known = false;
          return -1;
        }
        return assigned[k];
      }
    *known = false;
    return -1;
  };

  auto emit_if_valid = [&]() {
    BinOpTable t(n);
    bool known;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t.at(x, y) = value_of(x, y, &known);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t(t(a, b), c) != t(a, t(b, c))) return;
    try {
      (void)derive_arrow(lat, t);
    } catch (const NoResiduumError&) {
      return;
    }
    out.push_back(std::move(t));
  };

  auto consistent = [&](size_t k, int v) {
    const auto [i, j] = cells[k];
    // x*y <= x^y holds in every residuable table; safe domain cut.
    if (!lat.leq(v, lat.meet(i, j))) return false;
    // Monotonicity against every already assigned cell, both operand
    // orders (the table is commutative).
    for (size_t p = 0; p < k; ++p) {
      const int u = assigned[p];
      for (auto [x, y] : {cells[p], std::pair<int, int>{cells[p].second, cells[p].first}}) {
        if (lat.leq(x, i) && lat.leq(y, j) && !lat.leq(u, v)) return false;
        if (lat.leq(i, x) && lat.leq(j, y) && !lat.leq(v, u)) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == cells.size()) {
      emit_if_valid();
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!consistent(k, v)) continue;
      assigned[k] = v;
      self(self, k + 1);
      assigned[k] = -1;
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const BinOpTable& a, const BinOpTable& b) {
    return a.entries() < b.entries();
  });
  return out;
}

Corpus build_corpus(int max_size, int threads) {
  if (max_size < 2 || max_size > 6)
    throw CapExceededError("corpus size must be in [2, 6]");

  Corpus corpus;
  corpus.max_size = max_size;
  for (int n = 2; n <= max_size; ++n) {
    auto lattices = enumerate_bounded_lattices(n);
    std::vector<std::vector<ResiduatedLattice>> per_lattice(lattices.size());
    parallel_for(static_cast<int>(lattices.size()), threads, [&](int i) {
      for (const BinOpTable& ot : enumerate_residuated(lattices[i])) {
        BinOpTable arrow = derive_arrow(lattices[i], ot);
        per_lattice[i].push_back(
            make_residuated_unchecked(lattices[i], ot, std::move(arrow)));
      }
    });

    // Distinct tables on one lattice can still be conjugate under a
    // lattice automorphism; dedupe across the whole size class.
    std::map<CanonicalKey, ResiduatedLattice> by_key;
    for (auto& group : per_lattice)
      for (auto& rl : group) by_key.emplace(canonical_key(rl), std::move(rl));

    int idx = 0;
    for (auto& [key, rl] : by_key) {
      CorpusEntry e;
      e.name = "rl" + std::to_string(n) + "_" +
               (idx < 10 ? "0" : "") + std::to_string(idx);
      e.algebra = std::move(rl);
      e.key = key;
      corpus.entries.push_back(std::move(e));
      ++idx;
    }
  }
  return corpus;
}

CheckReport verify_corpus(const Corpus& corpus, CorpusTallies* tallies,
                          int threads) {
  const int count = static_cast<int>(corpus.entries.size());
  std::vector<CheckReport> parts(count);
  std::vector<std::array<bool, 4>> flags(count);  // dnl, prelinear, divisible, mv

  parallel_for(count, threads, [&](int i) {
    const auto& e = corpus.entries[i];
    CheckReport r;

    CheckReport lemmas = verify_lemma_suite(e.algebra);
    Check lc = Check::pass(e.name + ".lemma_suite");
    if (!lemmas.ok()) {
      lc.status = Status::Fail;
      for (const auto& chk : lemmas.checks)
        if (chk.status == Status::Fail)
          for (const auto& w : chk.witnesses) {
            Witness copy = w;
            copy.note = chk.name;
            lc.witnesses.push_back(std::move(copy));
          }
    }
    r.add(std::move(lc));

    const bool dnl = has_double_negation(e.algebra);
    if (dnl) {
      Check rc = Check::pass(e.name + ".roundtrips");
      CheckReport cg = check_general_coupled(couple(e.algebra));
      CheckReport rt1 = roundtrip_lattice(e.algebra);
      CheckReport rt2 = roundtrip_coupled(couple(e.algebra));
      if (!cg.ok() || !rt1.ok() || !rt2.ok()) rc.status = Status::Fail;
      r.add(std::move(rc));
    } else {
      r.add(Check::skip(e.name + ".roundtrips"));
    }

    flags[i] = {dnl, check_prelinearity(e.algebra).ok(),
                check_divisibility(e.algebra).ok(), false};
    flags[i][3] = flags[i][0] && flags[i][1] && flags[i][2];
    parts[i] = std::move(r);
  });

  CheckReport out;
  CorpusTallies t;
  t.total = count;
  for (int i = 0; i < count; ++i) {
    out.merge(parts[i]);
    if (flags[i][0]) ++t.dnl;
    if (flags[i][1]) ++t.prelinear;
    if (flags[i][2]) ++t.divisible;
    if (flags[i][3]) ++t.mv;
  }
  if (tallies) *tallies = t;
  return out;
}

}  // namespace reslat
