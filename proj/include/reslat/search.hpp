#ifndef RESLAT_SEARCH_HPP
#define RESLAT_SEARCH_HPP

#include <string>
#include <vector>

#include "reslat/coupled.hpp"
#include "reslat/residuated.hpp"

namespace reslat {

/// Identifies an algebra up to isomorphism: the lexicographically minimal
/// concatenation of the join, meet and otimes tables over all relabelings
/// that send bottom to 0 and top to n-1.
using CanonicalKey = std::string;

CanonicalKey canonical_key(const ResiduatedLattice& rl);

/// True iff some bijection preserves join, meet and otimes (arrow is then
/// preserved automatically, being the unique residuum).
bool is_isomorphic(const ResiduatedLattice& a, const ResiduatedLattice& b);

/// All bounded lattices of size n up to isomorphism, in canonical order.
/// 2 <= n <= 6.
std::vector<BoundedLattice> enumerate_bounded_lattices(int n);

/// All commutative, associative, unit-top, residuable otimes tables on
/// the lattice, in lexicographic entry order. Prunes by forced rows,
/// commutativity and monotonicity before the associativity and
/// residuability tests.
std::vector<BinOpTable> enumerate_residuated(const BoundedLattice& lat);

struct CorpusTallies {
  int total = 0;
  int dnl = 0;
  int prelinear = 0;
  int divisible = 0;
  int mv = 0;
};

struct CorpusEntry {
  std::string name;
  ResiduatedLattice algebra;
  CanonicalKey key;
};

/// Pairwise non-isomorphic residuated lattices of every size in
/// [2, max_size], sorted by (size, canonical key).
struct Corpus {
  int max_size = 0;
  std::vector<CorpusEntry> entries;
};

Corpus build_corpus(int max_size, int threads = 1);

/// Runs the lemma suite on every member and the coupling round trips on
/// every member with double negation. Any failure is a finding about the
/// implementation, not the corpus.
CheckReport verify_corpus(const Corpus& corpus, CorpusTallies* tallies = nullptr,
                          int threads = 1);

}  // namespace reslat

#endif
