#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idiom/lattice.hpp"

namespace idiom {

/// n-element chain. Ids run 0, m (or m1, m2, ...), 1.
LatticePtr chain(std::size_t n);
LatticePtr one_point();
/// The Boolean square with ids 0, a, b, 1.
LatticePtr boolean_square();
/// The diamond with ids 0, a, b, c, 1.
LatticePtr diamond();
/// The pentagon 0 < a < c < 1, 0 < b < 1. Not modular.
LatticePtr pentagon();
/// Cartesian product ordered componentwise, ids "x.y".
LatticePtr product(const FiniteLattice& A, const FiniteLattice& B, std::string name = {});

/// Lattice of subgroups of Z/p^a1 + ... + Z/p^ak ordered by inclusion.
/// Ids are "0", "G" and "H<order>.<k>". Throws NotPrime, SizeLimit (group
/// order above max_order) and InvalidInput (empty or zero exponents).
LatticePtr subgroup_lattice(unsigned p, const std::vector<unsigned>& partition,
                            std::size_t max_order = 256);

/// Deterministic per seed: a random sublattice of one of a few modular base
/// lattices. Throws GenerationFailed, or SizeLimit above max_size.
LatticePtr random_modular(std::uint64_t seed, std::size_t size, std::size_t max_size = kDefaultMaxSize);

struct CorpusEntry {
  std::string name;
  LatticePtr lattice;
  std::string provenance;  ///< "named", "subgroup-lattice(p,[..])" or "random(seed)"
};

/// The standard corpus: C1..C4, B2, M3, B2xC2, M3xC2, the subgroup lattices
/// of Z4+Z2, Z9+Z3 and Z3+Z3, and `random_count` random modular lattices.
/// Every entry is checked to be modular.
std::vector<CorpusEntry> default_corpus(std::uint64_t seed = 1, std::size_t random_count = 3);

}  // namespace idiom
