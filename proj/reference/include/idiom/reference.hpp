#pragma once

#include <optional>
#include <vector>

#include "idiom/intervals.hpp"
#include "idiom/lattice.hpp"
#include "idiom/lattice_map.hpp"

// Serial, definition-by-definition versions of the library kernels. They
// share only the containers with the main library and are used as test
// oracles and as the benchmark baseline.
namespace idiom::reference {

/// a ^ (vX) = v(a ^ x) for every a and every subset X. Exponential; meant for
/// n <= 12.
bool frame_law_all_subsets(const FiniteLattice& L);
/// Binary distributivity a ^ (b v c) = (a ^ b) v (a ^ c).
bool frame_law_binary(const FiniteLattice& L);
/// For every (a,b) searches an element c with x <= c <=> x ^ b <= a for all
/// x. Indexed [a * n + b].
std::optional<std::vector<Elem>> brute_implication(const FiniteLattice& L);

/// Repeats: add similar intervals and subintervals, until nothing changes.
IntervalSet basic_fixpoint(const IntervalSet& s);
/// Basic closure, then repeatedly adds abutting composites.
IntervalSet cng_fixpoint(const IntervalSet& s);
/// Alternates the congruence closure with adding [a, v{x : [a,x] in S}] for
/// every base, until stable.
IntervalSet dvs_fixpoint(const IntervalSet& s);

IntervalSet smp(const IntervalSet& b);
IntervalSet cmp(const IntervalSet& b);
IntervalSet crt(const IntervalSet& b);
IntervalSet fll(const IntervalSet& b);

/// Nuclei as closure operators of meet-closed subsets containing the top
/// whose closure preserves binary meets.
std::vector<LatticeMap> nuclei_by_fixed_sets(const LatticePtr& L);
/// Every map of the lattice to itself, filtered by the nucleus conditions.
/// Only for n <= 7.
std::vector<LatticeMap> nuclei_brute_force(const LatticePtr& L);

/// The largest nucleus j (pointwise) with j(lo) ^ hi = lo, found by scanning
/// a list of all nuclei.
LatticeMap chi(const std::vector<LatticeMap>& nuclei, Interval iv);
/// Least division set containing the interval, via dvs_fixpoint.
IntervalSet xi(const LatticePtr& L, Interval iv);

}  // namespace idiom::reference
