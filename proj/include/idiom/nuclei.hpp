#pragma once

#include <optional>
#include <span>
#include <vector>

#include "idiom/intervals.hpp"
#include "idiom/lattice.hpp"
#include "idiom/lattice_map.hpp"

namespace idiom {

/// Flags of an element map on a lattice. Each flag other than `inflator`
/// is only set for inflators, so nucleus implies prenucleus and closure,
/// and prenucleus implies stable.
struct InflatorClass {
  bool inflator = false;    ///< x <= d(x), monotone
  bool stable = false;      ///< d(x) ^ y <= d(x ^ y)
  bool prenucleus = false;  ///< d(x ^ y) = d(x) ^ d(y)
  bool closure = false;     ///< idempotent
  bool nucleus = false;     ///< idempotent prenucleus
};

/// Throws NotTotal for maps between different lattices.
InflatorClass classify(const LatticeMap& d);

struct Tower {
  LatticeMap limit;        ///< the stabilised iterate, a closure operator
  std::size_t steps = 0;   ///< least k with d^k = d^(k+1)
  bool has_length = false; ///< limit sends bottom to top
};

/// Iterates d^0 = id, d^(k+1) = d . d^k until it stabilises. Throws
/// NotInflator.
Tower tower(const LatticeMap& d);

/// All nuclei of a lattice ordered pointwise, with the isomorphic lattice of
/// division sets available through division().
class NucleusLattice {
 public:
  NucleusLattice(LatticePtr base, LatticePtr lattice, std::vector<LatticeMap> nuclei);

  const LatticePtr& base() const noexcept { return base_; }
  /// The nuclei as a lattice under the pointwise order; element e of this
  /// lattice is nucleus(e).
  const LatticePtr& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return nuclei_.size(); }
  const std::vector<LatticeMap>& nuclei() const noexcept { return nuclei_; }
  const LatticeMap& nucleus(Elem e) const { return nuclei_.at(e); }
  /// Division set of nucleus(e), computed once.
  const IntervalSet& division(Elem e) const { return divisions_.at(e); }

  std::optional<Elem> find(const LatticeMap& j) const;
  /// Throws NotNucleus when j is not in the lattice.
  Elem index_of(const LatticeMap& j) const;

  /// Join of a family of nuclei, computed as the nucleus of the least
  /// division set containing the union of their division sets.
  Elem join_via_divisions(std::span<const Elem> family) const;
  /// Pointwise meet, which is always a nucleus.
  Elem meet_pointwise(std::span<const Elem> family) const;

 private:
  LatticePtr base_;
  LatticePtr lattice_;
  std::vector<LatticeMap> nuclei_;
  std::vector<IntervalSet> divisions_;
};

/// Exhaustive backtracking enumeration: the value at the bottom is chosen
/// first (in parallel), then every later value is constrained by meet
/// preservation against all earlier elements and by idempotence. Throws
/// SizeLimit when |A| exceeds max_size.
NucleusLattice enumerate_nuclei(LatticePtr A, std::size_t max_size = kDefaultMaxSize);

/// The lattice of division sets ordered by inclusion, element e matching
/// nucleus e of the given nucleus lattice.
class DivisionLattice {
 public:
  explicit DivisionLattice(const NucleusLattice& nuclei);

  const LatticePtr& base() const noexcept { return base_; }
  const LatticePtr& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const IntervalSet& set(Elem e) const { return sets_.at(e); }
  std::optional<Elem> find(const IntervalSet& d) const;
  /// Throws NotDivision when d is not one of the division sets.
  Elem index_of(const IntervalSet& d) const;

 private:
  LatticePtr base_;
  LatticePtr lattice_;
  std::vector<IntervalSet> sets_;
};

/// Fixed points of a nucleus with the induced order; ids are kept. Throws
/// NotNucleus.
LatticePtr quotient(const LatticeMap& j);
/// a |-> j(a) as a map from the base lattice onto quotient(j).
LatticeMap quotient_map(const LatticeMap& j, const LatticePtr& quotient_lattice);

/// [a,b] belongs iff b <= j(a). Throws NotNucleus.
IntervalSet nucleus_to_division(const LatticeMap& j);
/// The associated inflator of a division set. Throws NotDivision.
LatticeMap division_to_nucleus(const IntervalSet& d);

/// The largest nucleus j with j(lo) ^ hi = lo, as an element of N(A).
Elem chi(const NucleusLattice& nuclei, Interval iv);

}  // namespace idiom
