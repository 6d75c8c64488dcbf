#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "idiom/intervals.hpp"
#include "idiom/lattice.hpp"
#include "idiom/lattice_map.hpp"
#include "idiom/nuclei.hpp"

namespace idiom {

enum class MapKind { raw, allocation, aspect, radical };
std::string_view to_string(MapKind kind) noexcept;

/// A total function from the intervals of A to the elements of a value
/// lattice, stored by interval index. The kind is a label only; validity is
/// checked separately with check_allocation / check_aspect.
class IntervalValuedMap {
 public:
  /// Throws NotTotal when the table has the wrong length or leaves `values`.
  IntervalValuedMap(LatticePtr lattice, LatticePtr values, std::vector<Elem> table, MapKind kind = MapKind::raw);

  static IntervalValuedMap constant(LatticePtr lattice, LatticePtr values, Elem v, MapKind kind = MapKind::raw);

  const LatticePtr& lattice() const noexcept { return lattice_; }
  const LatticePtr& values() const noexcept { return values_; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  MapKind kind() const noexcept { return kind_; }
  void set_kind(MapKind kind) noexcept { kind_ = kind; }

  Elem operator()(Interval iv) const { return table_[lattice_->interval_index(iv)]; }
  Elem operator()(Elem lo, Elem hi) const { return (*this)(Interval{lo, hi}); }
  Elem at_id(std::size_t k) const { return table_.at(k); }

  /// Same lattices and same table; the kind label is ignored.
  bool operator==(const IntervalValuedMap& other) const;
  /// Pointwise order in the value lattice.
  bool leq(const IntervalValuedMap& other) const;

  /// "[0,m]>j1, ..." over every interval.
  std::string to_string() const;

 private:
  LatticePtr lattice_;
  LatticePtr values_;
  std::vector<Elem> table_;
  MapKind kind_;
};

/// Outcome of an axiom check: the first failing axiom (numbered as in the
/// definitions, 0 when ok) and a witness naming the intervals involved.
struct AxiomCheck {
  bool ok = true;
  int axiom = 0;
  std::string witness;
  explicit operator bool() const noexcept { return ok; }
};

/// (1) similar intervals get equal values, (2) f(a,b) <= f(a,c) for
/// a <= c <= b, (3) f(a,c) ^ f(c,b) <= f(a,b), (4) f(a, vX) = ^f(a,x) for
/// nonempty X above a, checked on subsets of size <= 4 and on the whole
/// of [a,1].
AxiomCheck check_allocation(const IntervalValuedMap& f);
bool is_allocation(const IntervalValuedMap& f);

/// (1) similar intervals get equal values, (2) f(a,b) v f(b,c) = f(a,c),
/// (3) f(a, vX) = vf(a,x) on the same family of subsets as above.
AxiomCheck check_aspect(const IntervalValuedMap& f);
bool is_aspect(const IntervalValuedMap& f);

/// Constant allocation S(alpha) and constant aspect R(alpha).
IntervalValuedMap constant_allocation(LatticePtr lattice, LatticePtr values, Elem alpha);
IntervalValuedMap constant_aspect(LatticePtr lattice, LatticePtr values, Elem alpha);

/// Level set of an allocation: the trivial intervals together with every
/// [a,b] with alpha <= f(x,b) for all x in [a,b]. Throws InvalidAllocation.
IntervalSet allocation_level_set(const IntervalValuedMap& phi, Elem alpha);
/// Level set of an aspect: the trivial intervals together with every [a,b]
/// with psi(a,b) <= alpha. Throws InvalidAspect.
IntervalSet aspect_level_set(const IntervalValuedMap& psi, Elem alpha);

/// H(psi)(a,b) = join of all alpha with [a,b] in Dvs(M(psi, alpha)).
/// Throws InvalidAspect.
IntervalValuedMap allocation_from_aspect(const IntervalValuedMap& psi);

/// chi as an N(A)-valued allocation.
IntervalValuedMap chi_allocation(const NucleusLattice& nuclei);
/// The least division set containing an interval.
IntervalSet xi(const LatticePtr& lattice, Interval iv);
/// xi as a D(A)-valued aspect.
IntervalValuedMap xi_aspect(const DivisionLattice& divisions);

/// g . I(f) for an idiom morphism f : A -> B and a map g on the intervals
/// of B. Keeps the kind of g. Throws NotMorphism, MixedLattices.
IntervalValuedMap pullback(const LatticeMap& f, const IntervalValuedMap& g);
/// rho . g for a map rho on the value lattice of g. The result is raw.
IntervalValuedMap post_compose(const LatticeMap& rho, const IntervalValuedMap& g);

/// Pointwise meet / join of a nonempty family over the same lattices.
IntervalValuedMap pointwise_meet(std::span<const IntervalValuedMap> family);
IntervalValuedMap pointwise_join(std::span<const IntervalValuedMap> family);

/// Map to a k-chain counting how many of the thresholds lie below the
/// argument. Meet-preserving and top-preserving when the thresholds are
/// increasing, so post-composition keeps allocations.
LatticeMap threshold_above(const LatticePtr& from, const LatticePtr& chain, std::span<const Elem> thresholds);
/// Map to a k-chain sending x to the least i with x <= bounds[i]; the last
/// bound must be the top. Join-preserving when the bounds are increasing,
/// so post-composition keeps aspects.
LatticeMap threshold_below(const LatticePtr& from, const LatticePtr& chain, std::span<const Elem> bounds);

/// A random allocation built from chi (over N(A), or any distributive value
/// lattice) by joins with constants, which preserve meets there, and meets
/// with constant allocations.
IntervalValuedMap random_allocation(const IntervalValuedMap& chi, std::mt19937_64& rng);
/// A random aspect (xi ^ R(d1)) v R(d2) over the value lattice of xi, with d2
/// often the bottom. The value lattice must be distributive.
IntervalValuedMap random_aspect(const IntervalValuedMap& xi, std::mt19937_64& rng);

/// Subsets of the elements above `base` used for the join axioms: all
/// nonempty subsets of size <= 4 and the full up-set.
std::vector<std::vector<Elem>> join_test_families(const FiniteLattice& L, Elem base);

}  // namespace idiom
