#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "idiom/allocations.hpp"
#include "idiom/intervals.hpp"
#include "idiom/nuclei.hpp"

namespace idiom {

/// |V| + 1, the least cardinal above the size of a finite value lattice.
std::size_t alpha_bound(const FiniteLattice& V);
/// The chain 0 < 1 < ... < alpha_bound(V), ids are the decimal indices.
LatticePtr ordinal_chain(const FiniteLattice& V);

/// A monotone V-valued sequence indexed 0..alpha_bound(V).
struct Seq {
  LatticePtr values;
  std::vector<Elem> terms;
  /// Least index from which the sequence is constant.
  std::size_t bnd = 0;
  /// terms[0] is the bottom and the last term is the top.
  bool normalized = false;

  Elem operator[](std::size_t i) const { return terms.at(i); }
  std::size_t last_index() const noexcept { return terms.size() - 1; }
};

/// A member of seq(V): monotone, bottom first, top last, of length
/// alpha_bound(V) + 1. Throws InvalidSeq.
Seq make_seq(LatticePtr values, std::vector<Elem> terms);
/// Monotone of the right length, bounds not required. Throws InvalidSeq.
Seq general_seq(LatticePtr values, std::vector<Elem> terms);
/// h(i) = alpha for every index.
Seq constant_seq(LatticePtr values, Elem alpha);
/// Pointwise meet of a nonempty family.
Seq seq_meet(std::span<const Seq> family);

struct DimAspect {
  IntervalValuedMap map;  ///< values in ordinal_chain(V)
  bool bounded = true;    ///< false when some infimum was empty and set to alpha_bound(V)
};

/// d(a,a) = 0, otherwise the least i with psi(a,b) <= h(i), alpha_bound(V)
/// when there is none. Throws InvalidAspect, InvalidSeq.
DimAspect dim_aspect(const IntervalValuedMap& psi, const Seq& h);

using SetOperator = std::function<IntervalSet(const IntervalSet&)>;

struct OprFiltration {
  std::vector<Elem> raw;  ///< the recursion at every index 0..alpha_bound
  Seq completed;          ///< raw with the last term forced to the top
  std::size_t bnd = 0;    ///< least index from which raw is constant
  bool reaches_top = false;
};

/// h(0) = alpha, h(i) = h(i-1) v (join of psi over Opr(M(psi, h(i-1)))).
/// Throws InvalidAspect, and NotBasicOperator when opr returns a set that is
/// not basic.
OprFiltration opr_filtration(const IntervalValuedMap& psi, Elem alpha, const SetOperator& opr);
OprFiltration opr_filtration(const IntervalValuedMap& psi, Elem alpha, Operator op);

/// K(0) = D, K(i+1) = Dvs(Opr(K(i))), for i up to last_index. Throws
/// NotDivision.
std::vector<IntervalSet> kpr_filtration(const IntervalSet& D, Operator op, std::size_t last_index);

struct Dimension {
  std::optional<std::size_t> value;  ///< nullopt when the filtration stops below all intervals
  std::vector<IntervalSet> trace;    ///< from D up to the first repeat or to all intervals
};

/// Least i with K(i) = all intervals for the given derivative. Throws
/// NotDivision.
Dimension filtration_dimension(const IntervalSet& D, Operator op);
/// Derivative Dvs . Crt.
Dimension gabriel_dimension(const IntervalSet& D);
/// Derivative Dvs . Fll.
Dimension boyle_dimension(const IntervalSet& D);

}  // namespace idiom
