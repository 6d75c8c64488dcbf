#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "idiom/allocations.hpp"

namespace idiom {

/// (1) similar intervals get equal values, (2) rho(a,c) <= rho(a,b) for
/// a <= b <= c.
AxiomCheck check_radical(const IntervalValuedMap& rho);
bool is_radical(const IntervalValuedMap& rho);

/// lo < hi and rho(lo,x) = rho(lo,hi) for every lo < x <= hi.
bool is_stable(const IntervalValuedMap& rho, Interval iv);

/// Values rho(lo,x) over the stable [lo,x] with x in the interval, sorted.
std::vector<Elem> support(const IntervalValuedMap& rho, Interval iv);

/// A map from intervals to subsets of a value lattice Omega with at most 64
/// elements, read as a map into the powerset ordered by reverse inclusion.
class SetValuedMap {
 public:
  /// Throws SizeLimit when Omega has more than 64 elements, NotTotal on a
  /// table of the wrong length.
  SetValuedMap(LatticePtr lattice, LatticePtr omega, std::vector<std::uint64_t> table);

  const LatticePtr& lattice() const noexcept { return lattice_; }
  const LatticePtr& omega() const noexcept { return omega_; }
  const std::vector<std::uint64_t>& table() const noexcept { return table_; }
  std::uint64_t operator()(Interval iv) const { return table_[lattice_->interval_index(iv)]; }
  std::uint64_t operator()(Elem lo, Elem hi) const { return (*this)(Interval{lo, hi}); }
  std::vector<Elem> members(Interval iv) const;
  bool operator==(const SetValuedMap& other) const = default;

 private:
  LatticePtr lattice_;
  LatticePtr omega_;
  std::vector<std::uint64_t> table_;
};

SetValuedMap support_map(const IntervalValuedMap& rho);
/// Allocation axioms for a powerset value lattice under reverse inclusion:
/// meets are unions and the order is containment.
AxiomCheck check_set_allocation(const SetValuedMap& f);
/// rho(a,b) = meet of f(a,b), the empty meet being the top.
IntervalValuedMap rho_from_allocation(const SetValuedMap& f);
/// (a,b) |-> {f(a,b)}.
SetValuedMap singleton_lift(const IntervalValuedMap& f);

/// phi(iv) = p and iv is phi-stable.
bool is_p_inertial(const IntervalValuedMap& phi, Elem p, Interval iv);
/// 2-valued indicator of the p-inert intervals, also 1 on trivial ones.
IntervalValuedMap inert_indicator(const IntervalValuedMap& phi, Elem p);
/// The p-inert intervals together with the trivial ones.
IntervalSet inert_division_set(const IntervalValuedMap& phi, Elem p);

/// [lo,x] is p-inertial and no y in iv with x ^ y = lo has [lo,y] p-inertial.
bool is_inertial_point(const IntervalValuedMap& phi, Elem p, Interval iv, Elem x);
/// Starting from z, repeatedly joins the first y (in element order) with
/// x ^ y = lo and [lo,y] p-inertial. Throws NotInert unless z lies in iv and
/// [lo,z] is p-inertial.
Elem find_inertial_point(const IntervalValuedMap& phi, Elem p, Interval iv, Elem z);

/// Every nontrivial interval has a nonempty support.
bool is_adequate(const IntervalValuedMap& phi);
bool is_atomic(const IntervalValuedMap& phi, Interval iv);

struct Decomposition {
  enum class Status { found, absent, unknown };
  Status status = Status::absent;
  Interval interval;
  std::vector<std::pair<Elem, Elem>> parts;  ///< (p, x_p) in support order
  std::string transcript;
};
std::string_view to_string(Decomposition::Status s) noexcept;

/// Checks a candidate family: indexed by the whole support, independent over
/// lo, join large in iv, and every [lo,x_p] p-inert.
AxiomCheck verify_decomposition(const IntervalValuedMap& phi, Interval iv,
                                const std::vector<std::pair<Elem, Elem>>& parts);

/// One inertial point per support element, started from the largest stable
/// witness; falls back to exhaustive search over the p-inert candidates.
/// Absent is reported only for lattices of at most `exhaustive_cap`
/// elements, Unknown above that. A trivial interval gets the empty family.
Decomposition find_decomposition(const IntervalValuedMap& phi, Interval iv, std::size_t exhaustive_cap = 10);

}  // namespace idiom
