#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idiom/lattice.hpp"
#include "idiom/lattice_map.hpp"

namespace idiom {

/// A set of intervals of one lattice, stored as a bitset over
/// FiniteLattice::intervals(). Closure levels are never cached; they are
/// recomputed from the members on request.
class IntervalSet {
 public:
  explicit IntervalSet(LatticePtr lattice);

  /// All trivial intervals [a,a].
  static IntervalSet trivial(LatticePtr lattice);
  /// Every interval of the lattice.
  static IntervalSet all(LatticePtr lattice);
  static IntervalSet of(LatticePtr lattice, std::span<const Interval> members);

  const LatticePtr& lattice() const noexcept { return lattice_; }
  const boost::dynamic_bitset<>& bits() const noexcept { return bits_; }

  bool contains(Interval iv) const;
  bool contains(Elem lo, Elem hi) const { return contains(Interval{lo, hi}); }
  bool contains_id(std::size_t k) const { return bits_.test(k); }
  void insert(Interval iv);
  void insert_id(std::size_t k) { bits_.set(k); }

  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  std::vector<Interval> members() const;
  bool subset_of(const IntervalSet& other) const;

  IntervalSet& operator|=(const IntervalSet& other);
  IntervalSet& operator&=(const IntervalSet& other);
  friend IntervalSet operator|(IntervalSet a, const IntervalSet& b) { return a |= b; }
  friend IntervalSet operator&(IntervalSet a, const IntervalSet& b) { return a &= b; }
  bool operator==(const IntervalSet& other) const;

  /// "{[0,a], [b,1]}" using element ids.
  std::string to_string() const;
  /// Like to_string() but omits trivial intervals and says "O + {...}".
  std::string to_short_string() const;

 private:
  LatticePtr lattice_;
  boost::dynamic_bitset<> bits_;
};

/// Which closure conditions an interval set satisfies.
struct LevelFlags {
  bool abstract = false;     ///< nonempty, closed under similarity
  bool basic = false;        ///< abstract, closed under subintervals
  bool congruence = false;   ///< basic, closed under abutting
  bool predivision = false;  ///< basic, closed under joins over a fixed base
  bool division = false;     ///< congruence and pre-division
};

enum class Level { raw, abstract, basic, congruence, division };

LevelFlags level_flags(const IntervalSet& s);
Level level(const IntervalSet& s);
std::string_view to_string(Level level) noexcept;

bool is_abstract(const IntervalSet& s);
bool is_basic(const IntervalSet& s);
bool is_congruence(const IntervalSet& s);
bool is_division(const IntervalSet& s);

/// True iff there are l, r with {I, J} = {[l, l v r], [l ^ r, r]}.
bool similar(const FiniteLattice& L, Interval I, Interval J);

/// Smallest basic set containing s and all trivial intervals.
IntervalSet basic_closure(const IntervalSet& s);
/// Intervals that a finite chain partitions into steps from the basic
/// closure of b.
IntervalSet cng_closure(const IntervalSet& b);
/// Least division set containing b: [a,c] belongs iff every a <= x < c has
/// some x < y <= c with [x,y] in the basic closure of b.
IntervalSet dvs_closure(const IntervalSet& b);

/// b-simple: every x in [a,c] has [a,x] or [x,c] in b. Throws NotBasic.
IntervalSet smp(const IntervalSet& b);
/// b-complemented: every x has a y with [a, x^y] and [x v y, c] in b.
IntervalSet cmp(const IntervalSet& b);
/// b-critical: every x is a or has [x,c] in b.
IntervalSet crt(const IntervalSet& b);
/// b-full: every x has a y with x ^ y = a and [x v y, c] in b.
IntervalSet fll(const IntervalSet& b);

enum class Operator { identity, smp, cmp, crt, fll };
IntervalSet apply(Operator op, const IntervalSet& b);
std::string_view to_string(Operator op) noexcept;
std::optional<Operator> parse_operator(std::string_view name) noexcept;

/// a |-> join of every x with [a,x] in b. Throws NotBasic.
LatticeMap associated_inflator(const IntervalSet& b);

}  // namespace idiom
