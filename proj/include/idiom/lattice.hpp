#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace idiom {

/// Index of an element inside its FiniteLattice. Indices follow a linear
/// extension of the order: x < y implies index(x) < index(y). The bottom is
/// always 0 and the top is always size()-1.
using Elem = std::uint32_t;

struct Interval {
  Elem lo = 0;
  Elem hi = 0;

  bool trivial() const noexcept { return lo == hi; }
  auto operator<=>(const Interval&) const = default;
};

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// Default element cap for operations whose cost is exponential in |A|.
inline constexpr std::size_t kDefaultMaxSize = 12;

/// A finite bounded lattice with precomputed order, meet and join tables and
/// an enumeration of all intervals. Immutable after construction.
///
/// Every finite lattice is complete and upper-continuous, so each instance is
/// an idiom as soon as it is modular. Upper-continuity is never checked
/// separately for that reason.
class FiniteLattice {
 public:
  /// Builds a lattice from declared element ids and a list of (lower, upper)
  /// pairs whose reflexive-transitive closure is the order. The pairs need
  /// not be irredundant covers.
  static LatticePtr from_covers(const std::vector<std::string>& elements,
                                const std::vector<std::pair<std::string, std::string>>& covers,
                                std::string name = {});

  /// Builds a lattice from a full order relation, leq[i][j] meaning
  /// elements[i] <= elements[j].
  static LatticePtr from_order(const std::vector<std::string>& elements,
                               const std::vector<std::vector<bool>>& leq, std::string name = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return ids_.size(); }

  const std::string& id(Elem x) const { return ids_.at(x); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<Elem> find(std::string_view id) const;
  /// Throws InvalidInput for unknown ids.
  Elem index_of(std::string_view id) const;

  Elem bottom() const noexcept { return 0; }
  Elem top() const noexcept { return static_cast<Elem>(size() - 1); }

  bool leq(Elem x, Elem y) const noexcept { return leq_[x * size() + y] != 0; }
  bool lt(Elem x, Elem y) const noexcept { return x != y && leq(x, y); }
  Elem meet(Elem x, Elem y) const noexcept { return meet_[x * size() + y]; }
  Elem join(Elem x, Elem y) const noexcept { return join_[x * size() + y]; }

  /// Meet of a family; the empty meet is the top.
  Elem meet_all(std::span<const Elem> xs) const noexcept;
  /// Join of a family; the empty join is the bottom.
  Elem join_all(std::span<const Elem> xs) const noexcept;

  /// Length of the longest chain from the bottom to x.
  std::size_t height(Elem x) const { return height_.at(x); }
  /// Hasse diagram edges (x, y) with x covered by y, sorted.
  const std::vector<std::pair<Elem, Elem>>& covers() const noexcept { return covers_; }
  bool covered_by(Elem x, Elem y) const noexcept;

  std::size_t interval_count() const noexcept { return intervals_.size(); }
  Interval interval(std::size_t k) const { return intervals_.at(k); }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  /// Index of [lo,hi] in intervals(), or nullopt when lo is not below hi.
  std::optional<std::size_t> interval_id(Elem lo, Elem hi) const noexcept;
  /// Throws InvalidInterval when lo is not below hi.
  std::size_t interval_index(Interval iv) const;
  /// Elements x with lo <= x <= hi, in index order.
  std::vector<Elem> between(Elem lo, Elem hi) const;
  /// Elements x with lo <= x.
  std::vector<Elem> above(Elem lo) const { return between(lo, top()); }

  std::string interval_label(Interval iv) const;

  /// Same ids in the same positions with the same order.
  bool same_structure(const FiniteLattice& other) const noexcept;

 private:
  FiniteLattice() = default;

  std::string name_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<std::size_t> height_;
  std::vector<std::pair<Elem, Elem>> covers_;
  std::vector<Interval> intervals_;
  std::vector<std::int32_t> interval_lookup_;
};

/// Same object or same structure.
bool same_lattice(const LatticePtr& a, const LatticePtr& b) noexcept;
/// Throws MixedLattices when the two lattices differ.
void require_same_lattice(const LatticePtr& a, const LatticePtr& b);

/// Modular law (a v c) ^ b = a v (c ^ b) for all a <= b and all c.
bool is_modular(const FiniteLattice& L);

/// Frame distributive law. For a finite lattice the law over arbitrary
/// subsets reduces to binary distributivity, which is what is checked.
bool is_frame(const FiniteLattice& L);

/// Table of the implication x <= (a > b) <=> x ^ b <= a, indexed
/// [a * n + b], or nullopt when some pair has no implication.
std::optional<std::vector<Elem>> implication_table(const FiniteLattice& L);

/// Independence of a family over a base: every member lies strictly above
/// the base and meets the join of the others (taken over the base) in the
/// base. The empty family is independent. Throws ElementBelowBase.
bool is_independent_over(const FiniteLattice& L, Elem base, std::span<const Elem> family);

/// x is large in [lo,hi] when every y in the interval with y ^ x = lo is lo
/// itself. Throws OutOfInterval.
bool is_large(const FiniteLattice& L, Elem x, Interval iv);

}  // namespace idiom
