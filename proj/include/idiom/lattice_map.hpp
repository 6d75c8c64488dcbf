#pragma once

#include <string>
#include <vector>

#include "idiom/lattice.hpp"

namespace idiom {

/// A total function between the elements of two finite lattices, stored as
/// a table. Maps with domain == codomain are the inflators, nuclei and
/// closure operators of a lattice; maps between different lattices are used
/// for pullbacks and for post-composition on value lattices.
class LatticeMap {
 public:
  /// Throws NotTotal when the table has the wrong length or leaves the
  /// codomain.
  LatticeMap(LatticePtr domain, LatticePtr codomain, std::vector<Elem> table);
  LatticeMap(LatticePtr on, std::vector<Elem> table) : LatticeMap(on, on, std::move(table)) {}

  static LatticeMap identity(LatticePtr on);
  /// The constant-top map.
  static LatticeMap top_map(LatticePtr on);
  static LatticeMap constant(LatticePtr domain, LatticePtr codomain, Elem value);

  Elem operator()(Elem x) const { return table_[x]; }
  const LatticePtr& domain() const noexcept { return domain_; }
  const LatticePtr& codomain() const noexcept { return codomain_; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  bool is_endomap() const noexcept { return same_lattice(domain_, codomain_); }

  /// Pointwise order; both maps must share domain and codomain.
  bool leq(const LatticeMap& other) const;
  bool operator==(const LatticeMap& other) const;

  /// "x>y" pairs in domain order, e.g. "0>m, m>m, 1>1".
  std::string to_string() const;

 private:
  LatticePtr domain_;
  LatticePtr codomain_;
  std::vector<Elem> table_;
};

/// outer . inner
LatticeMap compose(const LatticeMap& outer, const LatticeMap& inner);

/// Preserves bottom, top, binary meets and binary joins. Finite joins
/// suffice since the lattices are finite.
bool is_idiom_morphism(const LatticeMap& f);

}  // namespace idiom
