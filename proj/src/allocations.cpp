#include "idiom/allocations.hpp"

#include <algorithm>

#include "idiom/error.hpp"
#include "parallel.hpp"

namespace idiom {

std::string_view to_string(MapKind kind) noexcept {
  switch (kind) {
    case MapKind::raw: return "raw";
    case MapKind::allocation: return "allocation";
    case MapKind::aspect: return "aspect";
    case MapKind::radical: return "radical";
  }
  return "?";
}

IntervalValuedMap::IntervalValuedMap(LatticePtr lattice, LatticePtr values, std::vector<Elem> table, MapKind kind)
    : lattice_(std::move(lattice)), values_(std::move(values)), table_(std::move(table)), kind_(kind) {
  if (table_.size() != lattice_->interval_count())
    throw Error(Errc::NotTotal, "table has " + std::to_string(table_.size()) + " entries for " +
                                    std::to_string(lattice_->interval_count()) + " intervals");
  for (auto v : table_)
    if (v >= values_->size()) throw Error(Errc::NotTotal, "table leaves the value lattice");
}

IntervalValuedMap IntervalValuedMap::constant(LatticePtr lattice, LatticePtr values, Elem v, MapKind kind) {
  const auto m = lattice->interval_count();
  return IntervalValuedMap(std::move(lattice), std::move(values), std::vector<Elem>(m, v), kind);
}

bool IntervalValuedMap::operator==(const IntervalValuedMap& other) const {
  return same_lattice(lattice_, other.lattice_) && same_lattice(values_, other.values_) && table_ == other.table_;
}

bool IntervalValuedMap::leq(const IntervalValuedMap& other) const {
  require_same_lattice(lattice_, other.lattice_);
  require_same_lattice(values_, other.values_);
  for (std::size_t k = 0; k < table_.size(); ++k)
    if (!values_->leq(table_[k], other.table_[k])) return false;
  return true;
}

std::string IntervalValuedMap::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < table_.size(); ++k) {
    if (k) s += ", ";
    s += lattice_->interval_label(lattice_->interval(k)) + ">" + values_->id(table_[k]);
  }
  return s;
}

std::vector<std::vector<Elem>> join_test_families(const FiniteLattice& L, Elem base) {
  auto up = L.above(base);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == 4) return;
    for (std::size_t i = from; i < up.size(); ++i) {
      cur.push_back(up[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  if (up.size() > 4) out.push_back(up);
  return out;
}

namespace {

std::string label(const FiniteLattice& L, Elem a, Elem b) { return L.interval_label({a, b}); }

AxiomCheck fail(int axiom, std::string witness) { return AxiomCheck{false, axiom, std::move(witness)}; }

AxiomCheck check_transposition(const IntervalValuedMap& f) {
  const auto& L = *f.lattice();
  for (Elem l = 0; l < L.size(); ++l)
    for (Elem r = 0; r < L.size(); ++r) {
      Elem u = f(l, L.join(l, r)), v = f(L.meet(l, r), r);
      if (u != v)
        return fail(1, L.name() + ": " + label(L, l, L.join(l, r)) + " and " + label(L, L.meet(l, r), r) +
                           " are similar but take " + f.values()->id(u) + " and " + f.values()->id(v));
    }
  return {};
}

template <class Combine>
AxiomCheck check_joins(const IntervalValuedMap& f, int axiom, Combine combine) {
  const auto& L = *f.lattice();
  const auto& V = *f.values();
  const auto n = static_cast<std::ptrdiff_t>(L.size());
  std::vector<AxiomCheck> per_base(static_cast<std::size_t>(n));
  IDIOM_PARALLEL_FOR(n)
  for (std::ptrdiff_t ai = 0; ai < n; ++ai) {
    const auto a = static_cast<Elem>(ai);
    for (const auto& X : join_test_families(L, a)) {
      Elem acc = f(a, X.front());
      for (auto x : X) acc = combine(V, acc, f(a, x));
      const Elem j = L.join_all(X);
      if (f(a, j) != acc) {
        std::string xs;
        for (auto x : X) xs += (xs.empty() ? "" : ",") + L.id(x);
        per_base[a] = fail(axiom, L.name() + ": base " + L.id(a) + ", X={" + xs + "}, value at " +
                                      label(L, a, j) + " is " + V.id(f(a, j)) + " but the combination is " +
                                      V.id(acc));
        break;
      }
    }
  }
  for (auto& c : per_base)
    if (!c.ok) return c;
  return {};
}

}  // namespace

AxiomCheck check_allocation(const IntervalValuedMap& f) {
  const auto& L = *f.lattice();
  const auto& V = *f.values();
  if (auto c = check_transposition(f); !c) return c;
  for (auto [a, b] : L.intervals())
    for (auto c : L.between(a, b))
      if (!V.leq(f(a, b), f(a, c)))
        return fail(2, L.name() + ": value at " + label(L, a, b) + " is not below the value at " + label(L, a, c));
  for (auto [a, b] : L.intervals())
    for (auto c : L.between(a, b))
      if (!V.leq(V.meet(f(a, c), f(c, b)), f(a, b)))
        return fail(3, L.name() + ": meet over " + label(L, a, c) + label(L, c, b) + " exceeds the value at " +
                           label(L, a, b));
  return check_joins(f, 4, [](const FiniteLattice& V, Elem x, Elem y) { return V.meet(x, y); });
}

bool is_allocation(const IntervalValuedMap& f) { return check_allocation(f).ok; }

AxiomCheck check_aspect(const IntervalValuedMap& f) {
  const auto& L = *f.lattice();
  const auto& V = *f.values();
  if (auto c = check_transposition(f); !c) return c;
  for (auto [a, c] : L.intervals())
    for (auto b : L.between(a, c))
      if (V.join(f(a, b), f(b, c)) != f(a, c))
        return fail(2, L.name() + ": join over " + label(L, a, b) + label(L, b, c) + " differs from the value at " +
                           label(L, a, c));
  return check_joins(f, 3, [](const FiniteLattice& V, Elem x, Elem y) { return V.join(x, y); });
}

bool is_aspect(const IntervalValuedMap& f) { return check_aspect(f).ok; }

IntervalValuedMap constant_allocation(LatticePtr lattice, LatticePtr values, Elem alpha) {
  return IntervalValuedMap::constant(std::move(lattice), std::move(values), alpha, MapKind::allocation);
}

IntervalValuedMap constant_aspect(LatticePtr lattice, LatticePtr values, Elem alpha) {
  return IntervalValuedMap::constant(std::move(lattice), std::move(values), alpha, MapKind::aspect);
}

IntervalSet allocation_level_set(const IntervalValuedMap& phi, Elem alpha) {
  if (auto c = check_allocation(phi); !c) throw Error(Errc::InvalidAllocation, c.witness);
  const auto& L = *phi.lattice();
  const auto& V = *phi.values();
  IntervalSet out = IntervalSet::trivial(phi.lattice());
  for (auto [a, b] : L.intervals()) {
    bool in = true;
    for (auto x : L.between(a, b))
      if (!V.leq(alpha, phi(x, b))) {
        in = false;
        break;
      }
    if (in) out.insert({a, b});
  }
  if (!is_congruence(out))
    throw Error(Errc::InternalCheckFailed, "allocation level set at " + V.id(alpha) + " is not a congruence set");
  return out;
}

IntervalSet aspect_level_set(const IntervalValuedMap& psi, Elem alpha) {
  if (auto c = check_aspect(psi); !c) throw Error(Errc::InvalidAspect, c.witness);
  const auto& L = *psi.lattice();
  IntervalSet out = IntervalSet::trivial(psi.lattice());
  for (std::size_t k = 0; k < L.interval_count(); ++k)
    if (psi.values()->leq(psi.at_id(k), alpha)) out.insert_id(k);
  if (!is_congruence(out))
    throw Error(Errc::InternalCheckFailed,
                "aspect level set at " + psi.values()->id(alpha) + " is not a congruence set");
  return out;
}

IntervalValuedMap allocation_from_aspect(const IntervalValuedMap& psi) {
  if (auto c = check_aspect(psi); !c) throw Error(Errc::InvalidAspect, c.witness);
  const auto& V = *psi.values();
  const auto& L = *psi.lattice();
  std::vector<IntervalSet> closed;
  closed.reserve(V.size());
  for (Elem alpha = 0; alpha < V.size(); ++alpha) closed.push_back(dvs_closure(aspect_level_set(psi, alpha)));
  std::vector<Elem> t(L.interval_count(), V.bottom());
  for (std::size_t k = 0; k < t.size(); ++k)
    for (Elem alpha = 0; alpha < V.size(); ++alpha)
      if (closed[alpha].contains_id(k)) t[k] = V.join(t[k], alpha);
  return IntervalValuedMap(psi.lattice(), psi.values(), std::move(t), MapKind::allocation);
}

IntervalValuedMap chi_allocation(const NucleusLattice& nuclei) {
  const auto& L = *nuclei.base();
  const auto m = static_cast<std::ptrdiff_t>(L.interval_count());
  std::vector<Elem> t(static_cast<std::size_t>(m));
  IDIOM_PARALLEL_FOR(m)
  for (std::ptrdiff_t k = 0; k < m; ++k) t[k] = chi(nuclei, L.interval(static_cast<std::size_t>(k)));
  return IntervalValuedMap(nuclei.base(), nuclei.lattice(), std::move(t), MapKind::allocation);
}

IntervalSet xi(const LatticePtr& lattice, Interval iv) {
  IntervalSet s(lattice);
  s.insert(iv);
  return dvs_closure(basic_closure(s));
}

IntervalValuedMap xi_aspect(const DivisionLattice& divisions) {
  const auto& L = *divisions.base();
  const auto m = static_cast<std::ptrdiff_t>(L.interval_count());
  std::vector<Elem> t(static_cast<std::size_t>(m));
  IDIOM_PARALLEL_FOR(m)
  for (std::ptrdiff_t k = 0; k < m; ++k)
    t[k] = divisions.index_of(xi(divisions.base(), L.interval(static_cast<std::size_t>(k))));
  return IntervalValuedMap(divisions.base(), divisions.lattice(), std::move(t), MapKind::aspect);
}

IntervalValuedMap pullback(const LatticeMap& f, const IntervalValuedMap& g) {
  require_same_lattice(f.codomain(), g.lattice());
  if (!is_idiom_morphism(f)) throw Error(Errc::NotMorphism, f.to_string() + " is not an idiom morphism");
  const auto& A = *f.domain();
  std::vector<Elem> t(A.interval_count());
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto [a, b] = A.interval(k);
    t[k] = g(f(a), f(b));
  }
  return IntervalValuedMap(f.domain(), g.values(), std::move(t), g.kind());
}

IntervalValuedMap post_compose(const LatticeMap& rho, const IntervalValuedMap& g) {
  require_same_lattice(rho.domain(), g.values());
  std::vector<Elem> t(g.table().size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = rho(g.at_id(k));
  return IntervalValuedMap(g.lattice(), rho.codomain(), std::move(t));
}

namespace {

template <class Op>
IntervalValuedMap pointwise(std::span<const IntervalValuedMap> family, Op op) {
  if (family.empty()) throw Error(Errc::InvalidInput, "pointwise combination of an empty family");
  const auto& first = family.front();
  std::vector<Elem> t = first.table();
  for (const auto& g : family.subspan(1)) {
    require_same_lattice(first.lattice(), g.lattice());
    require_same_lattice(first.values(), g.values());
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = op(*first.values(), t[k], g.at_id(k));
  }
  return IntervalValuedMap(first.lattice(), first.values(), std::move(t));
}

}  // namespace

IntervalValuedMap pointwise_meet(std::span<const IntervalValuedMap> family) {
  return pointwise(family, [](const FiniteLattice& V, Elem x, Elem y) { return V.meet(x, y); });
}

IntervalValuedMap pointwise_join(std::span<const IntervalValuedMap> family) {
  return pointwise(family, [](const FiniteLattice& V, Elem x, Elem y) { return V.join(x, y); });
}

LatticeMap threshold_above(const LatticePtr& from, const LatticePtr& chain, std::span<const Elem> thresholds) {
  if (thresholds.size() + 1 != chain->size())
    throw Error(Errc::InvalidInput, "need one threshold per non-bottom chain element");
  std::vector<Elem> t(from->size());
  for (Elem x = 0; x < t.size(); ++x)
    t[x] = static_cast<Elem>(std::count_if(thresholds.begin(), thresholds.end(),
                                           [&](Elem u) { return from->leq(u, x); }));
  return LatticeMap(from, chain, std::move(t));
}

LatticeMap threshold_below(const LatticePtr& from, const LatticePtr& chain, std::span<const Elem> bounds) {
  if (bounds.size() != chain->size()) throw Error(Errc::InvalidInput, "need one bound per chain element");
  if (bounds.back() != from->top()) throw Error(Errc::InvalidInput, "the last bound must be the top");
  std::vector<Elem> t(from->size());
  for (Elem x = 0; x < t.size(); ++x) {
    Elem i = 0;
    while (!from->leq(x, bounds[i])) ++i;
    t[x] = i;
  }
  return LatticeMap(from, chain, std::move(t));
}

IntervalValuedMap random_allocation(const IntervalValuedMap& base, std::mt19937_64& rng) {
  const auto& N = *base.values();
  std::vector<IntervalValuedMap> parts;
  const int legs = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < legs; ++i) {
    auto k = static_cast<Elem>(rng() % N.size());
    std::vector<Elem> t(base.table().size());
    for (std::size_t m = 0; m < t.size(); ++m) t[m] = N.join(base.at_id(m), k);
    parts.emplace_back(base.lattice(), base.values(), std::move(t));
  }
  if (rng() % 2) parts.push_back(constant_allocation(base.lattice(), base.values(), static_cast<Elem>(rng() % N.size())));
  auto out = pointwise_meet(parts);
  out.set_kind(MapKind::allocation);
  return out;
}

IntervalValuedMap random_aspect(const IntervalValuedMap& base, std::mt19937_64& rng) {
  const auto& D = *base.values();
  const auto d1 = static_cast<Elem>(rng() % D.size());
  const auto d2 = rng() % 3 == 0 ? static_cast<Elem>(rng() % D.size()) : D.bottom();
  std::vector<Elem> t(base.table().size());
  for (std::size_t m = 0; m < t.size(); ++m) t[m] = D.join(D.meet(base.at_id(m), d1), d2);
  return IntervalValuedMap(base.lattice(), base.values(), std::move(t), MapKind::aspect);
}

}  // namespace idiom
