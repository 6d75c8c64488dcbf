#include "idiom/decomposition.hpp"

#include <algorithm>
#include <bit>

#include "idiom/error.hpp"
#include "idiom/fixtures.hpp"

namespace idiom {

AxiomCheck check_radical(const IntervalValuedMap& rho) {
  const auto& L = *rho.lattice();
  const auto& V = *rho.values();
  for (Elem l = 0; l < L.size(); ++l)
    for (Elem r = 0; r < L.size(); ++r)
      if (rho(l, L.join(l, r)) != rho(L.meet(l, r), r))
        return {false, 1, L.name() + ": " + L.interval_label({l, L.join(l, r)}) + " and " +
                              L.interval_label({L.meet(l, r), r}) + " are similar but differ"};
  for (auto [a, c] : L.intervals())
    for (auto b : L.between(a, c))
      if (!V.leq(rho(a, c), rho(a, b)))
        return {false, 2, L.name() + ": value at " + L.interval_label({a, c}) + " is not below the value at " +
                              L.interval_label({a, b})};
  return {};
}

bool is_radical(const IntervalValuedMap& rho) { return check_radical(rho).ok; }

bool is_stable(const IntervalValuedMap& rho, Interval iv) {
  const auto& L = *rho.lattice();
  if (!L.lt(iv.lo, iv.hi)) return false;
  const Elem v = rho(iv);
  for (auto x : L.between(iv.lo, iv.hi))
    if (x != iv.lo && rho(iv.lo, x) != v) return false;
  return true;
}

std::vector<Elem> support(const IntervalValuedMap& rho, Interval iv) {
  const auto& L = *rho.lattice();
  std::vector<Elem> out;
  for (auto x : L.between(iv.lo, iv.hi))
    if (is_stable(rho, {iv.lo, x})) out.push_back(rho(iv.lo, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SetValuedMap::SetValuedMap(LatticePtr lattice, LatticePtr omega, std::vector<std::uint64_t> table)
    : lattice_(std::move(lattice)), omega_(std::move(omega)), table_(std::move(table)) {
  if (omega_->size() > 64) throw Error(Errc::SizeLimit, "set-valued maps need at most 64 values");
  if (table_.size() != lattice_->interval_count()) throw Error(Errc::NotTotal, "set table has the wrong length");
}

std::vector<Elem> SetValuedMap::members(Interval iv) const {
  std::vector<Elem> out;
  auto bits = (*this)(iv);
  for (Elem e = 0; e < omega_->size(); ++e)
    if (bits >> e & 1) out.push_back(e);
  return out;
}

SetValuedMap support_map(const IntervalValuedMap& rho) {
  const auto& L = *rho.lattice();
  std::vector<std::uint64_t> t(L.interval_count(), 0);
  if (rho.values()->size() > 64) throw Error(Errc::SizeLimit, "set-valued maps need at most 64 values");
  for (std::size_t k = 0; k < t.size(); ++k)
    for (auto p : support(rho, L.interval(k))) t[k] |= std::uint64_t{1} << p;
  return SetValuedMap(rho.lattice(), rho.values(), std::move(t));
}

namespace {

bool contains_all(std::uint64_t big, std::uint64_t small) { return (small & ~big) == 0; }

std::string set_label(const SetValuedMap& f, std::uint64_t bits) {
  std::string s = "{";
  for (Elem e = 0; e < f.omega()->size(); ++e)
    if (bits >> e & 1) s += (s.size() > 1 ? "," : "") + f.omega()->id(e);
  return s + "}";
}

}  // namespace

AxiomCheck check_set_allocation(const SetValuedMap& f) {
  const auto& L = *f.lattice();
  for (Elem l = 0; l < L.size(); ++l)
    for (Elem r = 0; r < L.size(); ++r)
      if (f(l, L.join(l, r)) != f(L.meet(l, r), r))
        return {false, 1, L.name() + ": " + L.interval_label({l, L.join(l, r)}) + " and " +
                              L.interval_label({L.meet(l, r), r}) + " are similar but differ"};
  for (auto [a, b] : L.intervals())
    for (auto c : L.between(a, b))
      if (!contains_all(f(a, b), f(a, c)))
        return {false, 2, L.name() + ": " + set_label(f, f(a, c)) + " at " + L.interval_label({a, c}) +
                              " is not inside " + set_label(f, f(a, b)) + " at " + L.interval_label({a, b})};
  for (auto [a, b] : L.intervals())
    for (auto c : L.between(a, b))
      if (!contains_all(f(a, c) | f(c, b), f(a, b)))
        return {false, 3, L.name() + ": " + L.interval_label({a, b}) + " is not covered by " +
                              L.interval_label({a, c}) + L.interval_label({c, b})};
  for (Elem a = 0; a < L.size(); ++a)
    for (const auto& X : join_test_families(L, a)) {
      std::uint64_t u = 0;
      for (auto x : X) u |= f(a, x);
      if (f(a, L.join_all(X)) != u)
        return {false, 4, L.name() + ": union over a family above " + L.id(a) + " differs from the value at " +
                              L.interval_label({a, L.join_all(X)})};
    }
  return {};
}

IntervalValuedMap rho_from_allocation(const SetValuedMap& f) {
  const auto& O = *f.omega();
  std::vector<Elem> t(f.table().size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    Elem v = O.top();
    for (Elem e = 0; e < O.size(); ++e)
      if (f.table()[k] >> e & 1) v = O.meet(v, e);
    t[k] = v;
  }
  return IntervalValuedMap(f.lattice(), f.omega(), std::move(t), MapKind::radical);
}

SetValuedMap singleton_lift(const IntervalValuedMap& f) {
  std::vector<std::uint64_t> t(f.table().size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = std::uint64_t{1} << f.at_id(k);
  return SetValuedMap(f.lattice(), f.values(), std::move(t));
}

bool is_p_inertial(const IntervalValuedMap& phi, Elem p, Interval iv) { return phi(iv) == p && is_stable(phi, iv); }

IntervalValuedMap inert_indicator(const IntervalValuedMap& phi, Elem p) {
  const auto& L = *phi.lattice();
  std::vector<Elem> t(L.interval_count());
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto iv = L.interval(k);
    t[k] = iv.trivial() || is_p_inertial(phi, p, iv) ? 1 : 0;
  }
  return IntervalValuedMap(phi.lattice(), chain(2), std::move(t), MapKind::allocation);
}

IntervalSet inert_division_set(const IntervalValuedMap& phi, Elem p) {
  const auto& L = *phi.lattice();
  auto out = IntervalSet::trivial(phi.lattice());
  for (auto iv : L.intervals())
    if (is_p_inertial(phi, p, iv)) out.insert(iv);
  return out;
}

bool is_inertial_point(const IntervalValuedMap& phi, Elem p, Interval iv, Elem x) {
  const auto& L = *phi.lattice();
  if (!L.leq(iv.lo, x) || !L.leq(x, iv.hi) || !is_p_inertial(phi, p, {iv.lo, x})) return false;
  for (auto y : L.between(iv.lo, iv.hi))
    if (L.meet(x, y) == iv.lo && is_p_inertial(phi, p, {iv.lo, y})) return false;
  return true;
}

Elem find_inertial_point(const IntervalValuedMap& phi, Elem p, Interval iv, Elem z) {
  const auto& L = *phi.lattice();
  if (!L.leq(iv.lo, z) || !L.leq(z, iv.hi) || !is_p_inertial(phi, p, {iv.lo, z}))
    throw Error(Errc::NotInert, L.interval_label({iv.lo, z}) + " is not " + phi.values()->id(p) + "-inertial");
  Elem x = z;
  for (bool grew = true; grew;) {
    grew = false;
    for (auto y : L.between(iv.lo, iv.hi)) {
      if (L.meet(x, y) != iv.lo || !is_p_inertial(phi, p, {iv.lo, y})) continue;
      x = L.join(x, y);
      grew = true;
      break;
    }
  }
  if (!is_inertial_point(phi, p, iv, x))
    throw Error(Errc::InternalCheckFailed, "greedy extension ended at " + L.id(x) + ", which is not inertial");
  return x;
}

bool is_adequate(const IntervalValuedMap& phi) {
  for (auto iv : phi.lattice()->intervals())
    if (!iv.trivial() && support(phi, iv).empty()) return false;
  return true;
}

bool is_atomic(const IntervalValuedMap& phi, Interval iv) { return support(phi, iv).size() == 1; }

std::string_view to_string(Decomposition::Status s) noexcept {
  switch (s) {
    case Decomposition::Status::found: return "found";
    case Decomposition::Status::absent: return "absent";
    case Decomposition::Status::unknown: return "unknown";
  }
  return "?";
}

AxiomCheck verify_decomposition(const IntervalValuedMap& phi, Interval iv,
                                const std::vector<std::pair<Elem, Elem>>& parts) {
  const auto& L = *phi.lattice();
  const auto& V = *phi.values();
  auto sigma = support(phi, iv);
  std::vector<Elem> index, xs;
  for (auto [p, x] : parts) {
    index.push_back(p);
    xs.push_back(x);
  }
  std::sort(index.begin(), index.end());
  if (index != sigma) return {false, 0, "family is not indexed by the support"};
  for (auto [p, x] : parts) {
    if (!L.leq(iv.lo, x) || !L.leq(x, iv.hi) || !L.lt(iv.lo, x))
      return {false, 0, "part " + L.id(x) + " is not strictly above the base inside the interval"};
    if (!is_p_inertial(phi, p, {iv.lo, x}))
      return {false, 3, L.interval_label({iv.lo, x}) + " is not " + V.id(p) + "-inert"};
  }
  if (!is_independent_over(L, iv.lo, xs)) return {false, 1, "family is not independent over " + L.id(iv.lo)};
  if (!is_large(L, L.join_all(xs), iv))
    return {false, 2, L.id(L.join_all(xs)) + " is not large in " + L.interval_label(iv)};
  return {};
}

Decomposition find_decomposition(const IntervalValuedMap& phi, Interval iv, std::size_t exhaustive_cap) {
  const auto& L = *phi.lattice();
  const auto& V = *phi.values();
  Decomposition d;
  d.interval = iv;
  if (iv.trivial()) {
    d.status = Decomposition::Status::found;
    d.transcript = "trivial interval: empty family\n";
    return d;
  }
  auto sigma = support(phi, iv);
  for (auto p : sigma) {
    Elem z = iv.lo;
    for (auto x : L.between(iv.lo, iv.hi))
      if (is_p_inertial(phi, p, {iv.lo, x})) z = x;
    auto x = find_inertial_point(phi, p, iv, z);
    d.transcript += "p=" + V.id(p) + ": start " + L.id(z) + ", inertial point " + L.id(x) + "\n";
    d.parts.emplace_back(p, x);
  }
  auto check = verify_decomposition(phi, iv, d.parts);
  if (check) {
    d.status = Decomposition::Status::found;
    d.transcript += "verified: independent, large join, inert parts\n";
    return d;
  }
  d.transcript += "inertial points fail: " + check.witness + "\nexhaustive search\n";

  std::vector<std::vector<Elem>> candidates;
  for (auto p : sigma) {
    std::vector<Elem> c;
    for (auto x : L.between(iv.lo, iv.hi))
      if (is_p_inertial(phi, p, {iv.lo, x})) c.push_back(x);
    candidates.push_back(std::move(c));
  }
  std::vector<std::pair<Elem, Elem>> cur;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == sigma.size()) return verify_decomposition(phi, iv, cur).ok;
    for (auto x : candidates[i]) {
      cur.emplace_back(sigma[i], x);
      if (self(self, i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) {
    d.parts = cur;
    d.status = Decomposition::Status::found;
    d.transcript += "found by search\n";
    return d;
  }
  d.parts.clear();
  d.status = L.size() <= exhaustive_cap ? Decomposition::Status::absent : Decomposition::Status::unknown;
  d.transcript += "no family passes\n";
  return d;
}

}  // namespace idiom
