#include "idiom/dimension.hpp"

#include <algorithm>

#include "idiom/error.hpp"

namespace idiom {

std::size_t alpha_bound(const FiniteLattice& V) { return V.size() + 1; }

LatticePtr ordinal_chain(const FiniteLattice& V) {
  const auto n = alpha_bound(V) + 1;
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(std::to_string(i));
    if (i) covers.emplace_back(ids[i - 1], ids[i]);
  }
  return FiniteLattice::from_covers(ids, covers, "Inf(" + V.name() + ")");
}

namespace {

std::size_t bound_index(const std::vector<Elem>& t) {
  std::size_t b = t.size() - 1;
  while (b > 0 && t[b - 1] == t.back()) --b;
  return b;
}

}  // namespace

Seq general_seq(LatticePtr values, std::vector<Elem> terms) {
  const auto& V = *values;
  if (terms.size() != alpha_bound(V) + 1)
    throw Error(Errc::InvalidSeq, "sequence needs " + std::to_string(alpha_bound(V) + 1) + " terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] >= V.size()) throw Error(Errc::InvalidSeq, "term outside the value lattice");
    if (i && !V.leq(terms[i - 1], terms[i]))
      throw Error(Errc::InvalidSeq, "sequence decreases at index " + std::to_string(i));
  }
  Seq s{std::move(values), std::move(terms), 0, false};
  s.bnd = bound_index(s.terms);
  s.normalized = s.terms.front() == V.bottom() && s.terms.back() == V.top();
  return s;
}

Seq make_seq(LatticePtr values, std::vector<Elem> terms) {
  auto s = general_seq(std::move(values), std::move(terms));
  if (!s.normalized) throw Error(Errc::InvalidSeq, "sequence must start at the bottom and end at the top");
  return s;
}

Seq constant_seq(LatticePtr values, Elem alpha) {
  const auto n = alpha_bound(*values) + 1;
  return general_seq(std::move(values), std::vector<Elem>(n, alpha));
}

Seq seq_meet(std::span<const Seq> family) {
  if (family.empty()) throw Error(Errc::InvalidSeq, "meet of an empty family");
  auto t = family.front().terms;
  const auto& V = *family.front().values;
  for (const auto& h : family.subspan(1)) {
    require_same_lattice(family.front().values, h.values);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = V.meet(t[i], h.terms.at(i));
  }
  return general_seq(family.front().values, std::move(t));
}

DimAspect dim_aspect(const IntervalValuedMap& psi, const Seq& h) {
  if (auto c = check_aspect(psi); !c) throw Error(Errc::InvalidAspect, c.witness);
  if (!same_lattice(psi.values(), h.values)) throw Error(Errc::InvalidSeq, "sequence over a different lattice");
  general_seq(h.values, h.terms);
  const auto& L = *psi.lattice();
  const auto& V = *psi.values();
  const auto cap = static_cast<Elem>(alpha_bound(V));
  std::vector<Elem> t(L.interval_count(), 0);
  bool bounded = true;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (L.interval(k).trivial()) continue;
    Elem i = 0;
    while (i <= cap && !V.leq(psi.at_id(k), h.terms[i])) ++i;
    if (i > cap) {
      i = cap;
      bounded = false;
    }
    t[k] = i;
  }
  return {IntervalValuedMap(psi.lattice(), ordinal_chain(V), std::move(t), MapKind::aspect), bounded};
}

OprFiltration opr_filtration(const IntervalValuedMap& psi, Elem alpha, const SetOperator& opr) {
  const auto& V = *psi.values();
  const auto& L = *psi.lattice();
  const auto cap = alpha_bound(V);
  OprFiltration f;
  f.raw.push_back(alpha);
  for (std::size_t i = 1; i <= cap; ++i) {
    auto level = aspect_level_set(psi, f.raw.back());
    auto next = opr(level);
    if (!is_basic(next)) throw Error(Errc::NotBasicOperator, "operator output " + next.to_short_string() + " is not basic");
    Elem h = f.raw.back();
    for (std::size_t k = 0; k < L.interval_count(); ++k)
      if (next.contains_id(k)) h = V.join(h, psi.at_id(k));
    f.raw.push_back(h);
  }
  auto done = f.raw;
  done.back() = V.top();
  f.completed = general_seq(psi.values(), std::move(done));
  f.bnd = bound_index(f.raw);
  f.reaches_top = f.raw.back() == V.top();
  return f;
}

OprFiltration opr_filtration(const IntervalValuedMap& psi, Elem alpha, Operator op) {
  return opr_filtration(psi, alpha, [op](const IntervalSet& b) { return apply(op, b); });
}

std::vector<IntervalSet> kpr_filtration(const IntervalSet& D, Operator op, std::size_t last_index) {
  if (!is_division(D)) throw Error(Errc::NotDivision, D.to_short_string() + " is not a division set");
  std::vector<IntervalSet> out{D};
  for (std::size_t i = 1; i <= last_index; ++i) {
    out.push_back(dvs_closure(apply(op, out.back())));
    if (!is_division(out.back())) throw Error(Errc::InternalCheckFailed, "filtration term is not a division set");
  }
  return out;
}

Dimension filtration_dimension(const IntervalSet& D, Operator op) {
  if (!is_division(D)) throw Error(Errc::NotDivision, D.to_short_string() + " is not a division set");
  const auto all = IntervalSet::all(D.lattice());
  Dimension d;
  d.trace.push_back(D);
  for (;;) {
    if (d.trace.back() == all) {
      d.value = d.trace.size() - 1;
      return d;
    }
    auto next = dvs_closure(apply(op, d.trace.back()));
    if (next == d.trace.back()) return d;
    d.trace.push_back(std::move(next));
  }
}

Dimension gabriel_dimension(const IntervalSet& D) { return filtration_dimension(D, Operator::crt); }
Dimension boyle_dimension(const IntervalSet& D) { return filtration_dimension(D, Operator::fll); }

}  // namespace idiom
