#include "idiom/nuclei.hpp"

#include <algorithm>
#include <map>

#include "idiom/error.hpp"
#include "parallel.hpp"

namespace idiom {

InflatorClass classify(const LatticeMap& d) {
  if (!d.is_endomap()) throw Error(Errc::NotTotal, "classification needs a map from a lattice to itself");
  const auto& L = *d.domain();
  const auto n = static_cast<Elem>(L.size());
  InflatorClass c;
  c.inflator = true;
  for (Elem x = 0; x < n && c.inflator; ++x) {
    if (!L.leq(x, d(x))) c.inflator = false;
    for (Elem y = 0; y < n && c.inflator; ++y)
      if (L.leq(x, y) && !L.leq(d(x), d(y))) c.inflator = false;
  }
  if (!c.inflator) return c;
  c.stable = c.prenucleus = c.closure = true;
  for (Elem x = 0; x < n; ++x) {
    if (d(d(x)) != d(x)) c.closure = false;
    for (Elem y = 0; y < n; ++y) {
      if (!L.leq(L.meet(d(x), y), d(L.meet(x, y)))) c.stable = false;
      if (d(L.meet(x, y)) != L.meet(d(x), d(y))) c.prenucleus = false;
    }
  }
  c.nucleus = c.prenucleus && c.closure;
  return c;
}

Tower tower(const LatticeMap& d) {
  if (!classify(d).inflator) throw Error(Errc::NotInflator, "tower needs an inflator");
  auto cur = LatticeMap::identity(d.domain());
  std::size_t steps = 0;
  for (;;) {
    auto next = compose(d, cur);
    if (next == cur) break;
    cur = std::move(next);
    ++steps;
  }
  const auto& L = *d.domain();
  bool has_length = cur(L.bottom()) == L.top();
  return Tower{std::move(cur), steps, has_length};
}

NucleusLattice::NucleusLattice(LatticePtr base, LatticePtr lattice, std::vector<LatticeMap> nuclei)
    : base_(std::move(base)), lattice_(std::move(lattice)), nuclei_(std::move(nuclei)) {
  divisions_.reserve(nuclei_.size());
  for (const auto& j : nuclei_) divisions_.push_back(nucleus_to_division(j));
}

std::optional<Elem> NucleusLattice::find(const LatticeMap& j) const {
  for (Elem e = 0; e < nuclei_.size(); ++e)
    if (nuclei_[e] == j) return e;
  return std::nullopt;
}

Elem NucleusLattice::index_of(const LatticeMap& j) const {
  if (auto e = find(j)) return *e;
  throw Error(Errc::NotNucleus, "map " + j.to_string() + " is not a nucleus of " + base_->name());
}

Elem NucleusLattice::join_via_divisions(std::span<const Elem> family) const {
  IntervalSet u = IntervalSet::trivial(base_);
  for (auto e : family) u |= divisions_.at(e);
  return index_of(division_to_nucleus(dvs_closure(u)));
}

Elem NucleusLattice::meet_pointwise(std::span<const Elem> family) const {
  std::vector<Elem> t(base_->size());
  for (Elem x = 0; x < t.size(); ++x) {
    Elem v = base_->top();
    for (auto e : family) v = base_->meet(v, nuclei_.at(e)(x));
    t[x] = v;
  }
  return index_of(LatticeMap(base_, std::move(t)));
}

namespace {

struct NucleusSearch {
  const FiniteLattice& L;
  std::vector<Elem> table;
  std::vector<int> must_fix;  // count of earlier x with j(x) == this element
  std::vector<std::vector<Elem>>& out;

  void extend(Elem x) {
    const auto n = static_cast<Elem>(L.size());
    if (x == n) {
      out.push_back(table);
      return;
    }
    for (Elem v = x; v < n; ++v) {
      if (!L.leq(x, v)) continue;
      if (must_fix[x] > 0 && v != x) continue;
      bool ok = true;
      for (Elem y = 0; y < x && ok; ++y)
        ok = table[L.meet(x, y)] == L.meet(v, table[y]);
      if (!ok) continue;
      table[x] = v;
      if (v != x) ++must_fix[v];
      extend(x + 1);
      if (v != x) --must_fix[v];
    }
  }
};

}  // namespace

NucleusLattice enumerate_nuclei(LatticePtr A, std::size_t max_size) {
  const auto& L = *A;
  if (L.size() > max_size)
    throw Error(Errc::SizeLimit, "nucleus enumeration capped at " + std::to_string(max_size) + " elements");
  const auto n = static_cast<Elem>(L.size());

  // One branch per value of j(bottom).
  std::vector<std::vector<std::vector<Elem>>> per_root(n);
  const auto roots = static_cast<std::ptrdiff_t>(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t r = 0; r < roots; ++r) {
    NucleusSearch search{L, std::vector<Elem>(n, 0), std::vector<int>(n, 0), per_root[r]};
    const auto v = static_cast<Elem>(r);
    search.table[0] = v;
    if (v != 0) ++search.must_fix[v];
    if (n == 1) {
      per_root[r].push_back(search.table);
      continue;
    }
    search.extend(1);
  }

  std::vector<LatticeMap> found;
  for (auto& bucket : per_root)
    for (auto& t : bucket) found.emplace_back(A, std::move(t));
  for (const auto& j : found)
    if (!classify(j).nucleus)
      throw Error(Errc::InternalCheckFailed, "enumeration produced a non-nucleus " + j.to_string());

  const auto k = found.size();
  const auto width = std::to_string(k > 0 ? k - 1 : 0).size();
  std::vector<std::string> ids(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto s = std::to_string(i);
    ids[i] = "j" + std::string(width - s.size(), '0') + s;
  }
  std::vector<std::vector<bool>> order(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t m = 0; m < k; ++m) order[i][m] = found[i].leq(found[m]);
  auto NL = FiniteLattice::from_order(ids, order, "N(" + L.name() + ")");

  std::vector<LatticeMap> by_index;
  by_index.reserve(k);
  for (Elem e = 0; e < k; ++e) by_index.push_back(found.at(std::stoul(NL->id(e).substr(1))));
  return NucleusLattice(A, NL, std::move(by_index));
}

DivisionLattice::DivisionLattice(const NucleusLattice& nuclei) : base_(nuclei.base()) {
  const auto k = nuclei.size();
  std::vector<IntervalSet> sets;
  std::vector<std::string> ids;
  for (Elem e = 0; e < k; ++e) {
    sets.push_back(nuclei.division(e));
    ids.push_back("D" + nuclei.lattice()->id(e).substr(1));
  }
  std::vector<std::vector<bool>> order(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t m = 0; m < k; ++m) order[i][m] = sets[i].subset_of(sets[m]);
  lattice_ = FiniteLattice::from_order(ids, order, "D(" + base_->name() + ")");
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos[ids[i]] = i;
  sets_.reserve(k);
  for (Elem e = 0; e < k; ++e) sets_.push_back(sets[pos.at(lattice_->id(e))]);
}

std::optional<Elem> DivisionLattice::find(const IntervalSet& d) const {
  for (Elem e = 0; e < sets_.size(); ++e)
    if (sets_[e] == d) return e;
  return std::nullopt;
}

Elem DivisionLattice::index_of(const IntervalSet& d) const {
  if (auto e = find(d)) return *e;
  throw Error(Errc::NotDivision, d.to_short_string() + " is not a division set of " + base_->name());
}

LatticePtr quotient(const LatticeMap& j) {
  if (!classify(j).nucleus) throw Error(Errc::NotNucleus, j.to_string() + " is not a nucleus");
  const auto& L = *j.domain();
  std::vector<Elem> fixed;
  for (Elem x = 0; x < L.size(); ++x)
    if (j(x) == x) fixed.push_back(x);
  std::vector<std::string> ids;
  std::vector<std::vector<bool>> order(fixed.size(), std::vector<bool>(fixed.size()));
  for (std::size_t a = 0; a < fixed.size(); ++a) {
    ids.push_back(L.id(fixed[a]));
    for (std::size_t b = 0; b < fixed.size(); ++b) order[a][b] = L.leq(fixed[a], fixed[b]);
  }
  return FiniteLattice::from_order(ids, order, L.name() + "_j");
}

LatticeMap quotient_map(const LatticeMap& j, const LatticePtr& quotient_lattice) {
  std::vector<Elem> t(j.domain()->size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = quotient_lattice->index_of(j.domain()->id(j(x)));
  return LatticeMap(j.domain(), quotient_lattice, std::move(t));
}

IntervalSet nucleus_to_division(const LatticeMap& j) {
  if (!classify(j).nucleus) throw Error(Errc::NotNucleus, j.to_string() + " is not a nucleus");
  const auto& L = *j.domain();
  IntervalSet d(j.domain());
  for (auto iv : L.intervals())
    if (L.leq(iv.hi, j(iv.lo))) d.insert(iv);
  return d;
}

LatticeMap division_to_nucleus(const IntervalSet& d) {
  if (!is_division(d)) throw Error(Errc::NotDivision, d.to_short_string() + " is not a division set");
  return associated_inflator(d);
}

Elem chi(const NucleusLattice& nuclei, Interval iv) {
  const auto& L = *nuclei.base();
  const auto& NL = *nuclei.lattice();
  std::vector<Elem> satisfying;
  Elem result = NL.bottom();
  for (Elem e = 0; e < nuclei.size(); ++e)
    if (L.meet(nuclei.nucleus(e)(iv.lo), iv.hi) == iv.lo) {
      satisfying.push_back(e);
      result = NL.join(result, e);
    }
  const auto& j = nuclei.nucleus(result);
  if (L.meet(j(iv.lo), iv.hi) != iv.lo)
    throw Error(Errc::InternalCheckFailed, "chi" + L.interval_label(iv) + " violates its defining condition");
  for (auto e : satisfying)
    if (!NL.leq(e, result))
      throw Error(Errc::InternalCheckFailed, "chi" + L.interval_label(iv) + " is not the largest solution");
  return result;
}

}  // namespace idiom
