#include "idiom/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "idiom/error.hpp"

namespace idiom {

namespace {

std::vector<std::size_t> depth_first_cycle_check(std::size_t n,
                                                 const std::vector<std::vector<std::size_t>>& succ) {
  // Kahn's algorithm; returns a topological order or throws.
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& out : succ)
    for (auto v : out) ++indeg[v];
  std::vector<std::size_t> queue, order;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    order.push_back(v);
    for (auto w : succ[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  if (order.size() != n) throw Error(Errc::CycleDetected, "cover relation contains a cycle");
  return order;
}

}  // namespace

LatticePtr FiniteLattice::from_covers(const std::vector<std::string>& elements,
                                      const std::vector<std::pair<std::string, std::string>>& covers,
                                      std::string name) {
  const std::size_t n = elements.size();
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) {
    if (!pos.emplace(elements[i], i).second)
      throw Error(Errc::InvalidInput, "duplicate element id '" + elements[i] + "'");
  }
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [lo, hi] : covers) {
    auto a = pos.find(lo), b = pos.find(hi);
    if (a == pos.end() || b == pos.end())
      throw Error(Errc::InvalidInput, "cover [" + lo + "," + hi + "] names an undeclared element");
    if (a->second == b->second) throw Error(Errc::InvalidInput, "self-cover on '" + lo + "'");
    succ[a->second].push_back(b->second);
  }
  auto topo = depth_first_cycle_check(n, succ);

  // Reflexive-transitive closure, propagated in reverse topological order.
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    auto v = *it;
    leq[v][v] = true;
    for (auto w : succ[v])
      for (std::size_t u = 0; u < n; ++u)
        if (leq[w][u]) leq[v][u] = true;
  }
  return from_order(elements, leq, std::move(name));
}

LatticePtr FiniteLattice::from_order(const std::vector<std::string>& elements,
                                     const std::vector<std::vector<bool>>& leq, std::string name) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(Errc::InvalidInput, "a lattice needs at least one element");
  if (leq.size() != n) throw Error(Errc::InvalidInput, "order relation has the wrong shape");
  for (const auto& row : leq)
    if (row.size() != n) throw Error(Errc::InvalidInput, "order relation has the wrong shape");
  {
    std::unordered_set<std::string> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second) throw Error(Errc::InvalidInput, "duplicate element id '" + e + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) throw Error(Errc::InvalidInput, "order is not reflexive at '" + elements[i] + "'");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw Error(Errc::CycleDetected, "'" + elements[i] + "' and '" + elements[j] + "' are mutually below");
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k]) throw Error(Errc::InvalidInput, "order is not transitive");
    }
  }

  // Longest-chain height; processing by size of the down-set is a linear extension.
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[j][i]) ++below[i];
  std::vector<std::size_t> by_below(n);
  std::iota(by_below.begin(), by_below.end(), 0);
  std::stable_sort(by_below.begin(), by_below.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  std::vector<std::size_t> height(n, 0);
  for (auto i : by_below)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && leq[j][i]) height[i] = std::max(height[i], height[j] + 1);

  // Canonical order: by height, then lexicographically by id.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return elements[a] < elements[b];
  });

  auto L = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  L->name_ = std::move(name);
  L->ids_.reserve(n);
  for (auto i : order) L->ids_.push_back(elements[i]);
  for (std::size_t k = 0; k < n; ++k) L->index_.emplace(L->ids_[k], static_cast<Elem>(k));
  L->height_.resize(n);
  L->leq_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    L->height_[a] = height[order[a]];
    for (std::size_t b = 0; b < n; ++b) L->leq_[a * n + b] = leq[order[a]][order[b]] ? 1 : 0;
  }

  bool has_bottom = true, has_top = true;
  for (std::size_t x = 0; x < n; ++x) {
    has_bottom = has_bottom && L->leq(0, static_cast<Elem>(x));
    has_top = has_top && L->leq(static_cast<Elem>(x), static_cast<Elem>(n - 1));
  }
  if (!has_bottom || !has_top) throw Error(Errc::NoBounds, "no global bottom or top");

  L->meet_.assign(n * n, 0);
  L->join_.assign(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      std::optional<Elem> glb, lub;
      for (Elem z = 0; z < n; ++z) {
        if (L->leq(z, x) && L->leq(z, y) && (!glb || L->leq(*glb, z))) glb = z;
        if (L->leq(x, z) && L->leq(y, z) && (!lub || L->leq(z, *lub))) lub = z;
      }
      // The candidates found above are maximal/minimal only along the scan;
      // confirm they bound every other lower/upper bound.
      for (Elem z = 0; z < n; ++z) {
        if (L->leq(z, x) && L->leq(z, y) && !L->leq(z, *glb))
          throw Error(Errc::NotALattice, "'" + L->ids_[x] + "' and '" + L->ids_[y] + "' have no meet");
        if (L->leq(x, z) && L->leq(y, z) && !L->leq(*lub, z))
          throw Error(Errc::NotALattice, "'" + L->ids_[x] + "' and '" + L->ids_[y] + "' have no join");
      }
      L->meet_[x * n + y] = L->meet_[y * n + x] = *glb;
      L->join_[x * n + y] = L->join_[y * n + x] = *lub;
    }
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!L->lt(x, y)) continue;
      bool cover = true;
      for (Elem z = 0; z < n && cover; ++z) cover = !(L->lt(x, z) && L->lt(z, y));
      if (cover) L->covers_.emplace_back(x, y);
    }

  L->interval_lookup_.assign(n * n, -1);
  for (Elem lo = 0; lo < n; ++lo)
    for (Elem hi = 0; hi < n; ++hi)
      if (L->leq(lo, hi)) {
        L->interval_lookup_[lo * n + hi] = static_cast<std::int32_t>(L->intervals_.size());
        L->intervals_.push_back({lo, hi});
      }
  return L;
}

std::optional<Elem> FiniteLattice::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem FiniteLattice::index_of(std::string_view id) const {
  if (auto x = find(id)) return *x;
  throw Error(Errc::InvalidInput, "unknown element '" + std::string(id) + "'");
}

Elem FiniteLattice::meet_all(std::span<const Elem> xs) const noexcept {
  Elem r = top();
  for (auto x : xs) r = meet(r, x);
  return r;
}

Elem FiniteLattice::join_all(std::span<const Elem> xs) const noexcept {
  Elem r = bottom();
  for (auto x : xs) r = join(r, x);
  return r;
}

bool FiniteLattice::covered_by(Elem x, Elem y) const noexcept {
  return std::binary_search(covers_.begin(), covers_.end(), std::pair{x, y});
}

std::optional<std::size_t> FiniteLattice::interval_id(Elem lo, Elem hi) const noexcept {
  if (lo >= size() || hi >= size()) return std::nullopt;
  auto k = interval_lookup_[lo * size() + hi];
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

std::size_t FiniteLattice::interval_index(Interval iv) const {
  if (auto k = interval_id(iv.lo, iv.hi)) return *k;
  throw Error(Errc::InvalidInterval, "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                                         "] is not an interval of " + name_);
}

std::vector<Elem> FiniteLattice::between(Elem lo, Elem hi) const {
  std::vector<Elem> out;
  for (Elem x = lo; x <= hi && x < size(); ++x)
    if (leq(lo, x) && leq(x, hi)) out.push_back(x);
  return out;
}

std::string FiniteLattice::interval_label(Interval iv) const {
  return "[" + id(iv.lo) + "," + id(iv.hi) + "]";
}

bool FiniteLattice::same_structure(const FiniteLattice& other) const noexcept {
  return ids_ == other.ids_ && leq_ == other.leq_;
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

void require_same_lattice(const LatticePtr& a, const LatticePtr& b) {
  if (!same_lattice(a, b))
    throw Error(Errc::MixedLattices, "operands live on different lattices");
}

bool is_modular(const FiniteLattice& L) {
  const auto n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      if (!L.leq(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (L.meet(L.join(a, c), b) != L.join(a, L.meet(c, b))) return false;
    }
  return true;
}

bool is_frame(const FiniteLattice& L) {
  const auto n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

std::optional<std::vector<Elem>> implication_table(const FiniteLattice& L) {
  const auto n = static_cast<Elem>(L.size());
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      // The only possible value is the join of everything that qualifies.
      Elem cand = L.bottom();
      for (Elem x = 0; x < n; ++x)
        if (L.leq(L.meet(x, b), a)) cand = L.join(cand, x);
      for (Elem x = 0; x < n; ++x)
        if (L.leq(x, cand) != L.leq(L.meet(x, b), a)) return std::nullopt;
      table[a * n + b] = cand;
    }
  return table;
}

bool is_independent_over(const FiniteLattice& L, Elem base, std::span<const Elem> family) {
  for (auto x : family)
    if (!L.leq(base, x))
      throw Error(Errc::ElementBelowBase, "'" + L.id(x) + "' is not above '" + L.id(base) + "'");
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i] == base) return false;
    Elem rest = base;
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) rest = L.join(rest, family[j]);
    if (L.meet(family[i], rest) != base) return false;
  }
  return true;
}

bool is_large(const FiniteLattice& L, Elem x, Interval iv) {
  if (!L.leq(iv.lo, x) || !L.leq(x, iv.hi))
    throw Error(Errc::OutOfInterval, "'" + L.id(x) + "' is outside " + L.interval_label(iv));
  for (auto y : L.between(iv.lo, iv.hi))
    if (L.meet(x, y) == iv.lo && y != iv.lo) return false;
  return true;
}

}  // namespace idiom
