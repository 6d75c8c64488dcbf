#include "idiom/intervals.hpp"

#include <numeric>

#include "idiom/error.hpp"
#include "parallel.hpp"

namespace idiom {

IntervalSet::IntervalSet(LatticePtr lattice)
    : lattice_(std::move(lattice)), bits_(lattice_ ? lattice_->interval_count() : 0) {
  if (!lattice_) throw Error(Errc::InvalidInput, "interval set without a lattice");
}

IntervalSet IntervalSet::trivial(LatticePtr lattice) {
  IntervalSet s(lattice);
  for (Elem a = 0; a < lattice->size(); ++a) s.insert({a, a});
  return s;
}

IntervalSet IntervalSet::all(LatticePtr lattice) {
  IntervalSet s(std::move(lattice));
  s.bits_.set();
  return s;
}

IntervalSet IntervalSet::of(LatticePtr lattice, std::span<const Interval> members) {
  IntervalSet s(std::move(lattice));
  for (auto iv : members) s.insert(iv);
  return s;
}

bool IntervalSet::contains(Interval iv) const {
  auto k = lattice_->interval_id(iv.lo, iv.hi);
  return k && bits_.test(*k);
}

void IntervalSet::insert(Interval iv) { bits_.set(lattice_->interval_index(iv)); }

std::vector<Interval> IntervalSet::members() const {
  std::vector<Interval> out;
  out.reserve(size());
  for (auto k = bits_.find_first(); k != boost::dynamic_bitset<>::npos; k = bits_.find_next(k))
    out.push_back(lattice_->interval(k));
  return out;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  require_same_lattice(lattice_, other.lattice_);
  return bits_.is_subset_of(other.bits_);
}

IntervalSet& IntervalSet::operator|=(const IntervalSet& other) {
  require_same_lattice(lattice_, other.lattice_);
  bits_ |= other.bits_;
  return *this;
}

IntervalSet& IntervalSet::operator&=(const IntervalSet& other) {
  require_same_lattice(lattice_, other.lattice_);
  bits_ &= other.bits_;
  return *this;
}

bool IntervalSet::operator==(const IntervalSet& other) const {
  return bits_ == other.bits_ && same_lattice(lattice_, other.lattice_);
}

std::string IntervalSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto iv : members()) {
    if (!first) out += ", ";
    first = false;
    out += lattice_->interval_label(iv);
  }
  return out + "}";
}

std::string IntervalSet::to_short_string() const {
  const auto trivials = IntervalSet::trivial(lattice_);
  if (!trivials.subset_of(*this)) return to_string();
  if (bits_.all()) return "I(A)";
  std::string out = "O + {";
  bool first = true;
  for (auto iv : members()) {
    if (iv.trivial()) continue;
    if (!first) out += ", ";
    first = false;
    out += lattice_->interval_label(iv);
  }
  return out + "}";
}

bool similar(const FiniteLattice& L, Interval I, Interval J) {
  auto matches = [&](Interval left, Interval right) {
    // left = [l, l v r] fixes l; right = [l ^ r, r] fixes r.
    Elem l = left.lo, r = right.hi;
    return L.join(l, r) == left.hi && L.meet(l, r) == right.lo;
  };
  return matches(I, J) || matches(J, I);
}

namespace {

// Classes of the equivalence relation generated by similarity.
std::vector<std::size_t> similarity_classes(const FiniteLattice& L) {
  std::vector<std::size_t> parent(L.interval_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Elem l = 0; l < L.size(); ++l)
    for (Elem r = 0; r < L.size(); ++r) {
      auto a = find(*L.interval_id(l, L.join(l, r)));
      auto b = find(*L.interval_id(L.meet(l, r), r));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = find(k);
  return parent;
}

bool closed_under_similarity(const IntervalSet& s) {
  const auto& L = *s.lattice();
  for (Elem l = 0; l < L.size(); ++l)
    for (Elem r = 0; r < L.size(); ++r) {
      bool left = s.contains(l, L.join(l, r));
      bool right = s.contains(L.meet(l, r), r);
      if (left != right) return false;
    }
  return true;
}

bool closed_under_subintervals(const IntervalSet& s) {
  const auto& L = *s.lattice();
  for (auto iv : s.members())
    for (auto c : L.between(iv.lo, iv.hi)) {
      if (!s.contains(iv.lo, c) || !s.contains(c, iv.hi)) return false;
    }
  // [lo,c] and [c,hi] for every c generate all subintervals by iteration,
  // so checking them for every member is enough.
  return true;
}

bool closed_under_abutting(const IntervalSet& s) {
  const auto& L = *s.lattice();
  for (auto left : s.members())
    for (auto hi : L.above(left.hi))
      if (s.contains(left.hi, hi) && !s.contains(left.lo, hi)) return false;
  return true;
}

bool closed_under_base_joins(const IntervalSet& s) {
  const auto& L = *s.lattice();
  for (Elem a = 0; a < L.size(); ++a) {
    Elem j = a;
    for (auto x : L.above(a))
      if (s.contains(a, x)) j = L.join(j, x);
    if (!s.contains(a, j)) return false;
  }
  return true;
}

void require_basic(const IntervalSet& b) {
  if (!is_basic(b)) throw Error(Errc::NotBasic, "operand is not a basic interval set");
}

template <class Pred>
IntervalSet filter_intervals(const LatticePtr& L, Pred&& keep) {
  const auto m = static_cast<std::ptrdiff_t>(L->interval_count());
  std::vector<char> flags(static_cast<std::size_t>(m), 0);
  IDIOM_PARALLEL_FOR(m)
  for (std::ptrdiff_t k = 0; k < m; ++k) flags[k] = keep(L->interval(static_cast<std::size_t>(k))) ? 1 : 0;
  IntervalSet out(L);
  for (std::ptrdiff_t k = 0; k < m; ++k)
    if (flags[k]) out.insert_id(static_cast<std::size_t>(k));
  return out;
}

}  // namespace

LevelFlags level_flags(const IntervalSet& s) {
  LevelFlags f;
  f.abstract = !s.empty() && closed_under_similarity(s);
  f.basic = f.abstract && closed_under_subintervals(s);
  f.congruence = f.basic && closed_under_abutting(s);
  f.predivision = f.basic && closed_under_base_joins(s);
  f.division = f.congruence && f.predivision;
  return f;
}

Level level(const IntervalSet& s) {
  auto f = level_flags(s);
  if (f.division) return Level::division;
  if (f.congruence) return Level::congruence;
  if (f.basic) return Level::basic;
  if (f.abstract) return Level::abstract;
  return Level::raw;
}

std::string_view to_string(Level level) noexcept {
  switch (level) {
    case Level::raw: return "raw";
    case Level::abstract: return "abstract";
    case Level::basic: return "basic";
    case Level::congruence: return "congruence";
    case Level::division: return "division";
  }
  return "raw";
}

bool is_abstract(const IntervalSet& s) { return !s.empty() && closed_under_similarity(s); }
bool is_basic(const IntervalSet& s) { return is_abstract(s) && closed_under_subintervals(s); }
bool is_congruence(const IntervalSet& s) { return is_basic(s) && closed_under_abutting(s); }
bool is_division(const IntervalSet& s) { return is_congruence(s) && closed_under_base_joins(s); }

IntervalSet basic_closure(const IntervalSet& s) {
  const auto& L = *s.lattice();
  const auto classes = similarity_classes(L);
  IntervalSet cur = s | IntervalSet::trivial(s.lattice());
  for (;;) {
    IntervalSet next = cur;
    std::vector<char> touched(L.interval_count(), 0);
    for (auto k = cur.bits().find_first(); k != boost::dynamic_bitset<>::npos; k = cur.bits().find_next(k))
      touched[classes[k]] = 1;
    for (std::size_t k = 0; k < L.interval_count(); ++k)
      if (touched[classes[k]]) next.insert_id(k);
    for (auto iv : next.members())
      for (auto c : L.between(iv.lo, iv.hi)) {
        next.insert({iv.lo, c});
        next.insert({c, iv.hi});
      }
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

IntervalSet cng_closure(const IntervalSet& b) {
  const auto basic = basic_closure(b);
  const auto& L = *b.lattice();
  const auto n = L.size();
  std::vector<char> reach(n * n, 0);
  for (auto iv : basic.members()) reach[iv.lo * n + iv.hi] = 1;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      if (reach[a * n + m])
        for (std::size_t c = 0; c < n; ++c)
          if (reach[m * n + c]) reach[a * n + c] = 1;
  IntervalSet out(b.lattice());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (reach[a * n + c]) out.insert({static_cast<Elem>(a), static_cast<Elem>(c)});
  return out;
}

IntervalSet dvs_closure(const IntervalSet& b) {
  const auto basic = basic_closure(b);
  const auto& Lp = b.lattice();
  const auto& L = *Lp;
  // steps[x] = every y > x with [x,y] in the basic closure.
  std::vector<std::vector<Elem>> steps(L.size());
  for (auto iv : basic.members())
    if (!iv.trivial()) steps[iv.lo].push_back(iv.hi);
  return filter_intervals(Lp, [&](Interval iv) {
    for (auto x : L.between(iv.lo, iv.hi)) {
      if (x == iv.hi) continue;
      bool found = false;
      for (auto y : steps[x])
        if (L.leq(y, iv.hi)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  });
}

IntervalSet smp(const IntervalSet& b) {
  require_basic(b);
  const auto& L = *b.lattice();
  return filter_intervals(b.lattice(), [&](Interval iv) {
    for (auto x : L.between(iv.lo, iv.hi))
      if (!b.contains(iv.lo, x) && !b.contains(x, iv.hi)) return false;
    return true;
  });
}

IntervalSet cmp(const IntervalSet& b) {
  require_basic(b);
  const auto& L = *b.lattice();
  return filter_intervals(b.lattice(), [&](Interval iv) {
    const auto inside = L.between(iv.lo, iv.hi);
    for (auto x : inside) {
      bool found = false;
      for (auto y : inside)
        if (b.contains(iv.lo, L.meet(x, y)) && b.contains(L.join(x, y), iv.hi)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  });
}

IntervalSet crt(const IntervalSet& b) {
  require_basic(b);
  const auto& L = *b.lattice();
  return filter_intervals(b.lattice(), [&](Interval iv) {
    for (auto x : L.between(iv.lo, iv.hi))
      if (x != iv.lo && !b.contains(x, iv.hi)) return false;
    return true;
  });
}

IntervalSet fll(const IntervalSet& b) {
  require_basic(b);
  const auto& L = *b.lattice();
  return filter_intervals(b.lattice(), [&](Interval iv) {
    const auto inside = L.between(iv.lo, iv.hi);
    for (auto x : inside) {
      bool found = false;
      for (auto y : inside)
        if (L.meet(x, y) == iv.lo && b.contains(L.join(x, y), iv.hi)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  });
}

IntervalSet apply(Operator op, const IntervalSet& b) {
  switch (op) {
    case Operator::identity: return b;
    case Operator::smp: return smp(b);
    case Operator::cmp: return cmp(b);
    case Operator::crt: return crt(b);
    case Operator::fll: return fll(b);
  }
  return b;
}

std::string_view to_string(Operator op) noexcept {
  switch (op) {
    case Operator::identity: return "identity";
    case Operator::smp: return "smp";
    case Operator::cmp: return "cmp";
    case Operator::crt: return "crt";
    case Operator::fll: return "fll";
  }
  return "identity";
}

std::optional<Operator> parse_operator(std::string_view name) noexcept {
  for (auto op : {Operator::identity, Operator::smp, Operator::cmp, Operator::crt, Operator::fll})
    if (to_string(op) == name) return op;
  return std::nullopt;
}

LatticeMap associated_inflator(const IntervalSet& b) {
  require_basic(b);
  const auto& L = *b.lattice();
  std::vector<Elem> t(L.size());
  for (Elem a = 0; a < L.size(); ++a) {
    Elem j = a;
    for (auto x : L.above(a))
      if (b.contains(a, x)) j = L.join(j, x);
    t[a] = j;
  }
  return LatticeMap(b.lattice(), std::move(t));
}

}  // namespace idiom
