#include "idiom/reference.hpp"

#include "idiom/error.hpp"

namespace idiom::reference {

bool frame_law_all_subsets(const FiniteLattice& L) {
  const auto n = L.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Elem j = L.bottom();
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1) j = L.join(j, x);
    for (Elem a = 0; a < n; ++a) {
      Elem rhs = L.bottom();
      for (Elem x = 0; x < n; ++x)
        if (mask >> x & 1) rhs = L.join(rhs, L.meet(a, x));
      if (L.meet(a, j) != rhs) return false;
    }
  }
  return true;
}

bool frame_law_binary(const FiniteLattice& L) {
  const auto n = L.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

std::optional<std::vector<Elem>> brute_implication(const FiniteLattice& L) {
  const auto n = L.size();
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      bool found = false;
      for (Elem c = 0; c < n && !found; ++c) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) ok = L.leq(x, c) == L.leq(L.meet(x, b), a);
        if (ok) {
          t[a * n + b] = c;
          found = true;
        }
      }
      if (!found) return std::nullopt;
    }
  return t;
}

IntervalSet basic_fixpoint(const IntervalSet& s) {
  const auto& L = *s.lattice();
  auto out = s | IntervalSet::trivial(s.lattice());
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [a, b] : out.members()) {
      for (auto x : L.between(a, b))
        for (auto y : L.between(x, b))
          if (!out.contains(x, y)) {
            out.insert({x, y});
            grew = true;
          }
      // [a,b] = [l ^ r, r] is similar to [l, l v r]; [a,b] = [l, l v r] to [l ^ r, r].
      for (Elem l = 0; l < L.size(); ++l) {
        if (L.meet(l, b) == a && !out.contains(l, L.join(l, b))) {
          out.insert({l, L.join(l, b)});
          grew = true;
        }
        if (l == a)
          for (Elem r = 0; r < L.size(); ++r)
            if (L.join(a, r) == b && !out.contains(L.meet(a, r), r)) {
              out.insert({L.meet(a, r), r});
              grew = true;
            }
      }
    }
  }
  return out;
}

IntervalSet cng_fixpoint(const IntervalSet& s) {
  auto out = basic_fixpoint(s);
  for (bool grew = true; grew;) {
    grew = false;
    auto ms = out.members();
    for (auto [a, b] : ms)
      for (auto [c, d] : ms)
        if (b == c && !out.contains(a, d)) {
          out.insert({a, d});
          grew = true;
        }
  }
  return out;
}

IntervalSet dvs_fixpoint(const IntervalSet& s) {
  const auto& L = *s.lattice();
  auto out = cng_fixpoint(s);
  for (;;) {
    auto next = out;
    for (Elem a = 0; a < L.size(); ++a) {
      Elem j = a;
      for (auto x : L.above(a))
        if (out.contains(a, x)) j = L.join(j, x);
      next.insert({a, j});
    }
    next = cng_fixpoint(next);
    if (next == out) return out;
    out = std::move(next);
  }
}

namespace {

template <class Pred>
IntervalSet literal(const IntervalSet& b, Pred keep) {
  if (!is_basic(b)) throw Error(Errc::NotBasic, b.to_short_string() + " is not basic");
  IntervalSet out(b.lattice());
  for (auto iv : b.lattice()->intervals())
    if (keep(*b.lattice(), iv)) out.insert(iv);
  return out;
}

}  // namespace

IntervalSet smp(const IntervalSet& b) {
  return literal(b, [&](const FiniteLattice& L, Interval iv) {
    for (auto x : L.between(iv.lo, iv.hi))
      if (!b.contains(iv.lo, x) && !b.contains(x, iv.hi)) return false;
    return true;
  });
}

IntervalSet cmp(const IntervalSet& b) {
  return literal(b, [&](const FiniteLattice& L, Interval iv) {
    for (auto x : L.between(iv.lo, iv.hi)) {
      bool found = false;
      for (auto y : L.between(iv.lo, iv.hi))
        if (b.contains(iv.lo, L.meet(x, y)) && b.contains(L.join(x, y), iv.hi)) found = true;
      if (!found) return false;
    }
    return true;
  });
}

IntervalSet crt(const IntervalSet& b) {
  return literal(b, [&](const FiniteLattice& L, Interval iv) {
    for (auto x : L.between(iv.lo, iv.hi))
      if (x != iv.lo && !b.contains(x, iv.hi)) return false;
    return true;
  });
}

IntervalSet fll(const IntervalSet& b) {
  return literal(b, [&](const FiniteLattice& L, Interval iv) {
    for (auto x : L.between(iv.lo, iv.hi)) {
      bool found = false;
      for (auto y : L.between(iv.lo, iv.hi))
        if (L.meet(x, y) == iv.lo && b.contains(L.join(x, y), iv.hi)) found = true;
      if (!found) return false;
    }
    return true;
  });
}

namespace {

bool nucleus_conditions(const FiniteLattice& L, const std::vector<Elem>& t) {
  for (Elem x = 0; x < L.size(); ++x) {
    if (!L.leq(x, t[x]) || t[t[x]] != t[x]) return false;
    for (Elem y = 0; y < L.size(); ++y)
      if (t[L.meet(x, y)] != L.meet(t[x], t[y])) return false;
  }
  return true;
}

}  // namespace

std::vector<LatticeMap> nuclei_by_fixed_sets(const LatticePtr& Lp) {
  const auto& L = *Lp;
  const auto n = L.size();
  if (n > 20) throw Error(Errc::SizeLimit, "fixed-set enumeration capped at 20 elements");
  std::vector<LatticeMap> out;
  // The top is always fixed; choose the rest.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    auto fixed = [&](Elem x) { return x == L.top() || (mask >> x & 1); };
    bool closed = true;
    for (Elem x = 0; x < n && closed; ++x)
      for (Elem y = 0; y < n && closed; ++y)
        if (fixed(x) && fixed(y) && !fixed(L.meet(x, y))) closed = false;
    if (!closed) continue;
    std::vector<Elem> t(n);
    for (Elem x = 0; x < n; ++x) {
      Elem c = L.top();
      for (Elem q = 0; q < n; ++q)
        if (fixed(q) && L.leq(x, q)) c = L.meet(c, q);
      t[x] = c;
    }
    if (nucleus_conditions(L, t)) out.emplace_back(Lp, std::move(t));
  }
  return out;
}

std::vector<LatticeMap> nuclei_brute_force(const LatticePtr& Lp) {
  const auto& L = *Lp;
  const auto n = L.size();
  if (n > 7) throw Error(Errc::SizeLimit, "brute-force enumeration capped at 7 elements");
  std::vector<LatticeMap> out;
  std::vector<Elem> t(n, 0);
  for (;;) {
    if (nucleus_conditions(L, t)) out.emplace_back(Lp, t);
    std::size_t i = 0;
    while (i < n && ++t[i] == n) t[i++] = 0;
    if (i == n) break;
  }
  return out;
}

LatticeMap chi(const std::vector<LatticeMap>& nuclei, Interval iv) {
  std::vector<const LatticeMap*> ok;
  for (const auto& j : nuclei) {
    const auto& L = *j.domain();
    if (L.meet(j(iv.lo), iv.hi) == iv.lo) ok.push_back(&j);
  }
  for (auto* j : ok) {
    bool largest = true;
    for (auto* k : ok) largest = largest && k->leq(*j);
    if (largest) return *j;
  }
  throw Error(Errc::InternalCheckFailed, "no largest nucleus for the interval");
}

IntervalSet xi(const LatticePtr& L, Interval iv) {
  IntervalSet s(L);
  s.insert(iv);
  return dvs_fixpoint(s);
}

}  // namespace idiom::reference
