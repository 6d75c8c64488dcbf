#include "idiom/fixtures.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "idiom/error.hpp"

namespace idiom {

LatticePtr chain(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidInput, "a chain needs at least one element");
  std::vector<std::string> ids;
  if (n == 1) {
    ids = {"1"};
  } else {
    ids.push_back("0");
    if (n == 3) ids.push_back("m");
    else
      for (std::size_t k = 1; k + 1 < n; ++k) ids.push_back("m" + std::to_string(k));
    ids.push_back("1");
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t k = 0; k + 1 < n; ++k) covers.emplace_back(ids[k], ids[k + 1]);
  return FiniteLattice::from_covers(ids, covers, "C" + std::to_string(n));
}

LatticePtr one_point() { return chain(1); }

LatticePtr boolean_square() {
  return FiniteLattice::from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}, "B2");
}

LatticePtr diamond() {
  return FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                    {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}},
                                    "M3");
}

LatticePtr pentagon() {
  return FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                    {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}}, "N5");
}

LatticePtr product(const FiniteLattice& A, const FiniteLattice& B, std::string name) {
  const auto n = A.size(), m = B.size();
  std::vector<std::string> ids;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < m; ++y) ids.push_back(A.id(x) + "." + B.id(y));
  std::vector<std::vector<bool>> leq(n * m, std::vector<bool>(n * m));
  for (std::size_t i = 0; i < n * m; ++i)
    for (std::size_t j = 0; j < n * m; ++j)
      leq[i][j] = A.leq(static_cast<Elem>(i / m), static_cast<Elem>(j / m)) &&
                  B.leq(static_cast<Elem>(i % m), static_cast<Elem>(j % m));
  if (name.empty()) name = A.name() + "x" + B.name();
  return FiniteLattice::from_order(ids, leq, std::move(name));
}

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

LatticePtr subgroup_lattice(unsigned p, const std::vector<unsigned>& partition, std::size_t max_order) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (partition.empty()) throw Error(Errc::InvalidInput, "empty partition");
  std::vector<unsigned> mod;
  std::size_t order = 1;
  for (auto a : partition) {
    if (a == 0) throw Error(Errc::InvalidInput, "zero exponent in partition");
    unsigned q = 1;
    for (unsigned k = 0; k < a; ++k) {
      q *= p;
      order *= p;
      if (order > max_order)
        throw Error(Errc::SizeLimit, "group order exceeds " + std::to_string(max_order));
    }
    mod.push_back(q);
  }

  // Group elements in mixed radix; a subgroup is its sorted element list.
  const auto k = mod.size();
  auto decode = [&](std::size_t g) {
    std::vector<unsigned> v(k);
    for (std::size_t i = k; i-- > 0;) {
      v[i] = static_cast<unsigned>(g % mod[i]);
      g /= mod[i];
    }
    return v;
  };
  auto encode = [&](const std::vector<unsigned>& v) {
    std::size_t g = 0;
    for (std::size_t i = 0; i < k; ++i) g = g * mod[i] + v[i];
    return g;
  };
  auto add = [&](std::size_t g, std::size_t h) {
    auto a = decode(g), b = decode(h);
    for (std::size_t i = 0; i < k; ++i) a[i] = (a[i] + b[i]) % mod[i];
    return encode(a);
  };
  auto generate = [&](std::vector<bool> in) {
    std::vector<std::size_t> members;
    for (std::size_t g = 0; g < order; ++g)
      if (in[g]) members.push_back(g);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        auto s = add(members[i], members[j]);
        if (!in[s]) {
          in[s] = true;
          members.push_back(s);
        }
      }
    return in;
  };

  std::set<std::vector<bool>> subgroups;
  std::vector<std::vector<bool>> frontier;
  {
    std::vector<bool> zero(order, false);
    zero[0] = true;
    subgroups.insert(zero);
    frontier.push_back(zero);
  }
  while (!frontier.empty()) {
    auto H = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t g = 0; g < order; ++g) {
      if (H[g]) continue;
      auto K = H;
      K[g] = true;
      K = generate(std::move(K));
      if (subgroups.insert(K).second) frontier.push_back(std::move(K));
    }
  }

  std::vector<std::vector<bool>> subs(subgroups.begin(), subgroups.end());
  auto count = [](const std::vector<bool>& s) { return std::count(s.begin(), s.end(), true); };
  std::stable_sort(subs.begin(), subs.end(), [&](const auto& a, const auto& b) { return count(a) < count(b); });
  const auto n = subs.size();
  std::vector<std::string> ids(n);
  std::map<long, int> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto c = count(subs[i]);
    if (c == 1) ids[i] = "0";
    else if (static_cast<std::size_t>(c) == order) ids[i] = "G";
    else ids[i] = "H" + std::to_string(c) + "." + std::to_string(++seen[c]);
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool sub = true;
      for (std::size_t g = 0; g < order && sub; ++g) sub = !subs[i][g] || subs[j][g];
      leq[i][j] = sub;
    }
  std::string name = "Sub(";
  for (std::size_t i = 0; i < k; ++i) name += (i ? "+Z" : "Z") + std::to_string(mod[i]);
  name += ")";
  auto L = FiniteLattice::from_order(ids, leq, name);
  if (!is_modular(*L)) throw Error(Errc::InternalCheckFailed, name + " is not modular");
  return L;
}

namespace {

// Smallest sublattice of L containing the seeds together with the bounds.
std::vector<bool> sublattice_closure(const FiniteLattice& L, std::vector<bool> in) {
  in[L.bottom()] = in[L.top()] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem x = 0; x < L.size(); ++x)
      for (Elem y = 0; y < L.size(); ++y) {
        if (!in[x] || !in[y]) continue;
        for (Elem z : {L.meet(x, y), L.join(x, y)})
          if (!in[z]) in[z] = grew = true;
      }
  }
  return in;
}

}  // namespace

LatticePtr random_modular(std::uint64_t seed, std::size_t size, std::size_t max_size) {
  if (size == 0) throw Error(Errc::InvalidInput, "size must be positive");
  if (size > max_size) throw Error(Errc::SizeLimit, "random lattices capped at " + std::to_string(max_size));
  const std::string name = "R" + std::to_string(seed) + "n" + std::to_string(size);

  std::vector<LatticePtr> bases = {
      product(*chain(3), *chain(3)),
      product(*diamond(), *chain(3)),
      product(*product(*chain(2), *chain(2)), *chain(3)),
      subgroup_lattice(2, {2, 1}),
      subgroup_lattice(3, {1, 1}),
      subgroup_lattice(2, {2, 2}),
      product(*subgroup_lattice(3, {1, 1}), *chain(2)),
      chain(size),
  };
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 400; ++attempt) {
    const auto& B = *bases[rng() % bases.size()];
    if (B.size() < size) continue;
    std::vector<bool> in(B.size(), false);
    auto closed = sublattice_closure(B, in);
    std::size_t have = std::count(closed.begin(), closed.end(), true);
    while (have < size) {
      auto x = static_cast<Elem>(rng() % B.size());
      if (closed[x]) continue;
      auto next = closed;
      next[x] = true;
      next = sublattice_closure(B, std::move(next));
      std::size_t got = std::count(next.begin(), next.end(), true);
      if (got > size) break;
      closed = std::move(next);
      have = got;
    }
    if (have != size) continue;
    std::vector<std::string> ids;
    std::vector<Elem> keep;
    for (Elem x = 0; x < B.size(); ++x)
      if (closed[x]) {
        keep.push_back(x);
        ids.push_back(B.id(x));
      }
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) leq[i][j] = B.leq(keep[i], keep[j]);
    auto L = FiniteLattice::from_order(ids, leq, name);
    if (is_modular(*L)) return L;
  }
  throw Error(Errc::GenerationFailed, "no modular lattice of size " + std::to_string(size) + " for seed " +
                                          std::to_string(seed));
}

std::vector<CorpusEntry> default_corpus(std::uint64_t seed, std::size_t random_count) {
  auto c2 = chain(2);
  auto b2 = boolean_square();
  auto m3 = diamond();
  std::vector<CorpusEntry> out = {
      {"C1", one_point(), "named"},
      {"C2", c2, "named"},
      {"C3", chain(3), "named"},
      {"C4", chain(4), "named"},
      {"B2", b2, "named"},
      {"M3", m3, "named"},
      {"B2xC2", product(*b2, *c2, "B2xC2"), "named"},
      {"M3xC2", product(*m3, *c2, "M3xC2"), "named"},
      {"Z4+Z2", subgroup_lattice(2, {2, 1}), "subgroup-lattice(2,[2,1])"},
      {"Z9+Z3", subgroup_lattice(3, {2, 1}), "subgroup-lattice(3,[2,1])"},
      {"Z3+Z3", subgroup_lattice(3, {1, 1}), "subgroup-lattice(3,[1,1])"},
  };
  const std::size_t sizes[] = {6, 7, 8, 5, 9};
  for (std::size_t i = 0; i < random_count; ++i) {
    auto s = seed + i;
    auto L = random_modular(s, sizes[i % std::size(sizes)]);
    out.push_back({L->name(), L, "random(" + std::to_string(s) + ")"});
  }
  for (const auto& e : out)
    if (!is_modular(*e.lattice)) throw Error(Errc::InternalCheckFailed, e.name + " is not modular");
  return out;
}

}  // namespace idiom
