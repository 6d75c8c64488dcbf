#include "doctest.h"

#include <set>

#include "idiom/error.hpp"
#include "idiom/fixtures.hpp"

using namespace idiom;

namespace {

// Subgroups of Z/n1 + Z/n2 counted by closing every pair of generators.
std::size_t count_subgroups(unsigned n1, unsigned n2) {
  using Pt = std::pair<unsigned, unsigned>;
  std::set<std::set<Pt>> groups;
  auto span = [&](std::vector<Pt> gens) {
    std::set<Pt> g{{0, 0}};
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Pt> cur(g.begin(), g.end());
      for (auto x : cur)
        for (auto y : gens) grew = g.insert({(x.first + y.first) % n1, (x.second + y.second) % n2}).second || grew;
    }
    return g;
  };
  for (unsigned a = 0; a < n1; ++a)
    for (unsigned b = 0; b < n2; ++b)
      for (unsigned c = 0; c < n1; ++c)
        for (unsigned d = 0; d < n2; ++d) groups.insert(span({{a, b}, {c, d}}));
  return groups.size();
}

bool is_chain(const FiniteLattice& L) {
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (!L.leq(x, y) && !L.leq(y, x)) return false;
  return true;
}

}  // namespace

TEST_CASE("named lattices") {
  CHECK(chain(3)->ids() == std::vector<std::string>{"0", "m", "1"});
  CHECK(chain(1)->size() == 1);
  CHECK(is_modular(*diamond()));
  CHECK_FALSE(is_modular(*pentagon()));
  CHECK(is_frame(*boolean_square()));
  CHECK_FALSE(is_frame(*diamond()));
  auto p = product(*boolean_square(), *chain(2));
  CHECK(p->size() == 8);
  CHECK(p->find("a.1"));
  CHECK(is_frame(*p));
}

TEST_CASE("subgroup lattices") {
  auto z2 = subgroup_lattice(2, {1});
  CHECK(z2->size() == 2);
  auto klein = subgroup_lattice(2, {1, 1});
  CHECK(klein->size() == 5);
  CHECK(is_modular(*klein));
  CHECK_FALSE(is_frame(*klein));
  auto z4 = subgroup_lattice(2, {2});
  CHECK(z4->size() == 3);
  CHECK(is_chain(*z4));
  CHECK(subgroup_lattice(2, {2, 1})->size() == count_subgroups(4, 2));
  CHECK(subgroup_lattice(3, {2, 1})->size() == count_subgroups(9, 3));
  CHECK(subgroup_lattice(3, {1, 1})->size() == count_subgroups(3, 3));
  CHECK_THROWS_AS(subgroup_lattice(4, {1}), Error);
  CHECK_THROWS_AS(subgroup_lattice(2, {5, 5}), Error);
  CHECK_THROWS_AS(subgroup_lattice(2, {}), Error);
}

TEST_CASE("random modular lattices") {
  auto two = random_modular(0, 2);
  CHECK(two->size() == 2);
  for (std::uint64_t seed = 1; seed < 15; ++seed)
    for (std::size_t n = 1; n <= 9; ++n) {
      auto L = random_modular(seed, n);
      CHECK(L->size() == n);
      CHECK(is_modular(*L));
      CHECK(L->ids() == random_modular(seed, n)->ids());
      CHECK(L->covers() == random_modular(seed, n)->covers());
    }
  CHECK_THROWS_AS(random_modular(1, 40), Error);
}

TEST_CASE("default corpus") {
  auto corpus = default_corpus();
  std::set<std::string> names;
  for (const auto& e : corpus) {
    names.insert(e.name);
    CHECK(is_modular(*e.lattice));
  }
  for (auto n : {"C2", "C3", "C4", "B2", "M3", "B2xC2", "M3xC2", "Z4+Z2", "Z9+Z3"}) CHECK(names.count(n) == 1);
  CHECK_FALSE(names.count("N5"));
}
