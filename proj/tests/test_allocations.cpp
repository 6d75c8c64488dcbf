#include "doctest.h"

#include <random>

#include "idiom/allocations.hpp"
#include "idiom/error.hpp"
#include "idiom/fixtures.hpp"
#include "idiom/reference.hpp"

using namespace idiom;

namespace {

IntervalSet set_of(const LatticePtr& L, std::initializer_list<std::pair<const char*, const char*>> ivs) {
  IntervalSet s = IntervalSet::trivial(L);
  for (auto [lo, hi] : ivs) s.insert({L->index_of(lo), L->index_of(hi)});
  return s;
}

Interval iv(const LatticePtr& L, const char* lo, const char* hi) { return {L->index_of(lo), L->index_of(hi)}; }

}  // namespace

TEST_CASE("chi and xi on C3") {
  auto c3 = chain(3);
  auto N = enumerate_nuclei(c3);
  DivisionLattice D(N);
  auto chi = chi_allocation(N);
  auto x = xi_aspect(D);
  CHECK(is_allocation(chi));
  CHECK(is_aspect(x));

  auto as_alloc = check_allocation(IntervalValuedMap(c3, D.lattice(), x.table()));
  CHECK_FALSE(as_alloc.ok);
  CHECK(as_alloc.axiom == 2);
  auto as_aspect = check_aspect(IntervalValuedMap(c3, N.lattice(), chi.table()));
  CHECK_FALSE(as_aspect.ok);
  CHECK(as_aspect.axiom == 2);

  for (auto i : c3->intervals()) {
    CHECK(N.nucleus(chi(i)) == reference::chi(N.nuclei(), i));
    CHECK(D.set(x(i)) == reference::xi(c3, i));
  }
}

TEST_CASE("constant maps") {
  for (const auto& e : default_corpus()) {
    if (e.lattice->size() > 8) continue;
    auto V = chain(3);
    for (Elem a = 0; a < V->size(); ++a) {
      CHECK(is_allocation(constant_allocation(e.lattice, V, a)));
      CHECK(is_aspect(constant_aspect(e.lattice, V, a)));
    }
  }
}

TEST_CASE("xi values") {
  auto c3 = chain(3);
  CHECK(xi(c3, iv(c3, "m", "m")) == IntervalSet::trivial(c3));
  CHECK(xi(c3, iv(c3, "0", "1")) == IntervalSet::all(c3));
  auto b2 = boolean_square();
  CHECK(xi(b2, iv(b2, "0", "a")) == set_of(b2, {{"0", "a"}, {"b", "1"}}));
}

TEST_CASE("level sets") {
  auto c3 = chain(3);
  auto N = enumerate_nuclei(c3);
  auto chi = chi_allocation(N);
  const auto& V = *N.lattice();
  CHECK(allocation_level_set(chi, V.bottom()) == IntervalSet::all(c3));
  // chi(x,b) is the top only when x = b
  CHECK(allocation_level_set(chi, V.top()) == IntervalSet::trivial(c3));
  auto c4 = chain(4);
  for (Elem a = 0; a < c4->size(); ++a)
    CHECK(allocation_level_set(constant_allocation(c3, c4, a), a) == IntervalSet::all(c3));

  auto b2 = boolean_square();
  auto NB = enumerate_nuclei(b2);
  DivisionLattice D(NB);
  auto x = xi_aspect(D);
  const auto& DL = *D.lattice();
  CHECK(aspect_level_set(x, DL.bottom()) == IntervalSet::trivial(b2));
  CHECK(aspect_level_set(x, DL.top()) == IntervalSet::all(b2));
  auto alpha = D.index_of(dvs_closure(basic_closure(set_of(b2, {{"0", "a"}}))));
  CHECK(aspect_level_set(x, alpha) == set_of(b2, {{"0", "a"}, {"b", "1"}}));

  CHECK_THROWS_AS(allocation_level_set(IntervalValuedMap(b2, D.lattice(), x.table()), 0), Error);
}

TEST_CASE("H") {
  for (auto L : {chain(3), boolean_square(), diamond(), one_point()}) {
    auto N = enumerate_nuclei(L);
    DivisionLattice D(N);
    const auto& DL = D.lattice();
    auto top = constant_allocation(L, DL, DL->top());
    CHECK(allocation_from_aspect(constant_aspect(L, DL, DL->bottom())) == top);
    CHECK(allocation_from_aspect(xi_aspect(D)) == top);
  }
}

TEST_CASE("pullback and post-composition") {
  auto c3 = chain(3);
  auto N = enumerate_nuclei(c3);
  auto chi = chi_allocation(N);
  CHECK(pullback(LatticeMap::identity(c3), chi) == chi);
  for (const auto& j : N.nuclei()) {
    auto Q = quotient(j);
    CHECK(is_allocation(pullback(quotient_map(j, Q), chi_allocation(enumerate_nuclei(Q)))));
  }
  auto point = one_point();
  auto g = constant_allocation(point, N.lattice(), 1);
  CHECK(pullback(LatticeMap::constant(c3, point, 0), g) == constant_allocation(c3, N.lattice(), 1));
  CHECK_THROWS_AS(pullback(LatticeMap::constant(point, c3, 0), chi), Error);

  auto c2 = chain(2);
  Elem th[] = {N.lattice()->top()};
  auto rho = threshold_above(N.lattice(), c2, th);
  auto img = post_compose(rho, chi);
  CHECK(is_allocation(img));
  for (auto i : c3->intervals()) CHECK((img(i) == 1) == i.trivial());
}

TEST_CASE("random allocations and aspects") {
  for (const auto& e : default_corpus()) {
    if (e.lattice->size() > 8) continue;
    auto N = enumerate_nuclei(e.lattice);
    DivisionLattice D(N);
    auto chi = chi_allocation(N);
    auto x = xi_aspect(D);
    std::mt19937_64 rng(7), again(7);
    for (int i = 0; i < 5; ++i) {
      auto a = random_allocation(chi, rng);
      CHECK(is_allocation(a));
      CHECK(a == random_allocation(chi, again));
      auto s = random_aspect(x, rng);
      CHECK(is_aspect(s));
      CHECK(s == random_aspect(x, again));
    }
  }
}

TEST_CASE("join families") {
  auto b2 = boolean_square();
  auto fam = join_test_families(*b2, 0);
  // nonempty subsets of the four elements above 0
  CHECK(fam.size() == 15);
}
