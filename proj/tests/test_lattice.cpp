#include "doctest.h"

#include "idiom/error.hpp"
#include "idiom/fixtures.hpp"
#include "idiom/lattice.hpp"
#include "idiom/lattice_map.hpp"

using namespace idiom;

namespace {

Elem at(const LatticePtr& L, const char* id) { return L->index_of(id); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InternalCheckFailed;
}

}  // namespace

TEST_CASE("build from covers") {
  auto c2 = FiniteLattice::from_covers({"0", "1"}, {{"0", "1"}});
  CHECK(c2->size() == 2);
  CHECK(c2->leq(0, 1));
  auto b2 = boolean_square();
  CHECK(b2->join(at(b2, "a"), at(b2, "b")) == b2->top());
  CHECK(b2->meet(at(b2, "a"), at(b2, "b")) == b2->bottom());
  CHECK(b2->interval_count() == 9);

  auto bad = [] { FiniteLattice::from_covers({"0", "a", "b", "c"}, {{"0", "a"}, {"0", "b"}, {"a", "c"}}); };
  auto e = code_of(bad);
  CHECK((e == Errc::NoBounds || e == Errc::NotALattice));
  CHECK(code_of([] { FiniteLattice::from_covers({"0", "1"}, {{"0", "1"}, {"1", "0"}}); }) == Errc::CycleDetected);
  CHECK(code_of([] { FiniteLattice::from_covers({"0", "0"}, {}); }) == Errc::InvalidInput);
  CHECK(code_of([] { FiniteLattice::from_covers({"0", "1"}, {{"1", "1"}}); }) == Errc::InvalidInput);
  // Two maximal upper bounds for a, b: not a lattice.
  CHECK(code_of([] {
          FiniteLattice::from_covers({"0", "a", "b", "c", "d", "1"},
                                     {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"},
                                      {"c", "1"}, {"d", "1"}});
        }) == Errc::NotALattice);
}

TEST_CASE("lattice tables satisfy the lattice laws") {
  for (const auto& entry : default_corpus()) {
    const auto& L = *entry.lattice;
    const auto n = static_cast<Elem>(L.size());
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        REQUIRE(L.meet(x, y) == L.meet(y, x));
        REQUIRE(L.join(x, L.meet(x, y)) == x);
        REQUIRE(L.meet(x, L.join(x, y)) == x);
        for (Elem z = 0; z < n; ++z) {
          REQUIRE(L.meet(L.meet(x, y), z) == L.meet(x, L.meet(y, z)));
          REQUIRE(L.join(L.join(x, y), z) == L.join(x, L.join(y, z)));
        }
      }
  }
}

TEST_CASE("modularity and frames") {
  CHECK(is_modular(*chain(4)));
  CHECK(is_modular(*diamond()));
  CHECK_FALSE(is_modular(*pentagon()));
  CHECK(is_frame(*boolean_square()));
  CHECK_FALSE(is_frame(*diamond()));
  CHECK(is_frame(*chain(3)));
  for (const auto& entry : default_corpus())
    if (is_frame(*entry.lattice)) CHECK(is_modular(*entry.lattice));
}

TEST_CASE("independence and largeness") {
  auto b2 = boolean_square();
  auto m3 = diamond();
  std::vector<Elem> ab = {at(b2, "a"), at(b2, "b")};
  CHECK(is_independent_over(*b2, 0, ab));
  std::vector<Elem> abc = {at(m3, "a"), at(m3, "b"), at(m3, "c")};
  CHECK_FALSE(is_independent_over(*m3, 0, abc));
  CHECK(is_independent_over(*m3, 0, {}));
  std::vector<Elem> below = {0};
  CHECK(code_of([&] { is_independent_over(*b2, at(b2, "a"), below); }) == Errc::ElementBelowBase);

  CHECK(is_large(*b2, b2->top(), {0, b2->top()}));
  CHECK_FALSE(is_large(*b2, at(b2, "a"), {0, b2->top()}));
  // b ^ a = 0 with b != 0, so a is not large in M3 either.
  CHECK_FALSE(is_large(*m3, at(m3, "a"), {0, m3->top()}));
  CHECK(code_of([&] { is_large(*b2, 0, {at(b2, "a"), b2->top()}); }) == Errc::OutOfInterval);
}

TEST_CASE("lattice maps") {
  auto c3 = chain(3);
  auto id = LatticeMap::identity(c3);
  auto top = LatticeMap::top_map(c3);
  CHECK(id.leq(top));
  CHECK_FALSE(top.leq(id));
  CHECK(compose(top, id) == top);
  CHECK(is_idiom_morphism(id));
  CHECK_FALSE(is_idiom_morphism(top));
  CHECK(code_of([&] { LatticeMap(c3, {0, 1}); }) == Errc::NotTotal);
  CHECK(id.to_string() == "0>0, m>m, 1>1");
}
