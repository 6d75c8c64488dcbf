#include "doctest.h"

#include "idiom/error.hpp"
#include "idiom/fixtures.hpp"
#include "idiom/intervals.hpp"

using namespace idiom;

namespace {

Interval iv(const LatticePtr& L, const char* lo, const char* hi) { return {L->index_of(lo), L->index_of(hi)}; }

IntervalSet with(const LatticePtr& L, std::initializer_list<Interval> members, bool trivials = true) {
  auto s = trivials ? IntervalSet::trivial(L) : IntervalSet(L);
  for (auto m : members) s.insert(m);
  return s;
}

}  // namespace

TEST_CASE("similarity") {
  auto b2 = boolean_square();
  auto c3 = chain(3);
  CHECK(similar(*b2, iv(b2, "0", "a"), iv(b2, "0", "a")));
  CHECK(similar(*b2, iv(b2, "0", "a"), iv(b2, "b", "1")));
  CHECK_FALSE(similar(*b2, iv(b2, "0", "a"), iv(b2, "a", "1")));
  CHECK_FALSE(similar(*c3, iv(c3, "0", "m"), iv(c3, "m", "1")));
}

TEST_CASE("basic, congruence and division closures") {
  auto b2 = boolean_square();
  auto c3 = chain(3);
  CHECK(basic_closure(IntervalSet(c3)) == IntervalSet::trivial(c3));
  CHECK(basic_closure(with(c3, {iv(c3, "0", "1")}, false)) == IntervalSet::all(c3));
  auto oa = with(b2, {iv(b2, "0", "a")}, false);
  auto expect = with(b2, {iv(b2, "0", "a"), iv(b2, "b", "1")});
  CHECK(basic_closure(oa) == expect);
  CHECK(level(expect) == Level::division);

  CHECK(cng_closure(IntervalSet::trivial(c3)) == IntervalSet::trivial(c3));
  CHECK(cng_closure(basic_closure(with(c3, {iv(c3, "0", "m"), iv(c3, "m", "1")}))) == IntervalSet::all(c3));
  CHECK(cng_closure(expect) == expect);

  CHECK(dvs_closure(IntervalSet::trivial(b2)) == IntervalSet::trivial(b2));
  CHECK(dvs_closure(smp(IntervalSet::trivial(b2))) == IntervalSet::all(b2));
  CHECK(dvs_closure(expect) == expect);
  CHECK(is_division(dvs_closure(expect)));

  auto m3 = diamond();
  // [0,a] in M3 is similar to [b,1] and [c,1], which abut nothing below.
  auto d = dvs_closure(with(m3, {iv(m3, "0", "a")}, false));
  CHECK(is_division(d));
  CHECK(d == IntervalSet::all(m3));
}

TEST_CASE("operators") {
  auto b2 = boolean_square();
  auto c3 = chain(3);
  CHECK(crt(IntervalSet::trivial(c3)) == with(c3, {iv(c3, "0", "m"), iv(c3, "m", "1")}));
  CHECK(cmp(IntervalSet::trivial(b2)) == IntervalSet::all(b2));
  CHECK(crt(IntervalSet::trivial(b2)) ==
        with(b2, {iv(b2, "0", "a"), iv(b2, "0", "b"), iv(b2, "a", "1"), iv(b2, "b", "1")}));
  CHECK(fll(IntervalSet::trivial(b2)) == IntervalSet::all(b2));
  CHECK(smp(IntervalSet::trivial(c3)) == crt(IntervalSet::trivial(c3)));

  auto raw = with(b2, {iv(b2, "0", "a")});
  CHECK_THROWS_AS(crt(raw), Error);
  CHECK(parse_operator("fll") == Operator::fll);
  CHECK_FALSE(parse_operator("nope").has_value());
}

TEST_CASE("associated inflator") {
  auto c3 = chain(3);
  CHECK(associated_inflator(IntervalSet::trivial(c3)) == LatticeMap::identity(c3));
  CHECK(associated_inflator(IntervalSet::all(c3)) == LatticeMap::top_map(c3));
  auto b = with(c3, {iv(c3, "0", "m")});
  CHECK(associated_inflator(b).to_string() == "0>m, m>m, 1>1");
}
