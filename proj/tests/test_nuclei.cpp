#include "doctest.h"

#include "idiom/error.hpp"
#include "idiom/fixtures.hpp"
#include "idiom/nuclei.hpp"

using namespace idiom;

namespace {

LatticeMap map_of(const LatticePtr& L, std::initializer_list<const char*> values) {
  std::vector<Elem> t;
  for (auto v : values) t.push_back(L->index_of(v));
  return LatticeMap(L, std::move(t));
}

}  // namespace

TEST_CASE("classify") {
  auto c3 = chain(3);
  auto all = classify(LatticeMap::identity(c3));
  CHECK((all.inflator && all.stable && all.prenucleus && all.closure && all.nucleus));
  CHECK(classify(LatticeMap::top_map(c3)).nucleus);
  auto succ = classify(map_of(c3, {"m", "1", "1"}));
  CHECK(succ.inflator);
  CHECK(succ.stable);
  CHECK_FALSE(succ.closure);
  CHECK_FALSE(succ.nucleus);
  CHECK_FALSE(classify(map_of(c3, {"0", "0", "1"})).inflator);
}

TEST_CASE("tower") {
  auto c3 = chain(3);
  auto t = tower(map_of(c3, {"m", "1", "1"}));
  CHECK(t.limit == LatticeMap::top_map(c3));
  CHECK(t.steps == 2);
  CHECK(t.has_length);
  auto ti = tower(LatticeMap::identity(c3));
  CHECK(ti.steps == 0);
  CHECK_FALSE(ti.has_length);
  CHECK(tower(LatticeMap::identity(one_point())).has_length);
  CHECK(tower(LatticeMap::top_map(c3)).steps <= 1);
  CHECK_THROWS_AS(tower(map_of(c3, {"0", "0", "1"})), Error);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_nuclei(chain(2)).size() == 2);
  auto n3 = enumerate_nuclei(chain(3));
  CHECK(n3.size() == 4);
  CHECK(n3.find(map_of(chain(3), {"0", "1", "1"})));
  CHECK(n3.find(map_of(chain(3), {"m", "m", "1"})));
  CHECK(enumerate_nuclei(one_point()).size() == 1);
  CHECK(n3.nucleus(n3.lattice()->bottom()) == LatticeMap::identity(chain(3)));
  CHECK(n3.nucleus(n3.lattice()->top()) == LatticeMap::top_map(chain(3)));
  CHECK(is_frame(*n3.lattice()));
  CHECK_THROWS_AS(enumerate_nuclei(chain(5), 4), Error);
}

TEST_CASE("quotients and the division correspondence") {
  auto c3 = chain(3);
  auto j = map_of(c3, {"m", "m", "1"});
  auto q = quotient(j);
  CHECK(q->size() == 2);
  CHECK(q->ids() == std::vector<std::string>{"m", "1"});
  CHECK(quotient(LatticeMap::top_map(c3))->size() == 1);
  CHECK(quotient(LatticeMap::identity(c3))->same_structure(*c3));

  auto d = nucleus_to_division(j);
  CHECK(d.to_short_string() == "O + {[0,m]}");
  CHECK(division_to_nucleus(d) == j);
  CHECK(nucleus_to_division(LatticeMap::identity(c3)) == IntervalSet::trivial(c3));
  CHECK(nucleus_to_division(LatticeMap::top_map(c3)) == IntervalSet::all(c3));
}

TEST_CASE("chi") {
  auto c3 = chain(3);
  auto N = enumerate_nuclei(c3);
  auto m = c3->index_of("m");
  CHECK(N.nucleus(chi(N, {0, m})) == map_of(c3, {"0", "1", "1"}));
  CHECK(chi(N, {0, c3->top()}) == chi(N, {0, m}));
  CHECK(N.nucleus(chi(N, {m, m})) == LatticeMap::top_map(c3));
}
