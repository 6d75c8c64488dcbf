#include "doctest.h"

#include "idiom/dimension.hpp"
#include "idiom/error.hpp"
#include "idiom/fixtures.hpp"

using namespace idiom;

namespace {

// K(i+1) = Dvs(op(K(i))) written out directly.
std::vector<IntervalSet> derivative_oracle(const IntervalSet& D, Operator op, std::size_t steps) {
  std::vector<IntervalSet> out{D};
  for (std::size_t i = 0; i < steps; ++i) out.push_back(dvs_closure(apply(op, out.back())));
  return out;
}

}  // namespace

TEST_CASE("ordinal chain and sequences") {
  auto c3 = chain(3);
  CHECK(alpha_bound(*c3) == 4);
  auto inf = ordinal_chain(*c3);
  CHECK(inf->size() == 5);
  CHECK(inf->id(4) == "4");
  CHECK(make_seq(c3, {0, 1, 2, 2, 2}).bnd == 2);
  CHECK_THROWS_AS(make_seq(c3, {0, 1, 2}), Error);
  CHECK_THROWS_AS(make_seq(c3, {0, 2, 1, 2, 2}), Error);
  CHECK_THROWS_AS(make_seq(c3, {1, 1, 2, 2, 2}), Error);
  CHECK(general_seq(c3, {1, 1, 1, 1, 1}).bnd == 0);
  Seq hs[] = {make_seq(c3, {0, 1, 2, 2, 2}), make_seq(c3, {0, 0, 1, 2, 2})};
  CHECK(seq_meet(hs).terms == std::vector<Elem>{0, 0, 1, 2, 2});
}

TEST_CASE("dimension aspect") {
  for (auto L : {chain(3), boolean_square(), diamond()}) {
    auto N = enumerate_nuclei(L);
    DivisionLattice D(N);
    auto x = xi_aspect(D);
    auto g = opr_filtration(x, D.lattice()->bottom(), Operator::crt).completed;
    auto d = dim_aspect(x, g);
    CHECK(d.bounded);
    CHECK(is_aspect(d.map));
    for (auto i : L->intervals()) CHECK(d.map(i) == (i.trivial() ? 0u : 1u));
  }
}

TEST_CASE("opr filtration") {
  auto c3 = chain(3);
  auto N = enumerate_nuclei(c3);
  DivisionLattice D(N);
  auto x = xi_aspect(D);
  const auto& DL = *D.lattice();
  auto O = D.index_of(IntervalSet::trivial(c3));

  auto id = opr_filtration(x, O, [](const IntervalSet& s) { return s; });
  CHECK(id.bnd == 0);
  CHECK(std::all_of(id.raw.begin(), id.raw.end(), [&](Elem e) { return e == O; }));
  CHECK_FALSE(id.reaches_top);

  auto crt = opr_filtration(x, O, Operator::crt);
  CHECK(crt.raw[1] == DL.top());
  CHECK(crt.bnd == 1);

  auto top = opr_filtration(x, DL.top(), Operator::fll);
  CHECK(top.bnd == 0);

  CHECK_THROWS_AS(opr_filtration(x, O, [&](const IntervalSet&) { return IntervalSet::of(c3, std::vector<Interval>{{0, 2}}); }),
                  Error);
}

TEST_CASE("kpr filtration") {
  for (const auto& e : default_corpus()) {
    auto N = enumerate_nuclei(e.lattice);
    for (Elem k = 0; k < N.size(); ++k)
      for (auto op : {Operator::crt, Operator::fll}) {
        auto oracle = derivative_oracle(N.division(k), op, 4);
        CHECK(kpr_filtration(N.division(k), op, 4) == oracle);
      }
    auto all = IntervalSet::all(e.lattice);
    for (const auto& s : kpr_filtration(all, Operator::crt, 3)) CHECK(s == all);
  }
  auto c3 = chain(3);
  CHECK_THROWS_AS(kpr_filtration(IntervalSet::of(c3, std::vector<Interval>{{0, 1}}), Operator::crt, 2), Error);
}

TEST_CASE("gabriel and boyle dimension") {
  auto b2 = boolean_square();
  auto g = gabriel_dimension(IntervalSet::trivial(b2));
  CHECK(g.value == 1u);
  CHECK(g.trace.size() == 2);
  CHECK(boyle_dimension(IntervalSet::trivial(b2)).value == 1u);
  CHECK(gabriel_dimension(IntervalSet::trivial(one_point())).value == 0u);
  for (const auto& e : default_corpus()) {
    auto O = IntervalSet::trivial(e.lattice);
    std::size_t expect = e.lattice->size() >= 2 ? 1 : 0;
    CHECK(gabriel_dimension(O).value == expect);
    CHECK(boyle_dimension(O).value == expect);
  }
}
