#include "doctest.h"

#include <algorithm>
#include <random>

#include "idiom/fixtures.hpp"
#include "idiom/nuclei.hpp"
#include "idiom/reference.hpp"

using namespace idiom;

namespace {

std::vector<std::vector<Elem>> tables(const std::vector<LatticeMap>& ms) {
  std::vector<std::vector<Elem>> t;
  for (const auto& m : ms) t.push_back(m.table());
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

TEST_CASE("the two nucleus oracles agree") {
  for (auto L : {chain(2), chain(3), chain(4), boolean_square(), diamond(), pentagon(), random_modular(1, 6)})
    CHECK(tables(reference::nuclei_by_fixed_sets(L)) == tables(reference::nuclei_brute_force(L)));
}

TEST_CASE("enumeration matches the oracle") {
  for (const auto& e : default_corpus())
    CHECK(tables(enumerate_nuclei(e.lattice).nuclei()) == tables(reference::nuclei_by_fixed_sets(e.lattice)));
}

TEST_CASE("frame laws") {
  for (const auto& e : default_corpus()) {
    CHECK(reference::frame_law_binary(*e.lattice) == reference::frame_law_all_subsets(*e.lattice));
    CHECK(reference::frame_law_binary(*e.lattice) == reference::brute_implication(*e.lattice).has_value());
  }
}

TEST_CASE("closure formulas against the fixpoints") {
  std::mt19937_64 rng(3);
  for (const auto& e : default_corpus()) {
    const auto& L = e.lattice;
    for (int k = 0; k < 20; ++k) {
      IntervalSet s(L);
      for (std::size_t i = 0; i < L->interval_count(); ++i)
        if (rng() % 6 == 0) s.insert_id(i);
      CHECK(basic_closure(s) == reference::basic_fixpoint(s));
      CHECK(cng_closure(basic_closure(s)) == reference::cng_fixpoint(s));
      CHECK(dvs_closure(s) == reference::dvs_fixpoint(s));
      auto b = basic_closure(s);
      CHECK(smp(b) == reference::smp(b));
      CHECK(cmp(b) == reference::cmp(b));
      CHECK(crt(b) == reference::crt(b));
      CHECK(fll(b) == reference::fll(b));
    }
  }
}
