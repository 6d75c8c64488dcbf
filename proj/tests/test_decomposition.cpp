#include "doctest.h"

#include "idiom/decomposition.hpp"
#include "idiom/error.hpp"
#include "idiom/fixtures.hpp"

using namespace idiom;

namespace {

Interval iv(const LatticePtr& L, const char* lo, const char* hi) { return {L->index_of(lo), L->index_of(hi)}; }

struct Chi {
  LatticePtr L;
  NucleusLattice N;
  IntervalValuedMap phi;
  explicit Chi(LatticePtr l) : L(l), N(enumerate_nuclei(l)), phi(chi_allocation(N)) {}
};

}  // namespace

TEST_CASE("radical functions") {
  auto c3 = chain(3);
  Chi c(c3);
  CHECK(is_radical(c.phi));
  CHECK(is_radical(constant_allocation(c3, chain(4), 2)));
  DivisionLattice D(c.N);
  CHECK_FALSE(is_radical(xi_aspect(D)));
}

TEST_CASE("stability and support") {
  Chi b(boolean_square());
  for (auto i : b.L->intervals())
    if (!i.trivial() && b.L->covered_by(i.lo, i.hi)) CHECK(is_stable(b.phi, i));
  CHECK_FALSE(is_stable(b.phi, iv(b.L, "a", "a")));
  CHECK_FALSE(is_stable(b.phi, iv(b.L, "0", "1")));
  CHECK(support(b.phi, iv(b.L, "a", "a")).empty());

  auto s = support(b.phi, iv(b.L, "0", "1"));
  std::vector<Elem> expect{b.phi(iv(b.L, "0", "a")), b.phi(iv(b.L, "0", "b"))};
  std::sort(expect.begin(), expect.end());
  expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
  CHECK(s == expect);
  CHECK(is_adequate(b.phi));
  CHECK(is_atomic(b.phi, iv(b.L, "0", "1")) == (expect.size() == 1));

  Chi c(chain(3));
  CHECK(support(c.phi, iv(c.L, "0", "m")) == std::vector<Elem>{c.phi(iv(c.L, "0", "m"))});
  CHECK(is_atomic(c.phi, iv(c.L, "0", "m")));
}

TEST_CASE("set-valued allocations") {
  Chi c(chain(3));
  CHECK(rho_from_allocation(singleton_lift(c.phi)) == c.phi);
  auto sigma = support_map(c.phi);
  CHECK(check_set_allocation(sigma).ok);
  CHECK(is_radical(rho_from_allocation(sigma)));
  const auto& V = *c.N.lattice();
  std::vector<std::uint64_t> tops(c.L->interval_count(), std::uint64_t{1} << V.top());
  auto constant_top = rho_from_allocation(SetValuedMap(c.L, c.N.lattice(), tops));
  CHECK(constant_top == constant_allocation(c.L, c.N.lattice(), V.top()));
}

TEST_CASE("inertness on C3") {
  Chi c(chain(3));
  Elem p = c.phi(iv(c.L, "0", "m"));
  CHECK(is_p_inertial(c.phi, p, iv(c.L, "0", "m")));
  CHECK(c.phi(iv(c.L, "0", "1")) == p);
  CHECK(is_p_inertial(c.phi, p, iv(c.L, "0", "1")));
  CHECK_FALSE(is_p_inertial(c.phi, p, iv(c.L, "m", "1")));
  CHECK(is_allocation(inert_indicator(c.phi, p)));

  auto d = inert_division_set(c.phi, p);
  CHECK(d.contains(iv(c.L, "0", "m")));
  CHECK(d.contains(iv(c.L, "0", "1")));
  // [0,1] is in but its upper part [m,1] has a different chi value
  CHECK_FALSE(d.contains(iv(c.L, "m", "1")));
  CHECK_FALSE(is_division(d));
}

TEST_CASE("inertial points") {
  Chi c(chain(3));
  Elem p = c.phi(iv(c.L, "0", "m"));
  auto whole = iv(c.L, "0", "1");
  Elem m = c.L->index_of("m"), top = c.L->top();
  CHECK(is_inertial_point(c.phi, p, whole, m));
  CHECK(is_inertial_point(c.phi, p, whole, top));
  CHECK(find_inertial_point(c.phi, p, whole, m) == m);
  CHECK(find_inertial_point(c.phi, p, whole, top) == top);
  CHECK_THROWS_AS(find_inertial_point(c.phi, p, iv(c.L, "m", "1"), top), Error);

  Chi b(boolean_square());
  Elem pa = b.phi(iv(b.L, "0", "a"));
  Elem a = b.L->index_of("a");
  CHECK(find_inertial_point(b.phi, pa, iv(b.L, "0", "1"), a) == a);
}

TEST_CASE("decompositions") {
  Chi b(boolean_square());
  auto whole = iv(b.L, "0", "1");
  auto d = find_decomposition(b.phi, whole);
  REQUIRE(d.status == Decomposition::Status::found);
  CHECK(verify_decomposition(b.phi, whole, d.parts).ok);
  std::vector<Elem> xs;
  for (auto [p, x] : d.parts) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  if (support(b.phi, whole).size() == 2) CHECK(xs == std::vector<Elem>{b.L->index_of("a"), b.L->index_of("b")});

  Chi c(chain(3));
  auto dc = find_decomposition(c.phi, iv(c.L, "0", "1"));
  REQUIRE(dc.status == Decomposition::Status::found);
  REQUIRE(dc.parts.size() == 1);
  CHECK(dc.parts[0].second == c.L->top());

  auto trivial = find_decomposition(c.phi, iv(c.L, "m", "m"));
  CHECK(trivial.status == Decomposition::Status::found);
  CHECK(trivial.parts.empty());

  for (const auto& e : default_corpus()) {
    Chi k(e.lattice);
    for (auto i : e.lattice->intervals()) {
      if (i.trivial()) continue;
      auto r = find_decomposition(k.phi, i);
      CHECK(r.status == Decomposition::Status::found);
      CHECK(verify_decomposition(k.phi, i, r.parts).ok);
    }
  }
}
