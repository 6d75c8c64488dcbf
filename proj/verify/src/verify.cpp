#include "idiom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <concepts>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "idiom/allocations.hpp"
#include "idiom/decomposition.hpp"
#include "idiom/dimension.hpp"
#include "idiom/error.hpp"
#include "idiom/nuclei.hpp"
#include "idiom/reference.hpp"

namespace idiom {

bool SuiteReport::pass() const noexcept { return failures() == 0; }

std::size_t SuiteReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(), [](auto& v) { return !v.pass; }));
}

namespace {

struct Context {
  const CorpusEntry* entry = nullptr;
  LatticePtr L;
  std::optional<NucleusLattice> N;
  std::optional<DivisionLattice> D;
  std::optional<IntervalValuedMap> chi;
  std::optional<IntervalValuedMap> xi;
  std::vector<IntervalValuedMap> allocations;  // chi first, then random ones
  std::vector<IntervalValuedMap> aspects;      // xi first, then random ones
  std::string skipped;
};

struct Outcome {
  std::size_t cases = 0;
  bool pass = true;
  std::string witness;

  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
  // Records one case; returns ok so callers can write expect(cond, ...).
  bool expect(bool ok, const std::string& w) {
    ++cases;
    if (!ok) fail(w);
    return ok;
  }
  template <std::invocable W>
  bool expect(bool ok, W&& make_witness) {
    ++cases;
    if (!ok) fail(make_witness());
    return ok;
  }
};

class Recorder {
 public:
  explicit Recorder(std::string lattice) : lattice_(std::move(lattice)) {}

  void check(const std::string& name, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    verdicts_.push_back(Verdict{name, lattice_, o.pass, o.witness, o.cases, dt});
  }

  std::vector<Verdict>& verdicts() { return verdicts_; }

 private:
  std::string lattice_;
  std::vector<Verdict> verdicts_;
};

using Rng = std::mt19937_64;
using SuiteFn = void (*)(const Context&, Recorder&, Rng&, const VerifyOptions&);

std::string lbl(const FiniteLattice& L, Interval iv) { return L.name() + " " + L.interval_label(iv); }

IntervalSet random_raw(const LatticePtr& L, Rng& rng) {
  static const double density[] = {0.05, 0.1, 0.2, 0.35};
  std::bernoulli_distribution pick(density[rng() % 4]);
  IntervalSet s(L);
  for (std::size_t k = 0; k < L->interval_count(); ++k)
    if (!L->interval(k).trivial() && pick(rng)) s.insert_id(k);
  return s;
}

IntervalSet random_basic(const LatticePtr& L, Rng& rng) { return basic_closure(random_raw(L, rng)); }

Elem random_elem(const FiniteLattice& V, Rng& rng) { return static_cast<Elem>(rng() % V.size()); }

// An increasing list of `count` elements; the last one is the top when `end_at_top`.
std::vector<Elem> random_chain(const FiniteLattice& V, std::size_t count, bool end_at_top, Rng& rng) {
  std::vector<Elem> out;
  Elem cur = V.bottom();
  for (std::size_t i = 0; i < count; ++i) {
    auto up = V.above(cur);
    cur = up[rng() % up.size()];
    out.push_back(cur);
  }
  if (end_at_top && !out.empty()) out.back() = V.top();
  return out;
}

Seq random_seq(const LatticePtr& V, Rng& rng) {
  auto n = alpha_bound(*V) + 1;
  auto t = random_chain(*V, n, true, rng);
  t.front() = V->bottom();
  return make_seq(V, std::move(t));
}

// ---- prop-03 --------------------------------------------------------------

void suite_prop03(const Context& c, Recorder& r, Rng&, const VerifyOptions&) {
  const auto& L = *c.L;
  r.check("frame-iff-implication", [&](Outcome& o) {
    o.expect(is_frame(L) == reference::brute_implication(L).has_value(),
             L.name() + ": frame test and implication search disagree");
  });
  r.check("implication-table", [&](Outcome& o) {
    o.expect(implication_table(L) == reference::brute_implication(L), L.name() + ": implication tables differ");
  });
  r.check("frame-law-all-subsets", [&](Outcome& o) {
    o.expect(is_frame(L) == reference::frame_law_all_subsets(L), L.name() + ": binary and full frame laws disagree");
  });
  r.check("frame-implies-modular",
          [&](Outcome& o) { o.expect(!is_frame(L) || is_modular(L), L.name() + ": frame but not modular"); });
}

// ---- thm-0 ----------------------------------------------------------------

std::vector<std::vector<Elem>> sorted_tables(const std::vector<LatticeMap>& maps) {
  std::vector<std::vector<Elem>> t;
  for (const auto& m : maps) t.push_back(m.table());
  std::sort(t.begin(), t.end());
  return t;
}

void suite_thm0(const Context& c, Recorder& r, Rng&, const VerifyOptions& opts) {
  const auto& N = *c.N;
  const auto& NL = *N.lattice();
  r.check("matches-fixed-set-oracle", [&](Outcome& o) {
    o.expect(sorted_tables(N.nuclei()) == sorted_tables(reference::nuclei_by_fixed_sets(c.L)),
             c.L->name() + ": enumeration differs from the fixed-set oracle");
  });
  if (c.L->size() <= 6)
    r.check("matches-brute-force", [&](Outcome& o) {
      o.expect(sorted_tables(N.nuclei()) == sorted_tables(reference::nuclei_brute_force(c.L)),
               c.L->name() + ": enumeration differs from brute force");
    });
  r.check("bounds", [&](Outcome& o) {
    o.expect(N.nucleus(NL.bottom()) == LatticeMap::identity(c.L), c.L->name() + ": bottom is not the identity");
    o.expect(N.nucleus(NL.top()) == LatticeMap::top_map(c.L), c.L->name() + ": top is not the constant-top map");
  });
  if (N.size() <= opts.max_nuclei)
    r.check("frame", [&](Outcome& o) {
      bool ok = NL.size() <= 12 ? reference::frame_law_all_subsets(NL) : reference::frame_law_binary(NL);
      o.expect(ok, "N(" + c.L->name() + ") fails the frame law");
    });
  r.check("joins-and-meets", [&](Outcome& o) {
    for (Elem x = 0; x < NL.size(); ++x)
      for (Elem y = 0; y < NL.size(); ++y) {
        Elem xy[] = {x, y};
        o.expect(N.join_via_divisions(xy) == NL.join(x, y),
                 [&] { return c.L->name() + ": join of " + NL.id(x) + "," + NL.id(y) + " via divisions"; });
        o.expect(N.meet_pointwise(xy) == NL.meet(x, y),
                 [&] { return c.L->name() + ": pointwise meet of " + NL.id(x) + "," + NL.id(y); });
      }
  });
  const std::map<std::string, std::size_t> known = {{"C1", 1}, {"C2", 2}, {"C3", 4}};
  if (auto it = known.find(c.entry->name); it != known.end())
    r.check("count", [&](Outcome& o) {
      o.expect(N.size() == it->second, c.L->name() + ": " + std::to_string(N.size()) + " nuclei, expected " +
                                           std::to_string(it->second));
    });
}

// ---- thm-00 ---------------------------------------------------------------

std::vector<IntervalSet> division_sets_by_xi_joins(const LatticePtr& L) {
  std::vector<IntervalSet> out{IntervalSet::trivial(L)};
  auto add = [&](IntervalSet s) {
    for (const auto& d : out)
      if (d == s) return false;
    out.push_back(std::move(s));
    return true;
  };
  for (auto iv : L->intervals()) add(reference::xi(L, iv));
  for (bool grew = true; grew;) {
    grew = false;
    const auto k = out.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) grew = add(reference::dvs_fixpoint(out[i] | out[j])) || grew;
  }
  return out;
}

void suite_thm00(const Context& c, Recorder& r, Rng&, const VerifyOptions&) {
  const auto& N = *c.N;
  const auto& NL = *N.lattice();
  r.check("nucleus-division-nucleus", [&](Outcome& o) {
    for (const auto& j : N.nuclei())
      o.expect(division_to_nucleus(nucleus_to_division(j)) == j, c.L->name() + ": round trip fails at " + j.to_string());
  });
  r.check("associated-inflator", [&](Outcome& o) {
    for (const auto& j : N.nuclei())
      o.expect(associated_inflator(nucleus_to_division(j)) == j, c.L->name() + ": |D_j| differs from " + j.to_string());
  });
  r.check("division-nucleus-division", [&](Outcome& o) {
    auto all = division_sets_by_xi_joins(c.L);
    o.expect(all.size() == N.size(), c.L->name() + ": " + std::to_string(all.size()) + " division sets for " +
                                         std::to_string(N.size()) + " nuclei");
    for (const auto& d : all) {
      if (!o.expect(is_division(d), c.L->name() + ": oracle produced a non-division set " + d.to_short_string()))
        continue;
      o.expect(nucleus_to_division(division_to_nucleus(d)) == d,
               c.L->name() + ": round trip fails at " + d.to_short_string());
    }
  });
  r.check("order-isomorphism", [&](Outcome& o) {
    for (Elem x = 0; x < NL.size(); ++x)
      for (Elem y = 0; y < NL.size(); ++y)
        o.expect(NL.leq(x, y) == N.division(x).subset_of(N.division(y)),
                 [&] { return c.L->name() + ": order mismatch at " + NL.id(x) + "," + NL.id(y); });
  });
  r.check("quotients", [&](Outcome& o) {
    for (const auto& j : N.nuclei()) {
      auto Q = quotient(j);
      auto q = quotient_map(j, Q);
      o.expect(!is_modular(*c.L) || is_modular(*Q), c.L->name() + ": quotient by " + j.to_string() + " not modular");
      o.expect(is_idiom_morphism(q), c.L->name() + ": quotient map of " + j.to_string() + " is not a morphism");
    }
  });
}

// ---- thm-000 --------------------------------------------------------------

void suite_thm000(const Context& c, Recorder& r, Rng& rng, const VerifyOptions& opts) {
  std::vector<IntervalSet> samples;
  for (std::size_t i = 0; i < opts.samples; ++i) samples.push_back(random_raw(c.L, rng));
  r.check("dvs-formula-vs-fixpoint", [&](Outcome& o) {
    for (const auto& s : samples)
      o.expect(dvs_closure(s) == reference::dvs_fixpoint(s),
               [&] { return c.L->name() + ": closures of " + s.to_short_string() + " differ"; });
  });
  r.check("basic-and-congruence-vs-fixpoint", [&](Outcome& o) {
    for (const auto& s : samples) {
      o.expect(basic_closure(s) == reference::basic_fixpoint(s),
               [&] { return c.L->name() + ": basic closures of " + s.to_short_string() + " differ"; });
      o.expect(cng_closure(basic_closure(s)) == reference::cng_fixpoint(s),
               [&] { return c.L->name() + ": congruence closures of " + s.to_short_string() + " differ"; });
    }
  });
  r.check("closure-laws", [&](Outcome& o) {
    using Closure = IntervalSet (*)(const IntervalSet&);
    const std::pair<const char*, Closure> closures[] = {
        {"basic", basic_closure}, {"cng", [](const IntervalSet& s) { return cng_closure(basic_closure(s)); }},
        {"dvs", dvs_closure}};
    for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
      const auto& s = samples[i];
      auto bigger = s | samples[i + 1];
      for (auto [name, f] : closures) {
        auto fs = f(s);
        o.expect(s.subset_of(fs), [&] { return c.L->name() + ": " + name + " not inflationary"; });
        o.expect(f(fs) == fs, [&] { return c.L->name() + ": " + name + " not idempotent"; });
        o.expect(fs.subset_of(f(bigger)), [&] { return c.L->name() + ": " + name + " not monotone"; });
      }
    }
  });
  r.check("levels", [&](Outcome& o) {
    for (const auto& s : samples) {
      o.expect(is_basic(basic_closure(s)), c.L->name() + ": basic closure not basic");
      o.expect(is_congruence(cng_closure(basic_closure(s))), c.L->name() + ": congruence closure not congruence");
      o.expect(is_division(dvs_closure(s)), c.L->name() + ": division closure not a division set");
    }
  });
}

// ---- operators --------------------------------------------------------------

void suite_operators(const Context& c, Recorder& r, Rng& rng, const VerifyOptions& opts) {
  std::vector<IntervalSet> bs{IntervalSet::trivial(c.L), IntervalSet::all(c.L)};
  for (std::size_t i = 0; i < opts.samples; ++i) bs.push_back(random_basic(c.L, rng));
  r.check("inclusions", [&](Outcome& o) {
    for (const auto& b : bs) {
      auto s = smp(b), m = cmp(b), t = crt(b), f = fll(b);
      auto w = [&](const char* what) { return c.L->name() + ": " + what + " fails at " + b.to_short_string(); };
      o.expect(t.subset_of(s), w("Crt <= Smp"));
      o.expect(f.subset_of(m), w("Fll <= Cmp"));
      o.expect(s.subset_of(m), w("Smp <= Cmp"));
      o.expect(t.subset_of(f), w("Crt <= Fll"));
    }
  });
  r.check("literal-oracle", [&](Outcome& o) {
    for (const auto& b : bs) {
      o.expect(smp(b) == reference::smp(b), c.L->name() + ": Smp differs from the oracle");
      o.expect(cmp(b) == reference::cmp(b), c.L->name() + ": Cmp differs from the oracle");
      o.expect(crt(b) == reference::crt(b), c.L->name() + ": Crt differs from the oracle");
      o.expect(fll(b) == reference::fll(b), c.L->name() + ": Fll differs from the oracle");
    }
  });
  r.check("outputs-basic", [&](Outcome& o) {
    for (const auto& b : bs)
      for (auto op : {Operator::smp, Operator::cmp, Operator::crt, Operator::fll})
        o.expect(is_basic(apply(op, b)), c.L->name() + ": " + std::string(to_string(op)) + " output not basic");
  });
  r.check("crt-fll-preserve-intersections", [&](Outcome& o) {
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
      const auto& a = bs[i];
      const auto& b = bs[i + 1];
      o.expect(crt(a & b) == (crt(a) & crt(b)), c.L->name() + ": Crt does not preserve an intersection");
      o.expect(fll(a & b) == (fll(a) & fll(b)), c.L->name() + ": Fll does not preserve an intersection");
    }
  });
  r.check("smp-cmp-stable", [&](Outcome& o) {
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
      const auto& a = bs[i];
      const auto& b = bs[i + 1];
      o.expect((smp(a) & b).subset_of(smp(a & b)), c.L->name() + ": Smp is not stable");
      o.expect((cmp(a) & b).subset_of(cmp(a & b)), c.L->name() + ": Cmp is not stable");
    }
  });
  r.check("trivial-input", [&](Outcome& o) {
    auto O = IntervalSet::trivial(c.L);
    o.expect(smp(O) == crt(O), c.L->name() + ": Smp(O) != Crt(O)");
    o.expect(cmp(O) == fll(O), c.L->name() + ": Cmp(O) != Fll(O)");
    o.expect(dvs_closure(smp(O)) == IntervalSet::all(c.L), c.L->name() + ": Dvs(Smp(O)) is not everything");
  });
}

// ---- def-d1 / def-d7 --------------------------------------------------------

void suite_defd1(const Context& c, Recorder& r, Rng& rng, const VerifyOptions& opts) {
  const auto& N = *c.N;
  const auto& NL = N.lattice();
  r.check("chi-allocation", [&](Outcome& o) {
    auto v = check_allocation(*c.chi);
    o.expect(v.ok, "axiom " + std::to_string(v.axiom) + ": " + v.witness);
  });
  r.check("chi-matches-oracle", [&](Outcome& o) {
    for (auto iv : c.L->intervals())
      o.expect(N.nucleus((*c.chi)(iv)) == reference::chi(N.nuclei(), iv), lbl(*c.L, iv) + ": chi differs");
  });
  r.check("constant-allocations", [&](Outcome& o) {
    auto c4 = chain(4);
    for (const auto& V : {NL, c4})
      for (Elem a = 0; a < V->size(); ++a)
        o.expect(is_allocation(constant_allocation(c.L, V, a)), c.L->name() + ": S(" + V->id(a) + ") fails");
  });
  r.check("constant-embedding", [&](Outcome& o) {
    for (Elem a = 0; a < NL->size(); ++a)
      for (Elem b = 0; b < NL->size(); ++b)
        o.expect(NL->leq(a, b) == constant_allocation(c.L, NL, a).leq(constant_allocation(c.L, NL, b)),
                 c.L->name() + ": S is not an order embedding");
  });
  r.check("random-allocations", [&](Outcome& o) {
    for (std::size_t i = 1; i < c.allocations.size(); ++i) {
      auto v = check_allocation(c.allocations[i]);
      o.expect(v.ok, v.witness);
    }
  });
  r.check("pointwise-meets", [&](Outcome& o) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      std::vector<IntervalValuedMap> fam{c.allocations[rng() % c.allocations.size()],
                                         c.allocations[rng() % c.allocations.size()]};
      auto v = check_allocation(pointwise_meet(fam));
      o.expect(v.ok, "meet of two allocations: " + v.witness);
    }
  });
  r.check("pullback-along-quotients", [&](Outcome& o) {
    o.expect(pullback(LatticeMap::identity(c.L), *c.chi) == *c.chi, c.L->name() + ": pullback along identity");
    for (const auto& j : N.nuclei()) {
      auto Q = quotient(j);
      auto chiQ = chi_allocation(enumerate_nuclei(Q));
      auto v = check_allocation(pullback(quotient_map(j, Q), chiQ));
      o.expect(v.ok, "pullback along " + j.to_string() + ": " + v.witness);
    }
    auto point = one_point();
    auto to_point = LatticeMap::constant(c.L, point, 0);
    auto g = constant_allocation(point, NL, NL->top());
    if (c.L->size() > 1)
      o.expect(pullback(to_point, g) == constant_allocation(c.L, NL, NL->top()), c.L->name() + ": pullback to a point");
  });
  r.check("post-composition", [&](Outcome& o) {
    auto c4 = chain(4);
    for (std::size_t i = 0; i < opts.samples / 5 + 1; ++i) {
      auto th = random_chain(*NL, 3, false, rng);
      auto rho = threshold_above(NL, c4, th);
      auto v = check_allocation(post_compose(rho, c.allocations[rng() % c.allocations.size()]));
      o.expect(v.ok, "threshold image: " + v.witness);
    }
  });
}

void suite_defd7(const Context& c, Recorder& r, Rng& rng, const VerifyOptions& opts) {
  const auto& N = *c.N;
  const auto& DL = c.D->lattice();
  r.check("xi-aspect", [&](Outcome& o) {
    auto v = check_aspect(*c.xi);
    o.expect(v.ok, "axiom " + std::to_string(v.axiom) + ": " + v.witness);
  });
  r.check("xi-matches-oracle", [&](Outcome& o) {
    for (auto iv : c.L->intervals())
      o.expect(c.D->set((*c.xi)(iv)) == reference::xi(c.L, iv), lbl(*c.L, iv) + ": xi differs");
  });
  r.check("constant-aspects", [&](Outcome& o) {
    auto c4 = chain(4);
    for (const auto& V : {DL, c4})
      for (Elem a = 0; a < V->size(); ++a)
        o.expect(is_aspect(constant_aspect(c.L, V, a)), c.L->name() + ": R(" + V->id(a) + ") fails");
  });
  r.check("constant-embedding", [&](Outcome& o) {
    for (Elem a = 0; a < DL->size(); ++a)
      for (Elem b = 0; b < DL->size(); ++b)
        o.expect(DL->leq(a, b) == constant_aspect(c.L, DL, a).leq(constant_aspect(c.L, DL, b)),
                 c.L->name() + ": R is not an order embedding");
  });
  r.check("random-aspects", [&](Outcome& o) {
    for (std::size_t i = 1; i < c.aspects.size(); ++i) {
      auto v = check_aspect(c.aspects[i]);
      o.expect(v.ok, v.witness);
    }
  });
  r.check("pointwise-joins", [&](Outcome& o) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      std::vector<IntervalValuedMap> fam{c.aspects[rng() % c.aspects.size()], c.aspects[rng() % c.aspects.size()]};
      auto v = check_aspect(pointwise_join(fam));
      o.expect(v.ok, "join of two aspects: " + v.witness);
    }
  });
  r.check("pullback-along-quotients", [&](Outcome& o) {
    for (const auto& j : N.nuclei()) {
      auto Q = quotient(j);
      auto xiQ = xi_aspect(DivisionLattice(enumerate_nuclei(Q)));
      auto v = check_aspect(pullback(quotient_map(j, Q), xiQ));
      o.expect(v.ok, "pullback along " + j.to_string() + ": " + v.witness);
    }
  });
  r.check("post-composition", [&](Outcome& o) {
    auto c4 = chain(4);
    for (std::size_t i = 0; i < opts.samples / 5 + 1; ++i) {
      auto bounds = random_chain(*DL, 4, true, rng);
      auto rho = threshold_below(DL, c4, bounds);
      auto v = check_aspect(post_compose(rho, c.aspects[rng() % c.aspects.size()]));
      o.expect(v.ok, "threshold image: " + v.witness);
    }
  });
}

// ---- prop-d4 / prop-d10 -----------------------------------------------------

void suite_propd4(const Context& c, Recorder& r, Rng& rng, const VerifyOptions& opts) {
  const auto& V = *c.N->lattice();
  auto pick = [&] { return c.allocations[rng() % c.allocations.size()]; };
  r.check("congruence-output", [&](Outcome& o) {
    for (const auto& phi : c.allocations)
      for (Elem a = 0; a < V.size(); ++a)
        o.expect(is_congruence(allocation_level_set(phi, a)), c.L->name() + ": level set is not a congruence set");
  });
  r.check("join-to-intersection", [&](Outcome& o) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      auto phi = pick();
      Elem a = random_elem(V, rng), b = random_elem(V, rng);
      o.expect(allocation_level_set(phi, V.join(a, b)) ==
                   (allocation_level_set(phi, a) & allocation_level_set(phi, b)),
               [&] { return c.L->name() + ": Q(phi, " + V.id(a) + " v " + V.id(b) + ")"; });
    }
  });
  r.check("meet-of-allocations", [&](Outcome& o) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      std::vector<IntervalValuedMap> fam{pick(), pick()};
      auto m = pointwise_meet(fam);
      Elem a = random_elem(V, rng);
      o.expect(allocation_level_set(m, a) == (allocation_level_set(fam[0], a) & allocation_level_set(fam[1], a)),
               [&] { return c.L->name() + ": Q(phi ^ phi', " + V.id(a) + ")"; });
    }
  });
  r.check("antitone", [&](Outcome& o) {
    for (Elem a = 0; a < V.size(); ++a)
      for (Elem b = 0; b < V.size(); ++b)
        if (V.leq(a, b))
          o.expect(allocation_level_set(*c.chi, b).subset_of(allocation_level_set(*c.chi, a)),
                   c.L->name() + ": Q(chi, .) is not antitone");
  });
  r.check("division-closure-meets", [&](Outcome& o) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      std::vector<IntervalValuedMap> fam{pick(), pick()};
      Elem a = random_elem(V, rng), b = random_elem(V, rng);
      const auto& phi = fam[0];
      o.expect(dvs_closure(allocation_level_set(phi, V.join(a, b))) ==
                   (dvs_closure(allocation_level_set(phi, a)) & dvs_closure(allocation_level_set(phi, b))),
               [&] { return c.L->name() + ": Dvs(Q(phi, " + V.id(a) + " v " + V.id(b) + "))"; });
      o.expect(dvs_closure(allocation_level_set(pointwise_meet(fam), a)) ==
                   (dvs_closure(allocation_level_set(fam[0], a)) & dvs_closure(allocation_level_set(fam[1], a))),
               [&] { return c.L->name() + ": Dvs(Q(phi ^ phi', " + V.id(a) + "))"; });
    }
  });
}

void suite_propd10(const Context& c, Recorder& r, Rng& rng, const VerifyOptions& opts) {
  const auto& V = *c.D->lattice();
  auto pick = [&] { return c.aspects[rng() % c.aspects.size()]; };
  r.check("congruence-output", [&](Outcome& o) {
    for (const auto& psi : c.aspects)
      for (Elem a = 0; a < V.size(); ++a)
        o.expect(is_congruence(aspect_level_set(psi, a)), c.L->name() + ": level set is not a congruence set");
  });
  r.check("meet-to-intersection", [&](Outcome& o) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      auto psi = pick();
      Elem a = random_elem(V, rng), b = random_elem(V, rng);
      o.expect(aspect_level_set(psi, V.meet(a, b)) == (aspect_level_set(psi, a) & aspect_level_set(psi, b)),
               [&] { return c.L->name() + ": M(psi, " + V.id(a) + " ^ " + V.id(b) + ")"; });
    }
  });
  r.check("join-of-aspects", [&](Outcome& o) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      std::vector<IntervalValuedMap> fam{pick(), pick()};
      auto j = pointwise_join(fam);
      Elem a = random_elem(V, rng);
      o.expect(aspect_level_set(j, a) == (aspect_level_set(fam[0], a) & aspect_level_set(fam[1], a)),
               [&] { return c.L->name() + ": M(psi v psi', " + V.id(a) + ")"; });
    }
  });
  r.check("monotone", [&](Outcome& o) {
    for (Elem a = 0; a < V.size(); ++a)
      for (Elem b = 0; b < V.size(); ++b)
        if (V.leq(a, b))
          o.expect(aspect_level_set(*c.xi, a).subset_of(aspect_level_set(*c.xi, b)),
                   c.L->name() + ": M(xi, .) is not monotone");
  });
  r.check("xi-level-sets", [&](Outcome& o) {
    for (Elem a = 0; a < V.size(); ++a)
      o.expect(aspect_level_set(*c.xi, a) == c.D->set(a),
               c.L->name() + ": M(xi, D) differs from D at " + V.id(a));
  });
  r.check("division-closure-meets", [&](Outcome& o) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      std::vector<IntervalValuedMap> fam{pick(), pick()};
      Elem a = random_elem(V, rng), b = random_elem(V, rng);
      o.expect(dvs_closure(aspect_level_set(fam[0], V.meet(a, b))) ==
                   (dvs_closure(aspect_level_set(fam[0], a)) & dvs_closure(aspect_level_set(fam[0], b))),
               [&] { return c.L->name() + ": Dvs(M(psi, " + V.id(a) + " ^ " + V.id(b) + "))"; });
      o.expect(dvs_closure(aspect_level_set(pointwise_join(fam), a)) ==
                   (dvs_closure(aspect_level_set(fam[0], a)) & dvs_closure(aspect_level_set(fam[1], a))),
               [&] { return c.L->name() + ": Dvs(M(psi v psi', " + V.id(a) + "))"; });
    }
  });
}

// ---- thm-d12 ----------------------------------------------------------------

void suite_thmd12(const Context& c, Recorder& r, Rng& rng, const VerifyOptions&) {
  const auto& DL = c.D->lattice();
  r.check("xi", [&](Outcome& o) {
    auto v = check_allocation(allocation_from_aspect(*c.xi));
    o.expect(v.ok, v.witness);
    o.expect(allocation_from_aspect(*c.xi) == constant_allocation(c.L, DL, DL->top()),
             c.L->name() + ": H(xi) is not the constant top");
  });
  r.check("constants", [&](Outcome& o) {
    for (Elem a = 0; a < DL->size(); ++a) {
      auto v = check_allocation(allocation_from_aspect(constant_aspect(c.L, DL, a)));
      o.expect(v.ok, "H(R(" + DL->id(a) + ")): " + v.witness);
    }
    o.expect(allocation_from_aspect(constant_aspect(c.L, DL, DL->bottom())) ==
                 constant_allocation(c.L, DL, DL->top()),
             c.L->name() + ": H(R(bottom)) is not the constant top");
  });
  r.check("random-aspects", [&](Outcome& o) {
    for (std::size_t i = 1; i < c.aspects.size(); ++i) {
      auto v = check_allocation(allocation_from_aspect(c.aspects[i]));
      o.expect(v.ok, v.witness);
    }
  });
  r.check("antitone", [&](Outcome& o) {
    for (std::size_t i = 0; i < c.aspects.size(); ++i) {
      std::vector<IntervalValuedMap> fam{c.aspects[i], c.aspects[rng() % c.aspects.size()]};
      auto bigger = pointwise_join(fam);
      o.expect(allocation_from_aspect(bigger).leq(allocation_from_aspect(fam[0])),
               c.L->name() + ": H is not antitone on a sampled pair");
    }
  });
}

// ---- decomposition suites ---------------------------------------------------

std::vector<Elem> supports_union(const IntervalValuedMap& phi) {
  std::set<Elem> ps;
  for (auto iv : phi.lattice()->intervals())
    for (auto p : support(phi, iv)) ps.insert(p);
  return {ps.begin(), ps.end()};
}

void suite_propdct3(const Context& c, Recorder& r, Rng&, const VerifyOptions&) {
  r.check("allocations-are-radical", [&](Outcome& o) {
    for (const auto& phi : c.allocations) {
      auto v = check_radical(phi);
      o.expect(v.ok, v.witness);
    }
  });
  r.check("support-allocation", [&](Outcome& o) {
    for (const auto& phi : c.allocations) {
      auto v = check_set_allocation(support_map(phi));
      o.expect(v.ok, "axiom " + std::to_string(v.axiom) + ": " + v.witness);
    }
  });
  r.check("singleton-lift-inverse", [&](Outcome& o) {
    for (const auto& phi : c.allocations)
      o.expect(rho_from_allocation(singleton_lift(phi)) == phi, c.L->name() + ": meet of singletons is not the map");
  });
  r.check("meet-of-support-radical", [&](Outcome& o) {
    for (const auto& phi : c.allocations) {
      auto v = check_radical(rho_from_allocation(support_map(phi)));
      o.expect(v.ok, v.witness);
    }
  });
}

void suite_propdtc5(const Context& c, Recorder& r, Rng&, const VerifyOptions&) {
  r.check("indicator-2-allocation", [&](Outcome& o) {
    for (const auto& phi : c.allocations)
      for (auto p : supports_union(phi)) {
        auto v = check_allocation(inert_indicator(phi, p));
        o.expect(v.ok, "p=" + phi.values()->id(p) + ", clause " + std::to_string(v.axiom) + ": " + v.witness);
      }
  });
}

void suite_cordtc5(const Context& c, Recorder& r, Rng&, const VerifyOptions&) {
  r.check("division-set", [&](Outcome& o) {
    for (const auto& phi : c.allocations)
      for (auto p : supports_union(phi)) {
        auto d = inert_division_set(phi, p);
        o.expect(is_division(d), [&] {
          std::string w = c.L->name() + ", p=" + phi.values()->id(p) + ": " + d.to_short_string() + " is " +
                          std::string(to_string(level(d)));
          for (auto [a, b] : d.members())
            for (auto x : c.L->between(a, b))
              if (!d.contains(x, b)) return w + "; " + c.L->interval_label({a, b}) + " is in but " +
                                            c.L->interval_label({x, b}) + " is not";
          return w;
        });
      }
  });
  r.check("closed-below-abutting-and-joins", [&](Outcome& o) {
    // The closure properties the 2-allocation clauses do give.
    for (const auto& phi : c.allocations)
      for (auto p : supports_union(phi)) {
        auto d = inert_division_set(phi, p);
        const auto& L = *c.L;
        for (auto [a, b] : d.members())
          for (auto x : L.between(a, b)) o.expect(d.contains(a, x), lbl(L, {a, x}) + " missing below");
        for (auto [a, b] : d.members())
          for (auto [b2, cc] : d.members())
            if (b == b2) o.expect(d.contains(a, cc), lbl(L, {a, cc}) + " missing after abutting");
        for (Elem a = 0; a < L.size(); ++a) {
          Elem j = a;
          for (auto x : L.above(a))
            if (d.contains(a, x)) j = L.join(j, x);
          o.expect(d.contains(a, j), lbl(L, {a, j}) + " missing as a join");
        }
      }
  });
}

void suite_lemmadtc8(const Context& c, Recorder& r, Rng&, const VerifyOptions&) {
  const auto& NL = *c.N->lattice();
  r.check("chi-is-meet-over-stable", [&](Outcome& o) {
    for (const auto& phi : c.allocations) {
      if (!is_adequate(phi)) continue;
      for (auto [a, b] : c.L->intervals()) {
        Elem m = NL.top();
        for (auto x : c.L->between(a, b))
          if (is_stable(phi, {a, x})) m = NL.meet(m, (*c.chi)(a, x));
        o.expect(m == (*c.chi)(a, b), lbl(*c.L, {a, b}) + ": meet over stable intervals is " + NL.id(m));
      }
    }
  });
}

void suite_lemmadtc9(const Context& c, Recorder& r, Rng&, const VerifyOptions&) {
  r.check("inertial-points-large", [&](Outcome& o) {
    for (const auto& phi : c.allocations) {
      if (!is_adequate(phi)) continue;
      for (auto iv : c.L->intervals()) {
        if (!is_atomic(phi, iv)) continue;
        auto p = support(phi, iv).front();
        for (auto x : c.L->between(iv.lo, iv.hi))
          if (is_inertial_point(phi, p, iv, x))
            o.expect(is_large(*c.L, x, iv), lbl(*c.L, iv) + ": inertial point " + c.L->id(x) + " is not large");
      }
    }
  });
}

void suite_thmdtc11(const Context& c, Recorder& r, Rng&, const VerifyOptions&) {
  r.check("chi-decomposes", [&](Outcome& o) {
    o.expect(is_adequate(*c.chi), c.L->name() + ": chi is not adequate");
    for (auto iv : c.L->intervals()) {
      if (iv.trivial()) continue;
      auto d = find_decomposition(*c.chi, iv);
      if (!o.expect(d.status == Decomposition::Status::found, lbl(*c.L, iv) + ": no decomposition")) continue;
      auto v = verify_decomposition(*c.chi, iv, d.parts);
      o.expect(v.ok, lbl(*c.L, iv) + ": " + v.witness);
    }
  });
  r.check("adequate-iff-decomposable", [&](Outcome& o) {
    for (const auto& phi : c.allocations) {
      bool all = true;
      for (auto iv : c.L->intervals()) {
        if (iv.trivial()) continue;
        auto d = find_decomposition(phi, iv);
        if (d.status == Decomposition::Status::found) {
          auto v = verify_decomposition(phi, iv, d.parts);
          o.expect(v.ok, lbl(*c.L, iv) + ": " + v.witness);
        } else {
          all = false;
        }
      }
      o.expect(is_adequate(phi) == all, c.L->name() + ": adequacy and decomposability disagree");
    }
  });
}

// ---- dimension suites -------------------------------------------------------

void suite_propd13(const Context& c, Recorder& r, Rng& rng, const VerifyOptions& opts) {
  const auto& DL = c.D->lattice();
  std::vector<Seq> seqs;
  for (auto op : {Operator::crt, Operator::fll})
    seqs.push_back(opr_filtration(*c.xi, DL->bottom(), op).completed);
  for (std::size_t i = 0; i < opts.samples / 5 + 1; ++i) seqs.push_back(random_seq(DL, rng));
  std::vector<IntervalValuedMap> psis = c.aspects;
  for (Elem b = 0; b < DL->size(); b += std::max<Elem>(1, static_cast<Elem>(DL->size() / 3)))
    psis.push_back(constant_aspect(c.L, DL, b));
  r.check("dimension-is-aspect", [&](Outcome& o) {
    for (const auto& psi : psis)
      for (const auto& h : seqs) {
        auto v = check_aspect(dim_aspect(psi, h).map);
        o.expect(v.ok, v.witness);
      }
  });
  r.check("sequence-meets-to-joins", [&](Outcome& o) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const auto& psi = psis[rng() % psis.size()];
      std::vector<Seq> hs{seqs[rng() % seqs.size()], seqs[rng() % seqs.size()]};
      std::vector<IntervalValuedMap> ds{dim_aspect(psi, hs[0]).map, dim_aspect(psi, hs[1]).map};
      o.expect(dim_aspect(psi, seq_meet(hs)).map == pointwise_join(ds), c.L->name() + ": d(psi, h ^ h') differs");
    }
  });
  r.check("aspect-joins-to-joins", [&](Outcome& o) {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const auto& h = seqs[rng() % seqs.size()];
      std::vector<IntervalValuedMap> ps{psis[rng() % psis.size()], psis[rng() % psis.size()]};
      std::vector<IntervalValuedMap> ds{dim_aspect(ps[0], h).map, dim_aspect(ps[1], h).map};
      o.expect(dim_aspect(pointwise_join(ps), h).map == pointwise_join(ds),
               c.L->name() + ": d(psi v psi', h) differs");
    }
  });
}

void suite_cord14(const Context& c, Recorder& r, Rng&, const VerifyOptions&) {
  const auto& DL = c.D->lattice();
  std::vector<std::pair<std::string, IntervalValuedMap>> psis{{"xi", *c.xi}};
  for (Elem b = 0; b < DL->size(); ++b) psis.emplace_back("R(" + DL->id(b) + ")", constant_aspect(c.L, DL, b));
  r.check("triangle", [&](Outcome& o) {
    for (const auto& [name, psi] : psis)
      for (Elem a = 0; a < DL->size(); ++a) {
        auto d = dim_aspect(psi, constant_seq(DL, a)).map;
        o.expect(aspect_level_set(d, 0) == aspect_level_set(psi, a),
                 c.L->name() + ": " + name + " at " + DL->id(a));
      }
  });
}

void suite_propd15(const Context& c, Recorder& r, Rng&, const VerifyOptions& opts) {
  if (c.D->size() > opts.max_nuclei) return;
  r.check("opr-equals-kpr", [&](Outcome& o) {
    for (Elem d = 0; d < c.D->size(); ++d)
      for (auto op : {Operator::crt, Operator::fll, Operator::smp, Operator::cmp}) {
        auto h = opr_filtration(*c.xi, d, op);
        auto k = kpr_filtration(c.D->set(d), op, h.raw.size() - 1);
        for (std::size_t i = 0; i < k.size(); ++i)
          o.expect(c.D->set(h.raw[i]) == k[i], [&] {
            return c.L->name() + ": " + std::string(to_string(op)) + " from " + c.D->lattice()->id(d) +
                   " differs at index " + std::to_string(i);
          });
      }
  });
}

void suite_cord16(const Context& c, Recorder& r, Rng&, const VerifyOptions&) {
  r.check("gabriel-and-boyle-are-filtrations", [&](Outcome& o) {
    for (Elem d = 0; d < c.D->size(); ++d) {
      const auto& D = c.D->set(d);
      for (auto [op, dim] : {std::pair{Operator::crt, gabriel_dimension(D)}, std::pair{Operator::fll, boyle_dimension(D)}}) {
        auto k = kpr_filtration(D, op, dim.trace.size() - 1);
        o.expect(k == dim.trace, c.L->name() + ": " + std::string(to_string(op)) + " trace from " +
                                     c.D->lattice()->id(d) + " differs from the filtration");
        auto h = opr_filtration(*c.xi, d, op);
        for (std::size_t i = 0; i < dim.trace.size(); ++i)
          o.expect(c.D->set(h.raw[i]) == dim.trace[i], c.L->name() + ": Opr-filtration differs from the derivative");
      }
    }
  });
  r.check("dimension-of-trivial-set", [&](Outcome& o) {
    auto O = IntervalSet::trivial(c.L);
    std::size_t expect = c.L->size() >= 2 ? 1 : 0;
    auto g = gabriel_dimension(O), b = boyle_dimension(O);
    o.expect(g.value == expect, c.L->name() + ": Gabriel dimension " + (g.value ? std::to_string(*g.value) : "none"));
    o.expect(b.value == expect, c.L->name() + ": Boyle dimension " + (b.value ? std::to_string(*b.value) : "none"));
    o.expect(gabriel_dimension(IntervalSet::all(c.L)).value == 0u, c.L->name() + ": dimension of I(A) is not 0");
  });
}

struct SuiteDef {
  const char* name;
  SuiteFn fn;
};

const SuiteDef kSuites[] = {
    {"prop-03", suite_prop03},       {"thm-0", suite_thm0},           {"thm-00", suite_thm00},
    {"thm-000", suite_thm000},       {"operators", suite_operators},  {"def-d1", suite_defd1},
    {"def-d7", suite_defd7},         {"prop-d4", suite_propd4},       {"prop-d10", suite_propd10},
    {"thm-d12", suite_thmd12},       {"prop-dct3", suite_propdct3},   {"prop-dtc5", suite_propdtc5},
    {"cor-dtc5", suite_cordtc5},     {"lemma-dtc8", suite_lemmadtc8}, {"lemma-dtc9", suite_lemmadtc9},
    {"thm-dtc11", suite_thmdtc11},   {"prop-d13", suite_propd13},     {"cor-d14", suite_cord14},
    {"prop-d15", suite_propd15},     {"cor-d16", suite_cord16},
};

std::uint64_t entry_seed(std::uint64_t seed, std::string_view suite, std::string_view entry) {
  // FNV-1a over the names keeps sampling independent of run order.
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (char ch : suite) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
  h = (h ^ '/') * 1099511628211ull;
  for (char ch : entry) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
  return h;
}

Context build_context(const CorpusEntry& e, const VerifyOptions& opts) {
  Context c;
  c.entry = &e;
  c.L = e.lattice;
  if (e.lattice->size() > opts.max_size) {
    c.skipped = e.name + " exceeds the size cap";
    return c;
  }
  if (!is_modular(*e.lattice)) {
    c.skipped = e.name + " is not modular";
    return c;
  }
  c.N.emplace(enumerate_nuclei(e.lattice, opts.max_size));
  c.D.emplace(*c.N);
  c.chi.emplace(chi_allocation(*c.N));
  c.xi.emplace(xi_aspect(*c.D));
  Rng rng(entry_seed(opts.seed, "context", e.name));
  c.allocations.push_back(*c.chi);
  c.aspects.push_back(*c.xi);
  const std::size_t extra = std::max<std::size_t>(20, opts.samples / 2);
  for (std::size_t i = 0; i < extra; ++i) {
    c.allocations.push_back(random_allocation(*c.chi, rng));
    c.aspects.push_back(random_aspect(*c.xi, rng));
  }
  return c;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  if (name == "all") return true;
  for (const auto& s : kSuites)
    if (name == s.name) return true;
  return false;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const std::vector<CorpusEntry>& corpus,
                                    const VerifyOptions& opts) {
  std::vector<const SuiteDef*> chosen;
  for (const auto& n : names) {
    if (!is_suite(n)) throw Error(Errc::InvalidInput, "unknown suite '" + n + "'");
    for (const auto& s : kSuites)
      if (n == "all" || n == s.name)
        if (std::find(chosen.begin(), chosen.end(), &s) == chosen.end()) chosen.push_back(&s);
  }

  const auto m = static_cast<std::ptrdiff_t>(corpus.size());
  std::vector<Context> contexts(corpus.size());
  std::vector<std::vector<std::vector<Verdict>>> per_entry(corpus.size(), std::vector<std::vector<Verdict>>(chosen.size()));
  std::vector<std::vector<double>> seconds(corpus.size(), std::vector<double>(chosen.size(), 0));
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const auto& e = corpus[static_cast<std::size_t>(i)];
    try {
      contexts[i] = build_context(e, opts);
    } catch (const std::exception& ex) {
      contexts[i].entry = &e;
      contexts[i].L = e.lattice;
      contexts[i].skipped = std::string("setup failed: ") + ex.what();
    }
    const auto& c = contexts[i];
    for (std::size_t s = 0; s < chosen.size(); ++s) {
      Recorder rec(e.name);
      auto t0 = std::chrono::steady_clock::now();
      if (c.skipped.empty()) {
        Rng rng(entry_seed(opts.seed, chosen[s]->name, e.name));
        chosen[s]->fn(c, rec, rng, opts);
      } else if (c.skipped.rfind("setup failed", 0) == 0) {
        rec.check("setup", [&](Outcome& o) { o.fail(c.skipped); });
      }
      seconds[i][s] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      per_entry[i][s] = std::move(rec.verdicts());
    }
  }

  std::vector<SuiteReport> out;
  for (std::size_t s = 0; s < chosen.size(); ++s) {
    SuiteReport rep{chosen[s]->name, {}, 0};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (auto& v : per_entry[i][s]) rep.verdicts.push_back(std::move(v));
      rep.seconds += seconds[i][s];
    }
    out.push_back(std::move(rep));
  }
  return out;
}

SuiteReport run_suite(std::string_view name, const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  auto reports = run_suites({std::string(name)}, corpus, opts);
  if (reports.size() != 1) throw Error(Errc::InvalidInput, "run_suite takes a single suite name");
  return std::move(reports.front());
}

}  // namespace idiom
