#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "idiom/allocations.hpp"
#include "idiom/decomposition.hpp"
#include "idiom/fixtures.hpp"
#include "idiom/verify.hpp"

using namespace idiom;

namespace {

struct Line {
  bool pass = true;
  std::string note;
};

std::map<std::string, SuiteReport> by_name;

// Pass when every verdict of the named suites passes; the note carries the
// first failure.
Line suites(std::initializer_list<const char*> names, const std::string& only_check = {}) {
  Line out;
  std::size_t cases = 0;
  for (auto n : names)
    for (const auto& v : by_name.at(n).verdicts) {
      if (!only_check.empty() && v.check != only_check) continue;
      cases += v.cases;
      if (!v.pass && out.pass) {
        out.pass = false;
        out.note = std::string(n) + "/" + v.check + " on " + v.lattice + ": " + v.witness;
      }
    }
  if (out.pass) out.note = std::to_string(cases) + " cases";
  return out;
}

Line both(Line a, const Line& b) {
  if (a.pass && !b.pass) return b;
  if (a.pass) a.note += ", " + b.note;
  return a;
}

// Every table B2 -> V, filtered to allocations, searched for an interval
// without a decomposition.
Line non_adequate_search() {
  auto b2 = boolean_square();
  std::size_t allocations = 0, adequate = 0;
  for (auto V : {chain(2), chain(3), boolean_square()}) {
    const auto n = b2->interval_count();
    std::vector<Elem> t(n, 0);
    for (;;) {
      IntervalValuedMap f(b2, V, t);
      if (is_allocation(f)) {
        ++allocations;
        adequate += is_adequate(f);
        for (auto iv : b2->intervals()) {
          if (iv.trivial()) continue;
          auto d = find_decomposition(f, iv);
          if (d.status == Decomposition::Status::absent)
            return {true, "absent at " + b2->interval_label(iv) + " for a " + V->name() + "-allocation"};
        }
      }
      std::size_t k = 0;
      while (k < n && ++t[k] == V->size()) t[k++] = 0;
      if (k == n) break;
    }
  }
  return {false, "no B2 allocation into C2, C3 or B2 lacks a decomposition (" + std::to_string(allocations) +
                     " allocations, " + std::to_string(adequate) + " adequate)"};
}

}  // namespace

int main() {
  auto corpus = default_corpus();
  VerifyOptions opts;
  opts.samples = 50;
  auto t0 = std::chrono::steady_clock::now();
  for (auto& r : run_suites({"all"}, corpus, opts)) by_name.emplace(r.suite, std::move(r));
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::vector<std::pair<std::string, Line>> lines;

  auto c1 = suites({"prop-03"});
  double slowest = 0;
  std::map<std::string, double> per_lattice;
  for (const auto& v : by_name.at("prop-03").verdicts) per_lattice[v.lattice] += v.seconds;
  for (auto& [n, s] : per_lattice) slowest = std::max(slowest, s);
  if (slowest >= 1.0) c1 = {false, "slowest lattice took " + std::to_string(slowest) + " s"};
  lines.emplace_back("frame iff implication exists", c1);

  lines.emplace_back("nuclei form a frame; C2 and C3 counts", suites({"thm-0"}));
  lines.emplace_back("nucleus/division round trips", suites({"thm-00"}));

  auto c4 = suites({"thm-000"}, "dvs-formula-vs-fixpoint");
  std::size_t samples = 0;
  for (const auto& v : by_name.at("thm-000").verdicts)
    if (v.check == "dvs-formula-vs-fixpoint") samples += v.cases;
  if (samples < 200) c4 = {false, "only " + std::to_string(samples) + " samples"};
  lines.emplace_back("division closure formula vs fixpoint", c4);

  lines.emplace_back("operator inclusions and intersections", suites({"operators"}));
  lines.emplace_back("chi, xi and constant maps", suites({"def-d1", "def-d7"}));
  lines.emplace_back("level sets and their morphism laws", suites({"prop-d4", "prop-d10"}));
  lines.emplace_back("H(psi) is an allocation and antitone", suites({"thm-d12"}));
  lines.emplace_back("support, inert indicator and D_p", suites({"prop-dct3", "prop-dtc5", "cor-dtc5"}));
  lines.emplace_back("stable meets and large inertial points", suites({"lemma-dtc8", "lemma-dtc9"}));
  lines.emplace_back("decompositions for chi; absent for a B2 allocation",
                     both(suites({"thm-dtc11"}), non_adequate_search()));
  lines.emplace_back("dimension aspects and their join laws", suites({"prop-d13"}));
  lines.emplace_back("Opr filtration equals Kpr filtration",
                     both(suites({"prop-d15"}), suites({"cor-d16"}, "gabriel-and-boyle-are-filtrations")));
  lines.emplace_back("dimension triangle", suites({"cor-d14"}));

  auto c15 = suites({"cor-d16"}, "dimension-of-trivial-set");
  if (total >= 300) c15 = {false, "full run took " + std::to_string(total) + " s"};
  else if (c15.pass) c15.note += ", full run " + std::to_string(total) + " s";
  lines.emplace_back("semi-artinian collapse and total time", c15);

  int failed = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& [what, l] = lines[i];
    std::printf("criterion %2zu: %s  %s  (%s)\n", i + 1, l.pass ? "PASS" : "FAIL", what.c_str(), l.note.c_str());
    failed += !l.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, lines.size());
  return failed == 0 ? 0 : 1;
}
