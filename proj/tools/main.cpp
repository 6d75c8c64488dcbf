#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "idiom/allocations.hpp"
#include "idiom/decomposition.hpp"
#include "idiom/dimension.hpp"
#include "idiom/error.hpp"
#include "idiom/fixtures.hpp"
#include "idiom/io.hpp"
#include "idiom/nuclei.hpp"
#include "idiom/verify.hpp"

namespace fs = std::filesystem;
using namespace idiom;

namespace {

struct Options {
  std::string lattice;
  std::string corpus = "default";
  std::uint64_t seed = 1;
  std::size_t max_size = kDefaultMaxSize;
  bool deterministic = false;
  bool json = false;
  std::string dot;
  std::string intervals;
  std::string set_file;
  std::string interval;
  std::string map_file;
  std::string values_file;
  std::string kind;
  std::string nucleus;
  std::string alpha;
  std::vector<std::string> suites;
  std::size_t samples = 50;
  std::string out_dir = "corpus";
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json inputs = Json::object();
  Json result = Json::object();
  std::ostringstream text;

  void verdict(std::string check, std::string lattice, bool pass, std::string witness = {}, double seconds = 0,
               std::size_t cases = 1) {
    verdicts_.push_back(Verdict{std::move(check), std::move(lattice), pass, std::move(witness), cases, seconds});
  }
  void verdicts(const std::vector<Verdict>& vs) { verdicts_.insert(verdicts_.end(), vs.begin(), vs.end()); }

  bool pass() const {
    return std::all_of(verdicts_.begin(), verdicts_.end(), [](const Verdict& v) { return v.pass; });
  }

  Json to_json(bool deterministic) const {
    Json vs = Json::array();
    for (const auto& v : verdicts_) {
      Json j{{"check", v.check}, {"lattice", v.lattice}, {"pass", v.pass}, {"cases", v.cases}};
      if (!v.pass) j["witness"] = v.witness;
      if (!deterministic) j["seconds"] = v.seconds;
      vs.push_back(j);
    }
    Json j{{"schema", 1}, {"command", command_}, {"inputs", inputs}, {"result", result}, {"verdicts", vs},
           {"pass", pass()}};
    if (!deterministic) j["timestamp"] = static_cast<std::int64_t>(std::time(nullptr));
    return j;
  }

  std::string to_text(bool deterministic) const {
    std::ostringstream os;
    os << text.str();
    if (!verdicts_.empty()) {
      os << "verdicts:\n";
      for (const auto& v : verdicts_) {
        os << "  " << (v.pass ? "PASS " : "FAIL ") << v.check << " [" << v.lattice << "]";
        if (!deterministic) os << " " << std::fixed << std::setprecision(3) << v.seconds << "s";
        os << "\n";
        if (!v.pass) os << "       " << v.witness << "\n";
      }
    }
    return os.str();
  }

 private:
  std::string command_;
  std::vector<Verdict> verdicts_;
};

LatticePtr named_lattice(std::string_view name) {
  if (name == "N5") return pentagon();
  if (name == "C1") return one_point();
  for (const auto& e : default_corpus()) if (e.name == name) return e.lattice;
  return nullptr;
}

LatticePtr resolve_lattice(const Options& o) {
  if (o.lattice.empty()) throw CLI::ValidationError("--lattice", "this command needs --lattice FILE");
  if (fs::exists(o.lattice)) return load_lattice(o.lattice);
  if (auto L = named_lattice(o.lattice)) return L;
  throw Error(Errc::InvalidInput, "no lattice file or named lattice '" + o.lattice + "'");
}

std::vector<CorpusEntry> resolve_corpus(const Options& o) {
  if (o.corpus == "default") return default_corpus(o.seed);
  if (fs::exists(o.corpus)) return load_corpus(o.corpus);
  if (auto L = named_lattice(o.corpus)) return {CorpusEntry{o.corpus, L, "named"}};
  throw Error(Errc::InvalidInput, "no corpus file or name '" + o.corpus + "'");
}

Interval parse_interval(const FiniteLattice& L, const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(Errc::ParseError, "interval '" + s + "' is not lo,hi");
  Interval iv{L.index_of(s.substr(0, comma)), L.index_of(s.substr(comma + 1))};
  if (!L.leq(iv.lo, iv.hi)) throw Error(Errc::InvalidInterval, s + " is not an interval");
  return iv;
}

// "lo,hi;lo,hi" or a JSON file; empty means the trivial intervals only.
IntervalSet resolve_set(const Options& o, const LatticePtr& L) {
  if (!o.set_file.empty()) {
    std::ifstream in(o.set_file);
    if (!in) throw Error(Errc::InvalidInput, "cannot open " + o.set_file);
    return interval_set_from_json(L, Json::parse(in));
  }
  IntervalSet s = IntervalSet::trivial(L);
  std::stringstream ss(o.intervals);
  for (std::string item; std::getline(ss, item, ';');)
    if (!item.empty()) s.insert(parse_interval(*L, item));
  return s;
}

std::vector<Interval> resolve_intervals(const Options& o, const FiniteLattice& L) {
  if (!o.interval.empty()) return {parse_interval(L, o.interval)};
  std::vector<Interval> out;
  for (auto iv : L.intervals())
    if (!iv.trivial()) out.push_back(iv);
  return out;
}

IntervalValuedMap load_map(const Options& o, const LatticePtr& L, LatticePtr default_values, MapKind kind) {
  auto values = o.values_file.empty() ? std::move(default_values) : load_lattice(o.values_file);
  std::ifstream in(o.map_file);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + o.map_file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, o.map_file + ": " + e.what());
  }
  return interval_map_from_json(L, values, j, kind);
}

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_dot(const Options& o, const FiniteLattice& L, Report& r) {
  if (o.dot.empty()) return;
  std::ofstream out(o.dot);
  if (!out) throw Error(Errc::InvalidInput, "cannot write " + o.dot);
  out << to_dot(L);
  r.inputs["dot"] = o.dot;
}

void print_map(Report& r, const IntervalValuedMap& f, const std::function<std::string(Elem)>& show) {
  const auto& L = *f.lattice();
  for (auto iv : L.intervals()) r.text << "  " << L.interval_label(iv) << " -> " << show(f(iv)) << "\n";
  r.result["map"] = interval_map_to_json(f);
}

// ---- commands ------------------------------------------------------------------

void cmd_validate(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  r.text << L->name() << ": " << L->size() << " elements, " << L->covers().size() << " covers, "
         << L->interval_count() << " intervals\n";
  r.result["lattice"] = lattice_to_json(*L);
  r.verdict("lattice", L->name(), true);
  write_dot(o, *L, r);
}

void cmd_modular(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  std::string witness;
  for (Elem a = 0; a < L->size() && witness.empty(); ++a)
    for (Elem c = 0; c < L->size() && witness.empty(); ++c)
      if (L->leq(a, c))
        for (Elem b = 0; b < L->size(); ++b)
          if (L->join(a, L->meet(b, c)) != L->meet(L->join(a, b), c)) {
            witness = "a=" + L->id(a) + " b=" + L->id(b) + " c=" + L->id(c);
            break;
          }
  r.result["modular"] = witness.empty();
  r.text << L->name() << (witness.empty() ? " is modular\n" : " is not modular\n");
  r.verdict("modular", L->name(), witness.empty(), witness);
}

void cmd_frame(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto t = implication_table(*L);
  r.result["frame"] = t.has_value();
  if (t) {
    Json table = Json::object();
    auto n = L->size();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) table[L->id(a) + ">" + L->id(b)] = L->id((*t)[a * n + b]);
    r.result["implication"] = table;
    r.text << L->name() << " is a frame\n";
  } else {
    r.text << L->name() << " is not a frame\n";
  }
  std::string witness;
  if (!t)
    for (Elem a = 0; a < L->size() && witness.empty(); ++a)
      for (Elem b = 0; b < L->size() && witness.empty(); ++b)
        for (Elem c = 0; c < L->size(); ++c)
          if (L->meet(a, L->join(b, c)) != L->join(L->meet(a, b), L->meet(a, c))) {
            witness = "a=" + L->id(a) + " b=" + L->id(b) + " c=" + L->id(c);
            break;
          }
  r.verdict("frame", L->name(), t.has_value(), witness);
}

void describe_set(Report& r, const IntervalSet& s) {
  auto f = level_flags(s);
  r.text << s.to_string() << "\nlevel: " << to_string(level(s)) << "\n";
  r.result["set"] = interval_set_to_json(s)["intervals"];
  r.result["level"] = to_string(level(s));
  r.result["flags"] = {{"abstract", f.abstract}, {"basic", f.basic}, {"congruence", f.congruence},
                       {"division", f.division}};
}

void cmd_intervals(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  if (o.intervals.empty() && o.set_file.empty()) {
    Json list = Json::array();
    for (auto iv : L->intervals()) {
      r.text << L->interval_label(iv) << (is_large(*L, iv.lo, iv) ? "" : "") << "\n";
      list.push_back({L->id(iv.lo), L->id(iv.hi)});
    }
    r.result["intervals"] = list;
    return;
  }
  describe_set(r, resolve_set(o, L));
}

void cmd_closures(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto s = resolve_set(o, L);
  IntervalSet c(L);
  if (o.kind == "basic") c = basic_closure(s);
  else if (o.kind == "cng") c = cng_closure(basic_closure(s));
  else c = dvs_closure(s);
  r.inputs["closure"] = o.kind;
  describe_set(r, c);
}

void cmd_operators(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto s = resolve_set(o, L);
  auto op = *parse_operator(o.kind);
  r.inputs["operator"] = o.kind;
  describe_set(r, apply(op, s));
}

void cmd_nuclei(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  std::optional<NucleusLattice> N;
  auto t = timed([&] { N.emplace(enumerate_nuclei(L, o.max_size)); });
  const auto& NL = *N->lattice();
  Json list = Json::array();
  r.text << N->size() << " nuclei\n";
  for (Elem e = 0; e < N->size(); ++e) {
    r.text << "  " << NL.id(e) << ": " << N->nucleus(e).to_string() << "   " << N->division(e).to_short_string()
           << "\n";
    Json j = lattice_map_to_json(N->nucleus(e));
    j["id"] = NL.id(e);
    j["division"] = interval_set_to_json(N->division(e))["intervals"];
    list.push_back(j);
  }
  r.text << to_dot(NL);
  r.result["count"] = N->size();
  r.result["nuclei"] = list;
  r.result["lattice"] = lattice_to_json(NL);
  r.verdict("enumerate", L->name(), true, {}, t);
  r.verdict("frame-law", NL.name(), is_frame(NL), "N(A) is not distributive");
  write_dot(o, NL, r);
}

LatticeMap resolve_nucleus(const Options& o, const LatticePtr& L, const NucleusLattice& N) {
  if (!o.map_file.empty()) {
    std::ifstream in(o.map_file);
    if (!in) throw Error(Errc::InvalidInput, "cannot open " + o.map_file);
    return lattice_map_from_json(L, Json::parse(in));
  }
  if (o.nucleus.empty()) throw CLI::ValidationError("--nucleus", "quotient needs --nucleus ID or --map FILE");
  return N.nucleus(N.lattice()->index_of(o.nucleus));
}

void cmd_quotient(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto N = enumerate_nuclei(L, o.max_size);
  auto j = resolve_nucleus(o, L, N);
  auto Q = quotient(j);
  r.text << "quotient by " << j.to_string() << "\n" << to_dot(*Q);
  r.result["quotient"] = lattice_to_json(*Q);
  r.verdict("morphism", L->name(), is_idiom_morphism(quotient_map(j, Q)), "quotient map is not a morphism");
  write_dot(o, *Q, r);
}

void cmd_chi(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto N = enumerate_nuclei(L, o.max_size);
  auto chi = chi_allocation(N);
  print_map(r, chi, [&](Elem e) { return N.nucleus(e).to_string(); });
  auto c = check_allocation(chi);
  r.verdict("allocation", L->name(), c.ok, c.witness);
}

void cmd_xi(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto N = enumerate_nuclei(L, o.max_size);
  DivisionLattice D(N);
  auto x = xi_aspect(D);
  print_map(r, x, [&](Elem e) { return D.set(e).to_short_string(); });
  auto c = check_aspect(x);
  r.verdict("aspect", L->name(), c.ok, c.witness);
}

void cmd_allocation_check(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto N = enumerate_nuclei(L, o.max_size);
  auto f = o.map_file.empty() ? chi_allocation(N) : load_map(o, L, N.lattice(), MapKind::raw);
  r.inputs["map"] = o.map_file.empty() ? "chi" : o.map_file;
  AxiomCheck c;
  auto t = timed([&] { c = check_allocation(f); });
  r.text << (c.ok ? "allocation\n" : "not an allocation (axiom " + std::to_string(c.axiom) + ")\n");
  r.verdict("allocation", L->name(), c.ok, c.witness, t);
}

void cmd_aspect_check(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto N = enumerate_nuclei(L, o.max_size);
  DivisionLattice D(N);
  auto f = o.map_file.empty() ? xi_aspect(D) : load_map(o, L, D.lattice(), MapKind::raw);
  r.inputs["map"] = o.map_file.empty() ? "xi" : o.map_file;
  AxiomCheck c;
  auto t = timed([&] { c = check_aspect(f); });
  r.text << (c.ok ? "aspect\n" : "not an aspect (axiom " + std::to_string(c.axiom) + ")\n");
  r.verdict("aspect", L->name(), c.ok, c.witness, t);
}

IntervalValuedMap resolve_allocation(const Options& o, const LatticePtr& L, const NucleusLattice& N) {
  if (o.map_file.empty()) return chi_allocation(N);
  auto f = load_map(o, L, N.lattice(), MapKind::raw);
  auto c = check_allocation(f);
  if (!c.ok) throw Error(Errc::InvalidAllocation, c.witness);
  f.set_kind(MapKind::allocation);
  return f;
}

void cmd_decompose(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto N = enumerate_nuclei(L, o.max_size);
  auto phi = resolve_allocation(o, L, N);
  Json list = Json::array();
  for (auto iv : resolve_intervals(o, *L)) {
    Decomposition d;
    auto t = timed([&] { d = find_decomposition(phi, iv); });
    r.text << L->interval_label(iv) << ": " << to_string(d.status);
    for (auto [p, x] : d.parts) r.text << "  " << phi.values()->id(p) << "->" << L->id(x);
    r.text << "\n";
    list.push_back(decomposition_to_json(phi, d));
    r.verdict("decompose " + L->interval_label(iv), L->name(), d.status == Decomposition::Status::found,
              std::string(to_string(d.status)), t);
  }
  r.result["decompositions"] = list;
}

void cmd_support(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto N = enumerate_nuclei(L, o.max_size);
  auto phi = resolve_allocation(o, L, N);
  Json table = Json::object();
  for (auto iv : resolve_intervals(o, *L)) {
    Json ps = Json::array();
    r.text << L->interval_label(iv) << ":";
    for (auto p : support(phi, iv)) {
      ps.push_back(phi.values()->id(p));
      r.text << " " << phi.values()->id(p);
    }
    r.text << "\n";
    table[L->id(iv.lo) + "," + L->id(iv.hi)] = ps;
  }
  r.result["support"] = table;
  auto c = check_set_allocation(support_map(phi));
  r.verdict("support-allocation", L->name(), c.ok, c.witness);
}

void cmd_dimension(const Options& o, Report& r, Operator op) {
  auto L = resolve_lattice(o);
  auto D = resolve_set(o, L);
  Dimension d;
  auto t = timed([&] { d = filtration_dimension(D, op); });
  Json trace = Json::array();
  for (const auto& k : d.trace) {
    r.text << k.to_short_string() << "\n";
    trace.push_back(interval_set_to_json(k)["intervals"]);
  }
  r.result["trace"] = trace;
  if (d.value) {
    r.result["dimension"] = *d.value;
    r.text << "dimension " << *d.value << "\n";
  } else {
    r.result["dimension"] = nullptr;
    r.text << "no dimension: the filtration stops below I(A)\n";
  }
  r.verdict("dimension", L->name(), d.value.has_value(), "filtration stalls", t);
}

void cmd_filtration(const Options& o, Report& r) {
  auto L = resolve_lattice(o);
  auto N = enumerate_nuclei(L, o.max_size);
  DivisionLattice D(N);
  auto x = xi_aspect(D);
  auto op = *parse_operator(o.kind.empty() ? "crt" : o.kind);
  Elem alpha = D.index_of(o.intervals.empty() && o.set_file.empty() ? IntervalSet::trivial(L) : resolve_set(o, L));
  auto h = opr_filtration(x, alpha, op);
  auto k = kpr_filtration(D.set(alpha), op, h.raw.size() - 1);
  Json terms = Json::array();
  bool same = true;
  for (std::size_t i = 0; i < h.raw.size(); ++i) {
    r.text << i << ": " << D.set(h.raw[i]).to_short_string() << "\n";
    terms.push_back(interval_set_to_json(D.set(h.raw[i]))["intervals"]);
    same = same && D.set(h.raw[i]) == k[i];
  }
  r.inputs["operator"] = to_string(op);
  r.result["terms"] = terms;
  r.result["bnd"] = h.bnd;
  r.result["reachesTop"] = h.reaches_top;
  r.verdict("matches-kpr", L->name(), same, "Opr and Kpr filtrations differ");
}

void cmd_verify(const Options& o, Report& r) {
  auto corpus = resolve_corpus(o);
  VerifyOptions v;
  v.seed = o.seed;
  v.samples = o.samples;
  v.max_size = o.max_size;
  auto suites = o.suites.empty() ? std::vector<std::string>{"all"} : o.suites;
  r.inputs["suites"] = suites;
  Json out = Json::array();
  for (const auto& rep : run_suites(suites, corpus, v)) {
    r.text << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.verdicts.size() << " checks, "
           << rep.failures() << " failed)\n";
    out.push_back({{"suite", rep.suite}, {"pass", rep.pass()}, {"checks", rep.verdicts.size()}});
    auto vs = rep.verdicts;
    for (auto& x : vs) x.check = rep.suite + "/" + x.check;
    r.verdicts(vs);
  }
  r.result["suites"] = out;
}

void cmd_corpus(const Options& o, Report& r) {
  auto corpus = o.corpus == "default" ? default_corpus(o.seed) : resolve_corpus(o);
  fs::create_directories(o.out_dir);
  auto manifest = corpus_manifest(corpus);
  save_json(fs::path(o.out_dir) / "manifest.json", manifest);
  for (const auto& e : corpus) {
    save_json(fs::path(o.out_dir) / (e.name + ".json"), lattice_to_json(*e.lattice));
    r.text << e.name << " (" << e.lattice->size() << ") " << e.provenance << "\n";
    r.verdict("modular", e.name, is_modular(*e.lattice), "not modular");
  }
  r.inputs["out"] = o.out_dir;
  r.result["manifest"] = manifest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations on finite modular lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--lattice", o.lattice, "Lattice JSON file or a named lattice (C3, B2, M3, ...)");
  app.add_option("--corpus", o.corpus, "'default', a manifest JSON, or a lattice JSON");
  app.add_option("--seed", o.seed, "Seed for random lattices and sampling");
  app.add_option("--max-size", o.max_size, "Size cap for generated and enumerated lattices");
  app.add_flag("--deterministic", o.deterministic, "Omit timestamps and timings from reports");
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.add_option("--dot", o.dot, "Write a Hasse DOT file");

  auto with_set = [&](CLI::App* c) {
    c->add_option("--intervals", o.intervals, "Intervals as lo,hi;lo,hi");
    c->add_option("--set", o.set_file, "Interval set JSON file");
    return c;
  };
  auto with_map = [&](CLI::App* c) {
    c->add_option("--map", o.map_file, "Interval map JSON file")->check(CLI::ExistingFile);
    c->add_option("--values", o.values_file, "Value lattice JSON file")->check(CLI::ExistingFile);
    return c;
  };

  std::map<CLI::App*, std::function<void(Report&)>> run;
  auto add = [&](const std::string& name, const std::string& help, std::function<void(Report&)> f) {
    auto* c = app.add_subcommand(name, help);
    run[c] = std::move(f);
    return c;
  };
  add("validate", "Load and validate a lattice", [&](Report& r) { cmd_validate(o, r); });
  add("modular", "Modularity check", [&](Report& r) { cmd_modular(o, r); });
  add("frame", "Frame law and implication", [&](Report& r) { cmd_frame(o, r); });
  with_set(add("intervals", "List intervals or classify a set", [&](Report& r) { cmd_intervals(o, r); }));
  auto* cl = with_set(add("closures", "basic, cng or dvs closure of a set", [&](Report& r) { cmd_closures(o, r); }));
  cl->add_option("kind", o.kind)->required()->check(CLI::IsMember({"basic", "cng", "dvs"}));
  auto* op = with_set(add("operators", "Smp, Cmp, Crt or Fll of a basic set", [&](Report& r) { cmd_operators(o, r); }));
  op->add_option("kind", o.kind)->required()->check(CLI::IsMember({"smp", "cmp", "crt", "fll"}));
  add("nuclei", "Enumerate nuclei", [&](Report& r) { cmd_nuclei(o, r); });
  auto* q = add("quotient", "Quotient by a nucleus", [&](Report& r) { cmd_quotient(o, r); });
  q->add_option("--nucleus", o.nucleus, "Nucleus id in N(A)");
  q->add_option("--map", o.map_file, "Nucleus JSON file")->check(CLI::ExistingFile);
  add("chi", "The allocation chi", [&](Report& r) { cmd_chi(o, r); });
  add("xi", "The aspect xi", [&](Report& r) { cmd_xi(o, r); });
  with_map(add("allocation-check", "Allocation axioms", [&](Report& r) { cmd_allocation_check(o, r); }));
  with_map(add("aspect-check", "Aspect axioms", [&](Report& r) { cmd_aspect_check(o, r); }));
  auto* de = with_map(add("decompose", "Interval decompositions", [&](Report& r) { cmd_decompose(o, r); }));
  de->add_option("--interval", o.interval, "lo,hi (default: every nontrivial interval)");
  auto* su = with_map(add("support", "Support of an allocation", [&](Report& r) { cmd_support(o, r); }));
  su->add_option("--interval", o.interval, "lo,hi (default: every nontrivial interval)");
  with_set(add("gabriel-dim", "Gabriel dimension of a division set", [&](Report& r) { cmd_dimension(o, r, Operator::crt); }));
  with_set(add("boyle-dim", "Boyle dimension of a division set", [&](Report& r) { cmd_dimension(o, r, Operator::fll); }));
  auto* fi = with_set(add("filtration", "Opr-filtration of xi from a division set", [&](Report& r) { cmd_filtration(o, r); }));
  fi->add_option("--op", o.kind, "smp, cmp, crt or fll")->check(CLI::IsMember({"smp", "cmp", "crt", "fll"}));
  auto* ve = add("verify", "Run verification suites over a corpus", [&](Report& r) { cmd_verify(o, r); });
  ve->add_option("--suite", o.suites, "Suite name, repeatable")->check([](const std::string& s) {
    return is_suite(s) ? std::string() : "unknown suite '" + s + "'";
  });
  ve->add_option("--samples", o.samples, "Sampled cases per lattice");
  auto* co = add("corpus", "Write the corpus manifest and lattice files", [&](Report& r) { cmd_corpus(o, r); });
  co->add_option("--out", o.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  Report report(sub->get_name());
  if (!o.lattice.empty()) report.inputs["lattice"] = o.lattice;
  report.inputs["seed"] = o.seed;
  try {
    run.at(sub)(report);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (o.json)
    std::cout << report.to_json(o.deterministic).dump(2) << "\n";
  else
    std::cout << report.to_text(o.deterministic);
  return report.pass() ? 0 : 1;
}
