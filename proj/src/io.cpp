#include "idiom/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "idiom/error.hpp"

namespace idiom {

LatticePtr lattice_from_json(const Json& j, std::string fallback_name) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw Error(Errc::ParseError, "lattice JSON needs \"elements\" and \"covers\"");
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  try {
    for (const auto& e : j.at("elements")) elements.push_back(e.get<std::string>());
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw Error(Errc::ParseError, "each cover is a pair [lo, hi]");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : fallback_name;
  return FiniteLattice::from_covers(elements, covers, std::move(name));
}

Json lattice_to_json(const FiniteLattice& L) {
  Json j;
  if (!L.name().empty()) j["name"] = L.name();
  j["elements"] = L.ids();
  j["covers"] = Json::array();
  for (auto [x, y] : L.covers()) j["covers"].push_back({L.id(x), L.id(y)});
  return j;
}

LatticePtr load_lattice(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
  return lattice_from_json(j, path.stem().string());
}

void save_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidInput, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::string to_dot(const FiniteLattice& L) {
  std::ostringstream os;
  os << "digraph \"" << (L.name().empty() ? "L" : L.name()) << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<std::size_t, std::vector<Elem>> ranks;
  for (Elem x = 0; x < L.size(); ++x) ranks[L.height(x)].push_back(x);
  for (const auto& [h, xs] : ranks) {
    os << "  { rank=same;";
    for (auto x : xs) os << " \"" << L.id(x) << "\";";
    os << " }\n";
  }
  for (auto [x, y] : L.covers()) os << "  \"" << L.id(x) << "\" -> \"" << L.id(y) << "\" [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

Json interval_set_to_json(const IntervalSet& s) {
  const auto& L = *s.lattice();
  Json j;
  j["lattice"] = lattice_to_json(L);
  j["intervals"] = Json::array();
  for (auto iv : s.members()) j["intervals"].push_back({L.id(iv.lo), L.id(iv.hi)});
  return j;
}

IntervalSet interval_set_from_json(const LatticePtr& L, const Json& j) {
  const Json& list = j.is_object() ? j.at("intervals") : j;
  IntervalSet s(L);
  try {
    for (const auto& p : list) {
      if (!p.is_array() || p.size() != 2) throw Error(Errc::ParseError, "each interval is a pair [lo, hi]");
      s.insert({L->index_of(p[0].get<std::string>()), L->index_of(p[1].get<std::string>())});
    }
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return s;
}

Json lattice_map_to_json(const LatticeMap& f) {
  Json m = Json::object();
  for (Elem x = 0; x < f.domain()->size(); ++x) m[f.domain()->id(x)] = f.codomain()->id(f(x));
  return Json{{"map", m}};
}

LatticeMap lattice_map_from_json(const LatticePtr& L, const Json& j) {
  if (!j.is_object() || !j.contains("map") || !j["map"].is_object())
    throw Error(Errc::ParseError, "map JSON needs a \"map\" object");
  std::vector<Elem> t(L->size(), 0);
  std::vector<bool> seen(L->size(), false);
  for (const auto& [k, v] : j["map"].items()) {
    if (!v.is_string()) throw Error(Errc::ParseError, "map values are element ids");
    auto x = L->index_of(k);
    t[x] = L->index_of(v.get<std::string>());
    seen[x] = true;
  }
  for (Elem x = 0; x < L->size(); ++x)
    if (!seen[x]) throw Error(Errc::NotTotal, "map has no value at '" + L->id(x) + "'");
  return LatticeMap(L, std::move(t));
}

Json interval_map_to_json(const IntervalValuedMap& f) {
  const auto& L = *f.lattice();
  Json t = Json::object();
  for (std::size_t k = 0; k < L.interval_count(); ++k) {
    auto iv = L.interval(k);
    t[L.id(iv.lo) + "," + L.id(iv.hi)] = f.values()->id(f.at_id(k));
  }
  return Json{{"lattice", L.name()}, {"valueLattice", f.values()->name()}, {"kind", to_string(f.kind())}, {"table", t}};
}

IntervalValuedMap interval_map_from_json(const LatticePtr& L, const LatticePtr& values, const Json& j,
                                         MapKind kind) {
  if (!j.is_object() || !j.contains("table") || !j["table"].is_object())
    throw Error(Errc::ParseError, "interval map JSON needs a \"table\" object");
  std::vector<Elem> t(L->interval_count(), values->bottom());
  std::vector<bool> seen(t.size(), false);
  for (const auto& [k, v] : j["table"].items()) {
    auto comma = k.find(',');
    if (comma == std::string::npos || !v.is_string()) throw Error(Errc::ParseError, "bad table entry '" + k + "'");
    auto lo = L->index_of(k.substr(0, comma)), hi = L->index_of(k.substr(comma + 1));
    auto id = L->interval_id(lo, hi);
    if (!id) throw Error(Errc::InvalidInterval, "'" + k + "' is not an interval");
    t[*id] = values->index_of(v.get<std::string>());
    seen[*id] = true;
  }
  for (std::size_t k = 0; k < t.size(); ++k)
    if (!seen[k]) throw Error(Errc::NotTotal, "table has no value at " + L->interval_label(L->interval(k)));
  return IntervalValuedMap(L, values, std::move(t), kind);
}

Json decomposition_to_json(const IntervalValuedMap& phi, const Decomposition& d) {
  const auto& L = *phi.lattice();
  Json parts = Json::object();
  for (auto [p, x] : d.parts) parts[phi.values()->id(p)] = L.id(x);
  Json lines = Json::array();
  std::istringstream in(d.transcript);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return Json{{"interval", {L.id(d.interval.lo), L.id(d.interval.hi)}},
              {"status", to_string(d.status)},
              {"parts", parts},
              {"transcript", lines}};
}

Json corpus_manifest(const std::vector<CorpusEntry>& corpus) {
  Json entries = Json::array();
  for (const auto& e : corpus)
    entries.push_back({{"name", e.name}, {"provenance", e.provenance}, {"size", e.lattice->size()},
                       {"file", e.name + ".json"}});
  return Json{{"schema", 1}, {"entries", entries}};
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
  if (!j.contains("entries")) return {CorpusEntry{path.stem().string(), lattice_from_json(j, path.stem().string()), "file"}};
  std::vector<CorpusEntry> out;
  for (const auto& e : j.at("entries")) {
    auto name = e.at("name").get<std::string>();
    auto L = load_lattice(path.parent_path() / e.at("file").get<std::string>());
    out.push_back(CorpusEntry{name, L, e.value("provenance", std::string("file"))});
  }
  return out;
}

}  // namespace idiom
