#include "doctest.h"

#include <filesystem>

#include "idiom/error.hpp"
#include "idiom/io.hpp"

using namespace idiom;

TEST_CASE("lattice json") {
  auto m3 = diamond();
  auto j = lattice_to_json(*m3);
  auto back = lattice_from_json(j);
  CHECK(back->ids() == m3->ids());
  CHECK(back->covers() == m3->covers());
  CHECK(back->name() == "M3");
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"elements": ["0","0"], "covers": []})")), Error);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"elements": ["0","1"], "covers": [["1","1"]]})")), Error);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"elements": ["0"]})")), Error);
  auto dot = to_dot(*m3);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"0\" -> \"a\"") != std::string::npos);
}

TEST_CASE("sets and maps") {
  auto b2 = boolean_square();
  auto s = dvs_closure(IntervalSet::of(b2, std::vector<Interval>{{0, 1}}));
  CHECK(interval_set_from_json(b2, interval_set_to_json(s)) == s);
  CHECK(interval_set_from_json(b2, interval_set_to_json(s)["intervals"]) == s);

  auto N = enumerate_nuclei(b2);
  for (const auto& j : N.nuclei()) CHECK(lattice_map_from_json(b2, lattice_map_to_json(j)) == j);
  CHECK_THROWS_AS(lattice_map_from_json(b2, Json::parse(R"({"map": {"0": "0"}})")), Error);

  auto chi = chi_allocation(N);
  auto j = interval_map_to_json(chi);
  CHECK(j["valueLattice"] == N.lattice()->name());
  CHECK(j["table"].size() == b2->interval_count());
  CHECK(interval_map_from_json(b2, N.lattice(), j, MapKind::allocation) == chi);
  j["table"].erase("0,1");
  CHECK_THROWS_AS(interval_map_from_json(b2, N.lattice(), j), Error);
}

TEST_CASE("corpus files") {
  auto dir = std::filesystem::temp_directory_path() / "idiom_io_test";
  std::filesystem::create_directories(dir);
  auto corpus = default_corpus();
  save_json(dir / "manifest.json", corpus_manifest(corpus));
  for (const auto& e : corpus) save_json(dir / (e.name + ".json"), lattice_to_json(*e.lattice));
  auto back = load_corpus(dir / "manifest.json");
  REQUIRE(back.size() == corpus.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].name == corpus[i].name);
    CHECK(back[i].provenance == corpus[i].provenance);
    CHECK(back[i].lattice->covers() == corpus[i].lattice->covers());
  }
  auto single = load_corpus(dir / "C3.json");
  CHECK(single.size() == 1);
  CHECK(load_lattice(dir / "M3.json")->size() == 5);
  std::filesystem::remove_all(dir);
}
