#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "idiom/allocations.hpp"
#include "idiom/decomposition.hpp"
#include "idiom/fixtures.hpp"
#include "idiom/intervals.hpp"
#include "idiom/lattice.hpp"
#include "idiom/lattice_map.hpp"

namespace idiom {

using Json = nlohmann::ordered_json;

/// {"elements": [...], "covers": [[lo,hi], ...]} with optional "name".
/// Throws ParseError on malformed input and the lattice errors otherwise.
LatticePtr lattice_from_json(const Json& j, std::string fallback_name = {});
/// Covers are the Hasse edges.
Json lattice_to_json(const FiniteLattice& L);
LatticePtr load_lattice(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& j);

/// Hasse diagram, bottom at rank 0.
std::string to_dot(const FiniteLattice& L);

/// {"lattice": {...}, "intervals": [[lo,hi], ...]} sorted by interval order.
Json interval_set_to_json(const IntervalSet& s);
/// Reads the intervals against a given lattice; level flags are recomputed
/// by the caller, never read.
IntervalSet interval_set_from_json(const LatticePtr& L, const Json& j);

/// {"map": {x: j(x), ...}}
Json lattice_map_to_json(const LatticeMap& f);
LatticeMap lattice_map_from_json(const LatticePtr& L, const Json& j);

/// {"lattice": name, "valueLattice": name, "table": {"lo,hi": value}}
Json interval_map_to_json(const IntervalValuedMap& f);
/// Reads a {"table": {"lo,hi": value}} object; every interval needs a value.
IntervalValuedMap interval_map_from_json(const LatticePtr& L, const LatticePtr& values, const Json& j,
                                         MapKind kind = MapKind::raw);

/// {"interval": [lo,hi], "status": ..., "parts": {p: x}, "transcript": [...]}
Json decomposition_to_json(const IntervalValuedMap& phi, const Decomposition& d);

/// One record per entry with its provenance and element count.
Json corpus_manifest(const std::vector<CorpusEntry>& corpus);
/// Loads a manifest written by corpus_manifest (files relative to it), or a
/// single lattice file as a one-entry corpus.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

}  // namespace idiom
