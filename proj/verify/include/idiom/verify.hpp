#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "idiom/fixtures.hpp"

namespace idiom {

struct Verdict {
  std::string check;
  std::string lattice;
  bool pass = true;
  std::string witness;  ///< empty on pass
  std::size_t cases = 0;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<Verdict> verdicts;
  double seconds = 0;
  bool pass() const noexcept;
  std::size_t failures() const noexcept;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 50;    ///< sampled cases per lattice where a check samples
  std::size_t max_size = kDefaultMaxSize;
  std::size_t max_nuclei = 64;  ///< larger N(A) are skipped by the exhaustive checks
};

/// Suite names in run order; "all" is accepted by run_suites as well.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs the named suites over the corpus, sharing per-lattice data between
/// suites and working on corpus entries concurrently. Throws InvalidInput on
/// an unknown suite name.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const std::vector<CorpusEntry>& corpus,
                                    const VerifyOptions& opts = {});
SuiteReport run_suite(std::string_view name, const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts = {});

}  // namespace idiom
