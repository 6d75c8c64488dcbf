#pragma once

#include <cstddef>

namespace idiom::detail {
// Below this many independent work items a parallel region costs more than it saves.
inline constexpr std::ptrdiff_t kParallelThreshold = 48;
}  // namespace idiom::detail

#if defined(_OPENMP)
#include <omp.h>
#define IDIOM_PRAGMA(x) _Pragma(#x)
#define IDIOM_PARALLEL_FOR(count) \
  IDIOM_PRAGMA(omp parallel for schedule(dynamic) if ((count) > idiom::detail::kParallelThreshold))
#else
#define IDIOM_PARALLEL_FOR(count)
#endif
