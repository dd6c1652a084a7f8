#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace intent {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Fixed-size chunk decomposition. Chunk boundaries depend only on n and
// chunk_size, never on the thread count, so a caller that reduces chunk
// results in chunk-index order gets bit-identical output from the serial
// and parallel paths and from any OMP_NUM_THREADS setting.
inline std::size_t chunk_count(std::size_t n, std::size_t chunk_size) {
  return chunk_size == 0 ? 0 : (n + chunk_size - 1) / chunk_size;
}

template <class F>
void for_each_chunk(std::size_t n, std::size_t chunk_size, bool parallel, F&& fn) {
  const std::size_t nchunks = chunk_count(n, chunk_size);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && nchunks > 1)
#else
  (void)parallel;
#endif
  for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * chunk_size;
    const std::size_t end = begin + chunk_size < n ? begin + chunk_size : n;
    fn(static_cast<std::size_t>(c), begin, end);
  }
}

// default chunk width for gradient accumulation over examples
inline constexpr std::size_t kExampleChunk = 8;

}  // namespace intent
