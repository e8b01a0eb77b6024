#pragma once
#include <cstddef>

namespace hyperrh {

// Every quadrature sweep exists in two variants sharing one contribution
// kernel: Serial accumulates in index order and is the reference; Parallel
// distributes the index range with OpenMP and reduces in the same fixed
// order, so both produce bit-identical sums.
enum class ExecPolicy { Serial, Parallel };

// Honors HYPERRH_THREADS (caps OpenMP threads) once per process.
void apply_thread_cap();
int max_threads();

namespace detail {

template <typename Body>
void parallel_index_loop(std::size_t n, ExecPolicy policy, const Body& body) {
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

}  // namespace detail
}  // namespace hyperrh
