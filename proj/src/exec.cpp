#include "hyperrh/exec.hpp"

#include <omp.h>

#include <cstdlib>
#include <mutex>
#include <string>

namespace hyperrh {

void apply_thread_cap() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (const char* cap = std::getenv("HYPERRH_THREADS")) {
      int n = std::atoi(cap);
      if (n > 0) omp_set_num_threads(n);
    }
  });
}

int max_threads() {
  apply_thread_cap();
  return omp_get_max_threads();
}

}  // namespace hyperrh
