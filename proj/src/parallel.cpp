#include "flexproofs/parallel.hpp"

#include <atomic>

#include <omp.h>

namespace flexproofs {

namespace {
std::atomic<int> g_threads{0};
}

void set_num_threads(int n) {
  g_threads.store(n > 0 ? n : 0, std::memory_order_relaxed);
  if (n > 0) omp_set_num_threads(n);
}

int num_threads() {
  const int n = g_threads.load(std::memory_order_relaxed);
  return n > 0 ? n : omp_get_max_threads();
}

}  // namespace flexproofs
