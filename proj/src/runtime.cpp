#include "hb/runtime.hpp"

#include <omp.h>

#include <cstdlib>

namespace hb {

int threads() {
  static const int n = [] {
    if (const char* env = std::getenv("HOPFBRACE_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return omp_get_max_threads();
  }();
  return n;
}

}  // namespace hb
