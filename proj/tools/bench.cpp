// Compares the OpenMP composition kernels against their serial reference
// implementations on braid-scale workloads and verifies they agree exactly.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "hb/brace.hpp"
#include "hb/group.hpp"
#include "hb/linmap.hpp"
#include "hb/runtime.hpp"
#include "hb/skew.hpp"
#include "hb/yang_baxter.hpp"

using namespace hb;

namespace {

template <typename F>
double time_ms(std::uint32_t reps, F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  for (std::uint32_t r = 0; r < reps; ++r) fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-34s %12.2f %12.2f %9.2fx   %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "exact match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::uint32_t order = 6, reps = 3;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--order") == 0 && i + 1 < argc) order = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc) reps = std::atoi(argv[++i]);
    else {
      std::fprintf(stderr, "usage: bench [--order N] [--reps R]\n");
      return 2;
    }
  }
  std::printf("base dimension %u over GF(3), %u worker thread(s), %u rep(s) per cell\n",
              order, threads(), reps);

  HopfBraceData b = group_algebra_brace(trivial_skew_brace(group_cyclic(order)), field_make(3));
  BraidOperator op = yb_operator_c(b);
  const SpacePtr& s = b.space;

  // braid factors on a three-slot arena
  LinMap f = Chain(s, 3).map_at(op.c, 0).to_linmap();
  LinMap g = Chain(s, 3).map_at(op.c, 1).to_linmap();

  std::printf("%-34s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");

  {
    LinMap a, c;
    double ts = time_ms(reps, [&] { a = lin_compose_serial(f, g); });
    double tp = time_ms(reps, [&] { c = lin_compose(f, g); });
    row("compose braid factors (n^3 arena)", ts, tp, a == c);
  }
  {
    LinMap fg = lin_compose(f, g);
    LinMap a, c;
    double ts = time_ms(reps, [&] { a = lin_compose_serial(fg, f); });
    double tp = time_ms(reps, [&] { c = lin_compose(fg, f); });
    row("compose braid word (n^3 arena)", ts, tp, a == c);
  }
  {
    Chain lhs = Chain(s, 3).map_at(op.c, 0).map_at(op.c, 1).map_at(op.c, 0);
    LinMap a, c;
    double ts = time_ms(reps, [&] { a = lhs.to_linmap_serial(); });
    double tp = time_ms(reps, [&] { c = lhs.to_linmap(); });
    row("materialize braid chain (n^3)", ts, tp, a == c);
  }
  {
    Chain big = Chain(s, 4)
                    .map_at(op.c, 0)
                    .map_at(op.c, 1)
                    .map_at(op.c, 2)
                    .map_at(op.c, 1)
                    .map_at(op.c, 0);
    LinMap a, c;
    double ts = time_ms(reps, [&] { a = big.to_linmap_serial(); });
    double tp = time_ms(reps, [&] { c = big.to_linmap(); });
    row("materialize 5-step chain (n^4)", ts, tp, a == c);
  }
  return 0;
}
