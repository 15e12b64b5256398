#pragma once

namespace hb {

// Worker cap for the OpenMP kernels: HOPFBRACE_THREADS when set (clamped to >= 1),
// otherwise the OpenMP default.
int threads();

}  // namespace hb
