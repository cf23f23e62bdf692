#include "fermicell/kernels.h"

// Fallback definitions for targets without the corresponding SIMD unit.
namespace fermicell::detail {
#ifndef FERMICELL_HAVE_AVX2
const StepKernels *avx2_kernels() { return nullptr; }
#endif
#ifndef FERMICELL_HAVE_NEON
const StepKernels *neon_kernels() { return nullptr; }
#endif
}  // namespace fermicell::detail
