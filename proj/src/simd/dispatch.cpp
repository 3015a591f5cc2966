#include <cstdlib>
#include <string>

#include "spincrit/errors.hpp"
#include "spincrit/simd/kernels.hpp"

namespace spincrit::simd {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

bool available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(SPINCRIT_HAVE_AVX2)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if defined(SPINCRIT_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Backend b) {
  if (!available(b)) {
    throw ArgumentError("SIMD backend '" + std::string(backend_name(b)) + "' is not available");
  }
  switch (b) {
#if defined(SPINCRIT_HAVE_AVX2)
    case Backend::avx2: return detail::avx2_table();
#endif
#if defined(SPINCRIT_HAVE_NEON)
    case Backend::neon: return detail::neon_table();
#endif
    default: return detail::scalar_table();
  }
}

namespace {

const KernelTable& select() {
  if (const char* forced = std::getenv("SPINCRIT_SIMD")) {
    const std::string_view name(forced);
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
      if (name == backend_name(b) && available(b)) return table(b);
    }
  }
  if (available(Backend::avx2)) return table(Backend::avx2);
  if (available(Backend::neon)) return table(Backend::neon);
  return detail::scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& t = select();
  return t;
}

}  // namespace spincrit::simd
