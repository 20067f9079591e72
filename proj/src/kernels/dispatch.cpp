#include <atomic>

#include "variants.hpp"

namespace charrank::kernels {
namespace {

constexpr KernelTable kScalar{Backend::Scalar, "scalar", &detail::add_plane_scalar,
                              &detail::carry_plane_scalar};
#if defined(CHARRANK_HAVE_AVX2)
constexpr KernelTable kAvx2{Backend::Avx2, "avx2", &detail::add_plane_avx2,
                            &detail::carry_plane_avx2};
#endif
#if defined(CHARRANK_HAVE_NEON)
constexpr KernelTable kNeon{Backend::Neon, "neon", &detail::add_plane_neon,
                            &detail::carry_plane_neon};
#endif

// -1: automatic; otherwise a Backend value.
std::atomic<int> g_preferred{-1};

const KernelTable* lookup(Backend b) {
  switch (b) {
    case Backend::Scalar: return &kScalar;
    case Backend::Avx2: return avx2_kernels();
    case Backend::Neon: return neon_kernels();
  }
  return nullptr;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if defined(CHARRANK_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(CHARRANK_HAVE_NEON)
  return &kNeon;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  const int pref = g_preferred.load(std::memory_order_relaxed);
  if (pref >= 0) {
    if (const KernelTable* t = lookup(static_cast<Backend>(pref))) return *t;
  }
  if (const KernelTable* t = avx2_kernels()) return *t;
  if (const KernelTable* t = neon_kernels()) return *t;
  return kScalar;
}

bool set_preferred_backend(std::optional<Backend> backend) {
  if (!backend) {
    g_preferred.store(-1, std::memory_order_relaxed);
    return true;
  }
  if (lookup(*backend) == nullptr) return false;
  g_preferred.store(static_cast<int>(*backend), std::memory_order_relaxed);
  return true;
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "scalar") return Backend::Scalar;
  if (name == "avx2") return Backend::Avx2;
  if (name == "neon") return Backend::Neon;
  return std::nullopt;
}

}  // namespace charrank::kernels
