// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "variants.hpp"

namespace charrank::kernels::detail {
namespace {

// Unsigned a < b per 64-bit lane, as an all-ones mask.
inline __m256i lanes_below(__m256i a, __m256i b) {
  const __m256i bias = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
  return _mm256_cmpgt_epi64(_mm256_xor_si256(b, bias), _mm256_xor_si256(a, bias));
}

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

constexpr std::size_t kLanes = 4;

}  // namespace

bool add_plane_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                    std::span<std::uint64_t> carry) {
  const std::size_t n = dst.size();
  const std::size_t whole = n - n % kLanes;
  __m256i any = _mm256_setzero_si256();
  for (std::size_t i = 0; i < whole; i += kLanes) {
    const __m256i d = load(dst.data() + i);
    const __m256i sum = _mm256_add_epi64(d, load(src.data() + i));
    const __m256i c1 = lanes_below(sum, d);
    const __m256i out = _mm256_add_epi64(sum, load(carry.data() + i));
    const __m256i c2 = lanes_below(out, sum);
    const __m256i cout = _mm256_srli_epi64(_mm256_or_si256(c1, c2), 63);
    store(dst.data() + i, out);
    store(carry.data() + i, cout);
    any = _mm256_or_si256(any, cout);
  }
  const bool tail = add_plane_scalar(dst.subspan(whole), src.subspan(whole), carry.subspan(whole));
  return tail || !_mm256_testz_si256(any, any);
}

bool carry_plane_avx2(std::span<std::uint64_t> dst, std::span<std::uint64_t> carry) {
  const std::size_t n = dst.size();
  const std::size_t whole = n - n % kLanes;
  __m256i any = _mm256_setzero_si256();
  for (std::size_t i = 0; i < whole; i += kLanes) {
    const __m256i d = load(dst.data() + i);
    const __m256i out = _mm256_add_epi64(d, load(carry.data() + i));
    const __m256i cout = _mm256_srli_epi64(lanes_below(out, d), 63);
    store(dst.data() + i, out);
    store(carry.data() + i, cout);
    any = _mm256_or_si256(any, cout);
  }
  const bool tail = carry_plane_scalar(dst.subspan(whole), carry.subspan(whole));
  return tail || !_mm256_testz_si256(any, any);
}

}  // namespace charrank::kernels::detail
