#include <arm_neon.h>

#include "variants.hpp"

namespace charrank::kernels::detail {

namespace {
constexpr std::size_t kLanes = 2;

inline bool any_lane(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0; }
}  // namespace

bool add_plane_neon(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                    std::span<std::uint64_t> carry) {
  const std::size_t n = dst.size();
  const std::size_t whole = n - n % kLanes;
  uint64x2_t any = vdupq_n_u64(0);
  for (std::size_t i = 0; i < whole; i += kLanes) {
    const uint64x2_t d = vld1q_u64(dst.data() + i);
    const uint64x2_t sum = vaddq_u64(d, vld1q_u64(src.data() + i));
    const uint64x2_t c1 = vcltq_u64(sum, d);
    const uint64x2_t out = vaddq_u64(sum, vld1q_u64(carry.data() + i));
    const uint64x2_t c2 = vcltq_u64(out, sum);
    const uint64x2_t cout = vshrq_n_u64(vorrq_u64(c1, c2), 63);
    vst1q_u64(dst.data() + i, out);
    vst1q_u64(carry.data() + i, cout);
    any = vorrq_u64(any, cout);
  }
  const bool tail = add_plane_scalar(dst.subspan(whole), src.subspan(whole), carry.subspan(whole));
  return tail || any_lane(any);
}

bool carry_plane_neon(std::span<std::uint64_t> dst, std::span<std::uint64_t> carry) {
  const std::size_t n = dst.size();
  const std::size_t whole = n - n % kLanes;
  uint64x2_t any = vdupq_n_u64(0);
  for (std::size_t i = 0; i < whole; i += kLanes) {
    const uint64x2_t d = vld1q_u64(dst.data() + i);
    const uint64x2_t out = vaddq_u64(d, vld1q_u64(carry.data() + i));
    const uint64x2_t cout = vshrq_n_u64(vcltq_u64(out, d), 63);
    vst1q_u64(dst.data() + i, out);
    vst1q_u64(carry.data() + i, cout);
    any = vorrq_u64(any, cout);
  }
  const bool tail = carry_plane_scalar(dst.subspan(whole), carry.subspan(whole));
  return tail || any_lane(any);
}

}  // namespace charrank::kernels::detail
