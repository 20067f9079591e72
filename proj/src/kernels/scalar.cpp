#include "variants.hpp"

namespace charrank::kernels::detail {

bool add_plane_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                      std::span<std::uint64_t> carry) {
  std::uint64_t any = 0;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const std::uint64_t sum = dst[i] + src[i];
    const std::uint64_t c1 = sum < dst[i];
    const std::uint64_t out = sum + carry[i];
    const std::uint64_t c2 = out < sum;
    dst[i] = out;
    carry[i] = c1 | c2;
    any |= carry[i];
  }
  return any != 0;
}

bool carry_plane_scalar(std::span<std::uint64_t> dst, std::span<std::uint64_t> carry) {
  std::uint64_t any = 0;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const std::uint64_t out = dst[i] + carry[i];
    carry[i] = out < dst[i];
    dst[i] = out;
    any |= carry[i];
  }
  return any != 0;
}

}  // namespace charrank::kernels::detail
