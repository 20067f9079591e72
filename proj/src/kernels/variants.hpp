#pragma once

#include "charrank/kernels/limb_kernels.hpp"

namespace charrank::kernels::detail {

bool add_plane_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                      std::span<std::uint64_t> carry);
bool carry_plane_scalar(std::span<std::uint64_t> dst, std::span<std::uint64_t> carry);

#if defined(CHARRANK_HAVE_AVX2)
bool add_plane_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                    std::span<std::uint64_t> carry);
bool carry_plane_avx2(std::span<std::uint64_t> dst, std::span<std::uint64_t> carry);
#endif

#if defined(CHARRANK_HAVE_NEON)
bool add_plane_neon(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                    std::span<std::uint64_t> carry);
bool carry_plane_neon(std::span<std::uint64_t> dst, std::span<std::uint64_t> carry);
#endif

}  // namespace charrank::kernels::detail
