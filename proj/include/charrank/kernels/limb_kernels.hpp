#pragma once

// Lane-parallel multi-limb addition. A column of nonnegative big integers is
// stored as "planes": plane p holds limb p (64 bits, little-endian order) of
// every coefficient. Adding two columns walks the planes bottom-up while a
// per-lane carry buffer threads between them, so each plane step is a plain
// data-parallel loop. The scalar table is the reference; every vector table
// must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace charrank::kernels {

enum class Backend { Scalar, Avx2, Neon };

/// dst[i] = dst[i] + src[i] + carry[i] (mod 2^64); carry[i] becomes the
/// carry-out in {0, 1}. Returns true iff some carry-out is nonzero.
/// carry[i] must be 0 or 1 on entry.
using AddPlaneFn = bool (*)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                            std::span<std::uint64_t> carry);

/// dst[i] += carry[i] with the same carry-out contract.
using CarryPlaneFn = bool (*)(std::span<std::uint64_t> dst, std::span<std::uint64_t> carry);

struct KernelTable {
  Backend backend;
  std::string_view name;
  AddPlaneFn add_plane;
  CarryPlaneFn carry_plane;
};

const KernelTable& scalar_kernels();

/// nullptr unless the variant was compiled in and the running CPU supports it.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// The table the counting DPs use: the preferred backend if one was set and
/// is available, otherwise the widest available variant.
const KernelTable& active_kernels();

/// Pins active_kernels() to a backend; std::nullopt restores auto-selection.
/// Returns false (and changes nothing) if the backend is unavailable here.
bool set_preferred_backend(std::optional<Backend> backend);

std::optional<Backend> parse_backend(std::string_view name);

}  // namespace charrank::kernels
