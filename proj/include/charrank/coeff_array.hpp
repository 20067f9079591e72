#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "charrank/count.hpp"
#include "charrank/kernels/limb_kernels.hpp"

namespace charrank {

/// Dense array of exact nonnegative coefficients, indexed by weight, in the
/// plane layout the limb kernels operate on. Grows extra limbs on overflow.
class CoeffArray {
 public:
  explicit CoeffArray(std::size_t length);

  [[nodiscard]] std::size_t length() const { return length_; }
  [[nodiscard]] std::size_t planes() const { return planes_.size(); }

  void set(std::size_t index, std::uint64_t value);
  [[nodiscard]] Count at(std::size_t index) const;
  [[nodiscard]] std::vector<Count> to_counts() const;

  /// Zero-extends (or truncates) to new_length.
  void resize(std::size_t new_length);

  /// this[dst_begin + t] += src[src_begin + t] for t in [0, n). When src is
  /// this array the two ranges must not overlap.
  void add_range(const CoeffArray& src, std::size_t src_begin, std::size_t dst_begin, std::size_t n,
                 const kernels::KernelTable& k = kernels::active_kernels());

  /// In-place this[i] += this[i - stride] for i ascending, i.e. multiplication
  /// of the generating series by 1 / (1 - q^stride). Runs in blocks of stride
  /// lanes, each of which reads only already-final entries.
  void accumulate_stride(std::size_t stride,
                         const kernels::KernelTable& k = kernels::active_kernels());

  friend bool operator==(const CoeffArray& lhs, const CoeffArray& rhs);

 private:
  std::size_t length_;
  std::vector<std::vector<std::uint64_t>> planes_;
};

}  // namespace charrank
