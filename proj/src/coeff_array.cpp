#include "charrank/coeff_array.hpp"

#include <algorithm>
#include <cassert>

#include "charrank/errors.hpp"

namespace charrank {

CoeffArray::CoeffArray(std::size_t length)
    : length_(length), planes_(1, std::vector<std::uint64_t>(length, 0)) {}

void CoeffArray::set(std::size_t index, std::uint64_t value) {
  planes_[0].at(index) = value;
  for (std::size_t p = 1; p < planes_.size(); ++p) planes_[p][index] = 0;
}

Count CoeffArray::at(std::size_t index) const {
  if (index >= length_) throw Error("coefficient index out of range");
  std::vector<std::uint64_t> limbs(planes_.size());
  for (std::size_t p = 0; p < planes_.size(); ++p) limbs[p] = planes_[p][index];
  return Count::from_limbs(limbs);
}

std::vector<Count> CoeffArray::to_counts() const {
  std::vector<Count> out;
  out.reserve(length_);
  for (std::size_t i = 0; i < length_; ++i) out.push_back(at(i));
  return out;
}

void CoeffArray::resize(std::size_t new_length) {
  for (auto& plane : planes_) plane.resize(new_length, 0);
  length_ = new_length;
}

void CoeffArray::add_range(const CoeffArray& src, std::size_t src_begin, std::size_t dst_begin,
                           std::size_t n, const kernels::KernelTable& k) {
  if (n == 0) return;
  if (src_begin + n > src.length_ || dst_begin + n > length_) {
    throw Error("add_range out of bounds");
  }
  assert(&src != this || src_begin + n <= dst_begin || dst_begin + n <= src_begin);

  const std::size_t src_planes = src.planes_.size();
  while (planes_.size() < src_planes) planes_.emplace_back(length_, 0);

  std::vector<std::uint64_t> carry(n, 0);
  bool pending = false;
  for (std::size_t p = 0; p < src_planes; ++p) {
    std::span<std::uint64_t> dst{planes_[p].data() + dst_begin, n};
    std::span<const std::uint64_t> from{src.planes_[p].data() + src_begin, n};
    pending = k.add_plane(dst, from, carry);
  }
  for (std::size_t p = src_planes; pending && p < planes_.size(); ++p) {
    pending = k.carry_plane({planes_[p].data() + dst_begin, n}, carry);
  }
  if (pending) {
    planes_.emplace_back(length_, 0);
    std::copy(carry.begin(), carry.end(), planes_.back().begin() + dst_begin);
  }
}

void CoeffArray::accumulate_stride(std::size_t stride, const kernels::KernelTable& k) {
  if (stride == 0) throw Error("accumulate_stride needs a positive stride");
  for (std::size_t begin = stride; begin < length_; begin += stride) {
    const std::size_t n = std::min(stride, length_ - begin);
    add_range(*this, begin - stride, begin, n, k);
  }
}

bool operator==(const CoeffArray& lhs, const CoeffArray& rhs) {
  if (lhs.length_ != rhs.length_) return false;
  const std::size_t planes = std::max(lhs.planes_.size(), rhs.planes_.size());
  for (std::size_t p = 0; p < planes; ++p) {
    for (std::size_t i = 0; i < lhs.length_; ++i) {
      const std::uint64_t a = p < lhs.planes_.size() ? lhs.planes_[p][i] : 0;
      const std::uint64_t b = p < rhs.planes_.size() ? rhs.planes_[p][i] : 0;
      if (a != b) return false;
    }
  }
  return true;
}

}  // namespace charrank
