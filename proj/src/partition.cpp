#include "charrank/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>

#include "charrank/errors.hpp"

namespace charrank {

Partition::Partition(std::initializer_list<std::size_t> parts)
    : Partition(std::vector<std::size_t>(parts)) {}

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), std::size_t{0}) != parts_.end()) {
    throw PreconditionViolation("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::size_t Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

PartsSet::PartsSet(std::vector<std::size_t> members) : members_(std::move(members)) {
  if (members_.empty()) throw PreconditionViolation("parts set must be nonempty");
  std::sort(members_.begin(), members_.end());
  if (members_.front() == 0) throw PreconditionViolation("parts set members must be positive");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw PreconditionViolation("parts set members must be distinct");
  }
}

PartsSet::PartsSet(std::initializer_list<std::size_t> members)
    : PartsSet(std::vector<std::size_t>(members)) {}

PartsSet PartsSet::range(std::size_t lo, std::size_t hi) {
  if (lo == 0 || hi < lo) {
    throw PreconditionViolation("range requires 1 <= lo <= hi, got " + std::to_string(lo) + ".." +
                                std::to_string(hi));
  }
  std::vector<std::size_t> m(hi - lo + 1);
  std::iota(m.begin(), m.end(), lo);
  return PartsSet(std::move(m));
}

bool PartsSet::contains(std::size_t x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::vector<std::size_t> PartsSet::truncated(std::size_t bound) const {
  return {members_.begin(), std::upper_bound(members_.begin(), members_.end(), bound)};
}

std::string PartsSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

}  // namespace charrank
