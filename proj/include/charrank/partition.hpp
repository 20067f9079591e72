#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace charrank {

/// Non-increasing sequence of positive parts. Construction sorts the parts,
/// so two Partitions compare equal iff they are the same multiset.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<std::size_t> parts);
  /// Throws PreconditionViolation when any part is zero.
  explicit Partition(std::vector<std::size_t> parts);

  [[nodiscard]] std::span<const std::size_t> parts() const { return parts_; }
  [[nodiscard]] std::size_t size() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] std::size_t weight() const;
  [[nodiscard]] std::size_t largest() const { return parts_.empty() ? 0 : parts_.front(); }
  [[nodiscard]] std::size_t smallest() const { return parts_.empty() ? 0 : parts_.back(); }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence.
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Finite nonempty set of distinct positive integers, held ascending.
class PartsSet {
 public:
  /// Accepts members in any order. Throws PreconditionViolation if the list
  /// is empty, holds a zero, or repeats a member.
  explicit PartsSet(std::vector<std::size_t> members);
  PartsSet(std::initializer_list<std::size_t> members);

  /// {lo, lo+1, ..., hi}; requires 1 <= lo <= hi.
  static PartsSet range(std::size_t lo, std::size_t hi);

  [[nodiscard]] std::span<const std::size_t> members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] std::size_t nu() const { return members_.front(); }
  [[nodiscard]] std::size_t kappa() const { return members_.back(); }
  [[nodiscard]] bool contains(std::size_t x) const;
  [[nodiscard]] bool gapless() const { return kappa() - nu() + 1 == members_.size(); }

  /// Members <= bound, or an empty vector when none qualify (a PartsSet
  /// cannot be empty, so the caller decides what an empty result means).
  [[nodiscard]] std::vector<std::size_t> truncated(std::size_t bound) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const PartsSet&, const PartsSet&) = default;

 private:
  std::vector<std::size_t> members_;
};

}  // namespace charrank
