#pragma once

#include <cstddef>
#include <vector>

#include "charrank/count.hpp"
#include "charrank/partition.hpp"

namespace charrank {

/// Partitions of c into at most b parts, each <= a. Zero whenever c > a*b.
/// Served from a process-wide memo of boxed generating rows; safe to call
/// from several threads.
Count count_box(std::size_t a, std::size_t b, std::size_t c);

/// Coefficients of the full boxed row, degrees 0..a*b.
std::vector<Count> box_row(std::size_t a, std::size_t b);

/// Partitions of c into exactly b parts drawn from A. Zero parts is 1 iff c == 0.
Count count_set_exact(const PartsSet& parts, std::size_t b, std::size_t c);

/// Partitions of c into at most b parts drawn from A.
Count count_set_at_most(const PartsSet& parts, std::size_t b, std::size_t c);

/// Partitions of c into at most b parts drawn from {1, ..., m}. For m == 0 the
/// part set is empty and only the empty partition of 0 is counted.
Count count_initial_segment_at_most(std::size_t m, std::size_t b, std::size_t c);

/// Partitions of c into any number of parts drawn from A.
Count count_set_any(const PartsSet& parts, std::size_t c);

/// p(c).
Count count_total(std::size_t c);

/// Drops the boxed-row memo. Results never depend on it; tests use this to
/// force recomputation under a different kernel backend or fault.
void clear_count_caches();

inline constexpr std::size_t kDefaultEnumerationCap = 64;

/// Every partition counted by count_box(a, b, c), in lexicographically
/// decreasing order. Throws CapExceeded when c > cap.
std::vector<Partition> enumerate_box(std::size_t a, std::size_t b, std::size_t c,
                                     std::size_t cap = kDefaultEnumerationCap);

/// Every partition of c into exactly b parts from A, lexicographically
/// decreasing. Throws CapExceeded when c > cap.
std::vector<Partition> enumerate_set_exact(const PartsSet& parts, std::size_t b, std::size_t c,
                                           std::size_t cap = kDefaultEnumerationCap);

}  // namespace charrank
