#include "charrank/partitions.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <vector>

#include "charrank/coeff_array.hpp"
#include "charrank/errors.hpp"
#include "charrank/fault_injection.hpp"

namespace charrank {
namespace {

// Boxed generating rows G(a, b) = sum_c p(a, b, c) q^c, truncated at a
// common degree horizon. Row (a, b) comes from
//   G(a, b) = G(a - 1, b) + q^a G(a, b - 1)
// (split on whether a part equal to a occurs). Rows are filled on demand
// for the whole rectangle below the requested corner. A query past the
// horizon rebuilds the memo with a larger one.
class BoxTable {
 public:
  Count value(std::size_t a, std::size_t b, std::size_t c) {
    std::lock_guard lock(mutex_);
    return row_locked(a, b, c).at(c);
  }

  std::vector<Count> full_row(std::size_t a, std::size_t b) {
    std::lock_guard lock(mutex_);
    return row_locked(a, b, a * b).to_counts();
  }

  void clear() {
    std::lock_guard lock(mutex_);
    rows_.clear();
    horizon_ = 0;
  }

 private:
  const CoeffArray& row_locked(std::size_t a, std::size_t b, std::size_t degree) {
    if (degree > horizon_) {
      rows_.clear();
      horizon_ = std::max({degree, 2 * horizon_, kMinHorizon});
    }
    if (rows_.size() <= a) rows_.resize(a + 1);
    for (std::size_t i = 0; i <= a; ++i) {
      auto& column = rows_[i];
      if (column.size() <= b) column.resize(b + 1);
      for (std::size_t j = 0; j <= b; ++j) {
        if (!column[j]) column[j] = build(i, j);
      }
    }
    return *rows_[a][b];
  }

  std::size_t length(std::size_t a, std::size_t b) const { return std::min(a * b, horizon_) + 1; }

  std::unique_ptr<CoeffArray> build(std::size_t a, std::size_t b) const {
    auto row = std::make_unique<CoeffArray>(length(a, b));
    if (a == 0 || b == 0) {
      row->set(0, 1);
      return row;
    }
    // Both neighbours exist: the fill loop visits (a - 1, b) and (a, b - 1) first.
    const CoeffArray& without = *rows_[a - 1][b];
    const CoeffArray& with = *rows_[a][b - 1];
    row->add_range(without, 0, 0, without.length());
    if (faults::active() == faults::Fault::BoxRecurrence && a == 2 && b == 2) return row;
    if (row->length() > a) {
      row->add_range(with, 0, a, std::min(with.length(), row->length() - a));
    }
    return row;
  }

  static constexpr std::size_t kMinHorizon = 64;

  std::mutex mutex_;
  std::size_t horizon_ = 0;
  std::vector<std::vector<std::unique_ptr<CoeffArray>>> rows_;
};

BoxTable& box_table() {
  static BoxTable table;
  return table;
}

// exact[s][w]: partitions of w into exactly s parts from the members seen
// so far. Members are folded in ascending order; within a member, s runs
// upward so row s - 1 already allows repeats of it.
std::vector<CoeffArray> exact_parts_table(const PartsSet& parts, std::size_t max_parts,
                                          std::size_t c) {
  max_parts = std::min(max_parts, c / parts.nu());
  std::vector<CoeffArray> exact;
  exact.reserve(max_parts + 1);
  for (std::size_t s = 0; s <= max_parts; ++s) exact.emplace_back(c + 1);
  exact[0].set(0, 1);

  const bool faulty = faults::active() == faults::Fault::SetExactTransition;
  for (std::size_t m : parts.members()) {
    if (m > c) break;
    for (std::size_t s = 1; s <= max_parts; ++s) {
      if (faulty && m == parts.nu() && s == 2) continue;
      exact[s].add_range(exact[s - 1], 0, m, c + 1 - m);
    }
  }
  return exact;
}

CoeffArray any_parts_series(std::span<const std::size_t> members, std::size_t c) {
  CoeffArray series(c + 1);
  series.set(0, 1);
  const bool faulty = faults::active() == faults::Fault::SetAnyTransition;
  for (std::size_t m : members) {
    if (m > c) break;
    if (faulty && m == members.front()) {
      // Same pass with its first block missing.
      for (std::size_t begin = 2 * m; begin <= c; begin += m) {
        series.add_range(series, begin - m, begin, std::min(m, c + 1 - begin));
      }
      continue;
    }
    series.accumulate_stride(m);
  }
  return series;
}

}  // namespace

Count count_box(std::size_t a, std::size_t b, std::size_t c) {
  if (c == 0) return 1;
  if (a == 0 || b == 0) return 0;
  // A part larger than c, or more than c parts, never fits.
  a = std::min(a, c);
  b = std::min(b, c);
  if (c > a * b) return 0;
  return box_table().value(a, b, c);
}

std::vector<Count> box_row(std::size_t a, std::size_t b) { return box_table().full_row(a, b); }

Count count_set_exact(const PartsSet& parts, std::size_t b, std::size_t c) {
  if (b == 0) return c == 0 ? 1 : 0;
  if (b > c / parts.nu()) return 0;
  return exact_parts_table(parts, b, c)[b].at(c);
}

Count count_set_at_most(const PartsSet& parts, std::size_t b, std::size_t c) {
  const auto exact = exact_parts_table(parts, b, c);
  Count total;
  for (const auto& row : exact) total += row.at(c);
  return total;
}

Count count_initial_segment_at_most(std::size_t m, std::size_t b, std::size_t c) {
  if (m == 0) return c == 0 ? 1 : 0;
  return count_set_at_most(PartsSet::range(1, m), b, c);
}

Count count_set_any(const PartsSet& parts, std::size_t c) {
  return any_parts_series(parts.members(), c).at(c);
}

Count count_total(std::size_t c) {
  if (c == 0) return 1;
  return count_set_any(PartsSet::range(1, c), c);
}

void clear_count_caches() { box_table().clear(); }

namespace {

// Parts are chosen largest-first and each candidate list is walked from the
// top, which yields lexicographically decreasing order.
class Enumerator {
 public:
  Enumerator(std::vector<std::size_t> candidates_desc, std::size_t min_parts, std::size_t max_parts)
      : candidates_(std::move(candidates_desc)), min_parts_(min_parts), max_parts_(max_parts) {}

  std::vector<Partition> run(std::size_t c) {
    walk(c, 0);
    return std::move(out_);
  }

 private:
  void walk(std::size_t remaining, std::size_t from) {
    if (remaining == 0) {
      if (current_.size() >= min_parts_) out_.emplace_back(current_);
      return;
    }
    if (current_.size() == max_parts_) return;
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const std::size_t part = candidates_[i];
      if (part > remaining) continue;
      // Even max_parts copies of this part and everything below it falls short.
      if (part * (max_parts_ - current_.size()) < remaining) break;
      current_.push_back(part);
      walk(remaining - part, i);
      current_.pop_back();
    }
  }

  std::vector<std::size_t> candidates_;
  std::size_t min_parts_;
  std::size_t max_parts_;
  std::vector<std::size_t> current_;
  std::vector<Partition> out_;
};

void check_cap(std::size_t c, std::size_t cap) {
  if (c > cap) {
    throw CapExceeded("enumeration of weight " + std::to_string(c) + " exceeds cap " +
                      std::to_string(cap));
  }
}

}  // namespace

std::vector<Partition> enumerate_box(std::size_t a, std::size_t b, std::size_t c,
                                     std::size_t cap) {
  check_cap(c, cap);
  std::vector<std::size_t> candidates;
  for (std::size_t part = std::min(a, c); part >= 1; --part) candidates.push_back(part);
  return Enumerator(std::move(candidates), 0, std::min(b, c)).run(c);
}

std::vector<Partition> enumerate_set_exact(const PartsSet& parts, std::size_t b, std::size_t c,
                                           std::size_t cap) {
  check_cap(c, cap);
  if (b > c) return {};
  std::vector<std::size_t> candidates(parts.members().rbegin(), parts.members().rend());
  return Enumerator(std::move(candidates), b, b).run(c);
}

}  // namespace charrank
