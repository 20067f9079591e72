#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "charrank/coeff_array.hpp"
#include "charrank/kernels/limb_kernels.hpp"
#include "charrank/partitions.hpp"

using namespace charrank;
using kernels::KernelTable;

namespace {

std::vector<const KernelTable*> vector_tables() {
  std::vector<const KernelTable*> out;
  if (const auto* t = kernels::avx2_kernels()) out.push_back(t);
  if (const auto* t = kernels::neon_kernels()) out.push_back(t);
  return out;
}

// Mix of small values, values near 2^64 and exact all-ones to hit every
// carry path.
std::uint64_t edgy(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0: return rng() % 8;
    case 1: return std::numeric_limits<std::uint64_t>::max() - rng() % 4;
    case 2: return std::numeric_limits<std::uint64_t>::max();
    default: return rng();
  }
}

// Reference column arithmetic through GMP.
std::vector<mpz_class> as_mpz(const CoeffArray& a) {
  std::vector<mpz_class> out;
  for (const auto& c : a.to_counts()) out.push_back(c.raw());
  return out;
}

}  // namespace

TEST_CASE("scalar plane kernels follow 64-bit carry arithmetic") {
  const auto& k = kernels::scalar_kernels();
  std::vector<std::uint64_t> dst{std::numeric_limits<std::uint64_t>::max(), 5, 0,
                                 std::numeric_limits<std::uint64_t>::max()};
  const std::vector<std::uint64_t> src{1, 6, 0, std::numeric_limits<std::uint64_t>::max()};
  std::vector<std::uint64_t> carry{0, 1, 1, 1};
  CHECK(k.add_plane(dst, src, carry));
  CHECK(dst == std::vector<std::uint64_t>{0, 12, 1, std::numeric_limits<std::uint64_t>::max()});
  CHECK(carry == std::vector<std::uint64_t>{1, 0, 0, 1});

  std::vector<std::uint64_t> d2{std::numeric_limits<std::uint64_t>::max(), 7};
  std::vector<std::uint64_t> c2{1, 1};
  CHECK(k.carry_plane(d2, c2));
  CHECK(d2 == std::vector<std::uint64_t>{0, 8});
  CHECK(c2 == std::vector<std::uint64_t>{1, 0});

  std::vector<std::uint64_t> d3{1, 2};
  std::vector<std::uint64_t> c3{0, 0};
  CHECK_FALSE(k.carry_plane(d3, c3));
}

TEST_CASE("vector plane kernels match the scalar reference bit for bit") {
  const auto tables = vector_tables();
  if (tables.empty()) {
    MESSAGE("no vector kernels on this machine; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(20260415);
  for (const KernelTable* t : tables) {
    CAPTURE(t->name);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = rng() % 37;  // covers lengths below, at and past a vector
      std::vector<std::uint64_t> dst(n), src(n), carry(n);
      for (std::size_t i = 0; i < n; ++i) {
        dst[i] = edgy(rng);
        src[i] = edgy(rng);
        carry[i] = rng() & 1;
      }
      auto d_ref = dst, c_ref = carry;
      auto d_vec = dst, c_vec = carry;
      const bool any_ref = kernels::scalar_kernels().add_plane(d_ref, src, c_ref);
      const bool any_vec = t->add_plane(d_vec, src, c_vec);
      REQUIRE(d_vec == d_ref);
      REQUIRE(c_vec == c_ref);
      REQUIRE(any_vec == any_ref);

      auto d2_ref = dst, c2_ref = carry, d2_vec = dst, c2_vec = carry;
      const bool carry_ref = kernels::scalar_kernels().carry_plane(d2_ref, c2_ref);
      const bool carry_vec = t->carry_plane(d2_vec, c2_vec);
      REQUIRE(d2_vec == d2_ref);
      REQUIRE(c2_vec == c2_ref);
      REQUIRE(carry_vec == carry_ref);
    }
  }
}

TEST_CASE("active kernels honour the preferred backend") {
  REQUIRE(kernels::set_preferred_backend(kernels::Backend::Scalar));
  CHECK(kernels::active_kernels().backend == kernels::Backend::Scalar);
  REQUIRE(kernels::set_preferred_backend(std::nullopt));
  if (kernels::avx2_kernels()) CHECK(kernels::active_kernels().backend == kernels::Backend::Avx2);
  if (!kernels::neon_kernels()) CHECK_FALSE(kernels::set_preferred_backend(kernels::Backend::Neon));
  CHECK(kernels::parse_backend("avx2") == kernels::Backend::Avx2);
  CHECK_FALSE(kernels::parse_backend("sse9").has_value());
}

TEST_CASE("CoeffArray::add_range agrees with GMP and grows limbs on overflow") {
  std::vector<const KernelTable*> tables = vector_tables();
  tables.push_back(&kernels::scalar_kernels());
  std::mt19937_64 rng(7);
  for (const KernelTable* t : tables) {
    CAPTURE(t->name);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t len = 1 + rng() % 40;
      CoeffArray dst(len), src(len);
      for (std::size_t i = 0; i < len; ++i) {
        dst.set(i, edgy(rng));
        src.set(i, edgy(rng));
      }
      // Several rounds so both arrays pick up extra planes.
      for (int round = 0; round < 3; ++round) {
        const std::size_t n = rng() % (len + 1);
        const std::size_t sb = rng() % (len - n + 1);
        const std::size_t db = rng() % (len - n + 1);
        auto expected = as_mpz(dst);
        const auto from = as_mpz(src);
        for (std::size_t i = 0; i < n; ++i) expected[db + i] += from[sb + i];
        dst.add_range(src, sb, db, n, *t);
        REQUIRE(as_mpz(dst) == expected);
        src.add_range(src, 0, 0, 0, *t);
        if (len >= 2) {
          auto s = as_mpz(src);
          s[len - 1] += s[0];
          src.add_range(src, 0, len - 1, 1, *t);
          REQUIRE(as_mpz(src) == s);
        }
      }
    }
  }
}

TEST_CASE("accumulate_stride multiplies by 1/(1 - q^s)") {
  CoeffArray a(10);
  a.set(0, 1);
  a.accumulate_stride(3);
  CHECK(a.to_counts() == std::vector<Count>{1, 0, 0, 1, 0, 0, 1, 0, 0, 1});
  a.accumulate_stride(1);
  // partitions into parts {1, 3}
  CHECK(a.to_counts() == std::vector<Count>{1, 1, 1, 2, 2, 2, 3, 3, 3, 4});

  CoeffArray big(5);
  for (std::size_t i = 0; i < 5; ++i) big.set(i, std::numeric_limits<std::uint64_t>::max());
  big.accumulate_stride(1);
  CHECK(big.planes() == 2);
  mpz_class max64;
  mpz_set_str(max64.get_mpz_t(), "18446744073709551615", 10);
  CHECK(big.at(4).raw() == max64 * 5);
}

TEST_CASE("counting DPs give identical results on every backend") {
  std::vector<std::optional<kernels::Backend>> backends{kernels::Backend::Scalar};
  for (const auto* t : vector_tables()) backends.push_back(t->backend);

  std::vector<std::vector<Count>> runs;
  for (const auto& b : backends) {
    REQUIRE(kernels::set_preferred_backend(b));
    clear_count_caches();
    std::vector<Count> values;
    values.push_back(count_total(700));  // well past 64 bits
    values.push_back(count_box(40, 40, 800));
    values.push_back(count_set_exact(PartsSet{1, 3, 4, 9}, 30, 200));
    values.push_back(count_set_any(PartsSet{2, 3, 5, 7}, 900));
    runs.push_back(std::move(values));
  }
  kernels::set_preferred_backend(std::nullopt);
  clear_count_caches();
  for (const auto& run : runs) CHECK(run == runs.front());
}
