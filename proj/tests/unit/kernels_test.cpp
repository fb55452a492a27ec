#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "aeg/kernels.hpp"

namespace aeg::kernels {
namespace {

EllMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t width, std::size_t sources) {
  EllMatrix m;
  m.rows = rows;
  m.width = width;
  m.sources = sources;
  std::uniform_int_distribution<std::uint32_t> idx(0, static_cast<std::uint32_t>(sources));
  std::uniform_int_distribution<std::int64_t> w(-50, 50);
  m.index.resize(rows * width);
  m.weight.resize(rows * width);
  for (auto& i : m.index) i = idx(rng);
  for (auto& x : m.weight) x = w(rng);
  m.maximize.resize(rows);
  for (auto& b : m.maximize) b = static_cast<std::uint8_t>(rng() & 1);
  return m;
}

std::vector<std::int64_t> random_levels(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> v(-1000, 1000);
  std::vector<std::int64_t> out(n);
  for (auto& x : out) x = (rng() % 5 == 0) ? kInf + static_cast<std::int64_t>(rng() % 7) : v(rng);
  return out;
}

std::vector<Isa> simd_variants() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (supported(isa)) out.push_back(isa);
  }
  return out;
}

class IsaGuard {
 public:
  IsaGuard() : saved_(active()) {}
  ~IsaGuard() { select(saved_); }

 private:
  Isa saved_;
};

TEST(Kernels, ScalarRelaxMatchesDefinition) {
  EllMatrix m;
  m.rows = 2;
  m.width = 2;
  m.sources = 3;
  // Slot-major: (slot 0, row 0), (slot 0, row 1), (slot 1, row 0), (slot 1, row 1).
  m.index = {0, 1, 2, 3};
  m.weight = {5, -1, 2, 7};
  m.maximize = {0, 1};
  const std::vector<std::int64_t> in{1, 4, 10, kInf};
  std::vector<std::int64_t> out(2);
  detail::relax_scalar(m, in.data(), out.data());
  EXPECT_EQ(out[0], 6);     // min(1 + 5, 10 + 2)
  EXPECT_EQ(out[1], kInf);  // max(4 - 1, inf)
}

TEST(Kernels, ScalarShiftMinAdd) {
  std::vector<std::int64_t> dst{5, 5, kInf};
  const std::vector<std::int64_t> src{1, kInf, 2};
  detail::shift_min_add_scalar(dst.data(), src.data(), 3, 3);
  EXPECT_EQ(dst, (std::vector<std::int64_t>{4, 5, 5}));
}

TEST(Kernels, SimdRelaxEquivalentToScalar) {
  std::mt19937_64 rng(3);
  for (Isa isa : simd_variants()) {
    IsaGuard guard;
    select(isa);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t rows = 1 + rng() % 37;
      const std::size_t width = 1 + rng() % 5;
      const std::size_t sources = 1 + rng() % 40;
      const EllMatrix m = random_matrix(rng, rows, width, sources);
      std::vector<std::int64_t> in = random_levels(rng, sources + 1);
      in[sources] = kInf;
      std::vector<std::int64_t> want(rows), got(rows);
      detail::relax_scalar(m, in.data(), want.data());
      relax(m, in, got);
      ASSERT_EQ(got, want) << to_string(isa) << " trial " << trial;
    }
  }
}

TEST(Kernels, SimdShiftMinAddEquivalentToScalar) {
  std::mt19937_64 rng(4);
  for (Isa isa : simd_variants()) {
    IsaGuard guard;
    select(isa);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = rng() % 45;
      const std::int64_t add = static_cast<std::int64_t>(rng() % 200) - 100;
      const auto src = random_levels(rng, n);
      auto want = random_levels(rng, n);
      auto got = want;
      detail::shift_min_add_scalar(want.data(), src.data(), n, add);
      shift_min_add(got, src, add);
      ASSERT_EQ(got, want) << to_string(isa) << " trial " << trial;
    }
  }
}

TEST(Kernels, DispatchHonoursSelection) {
  IsaGuard guard;
  select(Isa::Scalar);
  EXPECT_EQ(active(), Isa::Scalar);
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (!supported(isa)) EXPECT_THROW(select(isa), std::invalid_argument);
  }
}

TEST(Kernels, RelaxChecksBufferSizes) {
  std::mt19937_64 rng(5);
  const EllMatrix m = random_matrix(rng, 4, 2, 6);
  std::vector<std::int64_t> in(6), out(4);
  EXPECT_THROW(relax(m, in, out), std::invalid_argument);
}

}  // namespace
}  // namespace aeg::kernels
