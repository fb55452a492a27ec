#pragma once

// Data-parallel inner loops of the solvers. Each kernel has a scalar
// reference implementation and SIMD variants (AVX2 on x86-64, NEON on
// AArch64) selected at runtime; all variants produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace aeg::kernels {

/// Values at or above kInf are +infinity; finite values must stay well below.
inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

enum class Isa : std::uint8_t { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// Whether the variant was compiled in and the running CPU supports it.
bool supported(Isa isa);

/// The variant used by the dispatching entry points. Defaults to the best
/// supported one; the AEG_ISA environment variable ("scalar", "avx2", "neon")
/// overrides the default.
Isa active();

/// Forces a variant (tests, benchmarks). Throws std::invalid_argument when unsupported.
void select(Isa isa);

/// Padded fixed-width adjacency ("ELLPACK") used by the relaxation kernel.
/// Row-major by slot: entry (slot, v) lives at slot * rows + v. Rows with
/// fewer entries are padded by repeating an entry, or by pointing at the
/// sentinel index `sources` whose input value is kInf.
struct EllMatrix {
  std::size_t rows = 0;
  std::size_t width = 0;
  std::size_t sources = 0;             // valid input indices are [0, sources]
  std::vector<std::uint32_t> index;     // width * rows
  std::vector<std::int64_t> weight;     // width * rows
  std::vector<std::uint8_t> maximize;   // rows; 1 = max-row, 0 = min-row
};

/// out[v] = opt over slots d of sat(in[index(d,v)] + weight(d,v)), where opt is
/// max for maximize rows and min otherwise and sat maps anything computed from
/// an input >= kInf to kInf. `in` needs sources + 1 entries.
void relax(const EllMatrix& m, std::span<const std::int64_t> in, std::span<std::int64_t> out);

/// dst[i] = min(dst[i], sat(src[i] + add)) elementwise.
void shift_min_add(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t add);

namespace detail {

void relax_scalar(const EllMatrix& m, const std::int64_t* in, std::int64_t* out);
void shift_min_add_scalar(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t add);

#if defined(AEG_HAVE_AVX2)
void relax_avx2(const EllMatrix& m, const std::int64_t* in, std::int64_t* out);
void shift_min_add_avx2(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t add);
#endif

#if defined(AEG_HAVE_NEON)
void relax_neon(const EllMatrix& m, const std::int64_t* in, std::int64_t* out);
void shift_min_add_neon(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t add);
#endif

}  // namespace detail

}  // namespace aeg::kernels
