// AVX2 variants: 4 x int64 lanes. Compiled with -mavx2 and only called after
// a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cstring>

#include "aeg/kernels.hpp"

namespace aeg::kernels::detail {

namespace {

inline __m256i min_epi64(__m256i a, __m256i b) { return _mm256_blendv_epi8(a, b, _mm256_cmpgt_epi64(a, b)); }
inline __m256i max_epi64(__m256i a, __m256i b) { return _mm256_blendv_epi8(a, b, _mm256_cmpgt_epi64(b, a)); }

// sat(v + w): lanes whose input is already infinite stay at kInf.
inline __m256i sat_add(__m256i v, __m256i w, __m256i inf, __m256i inf_m1) {
  const __m256i sum = _mm256_add_epi64(v, w);
  return _mm256_blendv_epi8(sum, inf, _mm256_cmpgt_epi64(v, inf_m1));
}

inline __m256i gather(const std::int64_t* base, const std::uint32_t* idx) {
  const __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx));
  return _mm256_i32gather_epi64(reinterpret_cast<const long long*>(base), vi, 8);
}

}  // namespace

void relax_avx2(const EllMatrix& m, const std::int64_t* in, std::int64_t* out) {
  const std::size_t n = m.rows;
  const __m256i inf = _mm256_set1_epi64x(kInf);
  const __m256i inf_m1 = _mm256_set1_epi64x(kInf - 1);
  const __m256i zero = _mm256_setzero_si256();
  const std::uint32_t* index = m.index.data();
  const std::int64_t* weight = m.weight.data();

  std::size_t v = 0;
  for (; v + 4 <= n; v += 4) {
    __m256i lo = sat_add(gather(in, index + v), _mm256_loadu_si256(reinterpret_cast<const __m256i*>(weight + v)), inf,
                         inf_m1);
    __m256i hi = lo;
    for (std::size_t d = 1; d < m.width; ++d) {
      const std::size_t k = d * n + v;
      const __m256i c =
          sat_add(gather(in, index + k), _mm256_loadu_si256(reinterpret_cast<const __m256i*>(weight + k)), inf, inf_m1);
      lo = min_epi64(lo, c);
      hi = max_epi64(hi, c);
    }
    std::int32_t flags = 0;
    std::memcpy(&flags, m.maximize.data() + v, 4);
    const __m256i use_max = _mm256_cmpgt_epi64(_mm256_cvtepu8_epi64(_mm_cvtsi32_si128(flags)), zero);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + v), _mm256_blendv_epi8(lo, hi, use_max));
  }

  for (; v < n; ++v) {
    auto sat = [](std::int64_t a, std::int64_t w) { return a >= kInf ? kInf : a + w; };
    std::int64_t lo = sat(in[index[v]], weight[v]);
    std::int64_t hi = lo;
    for (std::size_t d = 1; d < m.width; ++d) {
      const std::size_t k = d * n + v;
      const std::int64_t c = sat(in[index[k]], weight[k]);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    out[v] = m.maximize[v] ? hi : lo;
  }
}

void shift_min_add_avx2(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t add) {
  const __m256i inf = _mm256_set1_epi64x(kInf);
  const __m256i inf_m1 = _mm256_set1_epi64x(kInf - 1);
  const __m256i addv = _mm256_set1_epi64x(add);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), min_epi64(d, sat_add(s, addv, inf, inf_m1)));
  }
  for (; i < n; ++i) dst[i] = std::min(dst[i], src[i] >= kInf ? kInf : src[i] + add);
}

}  // namespace aeg::kernels::detail
