// NEON variants: 2 x int64 lanes (AArch64 only; vcgtq_s64 needs A64).

#include <arm_neon.h>

#include <algorithm>

#include "aeg/kernels.hpp"

namespace aeg::kernels::detail {

namespace {

inline int64x2_t min_s64(int64x2_t a, int64x2_t b) { return vbslq_s64(vcgtq_s64(a, b), b, a); }
inline int64x2_t max_s64(int64x2_t a, int64x2_t b) { return vbslq_s64(vcgtq_s64(b, a), b, a); }

inline int64x2_t sat_add(int64x2_t v, int64x2_t w, int64x2_t inf, int64x2_t inf_m1) {
  return vbslq_s64(vcgtq_s64(v, inf_m1), inf, vaddq_s64(v, w));
}

inline int64x2_t gather(const std::int64_t* base, const std::uint32_t* idx) {
  return vcombine_s64(vld1_s64(base + idx[0]), vld1_s64(base + idx[1]));
}

}  // namespace

void relax_neon(const EllMatrix& m, const std::int64_t* in, std::int64_t* out) {
  const std::size_t n = m.rows;
  const int64x2_t inf = vdupq_n_s64(kInf);
  const int64x2_t inf_m1 = vdupq_n_s64(kInf - 1);
  std::size_t v = 0;
  for (; v + 2 <= n; v += 2) {
    int64x2_t lo = sat_add(gather(in, m.index.data() + v), vld1q_s64(m.weight.data() + v), inf, inf_m1);
    int64x2_t hi = lo;
    for (std::size_t d = 1; d < m.width; ++d) {
      const std::size_t k = d * n + v;
      const int64x2_t c = sat_add(gather(in, m.index.data() + k), vld1q_s64(m.weight.data() + k), inf, inf_m1);
      lo = min_s64(lo, c);
      hi = max_s64(hi, c);
    }
    const int64x2_t flags = {m.maximize[v] ? -1 : 0, m.maximize[v + 1] ? -1 : 0};
    vst1q_s64(out + v, vbslq_s64(vreinterpretq_u64_s64(flags), hi, lo));
  }
  for (; v < n; ++v) {
    auto sat = [](std::int64_t a, std::int64_t w) { return a >= kInf ? kInf : a + w; };
    std::int64_t lo = sat(in[m.index[v]], m.weight[v]);
    std::int64_t hi = lo;
    for (std::size_t d = 1; d < m.width; ++d) {
      const std::size_t k = d * n + v;
      const std::int64_t c = sat(in[m.index[k]], m.weight[k]);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    out[v] = m.maximize[v] ? hi : lo;
  }
}

void shift_min_add_neon(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t add) {
  const int64x2_t inf = vdupq_n_s64(kInf);
  const int64x2_t inf_m1 = vdupq_n_s64(kInf - 1);
  const int64x2_t addv = vdupq_n_s64(add);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_s64(dst + i, min_s64(vld1q_s64(dst + i), sat_add(vld1q_s64(src + i), addv, inf, inf_m1)));
  }
  for (; i < n; ++i) dst[i] = std::min(dst[i], src[i] >= kInf ? kInf : src[i] + add);
}

}  // namespace aeg::kernels::detail
