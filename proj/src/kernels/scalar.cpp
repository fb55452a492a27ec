#include <algorithm>

#include "aeg/kernels.hpp"

namespace aeg::kernels::detail {

namespace {

inline std::int64_t sat_add(std::int64_t v, std::int64_t w) { return v >= kInf ? kInf : v + w; }

}  // namespace

void relax_scalar(const EllMatrix& m, const std::int64_t* in, std::int64_t* out) {
  const std::size_t n = m.rows;
  for (std::size_t v = 0; v < n; ++v) {
    std::int64_t lo = sat_add(in[m.index[v]], m.weight[v]);
    std::int64_t hi = lo;
    for (std::size_t d = 1; d < m.width; ++d) {
      const std::size_t k = d * n + v;
      const std::int64_t c = sat_add(in[m.index[k]], m.weight[k]);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    out[v] = m.maximize[v] ? hi : lo;
  }
}

void shift_min_add_scalar(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t add) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = std::min(dst[i], sat_add(src[i], add));
}

}  // namespace aeg::kernels::detail
