#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "aeg/kernels.hpp"

namespace aeg::kernels {

namespace {

Isa best_supported() {
  if (supported(Isa::Avx2)) return Isa::Avx2;
  if (supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa initial_isa() {
  if (const char* env = std::getenv("AEG_ISA")) {
    const std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == to_string(isa) && supported(isa)) return isa;
    }
  }
  return best_supported();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(AEG_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(AEG_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active() { return current().load(std::memory_order_relaxed); }

void select(Isa isa) {
  if (!supported(isa)) throw std::invalid_argument("kernel variant not available: " + std::string(to_string(isa)));
  current().store(isa, std::memory_order_relaxed);
}

void relax(const EllMatrix& m, std::span<const std::int64_t> in, std::span<std::int64_t> out) {
  if (in.size() < m.sources + 1 || out.size() < m.rows) throw std::invalid_argument("relax: buffer too small");
  if (m.rows == 0) return;
  switch (active()) {
#if defined(AEG_HAVE_AVX2)
    case Isa::Avx2:
      detail::relax_avx2(m, in.data(), out.data());
      return;
#endif
#if defined(AEG_HAVE_NEON)
    case Isa::Neon:
      detail::relax_neon(m, in.data(), out.data());
      return;
#endif
    default:
      detail::relax_scalar(m, in.data(), out.data());
  }
}

void shift_min_add(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t add) {
  if (src.size() < dst.size()) throw std::invalid_argument("shift_min_add: source too short");
  switch (active()) {
#if defined(AEG_HAVE_AVX2)
    case Isa::Avx2:
      detail::shift_min_add_avx2(dst.data(), src.data(), dst.size(), add);
      return;
#endif
#if defined(AEG_HAVE_NEON)
    case Isa::Neon:
      detail::shift_min_add_neon(dst.data(), src.data(), dst.size(), add);
      return;
#endif
    default:
      detail::shift_min_add_scalar(dst.data(), src.data(), dst.size(), add);
  }
}

}  // namespace aeg::kernels
