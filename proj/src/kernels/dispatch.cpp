#include <atomic>
#include <cstdlib>
#include <string_view>

#include "hypgeo/kernels.hpp"

namespace hypgeo::kernels {
namespace {

// -1: no override; otherwise the Isa value.
std::atomic<int> g_override{-1};

Isa env_or_detected() noexcept {
  if (const char* env = std::getenv("HYPGEO_ISA")) {
    if (std::string_view(env) == "scalar") return Isa::Scalar;
  }
  return detected_isa();
}

}  // namespace

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() noexcept {
#if defined(HYPGEO_HAVE_AVX2)
  static const bool has_avx2 =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (has_avx2) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa active_isa() noexcept {
  const int o = g_override.load(std::memory_order_relaxed);
  if (o >= 0) return static_cast<Isa>(o);
  static const Isa chosen = env_or_detected();
  return chosen;
}

void set_isa_override(std::optional<Isa> isa) noexcept {
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void horner3(std::span<const double> coeffs, std::span<const double> z_re,
             std::span<const double> z_im, const HornerOut& out) {
#if defined(HYPGEO_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::horner3(coeffs, z_re, z_im, out);
#endif
  scalar::horner3(coeffs, z_re, z_im, out);
}

void classify_row(double c, double b, std::span<const double> a,
                  std::span<std::uint8_t> out) {
#if defined(HYPGEO_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::classify_row(c, b, a, out);
#endif
  scalar::classify_row(c, b, a, out);
}

#if !defined(HYPGEO_HAVE_AVX2)
// Non-x86 builds: the AVX2 entry points forward to the reference so callers
// and tests link unchanged.
namespace avx2 {
void horner3(std::span<const double> coeffs, std::span<const double> z_re,
             std::span<const double> z_im, const HornerOut& out) {
  scalar::horner3(coeffs, z_re, z_im, out);
}
void classify_row(double c, double b, std::span<const double> a,
                  std::span<std::uint8_t> out) {
  scalar::classify_row(c, b, a, out);
}
}  // namespace avx2
#endif

}  // namespace hypgeo::kernels
