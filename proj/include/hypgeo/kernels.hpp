#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
// The variant is picked at runtime from the CPU feature bits; tests pin each
// variant explicitly and check them against the reference.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace hypgeo::kernels {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa) noexcept;

/// Best variant supported by this CPU and build.
Isa detected_isa() noexcept;

/// Variant used by the dispatching entry points. Defaults to detected_isa(),
/// HYPGEO_ISA=scalar in the environment forces the reference.
Isa active_isa() noexcept;

/// Test hook; std::nullopt restores the default.
void set_isa_override(std::optional<Isa> isa) noexcept;

/// Output planes of horner3, each of the same length as the input points.
struct HornerOut {
  std::span<double> f_re, f_im;
  std::span<double> d1_re, d1_im;
  std::span<double> d2_re, d2_im;
};

/// Evaluates p(z) = sum_k coeffs[k] z^k, p'(z), p''(z) at complex points
/// given as separate real/imaginary planes.
void horner3(std::span<const double> coeffs, std::span<const double> z_re,
             std::span<const double> z_im, const HornerOut& out);

/// Region codes written by classify_row.
inline constexpr std::uint8_t kBlack = 0;
inline constexpr std::uint8_t kGray = 1;
inline constexpr std::uint8_t kWhite = 2;

/// Classifies the cells (a[i], b) of one scan row at fixed c. All variants
/// produce identical codes.
void classify_row(double c, double b, std::span<const double> a,
                  std::span<std::uint8_t> out);

namespace scalar {
void horner3(std::span<const double> coeffs, std::span<const double> z_re,
             std::span<const double> z_im, const HornerOut& out);
void classify_row(double c, double b, std::span<const double> a,
                  std::span<std::uint8_t> out);
}  // namespace scalar

namespace avx2 {
void horner3(std::span<const double> coeffs, std::span<const double> z_re,
             std::span<const double> z_im, const HornerOut& out);
void classify_row(double c, double b, std::span<const double> a,
                  std::span<std::uint8_t> out);
}  // namespace avx2

}  // namespace hypgeo::kernels
