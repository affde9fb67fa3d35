#include <immintrin.h>

#include "hypgeo/kernels.hpp"

namespace hypgeo::kernels::avx2 {
namespace {

struct Lane4 {
  __m256d re, im;
};

// (x + iy) * z + (cr + ci i), with z = (zr, zi).
inline Lane4 mul_add(Lane4 x, __m256d zr, __m256d zi, __m256d cr, __m256d ci) {
  const __m256d re = _mm256_fmsub_pd(x.re, zr, _mm256_fmsub_pd(x.im, zi, cr));
  const __m256d im = _mm256_fmadd_pd(x.re, zi, _mm256_fmadd_pd(x.im, zr, ci));
  return {re, im};
}

}  // namespace

void horner3(std::span<const double> coeffs, std::span<const double> z_re,
             std::span<const double> z_im, const HornerOut& out) {
  const std::size_t n = z_re.size();
  const std::size_t m = coeffs.size();
  const __m256d zero = _mm256_setzero_pd();
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xr = _mm256_loadu_pd(z_re.data() + i);
    const __m256d xi = _mm256_loadu_pd(z_im.data() + i);
    Lane4 p{_mm256_set1_pd(m ? coeffs[m - 1] : 0.0), zero};
    Lane4 d1{zero, zero};
    Lane4 d2{zero, zero};
    for (std::size_t k = m ? m - 1 : 0; k-- > 0;) {
      d2 = mul_add(d2, xr, xi, d1.re, d1.im);
      d1 = mul_add(d1, xr, xi, p.re, p.im);
      p = mul_add(p, xr, xi, _mm256_set1_pd(coeffs[k]), zero);
    }
    _mm256_storeu_pd(out.f_re.data() + i, p.re);
    _mm256_storeu_pd(out.f_im.data() + i, p.im);
    _mm256_storeu_pd(out.d1_re.data() + i, d1.re);
    _mm256_storeu_pd(out.d1_im.data() + i, d1.im);
    _mm256_storeu_pd(out.d2_re.data() + i, _mm256_mul_pd(two, d2.re));
    _mm256_storeu_pd(out.d2_im.data() + i, _mm256_mul_pd(two, d2.im));
  }
  if (i < n) {
    const std::size_t rest = n - i;
    HornerOut tail{out.f_re.subspan(i, rest),  out.f_im.subspan(i, rest),
                   out.d1_re.subspan(i, rest), out.d1_im.subspan(i, rest),
                   out.d2_re.subspan(i, rest), out.d2_im.subspan(i, rest)};
    scalar::horner3(coeffs, z_re.subspan(i, rest), z_im.subspan(i, rest), tail);
  }
}

}  // namespace hypgeo::kernels::avx2
