#include <immintrin.h>

#include "hypgeo/kernels.hpp"

// Mirrors classify_scalar.cpp operation for operation (no FMA) so both
// variants round identically.

namespace hypgeo::kernels::avx2 {
namespace {

inline __m256d set1(double x) { return _mm256_set1_pd(x); }

inline __m256d convexity_polynomial(__m256d a, __m256d b) {
  const __m256d one = set1(1.0);
  const __m256d t1 = _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(set1(3.0), b), one),
                                   _mm256_mul_pd(a, a));
  const __m256d t2 = _mm256_mul_pd(
      _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(set1(2.0), _mm256_mul_pd(b, b)),
                                  _mm256_mul_pd(set1(5.0), b)),
                    one),
      a);
  const __m256d t3 = _mm256_mul_pd(b, _mm256_sub_pd(one, _mm256_mul_pd(b, b)));
  return _mm256_add_pd(_mm256_add_pd(t1, t2), t3);
}

inline __m256d sufficient_bound(__m256d a, __m256d b, __m256d c) {
  const __m256d one = set1(1.0);
  const __m256d d = _mm256_sub_pd(_mm256_add_pd(_mm256_add_pd(one, a), b), c);
  const __m256d t1 = _mm256_mul_pd(
      _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(set1(3.0), a), b), c), set1(0.5));
  const __m256d t2 = _mm256_div_pd(_mm256_sub_pd(b, a), d);
  const __m256d inner = _mm256_sub_pd(
      _mm256_mul_pd(set1(2.0), _mm256_sub_pd(_mm256_sub_pd(c, a), b)), one);
  const __m256d t3 = _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(a, c), inner),
                                   _mm256_mul_pd(_mm256_add_pd(b, c), d));
  return _mm256_add_pd(_mm256_add_pd(t1, t2), t3);
}

inline __m256d gt(__m256d x, __m256d y) { return _mm256_cmp_pd(x, y, _CMP_GT_OQ); }
inline __m256d lt(__m256d x, __m256d y) { return _mm256_cmp_pd(x, y, _CMP_LT_OQ); }
inline __m256d le(__m256d x, __m256d y) { return _mm256_cmp_pd(x, y, _CMP_LE_OQ); }
inline __m256d ge(__m256d x, __m256d y) { return _mm256_cmp_pd(x, y, _CMP_GE_OQ); }
inline __m256d both(__m256d x, __m256d y) { return _mm256_and_pd(x, y); }

}  // namespace

void classify_row(double c, double b, std::span<const double> a,
                  std::span<std::uint8_t> out) {
  const std::size_t n = a.size();
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = set1(1.0);
  const __m256d half = set1(0.5);
  const __m256d vb = set1(b);
  const __m256d vc = set1(c);
  const bool unit_c = c == 1.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a.data() + i);
    const __m256d s = _mm256_add_pd(va, vb);
    __m256d black = both(gt(va, zero), gt(vb, zero));
    black = both(black, gt(vc, zero));
    black = both(black, lt(_mm256_sub_pd(s, one), vc));
    black = both(black, lt(vc, _mm256_add_pd(s, half)));
    black = both(black, gt(_mm256_mul_pd(_mm256_sub_pd(vc, va), _mm256_sub_pd(vc, vb)), zero));

    // std::min/std::max semantics for non-NaN input.
    const __m256d lo = _mm256_blendv_pd(va, vb, lt(vb, va));
    const __m256d hi = _mm256_blendv_pd(vb, va, lt(vb, va));
    __m256d gray = gt(lo, zero);
    if (unit_c) {
      gray = both(gray, le(_mm256_add_pd(lo, hi), half));
      gray = both(gray, ge(convexity_polynomial(lo, hi), zero));
    } else {
      gray = both(gray, le(_mm256_add_pd(_mm256_add_pd(lo, hi), half), vc));
      gray = both(gray, le(vc, _mm256_add_pd(one, lo)));
      gray = both(gray, ge(sufficient_bound(lo, hi, vc), zero));
    }
    const int black_bits = _mm256_movemask_pd(black);
    const int gray_bits = _mm256_movemask_pd(gray);
    for (int k = 0; k < 4; ++k) {
      out[i + k] = (black_bits >> k & 1)  ? kBlack
                   : (gray_bits >> k & 1) ? kGray
                                          : kWhite;
    }
  }
  if (i < n) scalar::classify_row(c, b, a.subspan(i), out.subspan(i));
}

}  // namespace hypgeo::kernels::avx2
