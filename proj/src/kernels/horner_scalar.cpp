#include <cassert>

#include "hypgeo/kernels.hpp"

namespace hypgeo::kernels::scalar {

void horner3(std::span<const double> coeffs, std::span<const double> z_re,
             std::span<const double> z_im, const HornerOut& out) {
  assert(z_re.size() == z_im.size());
  const std::size_t n = z_re.size();
  const std::size_t m = coeffs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = z_re[i];
    const double xi = z_im[i];
    double pr = m ? coeffs[m - 1] : 0.0, pi = 0.0;
    double d1r = 0.0, d1i = 0.0;
    double d2r = 0.0, d2i = 0.0;
    for (std::size_t k = m ? m - 1 : 0; k-- > 0;) {
      // d2 <- d2 z + d1, d1 <- d1 z + p, p <- p z + c_k
      const double t2r = d2r * xr - d2i * xi + d1r;
      const double t2i = d2r * xi + d2i * xr + d1i;
      const double t1r = d1r * xr - d1i * xi + pr;
      const double t1i = d1r * xi + d1i * xr + pi;
      const double t0r = pr * xr - pi * xi + coeffs[k];
      const double t0i = pr * xi + pi * xr;
      d2r = t2r; d2i = t2i;
      d1r = t1r; d1i = t1i;
      pr = t0r;  pi = t0i;
    }
    out.f_re[i] = pr;
    out.f_im[i] = pi;
    out.d1_re[i] = d1r;
    out.d1_im[i] = d1i;
    out.d2_re[i] = 2.0 * d2r;
    out.d2_im[i] = 2.0 * d2i;
  }
}

}  // namespace hypgeo::kernels::scalar
