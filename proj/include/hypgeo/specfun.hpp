#pragma once

// Real-argument special functions used by the connection formulas and the
// boundary asymptotics.

namespace hypgeo {

/// True for x in {0, -1, -2, ...}.
bool is_gamma_pole(double x) noexcept;

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) noexcept;
double cos_pi(double x) noexcept;

/// Gamma function. Lanczos (g = 7, 9 terms) for x >= 1/2, reflection below.
/// Throws DomainError at the poles.
double gamma_real(double x);

/// 1/Gamma(x); returns exactly 0 at the poles instead of throwing.
double rgamma_real(double x) noexcept;

/// Digamma psi = Gamma'/Gamma. Throws DomainError at the poles.
double digamma_real(double x);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), (x)_0 = 1.
double pochhammer(double x, unsigned n) noexcept;

}  // namespace hypgeo
