#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypgeo {

/// Input outside the domain of an operation (pole, violated hypothesis).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative evaluation (series, continued fraction) ran out of budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::size_t terms_used)
      : std::runtime_error(what), terms_used_(terms_used) {}

  std::size_t terms_used() const noexcept { return terms_used_; }

 private:
  std::size_t terms_used_;
};

/// Continued fraction that did not settle; carries the last two convergents.
class FractionConvergenceError : public ConvergenceError {
 public:
  FractionConvergenceError(const std::string& what, std::size_t depth,
                           std::complex<double> last,
                           std::complex<double> previous)
      : ConvergenceError(what, depth), last_(last), previous_(previous) {}

  std::complex<double> last() const noexcept { return last_; }
  std::complex<double> previous() const noexcept { return previous_; }

 private:
  std::complex<double> last_;
  std::complex<double> previous_;
};

/// A quantity used as a denominator vanished numerically (F, Q, w').
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypgeo
