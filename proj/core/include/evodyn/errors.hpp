#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace evodyn {

using Cx = std::complex<double>;

/// Parameter or argument outside the physical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive ODE integration could not proceed. Carries the last accepted
/// state so callers can report how far the run got.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t, double g, double gdot)
      : std::runtime_error(what), t_(t), g_(g), gdot_(gdot) {}
  double t() const noexcept { return t_; }
  double g() const noexcept { return g_; }
  double gdot() const noexcept { return gdot_; }

 private:
  double t_;
  double g_;
  double gdot_;
};

/// A series evaluation exhausted its term budget before converging.
/// Carries the (nu, z) pair that failed so front ends can name it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Cx nu, Cx z, int terms)
      : std::runtime_error(what), nu_(nu), z_(z), terms_(terms) {}
  Cx nu() const noexcept { return nu_; }
  Cx z() const noexcept { return z_; }
  int terms() const noexcept { return terms_; }

 private:
  Cx nu_;
  Cx z_;
  int terms_;
};

}  // namespace evodyn
