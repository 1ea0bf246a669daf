#pragma once

#include "evodyn/errors.hpp"

namespace evodyn {

/// Truncation controls for the modified-Bessel power series.
struct SeriesControls {
  double term_tol = 1e-15;  ///< relative term-size threshold
  int max_terms = 400;      ///< hard term budget before ConvergenceError

  void validate() const;
};

/// Complex gamma function (Lanczos approximation, reflection for Re z < 1/2).
/// Throws DomainError at the poles z = 0, -1, -2, ...
Cx gamma_cx(Cx z);

/// Value of I_nu(z) together with its first two z-derivatives, each obtained
/// by term-wise differentiation of the same power series.
struct BesselSeries {
  Cx value{};
  Cx d1{};
  Cx d2{};
  int terms_used = 0;
};

/// Modified Bessel function of the first kind with complex order and complex
/// argument, summed as sum_k (z/2)^(nu+2k) / (k! Gamma(nu+k+1)) under the
/// principal branch of (z/2)^nu. Throws ConvergenceError when the term budget
/// is exhausted; Gamma poles in individual terms contribute zero.
BesselSeries bessel_i_series(Cx nu, Cx z, const SeriesControls& controls = {});

/// Value-only convenience wrapper around bessel_i_series.
Cx bessel_i_cx(Cx nu, Cx z, const SeriesControls& controls = {});

}  // namespace evodyn
