#pragma once

#include <vector>

#include "evodyn/core.hpp"

namespace evodyn {

/// One output sample of a relaxation run. s_rel is the entropy relative to
/// the t = 0 state, k_b ln(f / f(0)).
struct TrajectorySample {
  double t = 0.0;
  double g = 0.0;
  double gdot = 0.0;
  double f = 0.0;
  double temp = 0.0;
  double s_rel = 0.0;
};

/// Sampled classical evolution of the thermal-contact scenario.
struct EvTrajectory {
  std::vector<TrajectorySample> samples;

  const TrajectorySample& front() const { return samples.front(); }
  const TrajectorySample& back() const { return samples.back(); }
  std::size_t size() const { return samples.size(); }
};

/// Lagrangian of the constant-volume relaxation,
/// L = (1/2) m dq^2 gdot^2 - (k_b/2)(Te - T0) e^{g0 - g}.
double lagrangian(double g, double gdot, const Scenario& scenario);

/// Euler-Lagrange acceleration g'' = [k_b (Te - T0) / (2 m dq^2)] e^{g0 - g}.
double el_rhs(double g, double gdot, const Scenario& scenario);

/// Integrates the relaxation ODE with an adaptive Dormand-Prince scheme,
/// sampling every controls.output_stride up to controls.t_max. Momentum,
/// temperature and relative entropy columns are derived from the state.
/// Throws IntegrationError (carrying the last accepted state) when the
/// controller cannot find a usable step size.
EvTrajectory integrate_trajectory(const Scenario& scenario,
                                  const NumericControls& controls);

/// Overload using the controls embedded in the scenario.
EvTrajectory integrate_trajectory(const Scenario& scenario);

/// Advance rate along the energy integral of the relaxation,
/// gdot^2 = gdot0^2 + [k_b (Te - T0)/(m dq^2)] (1 - e^{g0 - g}).
/// A negative radicand (rounding on cooling runs) is clamped to zero and
/// reported through the flag.
struct RateAtG {
  double gdot = 0.0;
  bool clamped = false;
};
RateAtG gdot_of_g(double g, const Scenario& scenario);

/// Closed-form trajectory
///   g(t) = g0 + ln{ [(ge + g0d) e^{ge t/2} + (ge - g0d) e^{-ge t/2}]^2 / (4 ge^2) }
/// with g0d = gdot0, ge = gdote, evaluated in a log-sum-exp form that is
/// stable for large t and reduces to free streaming when Te = T0.
double closed_form_g(double t, const Scenario& scenario);

/// Temperature along the trajectory, T = T0 + (Te - T0)(1 - e^{g0 - g}).
double temperature_of_g(double g, const Scenario& scenario);

/// Conductance sigma = c_v k_b T / (2 f) of the contact, together with its
/// upper bound sigma_max = pi k_b^2 T / h (reached at c_v = k_b/2, f = hbar/2).
/// Throws DomainError when f is below hbar/2.
struct Conductance {
  double sigma = 0.0;
  double sigma_max = 0.0;
};
Conductance conductance(double temp, double f, double c_v,
                        const PhysicalParams& params);

/// Single-channel thermal conductance quantum pi^2 k_b^2 T / (3 h), the
/// reference value sigma_max is compared against.
double thermal_conductance_quantum(double temp, const PhysicalParams& params);

/// Force driving the momentum change, (k_b/2)(Te - T).
double ev_force(double temp, const Scenario& scenario);

/// Entropy production rate k_b^2 (Te - T) / (2 dq sqrt(m k_b T)).
double entropy_rate(double temp, const Scenario& scenario);

}  // namespace evodyn
