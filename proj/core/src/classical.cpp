#include "evodyn/classical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/numeric/odeint.hpp>

namespace evodyn {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 2>;  // {g, gdot}

double force_coefficient(const Scenario& sc) {
  return sc.params.k_b * (sc.te_temp - sc.t0_temp) /
         (2.0 * sc.params.m * sc.params.delta_q * sc.params.delta_q);
}

TrajectorySample make_sample(double t, const State& y, const Scenario& sc,
                             double f0) {
  const EvState st = EvState::from_gdot(y[0], y[1], sc.params);
  TrajectorySample s;
  s.t = t;
  s.g = st.g;
  s.gdot = st.gdot;
  s.f = st.f;
  s.temp = st.temp;
  s.s_rel = sc.params.k_b * std::log(st.f / f0);
  return s;
}

}  // namespace

double lagrangian(double g, double gdot, const Scenario& scenario) {
  const auto& p = scenario.params;
  const double kinetic = 0.5 * p.m * p.delta_q * p.delta_q * gdot * gdot;
  const double potential = 0.5 * p.k_b * (scenario.te_temp - scenario.t0_temp) *
                           std::exp(scenario.g0 - g);
  return kinetic - potential;
}

double el_rhs(double g, double /*gdot*/, const Scenario& scenario) {
  return force_coefficient(scenario) * std::exp(scenario.g0 - g);
}

EvTrajectory integrate_trajectory(const Scenario& scenario,
                                  const NumericControls& controls) {
  scenario.validate();
  controls.validate();

  const auto rhs = [&scenario](const State& y, State& dydt, double /*t*/) {
    dydt[0] = y[1];
    dydt[1] = el_rhs(y[0], y[1], scenario);
  };

  auto stepper = odeint::make_controlled(
      controls.abs_tol, controls.rel_tol, controls.max_step,
      odeint::runge_kutta_dopri5<State>());

  State y{scenario.g0, scenario.gdot0()};
  const double f0 = scenario.params.m * scenario.params.delta_q *
                    scenario.params.delta_q * scenario.gdot0();

  EvTrajectory traj;
  const long n_strides = std::max(
      1L, static_cast<long>(
              std::ceil(controls.t_max / controls.output_stride - 1e-9)));
  traj.samples.reserve(static_cast<std::size_t>(n_strides) + 1);
  traj.samples.push_back(make_sample(0.0, y, scenario, f0));

  double t_last_good = 0.0;
  State y_last_good = y;
  const auto observer = [&](const State& s, double t) {
    t_last_good = t;
    y_last_good = s;
  };

  for (long i = 1; i <= n_strides; ++i) {
    const double t_from = (i - 1) * controls.output_stride;
    const double t_to =
        (i == n_strides) ? controls.t_max : i * controls.output_stride;
    try {
      odeint::integrate_adaptive(stepper, rhs, y, t_from, t_to,
                                 std::min(controls.max_step, t_to - t_from),
                                 observer);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "integrate_trajectory: step-size control failed near t = "
          << t_last_good << " (" << e.what() << ")";
      throw IntegrationError(msg.str(), t_last_good, y_last_good[0],
                             y_last_good[1]);
    }
    traj.samples.push_back(make_sample(t_to, y, scenario, f0));
  }
  return traj;
}

EvTrajectory integrate_trajectory(const Scenario& scenario) {
  return integrate_trajectory(scenario, scenario.numerics);
}

RateAtG gdot_of_g(double g, const Scenario& scenario) {
  if (g < scenario.g0) {
    throw DomainError("gdot_of_g: g must be >= g0");
  }
  const double gd0 = scenario.gdot0();
  const double radicand =
      gd0 * gd0 +
      2.0 * force_coefficient(scenario) * (1.0 - std::exp(scenario.g0 - g));
  RateAtG out;
  if (radicand < 0.0) {
    out.gdot = 0.0;
    out.clamped = true;
  } else {
    out.gdot = std::sqrt(radicand);
  }
  return out;
}

double closed_form_g(double t, const Scenario& scenario) {
  if (t < 0.0) {
    throw DomainError("closed_form_g: t must be >= 0");
  }
  const double gd0 = scenario.gdot0();
  const double gde = scenario.gdote();
  if (gd0 == gde) {
    return scenario.g0 + gd0 * t;  // free streaming
  }
  // g = g0 + 2 [ ge t/2 + ln((ge+g0d) + (ge-g0d) e^{-ge t}) - ln(2 ge) ]
  const double bracket = (gde + gd0) + (gde - gd0) * std::exp(-gde * t);
  return scenario.g0 +
         2.0 * (0.5 * gde * t + std::log(bracket) - std::log(2.0 * gde));
}

double temperature_of_g(double g, const Scenario& scenario) {
  return scenario.t0_temp + (scenario.te_temp - scenario.t0_temp) *
                                (1.0 - std::exp(scenario.g0 - g));
}

Conductance conductance(double temp, double f, double c_v,
                        const PhysicalParams& params) {
  if (!(temp > 0.0) || !(c_v > 0.0)) {
    throw DomainError("conductance: temp and c_v must be > 0");
  }
  if (f < 0.5 * params.hbar) {
    throw DomainError("conductance: momentum below the lower bound hbar/2");
  }
  Conductance out;
  out.sigma = c_v * params.k_b * temp / (2.0 * f);
  out.sigma_max =
      std::numbers::pi * params.k_b * params.k_b * temp / params.h();
  return out;
}

double thermal_conductance_quantum(double temp, const PhysicalParams& params) {
  const double pi = std::numbers::pi;
  return pi * pi * params.k_b * params.k_b * temp / (3.0 * params.h());
}

double ev_force(double temp, const Scenario& scenario) {
  return 0.5 * scenario.params.k_b * (scenario.te_temp - temp);
}

double entropy_rate(double temp, const Scenario& scenario) {
  if (!(temp > 0.0)) {
    throw DomainError("entropy_rate: temp must be > 0");
  }
  const auto& p = scenario.params;
  return p.k_b * p.k_b * (scenario.te_temp - temp) /
         (2.0 * p.delta_q * std::sqrt(p.m * p.k_b * temp));
}

}  // namespace evodyn
