#include "evodyn/core.hpp"

#include <cmath>

namespace evodyn {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void PhysicalParams::validate() const {
  if (!positive_finite(m) || !positive_finite(delta_q) ||
      !positive_finite(hbar) || !positive_finite(k_b)) {
    throw DomainError("PhysicalParams: all fields must be finite and > 0");
  }
}

double e00(const PhysicalParams& params) {
  params.validate();
  return params.hbar * params.hbar / (2.0 * params.m * params.delta_q * params.delta_q);
}

void NumericControls::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0) || !(abs_tol > 0.0 && abs_tol < 1.0)) {
    throw DomainError("NumericControls: tolerances must lie in (0, 1)");
  }
  if (!positive_finite(max_step) || !positive_finite(t_max) ||
      !positive_finite(output_stride)) {
    throw DomainError("NumericControls: max_step, t_max, output_stride must be > 0");
  }
}

double Scenario::gdot0() const {
  return std::sqrt(params.k_b * t0_temp / (params.m * params.delta_q * params.delta_q));
}

double Scenario::gdote() const {
  return std::sqrt(params.k_b * te_temp / (params.m * params.delta_q * params.delta_q));
}

void Scenario::validate() const {
  params.validate();
  if (!positive_finite(t0_temp) || !positive_finite(te_temp)) {
    throw DomainError("Scenario: temperatures must be finite and > 0");
  }
  if (!std::isfinite(g0)) {
    throw DomainError("Scenario: g0 must be finite");
  }
  numerics.validate();
  if (!std::isfinite(gdot0()) || !std::isfinite(gdote())) {
    throw DomainError("Scenario: derived advance rates overflow");
  }
}

EvState EvState::from_gdot(double g, double gdot, const PhysicalParams& params) {
  EvState s;
  s.g = g;
  s.gdot = gdot;
  s.f = params.m * params.delta_q * params.delta_q * gdot;
  s.temp = s.f * gdot / params.k_b;
  return s;
}

bool EvState::respects_momentum_bound(const PhysicalParams& params,
                                      double rel_slack) const {
  return f >= 0.5 * params.hbar * (1.0 - rel_slack);
}

double temperature_of(double f, double gdot, const PhysicalParams& params) {
  if (!(f > 0.0)) {
    throw DomainError("temperature_of: momentum f must be > 0");
  }
  if (gdot < 0.0) {
    throw DomainError("temperature_of: advance rate must be >= 0");
  }
  return f * gdot / params.k_b;
}

double entropy_change(double f_new, double f_old, const PhysicalParams& params) {
  if (!(f_new > 0.0) || !(f_old > 0.0)) {
    throw DomainError("entropy_change: momenta must be > 0");
  }
  return params.k_b * std::log(f_new / f_old);
}

double cpdq_uncertainty(double f, const PhysicalParams& params) {
  const double f_min = 0.5 * params.hbar;
  if (f < f_min) {
    throw DomainError("cpdq_uncertainty: momentum below the lower bound hbar/2");
  }
  return f_min / f;
}

PartitionIdentity partition_identity(double temp, double volume,
                                     const PhysicalParams& params) {
  if (!(temp > 0.0) || !(volume > 0.0)) {
    throw DomainError("partition_identity: temp and volume must be > 0");
  }
  PartitionIdentity out;
  const double edge = std::cbrt(volume);
  out.f = std::sqrt(params.m * params.k_b * temp) * edge;
  out.z = std::sqrt(2.0 * std::numbers::pi * params.m * params.k_b * temp) * edge / params.h();
  out.ratio = out.f / (std::sqrt(2.0 * std::numbers::pi) * params.hbar * out.z);
  return out;
}

}  // namespace evodyn
