#pragma once

#include <numbers>

#include "evodyn/errors.hpp"

namespace evodyn {

/// Particle mass, box size and physical constants. The defaults are the
/// natural unit system m = dq = hbar = k_b = 1, in which the ground-state
/// energy e00() is exactly 0.5 and all figures of merit are O(1).
struct PhysicalParams {
  double m = 1.0;        ///< particle mass
  double delta_q = 1.0;  ///< box length (position uncertainty at the boundary)
  double hbar = 1.0;     ///< reduced Planck constant
  double k_b = 1.0;      ///< Boltzmann constant

  double h() const noexcept { return 2.0 * std::numbers::pi * hbar; }

  /// Throws DomainError unless every field is finite and strictly positive.
  void validate() const;
};

/// Ground-state energy of the particle in the box, hbar^2 / (2 m dq^2).
double e00(const PhysicalParams& params);

/// Tolerances and sampling controls for trajectory integration.
struct NumericControls {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.1;
  double t_max = 10.0;
  double output_stride = 0.01;

  void validate() const;
};

/// A thermal-contact experiment: system prepared at temperature t0_temp is
/// immersed at advance coordinate g0 in a bath at te_temp.
struct Scenario {
  PhysicalParams params;
  double t0_temp = 1.0;
  double te_temp = 50.0;
  double g0 = 0.0;
  NumericControls numerics;

  /// Advance rate sqrt(k_b T0 / (m dq^2)) at the initial temperature.
  double gdot0() const;
  /// Advance rate at the bath temperature.
  double gdote() const;

  void validate() const;
};

/// Instantaneous state on a constant-volume evolution: advance coordinate,
/// its rate, the evolutionary momentum f and the temperature.
struct EvState {
  double g = 0.0;
  double gdot = 0.0;
  double f = 0.0;
  double temp = 0.0;

  /// Builds the state implied by (g, gdot) on a constant-volume trajectory:
  /// f = m dq^2 gdot and k_b T = f gdot.
  static EvState from_gdot(double g, double gdot, const PhysicalParams& params);

  /// True when f respects the lower bound hbar/2 (up to relative slack).
  bool respects_momentum_bound(const PhysicalParams& params,
                               double rel_slack = 1e-12) const;
};

/// Temperature from the momentum-rate product, T = f gdot / k_b.
/// Throws DomainError for nonpositive f or negative gdot.
double temperature_of(double f, double gdot, const PhysicalParams& params);

/// Entropy difference k_b ln(f_new / f_old); antisymmetric in its arguments.
/// Throws DomainError unless both momenta are strictly positive.
double entropy_change(double f_new, double f_old, const PhysicalParams& params);

/// Uncertainty of the advance coordinate, (hbar/2) / f, in (0, 1].
/// Throws DomainError when f is below the lower bound hbar/2.
double cpdq_uncertainty(double f, const PhysicalParams& params);

/// Equilibrium momentum, single-degree-of-freedom partition function and
/// their invariant ratio f / (sqrt(2 pi) hbar z), which is identically 1.
struct PartitionIdentity {
  double f = 0.0;
  double z = 0.0;
  double ratio = 0.0;
};

/// Evaluates f = sqrt(m k_b T) V^{1/3}, z = sqrt(2 pi m k_b T) V^{1/3} / h
/// and their ratio. Throws DomainError for nonpositive temp or volume.
PartitionIdentity partition_identity(double temp, double volume,
                                     const PhysicalParams& params);

}  // namespace evodyn
