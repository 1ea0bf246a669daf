#pragma once

#include <vector>

#include "evodyn/classical.hpp"

namespace evodyn {

/// One sample of the canonical (action, entropy) representation: a is the
/// accumulated action integral of f dg, s the entropy in k_b units relative
/// to the first sample, a_dot the centered time derivative of a.
struct ActionEntropySample {
  double t = 0.0;
  double a = 0.0;
  double s = 0.0;
  double a_dot = 0.0;
};

struct ActionEntropyTrack {
  std::vector<ActionEntropySample> samples;

  std::size_t size() const { return samples.size(); }
};

/// Maps a trajectory into the canonical variables: a by trapezoidal
/// accumulation of f dg, s = ln(f / f(0)), a_dot by centered differences
/// (one-sided at the ends). Throws DomainError for fewer than three samples
/// or a non-increasing advance coordinate.
ActionEntropyTrack to_action_entropy(const EvTrajectory& traj);

/// Max over interior samples of |a_dot / k_b - T| / T; the canonical
/// identity says a_dot = k_b T exactly, so the result is pure
/// discretization residual.
double check_temperature_identity(const ActionEntropyTrack& track,
                                  const EvTrajectory& traj,
                                  const PhysicalParams& params);

/// Max over interior samples of |da ds - dg df| relative to |dg df|, with
/// the centered increments da = f dg (trapezoidal), ds = d ln f. The phase
/// space products agree identically in exact arithmetic.
double check_canonical_area(const EvTrajectory& traj);

/// Max relative deviation between s_dot (centered differences of s), the
/// momentum ratio f_dot / f, and the analytic entropy rate
/// k_b (Te - T) / (2 f), over interior samples.
double check_entropy_force(const ActionEntropyTrack& track,
                           const EvTrajectory& traj, const Scenario& scenario);

/// Relative deviation of the accumulated s d(a_dot) + a_dot ds against the
/// endpoint difference of a_dot * s; the two agree identically (the product
/// telescopes), so the result is pure rounding.
double check_action_entropy_sum_rule(const ActionEntropyTrack& track);

}  // namespace evodyn
