#include "evodyn/helmholtz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace evodyn {

namespace {

// Noise floors for relative deviations in the equilibrated tail, where the
// true increments underflow to rounding scale.
constexpr double kAreaFloorFrac = 1e-3;
constexpr double kRateFloorFrac = 1e-6;

}  // namespace

ActionEntropyTrack to_action_entropy(const EvTrajectory& traj) {
  const auto& s = traj.samples;
  if (s.size() < 3) {
    throw DomainError("to_action_entropy: need at least three samples");
  }
  ActionEntropyTrack track;
  track.samples.resize(s.size());

  const double f0 = s.front().f;
  double a = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {
      if (!(s[i].t > s[i - 1].t)) {
        throw DomainError("to_action_entropy: time must be strictly increasing");
      }
      if (!(s[i].g > s[i - 1].g)) {
        throw DomainError("to_action_entropy: advance must be strictly increasing");
      }
      a += 0.5 * (s[i].f + s[i - 1].f) * (s[i].g - s[i - 1].g);
    }
    track.samples[i].t = s[i].t;
    track.samples[i].a = a;
    track.samples[i].s = std::log(s[i].f / f0);
  }
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i == n - 1 ? n - 1 : i + 1;
    track.samples[i].a_dot = (track.samples[hi].a - track.samples[lo].a) /
                             (track.samples[hi].t - track.samples[lo].t);
  }
  return track;
}

double check_temperature_identity(const ActionEntropyTrack& track,
                                  const EvTrajectory& traj,
                                  const PhysicalParams& params) {
  const std::size_t n = track.size();
  if (n != traj.size() || n < 3) {
    throw DomainError("check_temperature_identity: tracks must align, n >= 3");
  }
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double temp = traj.samples[i].temp;
    worst = std::max(worst,
                     std::abs(track.samples[i].a_dot / params.k_b - temp) / temp);
  }
  return worst;
}

double check_canonical_area(const EvTrajectory& traj) {
  const auto& s = traj.samples;
  const std::size_t n = s.size();
  if (n < 3) {
    throw DomainError("check_canonical_area: need at least three samples");
  }
  // Scale for the noise floor: the largest phase-space product increment.
  double scale = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double dg = s[i + 1].g - s[i - 1].g;
    const double df = s[i + 1].f - s[i - 1].f;
    scale = std::max(scale, std::abs(dg * df));
  }
  const double floor = kAreaFloorFrac * scale + std::numeric_limits<double>::min();

  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double da = 0.5 * (s[i + 1].f + s[i].f) * (s[i + 1].g - s[i].g) +
                      0.5 * (s[i].f + s[i - 1].f) * (s[i].g - s[i - 1].g);
    const double ds = std::log(s[i + 1].f / s[i - 1].f);
    const double dg = s[i + 1].g - s[i - 1].g;
    const double df = s[i + 1].f - s[i - 1].f;
    const double denom = std::max(std::abs(dg * df), floor);
    worst = std::max(worst, std::abs(da * ds - dg * df) / denom);
  }
  return worst;
}

double check_entropy_force(const ActionEntropyTrack& track,
                           const EvTrajectory& traj, const Scenario& scenario) {
  const std::size_t n = track.size();
  if (n != traj.size() || n < 3) {
    throw DomainError("check_entropy_force: tracks must align, n >= 3");
  }
  const auto& s = traj.samples;
  const double k_b = scenario.params.k_b;

  double ref_scale = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    ref_scale = std::max(
        ref_scale, std::abs(entropy_rate(s[i].temp, scenario)) / k_b);
  }
  const double floor =
      kRateFloorFrac * ref_scale + std::numeric_limits<double>::min();

  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double dt = s[i + 1].t - s[i - 1].t;
    const double s_dot = (track.samples[i + 1].s - track.samples[i - 1].s) / dt;
    const double f_dot = (s[i + 1].f - s[i - 1].f) / dt;
    const double momentum_rate = f_dot / s[i].f;
    const double analytic = entropy_rate(s[i].temp, scenario) / k_b;
    const double denom = std::max(std::abs(analytic), floor);
    worst = std::max(worst, std::abs(s_dot - momentum_rate) / denom);
    worst = std::max(worst, std::abs(s_dot - analytic) / denom);
  }
  return worst;
}

double check_action_entropy_sum_rule(const ActionEntropyTrack& track) {
  const auto& s = track.samples;
  const std::size_t n = s.size();
  if (n < 4) {
    throw DomainError("check_action_entropy_sum_rule: need at least four samples");
  }
  // a_dot is centered only on the interior range [1, n-2].
  double acc = 0.0;
  for (std::size_t i = 1; i + 2 < n; ++i) {
    const double ds = s[i + 1].s - s[i].s;
    const double dad = s[i + 1].a_dot - s[i].a_dot;
    acc += 0.5 * (s[i].s + s[i + 1].s) * dad + 0.5 * (s[i].a_dot + s[i + 1].a_dot) * ds;
  }
  const double lhs = acc;
  const double rhs = s[n - 2].a_dot * s[n - 2].s - s[1].a_dot * s[1].s;
  const double scale =
      std::max(std::abs(rhs), std::numeric_limits<double>::min());
  return std::abs(lhs - rhs) / scale;
}

}  // namespace evodyn
