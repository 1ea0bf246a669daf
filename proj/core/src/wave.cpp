#include "evodyn/wave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/numeric/odeint.hpp>

namespace evodyn {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr Cx kI{0.0, 1.0};

struct BaseEval {
  Cx value{};
  Cx d1{};
};

bool finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double a_param_of(const Scenario& sc) {
  return sc.params.k_b * (sc.te_temp - sc.t0_temp) / (2.0 * e00(sc.params));
}

double c_param_of(const Scenario& sc) {
  return sc.params.k_b * sc.te_temp / (2.0 * e00(sc.params));
}

BaseEval left_eval(const WaveCoefficients& co, const Scenario& sc, double g) {
  const double k0 = wavenumber(sc.t0_temp, sc.params);
  const Cx ep = std::exp(kI * (k0 * (g - sc.g0)));
  const Cx em = 1.0 / ep;
  BaseEval out;
  out.value = co.a_coef * ep + co.b_coef * em;
  out.d1 = kI * k0 * (co.a_coef * ep - co.b_coef * em);
  return out;
}

BaseEval right_eval(const WaveCoefficients& co, const Scenario& sc, double g,
                    const SeriesControls& controls) {
  BaseEval out;
  const double sqrt_c = std::sqrt(co.c_param);
  if (co.a_param == 0.0) {
    // Degenerate Te = T0 case: the potential step vanishes and the region is
    // spanned by plane waves directly.
    const Cx ep = std::exp(kI * (sqrt_c * (g - sc.g0)));
    const Cx em = 1.0 / ep;
    out.value = co.c_coef * ep + co.d_coef * em;
    out.d1 = kI * sqrt_c * (co.c_coef * ep - co.d_coef * em);
    return out;
  }
  const Cx x = 2.0 * std::sqrt(Cx(co.a_param) * std::exp(sc.g0 - g));
  const Cx dxdg = -0.5 * x;
  if (co.c_coef != 0.0) {
    const auto b = bessel_i_series(Cx(0.0, -2.0 * sqrt_c), x, controls);
    out.value += co.c_coef * b.value;
    out.d1 += co.c_coef * b.d1 * dxdg;
  }
  if (co.d_coef != 0.0) {
    const auto b = bessel_i_series(Cx(0.0, 2.0 * sqrt_c), x, controls);
    out.value += co.d_coef * b.value;
    out.d1 += co.d_coef * b.d1 * dxdg;
  }
  return out;
}

BaseEval base_eval(const WaveCoefficients& co, const Scenario& sc, double g,
                   const SeriesControls& controls) {
  return g < sc.g0 ? left_eval(co, sc, g) : right_eval(co, sc, g, controls);
}

Cx with_form(Cx v, WaveForm form) {
  return form == WaveForm::standing ? v + std::conj(v) : v;
}

double least_squares_slope(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 1e-12 * n)) {
    throw DomainError("least_squares_slope: degenerate abscissa range");
  }
  return sxy / sxx;
}

// Numerator (Re psi* psi'') and denominator (|psi|^2) integrals over a
// window, composite Simpson over the grid nodes inside it plus trapezoid
// end caps at the interpolated edges. Both integrals share nodes and
// weights, so pointwise-proportional integrands give exact ratios.
struct WindowIntegrals {
  double num = 0.0;
  double den = 0.0;
};

WindowIntegrals integrate_window(const WaveSolution& sol, double g_lo,
                                 double g_hi) {
  if (!(g_lo < g_hi)) {
    throw DomainError("integrate_window: empty window");
  }
  const auto& grid = sol.grid;
  const double h = grid[1] - grid[0];
  if (g_lo < grid.front() - 1e-9 * h || g_hi > grid.back() + 1e-9 * h) {
    throw DomainError("integrate_window: window outside the sampled grid");
  }
  g_lo = std::max(g_lo, grid.front());
  g_hi = std::min(g_hi, grid.back());

  const auto f_of = [&](std::size_t i) {
    return std::real(std::conj(sol.psi[i]) * sol.psi_dd[i]);
  };
  const auto w_of = [&](std::size_t i) { return std::norm(sol.psi[i]); };
  const auto analytic = [&](double g, double& f, double& w) {
    const Cx v = psi_at(sol, g);
    const Cx vdd = wave_potential(g, sol.scenario) * v;
    f = std::real(std::conj(v) * vdd);
    w = std::norm(v);
  };

  const auto lo_it = std::lower_bound(grid.begin(), grid.end(), g_lo);
  std::size_t i_lo = static_cast<std::size_t>(lo_it - grid.begin());
  const auto hi_it = std::upper_bound(grid.begin(), grid.end(), g_hi);
  std::size_t i_hi = static_cast<std::size_t>(hi_it - grid.begin());

  WindowIntegrals acc;
  const auto add_trap = [&](double ga, double fa, double wa, double gb,
                            double fb, double wb) {
    const double len = gb - ga;
    acc.num += 0.5 * len * (fa + fb);
    acc.den += 0.5 * len * (wa + wb);
  };

  if (i_hi == 0 || i_lo >= grid.size() || i_lo >= i_hi) {
    // Window lies within a single grid cell.
    double fa, wa, fb, wb;
    analytic(g_lo, fa, wa);
    analytic(g_hi, fb, wb);
    add_trap(g_lo, fa, wa, g_hi, fb, wb);
  } else {
    i_hi -= 1;  // last node <= g_hi
    // End caps.
    if (grid[i_lo] > g_lo) {
      double fa, wa;
      analytic(g_lo, fa, wa);
      add_trap(g_lo, fa, wa, grid[i_lo], f_of(i_lo), w_of(i_lo));
    }
    if (grid[i_hi] < g_hi) {
      double fb, wb;
      analytic(g_hi, fb, wb);
      add_trap(grid[i_hi], f_of(i_hi), w_of(i_hi), g_hi, fb, wb);
    }
    // Interior: Simpson over an even number of intervals, trapezoid tail.
    std::size_t m = i_hi - i_lo;
    std::size_t simpson_end = i_lo + (m - m % 2);
    for (std::size_t i = i_lo; i + 2 <= simpson_end; i += 2) {
      acc.num += h / 3.0 * (f_of(i) + 4.0 * f_of(i + 1) + f_of(i + 2));
      acc.den += h / 3.0 * (w_of(i) + 4.0 * w_of(i + 1) + w_of(i + 2));
    }
    if (m % 2 == 1) {
      add_trap(grid[i_hi - 1], f_of(i_hi - 1), w_of(i_hi - 1), grid[i_hi],
               f_of(i_hi), w_of(i_hi));
    }
  }
  return acc;
}

}  // namespace

void WaveGridSpec::validate() const {
  if (!(left_periods > 0.0) || !(right_extent > 0.0)) {
    throw DomainError("WaveGridSpec: extents must be > 0");
  }
  if (!(points_per_wavelength >= 8.0)) {
    throw DomainError("WaveGridSpec: need at least 8 points per wavelength");
  }
}

double wavenumber(double temp, const PhysicalParams& params) {
  if (!(temp > 0.0)) {
    throw DomainError("wavenumber: temp must be > 0");
  }
  return std::sqrt(params.k_b * temp / (2.0 * e00(params)));
}

double wave_potential(double g, const Scenario& sc) {
  const double a = a_param_of(sc);
  const double c = c_param_of(sc);
  return g >= sc.g0 ? a * std::exp(sc.g0 - g) - c : a - c;
}

Cx psi_left(double g, const WaveCoefficients& coeffs, const Scenario& scenario) {
  return left_eval(coeffs, scenario, g).value;
}

Cx psi_right(double g, const WaveCoefficients& coeffs, const Scenario& scenario,
             const SeriesControls& controls) {
  return right_eval(coeffs, scenario, g, controls).value;
}

WaveCoefficients match_coefficients(const Scenario& scenario, WaveForm form,
                                    const SeriesControls& controls) {
  scenario.validate();
  controls.validate();

  WaveCoefficients co;
  co.a_param = a_param_of(scenario);
  co.c_param = c_param_of(scenario);

  const bool outgoing_branch = (form != WaveForm::incoming);
  if (co.a_param == 0.0) {
    (outgoing_branch ? co.c_coef : co.d_coef) = 1.0;
  } else {
    // Normalize the selected branch so that psi -> e^{+-i sqrt(c) (g - g0)}
    // as g -> infinity: the leading series term is then exactly that wave.
    const double sqrt_c = std::sqrt(co.c_param);
    const Cx nu = outgoing_branch ? Cx(0.0, -2.0 * sqrt_c) : Cx(0.0, 2.0 * sqrt_c);
    const Cx sqrt_a = std::sqrt(Cx(co.a_param));
    const Cx norm = gamma_cx(1.0 + nu) * std::exp(-nu * std::log(sqrt_a));
    (outgoing_branch ? co.c_coef : co.d_coef) = norm;
  }

  const BaseEval r = right_eval(co, scenario, scenario.g0, controls);
  const double k0 = wavenumber(scenario.t0_temp, scenario.params);
  const Cx ik0 = kI * k0;
  co.a_coef = 0.5 * (r.value + r.d1 / ik0);
  co.b_coef = 0.5 * (r.value - r.d1 / ik0);
  if (!finite(co.a_coef) || !finite(co.b_coef)) {
    throw DomainError("match_coefficients: matching system produced non-finite coefficients");
  }
  return co;
}

WaveSolution solve_wave(const Scenario& scenario, WaveForm form,
                        const SeriesControls& series_controls,
                        const WaveGridSpec& grid_spec) {
  grid_spec.validate();

  WaveSolution sol;
  sol.scenario = scenario;
  sol.form = form;
  sol.series = series_controls;
  sol.coefficients = match_coefficients(scenario, form, series_controls);

  const double k_max = wavenumber(std::max(scenario.t0_temp, scenario.te_temp),
                                  scenario.params);
  const double k0 = wavenumber(scenario.t0_temp, scenario.params);
  const double two_pi = 2.0 * std::numbers::pi;
  const double h = (two_pi / k_max) / grid_spec.points_per_wavelength;
  const auto n_left = static_cast<std::size_t>(
      std::ceil(grid_spec.left_periods * (two_pi / k0) / h - 1e-9));
  const auto n_right =
      static_cast<std::size_t>(std::ceil(grid_spec.right_extent / h - 1e-9));

  const std::size_t n = n_left + n_right + 1;
  sol.grid.resize(n);
  sol.psi.resize(n);
  sol.psi_dd.resize(n);
  sol.g0_index = n_left;
  for (std::size_t i = 0; i < n; ++i) {
    const double g =
        scenario.g0 + (static_cast<double>(i) - static_cast<double>(n_left)) * h;
    sol.grid[i] = g;
    const Cx v = with_form(
        base_eval(sol.coefficients, scenario, g, series_controls).value, form);
    sol.psi[i] = v;
    sol.psi_dd[i] = wave_potential(g, scenario) * v;
  }

  sol.windows = half_period_windows(sol);
  for (auto& w : sol.windows) {
    w.mean_temp = mean_temperature(sol, w.g_lo, w.g_hi, scenario.params);
  }
  return sol;
}

Cx psi_at(const WaveSolution& sol, double g) {
  return with_form(base_eval(sol.coefficients, sol.scenario, g, sol.series).value,
                   sol.form);
}

Cx dpsi_at(const WaveSolution& sol, double g) {
  return with_form(base_eval(sol.coefficients, sol.scenario, g, sol.series).d1,
                   sol.form);
}

MatchingResiduals matching_residuals(const WaveSolution& sol) {
  const BaseEval l = left_eval(sol.coefficients, sol.scenario, sol.scenario.g0);
  const BaseEval r =
      right_eval(sol.coefficients, sol.scenario, sol.scenario.g0, sol.series);
  MatchingResiduals out;
  out.value_gap = std::abs(with_form(l.value, sol.form) - with_form(r.value, sol.form));
  out.slope_gap = std::abs(with_form(l.d1, sol.form) - with_form(r.d1, sol.form));
  return out;
}

std::vector<std::array<Cx, 2>> propagate_wave(const Scenario& scenario,
                                              std::span<const double> grid,
                                              Cx psi_end, Cx dpsi_end,
                                              double rel_tol, double abs_tol) {
  if (grid.size() < 2 || !std::is_sorted(grid.begin(), grid.end())) {
    throw DomainError("propagate_wave: grid must be increasing with >= 2 nodes");
  }
  using State = std::vector<Cx>;
  const auto rhs = [&scenario](const State& y, State& dydg, double g) {
    dydg[0] = y[1];
    dydg[1] = wave_potential(g, scenario) * y[0];
  };
  auto stepper = odeint::make_controlled(abs_tol, rel_tol,
                                         odeint::runge_kutta_dopri5<State>());

  std::vector<std::array<Cx, 2>> out(grid.size());
  State y{psi_end, dpsi_end};
  out.back() = {y[0], y[1]};
  for (std::size_t i = grid.size() - 1; i > 0; --i) {
    const double g_from = grid[i];
    const double g_to = grid[i - 1];
    try {
      odeint::integrate_adaptive(stepper, rhs, y, g_from, g_to,
                                 0.25 * (g_to - g_from));
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "propagate_wave: step-size control failed near g = " << g_from
          << " (" << e.what() << ")";
      throw IntegrationError(msg.str(), g_from, std::abs(y[0]), std::abs(y[1]));
    }
    out[i - 1] = {y[0], y[1]};
  }
  return out;
}

std::vector<Cx> integrate_wave_ode(const WaveSolution& sol,
                                   std::span<const double> grid,
                                   double rel_tol, double abs_tol) {
  const double g_end = grid.back();
  const auto states = propagate_wave(sol.scenario, grid, psi_at(sol, g_end),
                                     dpsi_at(sol, g_end), rel_tol, abs_tol);
  std::vector<Cx> psi(states.size());
  std::transform(states.begin(), states.end(), psi.begin(),
                 [](const auto& s) { return s[0]; });
  return psi;
}

double mean_temperature(const WaveSolution& sol, double g_lo, double g_hi,
                        const PhysicalParams& params) {
  const WindowIntegrals w = integrate_window(sol, g_lo, g_hi);
  if (!(w.den > 0.0)) {
    throw DomainError("mean_temperature: zero-norm window");
  }
  return -(2.0 * e00(params) / params.k_b) * w.num / w.den;
}

std::vector<HalfPeriodWindow> half_period_windows(const WaveSolution& sol) {
  const auto& grid = sol.grid;
  const double h = grid.size() > 1 ? grid[1] - grid[0] : 0.0;
  std::vector<double> zeros;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double r0 = sol.psi[i].real();
    const double r1 = sol.psi[i + 1].real();
    double z;
    if (r0 == 0.0) {
      z = grid[i];
    } else if ((r0 < 0.0) != (r1 < 0.0) && r1 != 0.0) {
      z = grid[i] + h * r0 / (r0 - r1);
    } else {
      continue;
    }
    if (zeros.empty() || z - zeros.back() > 1e-9 * h) {
      zeros.push_back(z);
    }
  }
  std::vector<HalfPeriodWindow> windows;
  if (zeros.size() < 2) return windows;
  windows.reserve(zeros.size() - 1);
  for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
    HalfPeriodWindow w;
    w.g_lo = zeros[i];
    w.g_hi = zeros[i + 1];
    w.g_mid = 0.5 * (zeros[i] + zeros[i + 1]);
    windows.push_back(w);
  }
  return windows;
}

double envelope_exponent(const WaveSolution& sol, const Scenario& scenario) {
  std::vector<double> xs, ys;
  for (std::size_t i = 1; i + 1 < sol.grid.size(); ++i) {
    if (sol.grid[i] <= scenario.g0) continue;
    const double a0 = std::abs(sol.psi[i - 1]);
    const double a1 = std::abs(sol.psi[i]);
    const double a2 = std::abs(sol.psi[i + 1]);
    if (a1 > a0 && a1 > a2 && a1 > 0.0) {
      xs.push_back(std::log(temperature_of_g(sol.grid[i], scenario)));
      ys.push_back(std::log(a1));
    }
  }
  if (xs.size() < 3) {
    throw DomainError("envelope_exponent: fewer than three |psi| maxima");
  }
  return least_squares_slope(xs, ys);
}

double abs2_window_exponent(const WaveSolution& sol, const Scenario& scenario) {
  std::vector<double> xs, ys;
  bool first_skipped = false;
  for (const auto& w : sol.windows) {
    if (w.g_lo < scenario.g0) continue;
    if (!first_skipped) {
      first_skipped = true;  // first window after contact, per construction
      continue;
    }
    const WindowIntegrals wi = integrate_window(sol, w.g_lo, w.g_hi);
    if (!(wi.den > 0.0)) continue;
    xs.push_back(std::log(temperature_of_g(w.g_mid, scenario)));
    ys.push_back(std::log(wi.den / (w.g_hi - w.g_lo)));
  }
  if (xs.size() < 3) {
    throw DomainError("abs2_window_exponent: fewer than three usable windows");
  }
  return least_squares_slope(xs, ys);
}

}  // namespace evodyn
