#pragma once

#include <span>
#include <vector>

#include "evodyn/classical.hpp"
#include "evodyn/specfun.hpp"

namespace evodyn {

/// Boundary condition selecting the far-side harmonic content of the wave:
/// a single outgoing branch e^{+i sqrt(c) g}, a single incoming branch, or
/// the real standing combination psi + conj(psi) built on the outgoing one.
enum class WaveForm { outgoing, incoming, standing };

/// Matched coefficients of the piecewise solution. Region g < g0 is harmonic
/// with wavenumber k0; region g >= g0 is spanned by modified Bessel functions
/// of order -2i sqrt(c) (c_coef) and +2i sqrt(c) (d_coef) in the argument
/// x(g) = 2 sqrt(a e^{g0 - g}).
struct WaveCoefficients {
  Cx a_coef{};  ///< left region, e^{+i k0 (g - g0)}
  Cx b_coef{};  ///< left region, e^{-i k0 (g - g0)}
  Cx c_coef{};  ///< right region, order -2i sqrt(c)
  Cx d_coef{};  ///< right region, order +2i sqrt(c)
  double a_param = 0.0;  ///< k_b (Te - T0) / (2 E00)
  double c_param = 0.0;  ///< k_b Te / (2 E00)
};

/// Interval between consecutive zeros of Re(psi) with the temperature
/// expectation value assigned to its midpoint.
struct HalfPeriodWindow {
  double g_lo = 0.0;
  double g_hi = 0.0;
  double g_mid = 0.0;
  double mean_temp = 0.0;
};

/// Grid extent and density for sampling the wave solution.
struct WaveGridSpec {
  double left_periods = 6.0;           ///< periods of the T0 wave left of g0
  double right_extent = 12.0;          ///< advance range right of g0
  double points_per_wavelength = 40.0; ///< density w.r.t. the shortest wave

  void validate() const;
};

/// Piecewise wave solution sampled on a uniform grid with g0 as a node.
struct WaveSolution {
  Scenario scenario;
  WaveForm form = WaveForm::outgoing;
  WaveCoefficients coefficients;
  SeriesControls series;
  std::vector<double> grid;
  std::vector<Cx> psi;
  std::vector<Cx> psi_dd;  ///< second derivative from the governing equation
  std::vector<HalfPeriodWindow> windows;
  std::size_t g0_index = 0;
};

/// Harmonic wavenumber at a temperature, k_ev = sqrt(k_b T / (2 E00)).
double wavenumber(double temp, const PhysicalParams& params);

/// Potential coefficient of the wave equation, psi'' = Q(g) psi:
/// Q = a e^{g0 - g} - c for g >= g0 and a - c (== -k0^2) for g < g0.
double wave_potential(double g, const Scenario& scenario);

/// Left-region evaluation a_coef e^{+i k0 (g-g0)} + b_coef e^{-i k0 (g-g0)}.
Cx psi_left(double g, const WaveCoefficients& coeffs, const Scenario& scenario);

/// Right-region evaluation c_coef I_{-2i sqrt(c)}(x) + d_coef I_{+2i sqrt(c)}(x);
/// reduces to plane waves when a_param vanishes (Te = T0).
Cx psi_right(double g, const WaveCoefficients& coeffs, const Scenario& scenario,
             const SeriesControls& controls);

/// Fixes the selected far-side branch (unit far-side amplitude, zero phase
/// offset at g0) and solves the 2x2 continuity system at g0 for the left
/// coefficients. WaveForm::standing matches the outgoing branch; the real
/// combination is applied at evaluation time.
WaveCoefficients match_coefficients(const Scenario& scenario, WaveForm form,
                                    const SeriesControls& controls);

/// Builds the full sampled solution: matched coefficients, uniform grid with
/// g0 interior, psi and psi'' samples, and half-period windows with their
/// temperature means.
WaveSolution solve_wave(const Scenario& scenario, WaveForm form,
                        const SeriesControls& series_controls = {},
                        const WaveGridSpec& grid_spec = {});

/// Analytic re-evaluation of the solution (piecewise form plus the standing
/// combination when applicable) at an arbitrary point.
Cx psi_at(const WaveSolution& solution, double g);

/// First derivative of the solution at an arbitrary point.
Cx dpsi_at(const WaveSolution& solution, double g);

/// Residuals of the continuity conditions at g0: |psi_L - psi_R| and
/// |psi'_L - psi'_R| evaluated from the matched coefficients.
struct MatchingResiduals {
  double value_gap = 0.0;
  double slope_gap = 0.0;
};
MatchingResiduals matching_residuals(const WaveSolution& solution);

/// Direct numeric integration of psi'' = Q(g) psi backward from the last
/// grid node, with initial data (psi_end, dpsi_end). Returns (psi, psi')
/// at every grid node. Independent of the series evaluation path.
std::vector<std::array<Cx, 2>> propagate_wave(const Scenario& scenario,
                                              std::span<const double> grid,
                                              Cx psi_end, Cx dpsi_end,
                                              double rel_tol = 1e-10,
                                              double abs_tol = 1e-12);

/// Numeric oracle for the analytic solution: boundary data taken from the
/// analytic psi, psi' at the last grid node, then integrated backward.
std::vector<Cx> integrate_wave_ode(const WaveSolution& solution,
                                   std::span<const double> grid,
                                   double rel_tol = 1e-10,
                                   double abs_tol = 1e-12);

/// Temperature expectation value over a window,
/// <T> = -(2 E00 / k_b) Re(int psi* psi'' dg) / int |psi|^2 dg,
/// by composite Simpson over the grid nodes inside the window with
/// trapezoid end caps at the interpolated window edges.
double mean_temperature(const WaveSolution& solution, double g_lo, double g_hi,
                        const PhysicalParams& params);

/// Windows delimited by consecutive linear-interpolated zeros of Re(psi).
/// Returns an empty list when fewer than two crossings exist. mean_temp is
/// left at zero; solve_wave fills it.
std::vector<HalfPeriodWindow> half_period_windows(const WaveSolution& solution);

/// Least-squares slope of ln|psi| at its local maxima against ln T(g) over
/// the right region; -1/4 for a WKB-scaled envelope. Requires at least three
/// maxima and a non-degenerate temperature range (DomainError otherwise).
double envelope_exponent(const WaveSolution& solution, const Scenario& scenario);

/// Least-squares slope of ln(per-window average of |psi|^2) against
/// ln T(g_mid) over full windows right of g0, skipping the first window
/// after contact; -1/2 for a WKB-scaled density.
double abs2_window_exponent(const WaveSolution& solution,
                            const Scenario& scenario);

}  // namespace evodyn
