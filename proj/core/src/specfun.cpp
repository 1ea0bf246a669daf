#include "evodyn/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

namespace evodyn {

namespace {

constexpr double kPi = std::numbers::pi;

bool finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool is_nonpositive_integer(Cx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Lanczos coefficients for g = 607/128, n = 15 (Godfrey's set). Relative
// accuracy ~1e-15 across the half plane Re z >= 1/2.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Gamma on Re z >= 1/2. Overflow saturates to infinity, which callers treat
// as a vanishing reciprocal term.
Cx gamma_right_half(Cx z) {
  Cx acc = kLanczos[0];
  for (int k = 1; k < 15; ++k) {
    acc += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
  }
  const Cx t = z + (kLanczosG - 0.5);
  return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * acc;
}

// nullopt at a pole; otherwise the gamma value (possibly infinite).
std::optional<Cx> gamma_impl(Cx z) {
  if (is_nonpositive_integer(z)) return std::nullopt;
  if (z.real() >= 0.5) return gamma_right_half(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  const Cx s = std::sin(kPi * z);
  return kPi / (s * gamma_right_half(1.0 - z));
}

}  // namespace

void SeriesControls::validate() const {
  if (!(term_tol > 0.0 && term_tol <= 1e-6)) {
    throw DomainError("SeriesControls: term_tol must lie in (0, 1e-6]");
  }
  if (max_terms < 50) {
    throw DomainError("SeriesControls: max_terms must be >= 50");
  }
}

Cx gamma_cx(Cx z) {
  if (!finite(z)) throw DomainError("gamma_cx: argument must be finite");
  auto g = gamma_impl(z);
  if (!g) throw DomainError("gamma_cx: pole at a non-positive integer");
  return *g;
}

BesselSeries bessel_i_series(Cx nu, Cx z, const SeriesControls& controls) {
  controls.validate();
  if (!finite(nu) || !finite(z)) {
    throw DomainError("bessel_i_series: arguments must be finite");
  }

  BesselSeries out;
  if (z == 0.0) {
    // Leading term only: (z/2)^nu / Gamma(nu+1).
    if (nu == 0.0) {
      out.value = 1.0;
      out.d2 = 0.5;  // I_0''(0) = 1/2 from the k=1 term
      return out;
    }
    if (nu.real() > 0.0) {
      out.value = 0.0;
      if (nu == 1.0) out.d1 = 0.5;
      if (nu == 2.0) out.d2 = 0.25;
      return out;
    }
    throw DomainError("bessel_i_series: z = 0 requires Re(nu) >= 0");
  }

  const Cx half_z = 0.5 * z;
  const Cx zsq4 = half_z * half_z;  // (z/2)^2
  const Cx prefactor = std::exp(nu * std::log(half_z));  // principal branch

  // Sums for the value and, scaled by 1/z and 1/z^2 at the end, its first
  // two derivatives: d/dz adds a factor (nu+2k)/z per term, d2/dz2 a factor
  // (nu+2k)(nu+2k-1)/z^2.
  Cx s0 = 0.0, s1 = 0.0, s2 = 0.0;
  Cx power = 1.0;  // (z/2)^{2k} / k!
  int consecutive_small = 0;
  const double tiny = std::numeric_limits<double>::min();

  for (int k = 0; k < controls.max_terms; ++k) {
    const Cx order_arg = nu + static_cast<double>(k) + 1.0;
    Cx term = 0.0;
    if (auto g = gamma_impl(order_arg); g && finite(*g)) {
      term = prefactor * power / *g;
    }
    // else: gamma pole or overflow, the term vanishes

    const Cx m1 = nu + 2.0 * static_cast<double>(k);
    const Cx m2 = m1 * (m1 - 1.0);
    s0 += term;
    s1 += m1 * term;
    s2 += m2 * term;
    out.terms_used = k + 1;

    // Dual truncation criterion: the current term must be small relative to
    // all three partial sums (value scale as a floor for the derivative
    // sums) on two consecutive iterations.
    const double ref0 = std::abs(s0) + tiny;
    const double ref1 = std::max(std::abs(s1), std::abs(s0)) + tiny;
    const double ref2 = std::max(std::abs(s2), std::abs(s0)) + tiny;
    const bool small = std::abs(term) < controls.term_tol * ref0 &&
                       std::abs(m1 * term) < controls.term_tol * ref1 &&
                       std::abs(m2 * term) < controls.term_tol * ref2;
    consecutive_small = small ? consecutive_small + 1 : 0;
    if (consecutive_small >= 2 && k >= 4) {
      out.value = s0;
      out.d1 = s1 / z;
      out.d2 = s2 / (z * z);
      return out;
    }

    power *= zsq4 / static_cast<double>(k + 1);
  }

  std::ostringstream msg;
  msg << "bessel_i_series: no convergence after " << controls.max_terms
      << " terms at nu = (" << nu.real() << ", " << nu.imag() << "), z = ("
      << z.real() << ", " << z.imag() << ")";
  throw ConvergenceError(msg.str(), nu, z, controls.max_terms);
}

Cx bessel_i_cx(Cx nu, Cx z, const SeriesControls& controls) {
  return bessel_i_series(nu, z, controls).value;
}

}  // namespace evodyn
