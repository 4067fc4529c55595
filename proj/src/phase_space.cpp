#include "catlab/phase_space.hpp"

#include <cmath>
#include <string>

namespace catlab {

ChannelCoefficients coefficients(const ThermalChannel& channel, double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw std::domain_error("coefficients: tau must be finite and >= 0");
  }
  ChannelCoefficients co;
  co.tau = tau;
  co.c = std::exp(-tau);
  co.d = channel.nbar * -std::expm1(-2.0 * tau);
  co.v = co.d / (co.c * co.c);
  co.s = 1.0 - 2.0 * co.v;
  return co;
}

double char_normal(const CatState& state, const ChannelCoefficients& coeffs,
                   PhasePoint xi) {
  const double damp = -coeffs.d * xi.abs2();
  const double ca = coeffs.c * state.alpha;
  const double a2 = 2.0 * state.alpha * state.alpha;
  const double x = std::abs(2.0 * ca * xi.u);
  // e^{-2a^2} cosh(x) split into two exponentials so the Gaussian damping
  // absorbs the growing branch before it can overflow.
  const double lobes = 0.5 * (std::exp(damp + x - a2) + std::exp(damp - x - a2));
  const double fringe = std::cos(2.0 * ca * xi.v) * std::exp(damp);
  return (2.0 / state.norm) * (fringe + lobes);
}

double char_s(const CatState& state, const ChannelCoefficients& coeffs,
              PhasePoint xi, OrderingParameter ordering) {
  if (!(ordering.s <= 1.0)) {
    throw std::domain_error("char_s: ordering parameter must be <= 1");
  }
  return char_normal(state, coeffs, xi) *
         std::exp(-0.5 * (1.0 - ordering.s) * xi.abs2());
}

double max_admissible_ordering(const ChannelCoefficients& coeffs) {
  return 1.0 + 2.0 * (coeffs.v - 1e-6);
}

double eval_quasiprob(const CatState& state, const ChannelCoefficients& coeffs,
                      PhasePoint beta, OrderingParameter ordering) {
  if (!(ordering.s < 1.0)) {
    throw std::domain_error(
        "eval_quasiprob: ordering must satisfy s < 1 strictly (the exact P "
        "function of a cat state is singular)");
  }
  if (0.5 * (1.0 - ordering.s) + coeffs.v < 1e-6) {
    throw std::domain_error(
        "eval_quasiprob: ordering too close to the singular P limit; "
        "largest admissible s here is " +
        std::to_string(max_admissible_ordering(coeffs)));
  }
  // Combined Gaussian width of char_s: channel broadening plus ordering.
  const double sigma = 0.5 * (1.0 - ordering.s) + coeffs.d;
  const double ca = coeffs.c * state.alpha;
  const double x = beta.u;
  const double y = beta.v;
  const double r2 = x * x + y * y;
  const double lobe_plus = std::exp(-((x - ca) * (x - ca) + y * y) / sigma);
  const double lobe_minus = std::exp(-((x + ca) * (x + ca) + y * y) / sigma);
  const double interference =
      std::exp(state.alpha * state.alpha * (coeffs.c * coeffs.c / sigma - 2.0) -
               r2 / sigma) *
      std::cos(2.0 * ca * y / sigma);
  return (2.0 / (state.norm * kPi * sigma)) *
         (0.5 * (lobe_plus + lobe_minus) + interference);
}

double gaussian_kernel(double kappa, PhasePoint alpha) {
  if (!(kappa > 0.0)) {
    throw std::domain_error("gaussian_kernel: kappa must be positive");
  }
  return 2.0 / (kPi * kappa) * std::exp(-2.0 * alpha.abs2() / kappa);
}

}  // namespace catlab
