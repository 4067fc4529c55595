// phase_space.hpp — exact time evolution of the normally ordered
// characteristic function of a damped cat state, s-ordered characteristic
// functions, and the closed-form s-parametrized quasiprobabilities.

#pragma once

#include "catlab/types.hpp"

namespace catlab {

/// Channel coefficients at rescaled time tau >= 0.
ChannelCoefficients coefficients(const ThermalChannel& channel, double tau);

/// Normally ordered characteristic function of the evolved cat state,
///   Phi_t(u, v) = (2/N) e^{-d (u^2+v^2)}
///                 [cos(2 c alpha v) + e^{-2 alpha^2} cosh(2 c alpha u)].
/// Real-valued for real alpha; the cosh term is evaluated in exponent
/// arithmetic so that the Gaussian damping is applied before recombination.
double char_normal(const CatState& state, const ChannelCoefficients& coeffs,
                   PhasePoint xi);

/// s-ordered characteristic function:
/// char_normal * exp(-(1-s)/2 |xi|^2). Requires ordering.s <= 1.
double char_s(const CatState& state, const ChannelCoefficients& coeffs,
              PhasePoint xi, OrderingParameter ordering);

/// Largest ordering parameter admissible for eval_quasiprob at these
/// coefficients: (1 - s)/2 + v must stay >= 1e-6.
double max_admissible_ordering(const ChannelCoefficients& coeffs);

/// s-parametrized quasiprobability of the evolved cat state, normalized so
/// that its integral over the plane is 1. Closed Gaussian form (two coherent
/// lobes plus an oscillatory interference Gaussian); the corresponding
/// Fourier integral of char_s is kept as a test-only quadrature oracle.
/// Requires ordering.s < 1 strictly and the combined Gaussian width to stay
/// clear of the singular P limit (see max_admissible_ordering).
double eval_quasiprob(const CatState& state, const ChannelCoefficients& coeffs,
                      PhasePoint beta, OrderingParameter ordering);

/// Normalized Gaussian convolution kernel G(kappa, alpha) =
/// 2/(pi kappa) exp(-2 |alpha|^2 / kappa) linking quasiprobabilities at
/// different orderings. kappa must be positive.
double gaussian_kernel(double kappa, PhasePoint alpha);

}  // namespace catlab
