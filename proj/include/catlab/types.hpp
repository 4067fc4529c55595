// types.hpp — value types shared across the library: cat state, thermal
// channel, time-dependent channel coefficients, phase-space points and
// quasiprobability ordering parameters.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace catlab {

inline constexpr double kPi = 3.14159265358979323846;

/// Marker for criteria that never fire (zero-temperature channel, fringe
/// visibility): thresholds are reported as +infinity.
inline constexpr double kTauInfinity = std::numeric_limits<double>::infinity();

/// Even superposition of two opposite-phase coherent states with real
/// nonnegative amplitude. norm caches 2(1 + exp(-2 alpha^2)).
struct CatState {
  double alpha;
  double norm;

  explicit CatState(double amplitude) : alpha(amplitude) {
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
      throw std::invalid_argument(
          "CatState: amplitude must be real, finite and nonnegative");
    }
    norm = 2.0 * (1.0 + std::exp(-2.0 * amplitude * amplitude));
  }
};

/// Markovian damping channel: damping rate gamma, mean thermal occupation
/// nbar of the bath. All library time arguments are the rescaled tau =
/// gamma*t; gamma is kept only to convert user-supplied physical times.
struct ThermalChannel {
  double gamma;
  double nbar;

  ThermalChannel(double gamma_, double nbar_) : gamma(gamma_), nbar(nbar_) {
    if (!(gamma_ > 0.0) || !std::isfinite(gamma_)) {
      throw std::invalid_argument("ThermalChannel: gamma must be positive");
    }
    if (!(nbar_ >= 0.0) || !std::isfinite(nbar_)) {
      throw std::invalid_argument("ThermalChannel: nbar must be nonnegative");
    }
  }

  /// Rescaled time for a physical time t.
  double rescale(double t) const { return gamma * t; }
};

/// Channel coefficients at rescaled time tau:
///   c = exp(-tau), d = nbar (1 - exp(-2 tau)), v = d / c^2, s = 1 - 2 v.
struct ChannelCoefficients {
  double tau;
  double c;
  double d;
  double v;
  double s;
};

/// Complex phase-space coordinate xi = u + i v (also used for beta).
struct PhasePoint {
  double u{0.0};
  double v{0.0};

  double abs2() const { return u * u + v * v; }
};

/// Quasiprobability ordering parameter: s = 1 (P), 0 (Wigner), -1 (Q).
/// Public evaluation entry points accept s in [-1, 1]; internal searches may
/// go below -1 (convolution with a wider Gaussian).
struct OrderingParameter {
  double s{0.0};

  static OrderingParameter p_function() { return {1.0}; }
  static OrderingParameter wigner() { return {0.0}; }
  static OrderingParameter q_function() { return {-1.0}; }
};

}  // namespace catlab
