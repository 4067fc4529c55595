// criteria.hpp — the five nonclassicality indicators for the damped cat
// state and their quantum-to-classical threshold times.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catlab/types.hpp"

namespace catlab::criteria {

enum class CriterionId { fringe, depth, wigner_neg, vogel1, vogel2, klyshko };

std::string to_string(CriterionId id);

/// Strict-inequality tolerance for boundary verdicts ("sup > 1", "B < 0").
inline constexpr double kStrictTol = 1e-10;

struct CriterionVerdict {
  double value;
  bool nonclassical;
  CriterionId criterion_id;
};

/// Apply a criterion's documented threshold rule to an indicator value
/// (vogel1/vogel2: value > 1; klyshko: value < 0; wigner_neg/depth: minimum
/// value < 0; fringe carries no finite threshold and is never flagged).
CriterionVerdict classify(CriterionId id, double value);

struct ThresholdResult {
  double tau_star;
  double bracket_lo;
  double bracket_hi;
  int iterations;
  CriterionId criterion_id;
  bool never_nonclassical{false};
  bool infinite{false};
  std::vector<double> sign_changes;  // all detected crossings (Klyshko)
};

struct Extremum {
  double value;
  PhasePoint where;
};

struct Supremum {
  double value;
  double arg_u;
};

/// Wigner interference-fringe visibility F = exp[-2 a^2 (1 - c^2/(1+2d))].
/// Decays asymptotically to exp(-2 a^2); never reaches a finite threshold.
double fringe_visibility(const CatState& state,
                         const ChannelCoefficients& coeffs);

/// Closed-form bound tau_P = 1/2 ln(1/nbar + 1): time at which the channel
/// has turned any initial P function into the (positive) Q function.
/// Infinite for nbar = 0.
double tau_nonclassical_depth(const ThermalChannel& channel);

/// Closed-form bound tau_W = 1/2 ln(1/(2 nbar) + 1): time at which s_t = 0.
/// Infinite for nbar = 0.
double tau_wigner_negativity(const ThermalChannel& channel);

/// Global minimum of the evolved Wigner function. The minimum sits on the
/// u = 0 line through the interference fringes; a 1D scan there is followed
/// by a local 2D refinement. grid_density scales the scan resolution.
Extremum wigner_minimum(const CatState& state,
                        const ChannelCoefficients& coeffs,
                        int grid_density = 1);

/// Numerically exact time at which the Wigner negativity vanishes, by
/// bisection on the sign of wigner_minimum. Always <= tau_wigner_negativity.
ThresholdResult tau_wigner_numeric(const CatState& state,
                                   const ThermalChannel& channel, double tol);

/// Smallest tau at which the initial state's quasiprobability at ordering
/// s_tau is nonnegative everywhere (the evolved P function equals the
/// initial W(., s_tau) up to scaling). Always <= tau_nonclassical_depth.
ThresholdResult exact_depth_threshold(const CatState& state,
                                      const ThermalChannel& channel,
                                      double tol, int grid_density = 1);

/// Supremum over u of Phi_t(u, 0) (v = 0 suffices: Phi_t(u,v) <= Phi_t(u,0))
/// and its maximizer. Always >= 1 (value 1 at u = 0); the state is
/// first-order Vogel nonclassical iff the supremum exceeds 1 strictly.
/// At d = 0 the supremum is unbounded for alpha > 0; a finite witness from
/// the scan window is returned.
Supremum vogel_supremum(const CatState& state,
                        const ChannelCoefficients& coeffs);

/// Threshold time of the first-order Vogel criterion (sup > 1 + tol rule).
ThresholdResult tau_vogel(const CatState& state, const ThermalChannel& channel,
                          double tol);

/// Second-order combination |P1|^2 + |P2|^2 + |P12|^2 - 2 Re(P1 P2 P12*)
/// with P12 evaluated at xi1 + xi2; nonclassical when > 1. Phi is real here,
/// so the paper's absolute-value variant coincides with this form.
double vogel_second_order(const CatState& state,
                          const ChannelCoefficients& coeffs, PhasePoint xi1,
                          PhasePoint xi2);

/// Supremum of the second-order combination over (u1, u2) on the u-axis.
Supremum vogel2_supremum(const CatState& state,
                         const ChannelCoefficients& coeffs);

/// Threshold time of the second-order Vogel criterion.
ThresholdResult tau_vogel2(const CatState& state, const ThermalChannel& channel,
                           double tol);

/// Photon number probability p(n, t) by polar Gaussian quadrature of
/// Phi_t times the Fock-state antinormal characteristic function
/// e^{-(u^2+v^2)} L_n(u^2+v^2), divided by pi.
double photon_prob(const CatState& state, const ChannelCoefficients& coeffs,
                   int n);

/// Klyshko combination B(n) = (n+2) p(n) p(n+2) - (n+1) p(n+1)^2 from an
/// arbitrary probability sequence (p[0] = p(n), p[1] = p(n+1), ...).
double klyshko_B_from_probs(double pn, double pn1, double pn2, int n);

/// B(n) for the evolved cat state; nonclassical when negative.
double klyshko_B(const CatState& state, const ChannelCoefficients& coeffs,
                 int n);

/// Supremum of the set {tau : B(n)(tau) < 0}: coarse scan plus bisection on
/// the final sign change; every detected crossing is recorded.
ThresholdResult tau_klyshko(const CatState& state,
                            const ThermalChannel& channel, double tol,
                            int n = 1);

struct SubsumptionReport {
  std::vector<std::pair<int, double>> thresholds;  // (n, tau_K for B(n))
  bool subsumed;  // tau_K(B(n)) <= tau_K(B(1)) for all 2 <= n <= n_max
};

/// Check that higher-order Klyshko thresholds are subsumed by B(1).
SubsumptionReport klyshko_subsumption_check(const CatState& state,
                                            const ThermalChannel& channel,
                                            int n_max, double tol = 1e-7);

}  // namespace catlab::criteria
