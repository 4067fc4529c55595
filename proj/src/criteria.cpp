#include "catlab/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "catlab/numerics.hpp"
#include "catlab/phase_space.hpp"

namespace catlab::criteria {

namespace {

/// Bisection on a boolean "still nonclassical at tau" predicate. The caller
/// guarantees pred(0) is true; hi is grown geometrically until the predicate
/// fails there.
ThresholdResult threshold_bisection(const std::function<bool(double)>& pred,
                                    double hi_init, double tol,
                                    CriterionId id) {
  ThresholdResult res{};
  res.criterion_id = id;
  double lo = 0.0;
  double hi = hi_init;
  int evals = 0;
  while (pred(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++evals > 40) {
      res.tau_star = kTauInfinity;
      res.infinite = true;
      res.bracket_lo = lo;
      res.bracket_hi = hi;
      res.iterations = evals;
      return res;
    }
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++evals;
    if (evals > 400) break;
  }
  res.tau_star = 0.5 * (lo + hi);
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  res.iterations = evals;
  return res;
}

ThresholdResult degenerate_result(CriterionId id) {
  ThresholdResult res{};
  res.criterion_id = id;
  res.tau_star = 0.0;
  res.bracket_lo = 0.0;
  res.bracket_hi = 0.0;
  res.iterations = 0;
  res.never_nonclassical = true;
  return res;
}

/// Minimum of the evolved quasiprobability at a fixed ordering. The fringes
/// lie on the u = 0 line for real alpha: 1D scan there, golden refinement,
/// then a local 2D pattern search.
Extremum quasiprob_min(const CatState& state, const ChannelCoefficients& co,
                       OrderingParameter ordering, int grid_density) {
  const double sigma = 0.5 * (1.0 - ordering.s) + co.d;
  const double ca = co.c * state.alpha;
  const double w = std::sqrt(sigma);
  const double ymax = 6.0 * w;
  const double period = (ca > 1e-12) ? kPi * sigma / ca : ymax;
  const double step =
      std::min(w / (20.0 * grid_density), period / (10.0 * grid_density));

  const auto eval = [&](double x, double y) {
    return eval_quasiprob(state, co, PhasePoint{x, y}, ordering);
  };

  double best_y = 0.0;
  double best = eval(0.0, 0.0);
  for (double y = step; y <= ymax; y += step) {
    const double val = eval(0.0, y);
    if (val < best) {
      best = val;
      best_y = y;
    }
  }
  const auto [ry, rv] = num::golden_section_max(
      [&](double y) { return -eval(0.0, y); }, std::max(0.0, best_y - step),
      std::min(ymax, best_y + step), 1e-10 * w);
  if (-rv < best) {
    best = -rv;
    best_y = ry;
  }

  // Local 2D refinement; by symmetry the axis is already stationary in x.
  double x = 0.0, y = best_y;
  for (double h = step; h > 1e-9 * w; h *= 0.5) {
    bool moved = true;
    while (moved) {
      moved = false;
      const double cand[4][2] = {{x + h, y}, {x - h, y}, {x, y + h}, {x, y - h}};
      for (const auto& c : cand) {
        const double val = eval(c[0], c[1]);
        if (val < best) {
          best = val;
          x = c[0];
          y = c[1];
          moved = true;
        }
      }
    }
  }
  return Extremum{best, PhasePoint{x, y}};
}

}  // namespace

std::string to_string(CriterionId id) {
  switch (id) {
    case CriterionId::fringe: return "fringe";
    case CriterionId::depth: return "depth";
    case CriterionId::wigner_neg: return "wigner_neg";
    case CriterionId::vogel1: return "vogel1";
    case CriterionId::vogel2: return "vogel2";
    case CriterionId::klyshko: return "klyshko";
  }
  return "unknown";
}

CriterionVerdict classify(CriterionId id, double value) {
  bool nonclassical = false;
  switch (id) {
    case CriterionId::vogel1:
    case CriterionId::vogel2:
      nonclassical = value > 1.0 + kStrictTol;
      break;
    case CriterionId::klyshko:
    case CriterionId::wigner_neg:
    case CriterionId::depth:
      nonclassical = value < -kStrictTol;
      break;
    case CriterionId::fringe:
      nonclassical = false;  // no finite threshold
      break;
  }
  return CriterionVerdict{value, nonclassical, id};
}

double fringe_visibility(const CatState& state,
                         const ChannelCoefficients& co) {
  const double a2 = state.alpha * state.alpha;
  return std::exp(-2.0 * a2 * (1.0 - co.c * co.c / (1.0 + 2.0 * co.d)));
}

double tau_nonclassical_depth(const ThermalChannel& channel) {
  if (channel.nbar == 0.0) return kTauInfinity;
  return 0.5 * std::log1p(1.0 / channel.nbar);
}

double tau_wigner_negativity(const ThermalChannel& channel) {
  if (channel.nbar == 0.0) return kTauInfinity;
  return 0.5 * std::log1p(1.0 / (2.0 * channel.nbar));
}

Extremum wigner_minimum(const CatState& state, const ChannelCoefficients& co,
                        int grid_density) {
  return quasiprob_min(state, co, OrderingParameter::wigner(), grid_density);
}

ThresholdResult tau_wigner_numeric(const CatState& state,
                                   const ThermalChannel& channel, double tol) {
  if (!(channel.nbar > 0.0)) {
    ThresholdResult res{};
    res.criterion_id = CriterionId::wigner_neg;
    res.tau_star = kTauInfinity;
    res.infinite = true;
    return res;
  }
  const auto pred = [&](double tau) {
    return wigner_minimum(state, coefficients(channel, tau)).value < -kStrictTol;
  };
  if (!pred(0.0)) return degenerate_result(CriterionId::wigner_neg);
  const double hi = tau_wigner_negativity(channel) * (1.0 + 1e-3) + tol;
  return threshold_bisection(pred, hi, tol, CriterionId::wigner_neg);
}

ThresholdResult exact_depth_threshold(const CatState& state,
                                      const ThermalChannel& channel,
                                      double tol, int grid_density) {
  if (!(channel.nbar > 0.0)) {
    ThresholdResult res{};
    res.criterion_id = CriterionId::depth;
    res.tau_star = kTauInfinity;
    res.infinite = true;
    return res;
  }
  if (state.alpha == 0.0) return degenerate_result(CriterionId::depth);
  const ChannelCoefficients initial = coefficients(channel, 0.0);
  const auto pred = [&](double tau) {
    const ChannelCoefficients co = coefficients(channel, tau);
    // The evolved P function equals the initial state's W(., s_tau) up to
    // scaling; below the regularized width the state is still in the
    // singular (nonclassical) regime.
    if (co.v < 1e-6) return true;
    const Extremum m =
        quasiprob_min(state, initial, OrderingParameter{co.s}, grid_density);
    return m.value < -kStrictTol;
  };
  const double hi = tau_nonclassical_depth(channel) * (1.0 + 1e-6) + tol;
  return threshold_bisection(pred, hi, tol, CriterionId::depth);
}

Supremum vogel_supremum(const CatState& state,
                        const ChannelCoefficients& co) {
  if (state.alpha == 0.0) return Supremum{1.0, 0.0};
  const double ca = co.c * state.alpha;
  const double a2 = 2.0 * state.alpha * state.alpha;
  // Window covering the secondary lobe; at d = 0 the function is unbounded
  // in u, so cap where the growing exponential already dominates by e^40.
  const double umax = (co.d > 1e-12)
                          ? ca / co.d + 5.0 / std::sqrt(1.0 + co.d)
                          : (a2 + 40.0) / (2.0 * ca);
  const auto phi = [&](double u) {
    return char_normal(state, co, PhasePoint{u, 0.0});
  };
  const double step =
      std::min(1.0 / (20.0 * std::sqrt(1.0 + co.d)), umax / 400.0);
  double best_u = 0.0;
  double best = phi(0.0);
  for (double u = step; u <= umax; u += step) {
    const double val = phi(u);
    if (val > best) {
      best = val;
      best_u = u;
    }
  }
  const auto [ru, rv] = num::golden_section_max(
      phi, std::max(0.0, best_u - step), std::min(umax, best_u + step), 1e-12);
  if (rv > best) {
    best = rv;
    best_u = ru;
  }
  return Supremum{best, best_u};
}

ThresholdResult tau_vogel(const CatState& state, const ThermalChannel& channel,
                          double tol) {
  if (!(channel.nbar > 0.0)) {
    ThresholdResult res{};
    res.criterion_id = CriterionId::vogel1;
    res.tau_star = kTauInfinity;
    res.infinite = true;
    return res;
  }
  const auto pred = [&](double tau) {
    return vogel_supremum(state, coefficients(channel, tau)).value >
           1.0 + kStrictTol;
  };
  if (!pred(0.0)) return degenerate_result(CriterionId::vogel1);
  return threshold_bisection(pred, 2.0 * tau_nonclassical_depth(channel), tol,
                             CriterionId::vogel1);
}

double vogel_second_order(const CatState& state,
                          const ChannelCoefficients& co, PhasePoint xi1,
                          PhasePoint xi2) {
  const double p1 = char_normal(state, co, xi1);
  const double p2 = char_normal(state, co, xi2);
  const double p12 =
      char_normal(state, co, PhasePoint{xi1.u + xi2.u, xi1.v + xi2.v});
  return p1 * p1 + p2 * p2 + p12 * p12 - 2.0 * p1 * p2 * p12;
}

Supremum vogel2_supremum(const CatState& state,
                         const ChannelCoefficients& co) {
  if (state.alpha == 0.0) return Supremum{1.0, 0.0};
  const double ca = co.c * state.alpha;
  const double a2 = 2.0 * state.alpha * state.alpha;
  const double umax = (co.d > 1e-12)
                          ? ca / co.d + 5.0 / std::sqrt(1.0 + co.d)
                          : (a2 + 40.0) / (2.0 * ca);
  const auto s2 = [&](double u1, double u2) {
    return vogel_second_order(state, co, PhasePoint{u1, 0.0},
                              PhasePoint{u2, 0.0});
  };
  const int m = 96;
  const double step = umax / m;
  double best = s2(0.0, 0.0);
  double b1 = 0.0, b2 = 0.0;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      const double val = s2(i * step, j * step);
      if (val > best) {
        best = val;
        b1 = i * step;
        b2 = j * step;
      }
    }
  }
  for (int round = 0; round < 4; ++round) {
    auto [u1, v1] = num::golden_section_max(
        [&](double u) { return s2(u, b2); }, std::max(0.0, b1 - step),
        b1 + step, 1e-12);
    b1 = u1;
    auto [u2, v2] = num::golden_section_max(
        [&](double u) { return s2(b1, u); }, std::max(0.0, b2 - step),
        b2 + step, 1e-12);
    b2 = u2;
    best = std::max(best, v2);
  }
  return Supremum{best, b1};
}

ThresholdResult tau_vogel2(const CatState& state, const ThermalChannel& channel,
                           double tol) {
  if (!(channel.nbar > 0.0)) {
    ThresholdResult res{};
    res.criterion_id = CriterionId::vogel2;
    res.tau_star = kTauInfinity;
    res.infinite = true;
    return res;
  }
  const auto pred = [&](double tau) {
    return vogel2_supremum(state, coefficients(channel, tau)).value >
           1.0 + kStrictTol;
  };
  if (!pred(0.0)) return degenerate_result(CriterionId::vogel2);
  return threshold_bisection(pred, 2.0 * tau_nonclassical_depth(channel), tol,
                             CriterionId::vogel2);
}

double photon_prob(const CatState& state, const ChannelCoefficients& co,
                   int n) {
  if (n < 0) throw std::invalid_argument("photon_prob: n must be >= 0");
  const double width = 1.0 + co.d;
  const double growth = 2.0 * co.c * state.alpha;
  const double p =
      num::integrate_radial_gaussian(
          [&](double u, double v) {
            const double r2 = u * u + v * v;
            return char_normal(state, co, PhasePoint{u, v}) *
                   std::exp(-r2) * num::laguerre(n, r2);
          },
          width, 1e-10, growth) /
      kPi;
  // Parity-forbidden entries come out as quadrature-level negatives.
  return (p < 0.0 && p > -1e-8) ? 0.0 : p;
}

double klyshko_B_from_probs(double pn, double pn1, double pn2, int n) {
  return (n + 2.0) * pn * pn2 - (n + 1.0) * pn1 * pn1;
}

double klyshko_B(const CatState& state, const ChannelCoefficients& co,
                 int n) {
  return klyshko_B_from_probs(photon_prob(state, co, n),
                              photon_prob(state, co, n + 1),
                              photon_prob(state, co, n + 2), n);
}

ThresholdResult tau_klyshko(const CatState& state,
                            const ThermalChannel& channel, double tol, int n) {
  if (n < 0) throw std::invalid_argument("tau_klyshko: n must be >= 0");
  if (!(channel.nbar > 0.0)) {
    ThresholdResult res{};
    res.criterion_id = CriterionId::klyshko;
    res.tau_star = kTauInfinity;
    res.infinite = true;
    return res;
  }
  const auto b = [&](double tau) {
    return klyshko_B(state, coefficients(channel, tau), n);
  };
  const auto nonclassical = [&](double v) { return v < -kStrictTol; };

  if (!nonclassical(b(0.0))) return degenerate_result(CriterionId::klyshko);

  double tau_hi = 2.0 * tau_nonclassical_depth(channel);
  const int scan_points = 64;
  std::vector<double> taus, vals;
  for (int expand = 0;; ++expand) {
    taus.clear();
    vals.clear();
    for (int j = 0; j <= scan_points; ++j) {
      const double tau = tau_hi * j / scan_points;
      taus.push_back(tau);
      vals.push_back(b(tau));
    }
    if (!nonclassical(vals.back())) break;
    if (expand >= 8) {
      ThresholdResult res{};
      res.criterion_id = CriterionId::klyshko;
      res.tau_star = kTauInfinity;
      res.infinite = true;
      return res;
    }
    tau_hi *= 2.0;
  }

  ThresholdResult res{};
  res.criterion_id = CriterionId::klyshko;
  int iterations = 0;
  for (size_t j = 0; j + 1 < taus.size(); ++j) {
    if (nonclassical(vals[j]) != nonclassical(vals[j + 1])) {
      const auto br = num::Bracket::certify(b, taus[j], taus[j + 1]);
      const auto root = num::bisect(b, br, tol);
      res.sign_changes.push_back(root.root);
      iterations += root.iterations;
      if (nonclassical(vals[j])) {
        // transition nonclassical -> classical; the last one is tau_K
        res.tau_star = root.root;
        res.bracket_lo = root.lo;
        res.bracket_hi = root.hi;
      }
    }
  }
  res.iterations = iterations;
  return res;
}

SubsumptionReport klyshko_subsumption_check(const CatState& state,
                                            const ThermalChannel& channel,
                                            int n_max, double tol) {
  if (n_max < 2) {
    throw std::invalid_argument("klyshko_subsumption_check: n_max must be >= 2");
  }
  SubsumptionReport report;
  report.subsumed = true;
  double tau1 = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const auto res = tau_klyshko(state, channel, tol, n);
    report.thresholds.emplace_back(n, res.tau_star);
    if (n == 1) {
      tau1 = res.tau_star;
    } else if (res.tau_star > tau1 + tol) {
      report.subsumed = false;
    }
  }
  return report;
}

}  // namespace catlab::criteria
