// acceptance.cpp — end-to-end acceptance run: one pass/fail line per
// criterion, nonzero exit if any fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "catlab/criteria.hpp"
#include "catlab/fock.hpp"
#include "catlab/phase_space.hpp"
#include "catlab/types.hpp"
#include "oracles.hpp"

using namespace catlab;
namespace crit = catlab::criteria;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %s — %s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void table_reproduction() {
  const CatState state(2.0);
  const ThermalChannel channel(1.0, 100.0);
  const double tau_p = crit::tau_nonclassical_depth(channel);
  const double tau_w = crit::tau_wigner_negativity(channel);
  const double tau_p_exact = 0.5 * std::log1p(1.0 / 100.0);
  const double tau_w_exact = 0.5 * std::log1p(1.0 / 200.0);
  const auto vogel = crit::tau_vogel(state, channel, 1e-8);
  const auto klyshko = crit::tau_klyshko(state, channel, 1e-8, 1);

  const bool ok_p = std::abs(tau_p - tau_p_exact) <= 1e-7 &&
                    std::abs(tau_p - 0.0050) < 5e-5;
  const bool ok_w = std::abs(tau_w - tau_w_exact) <= 1e-7 &&
                    std::abs(tau_w - 0.0025) < 5e-5;
  const bool ok_v = std::abs(vogel.tau_star - 0.0023) <= 0.05 * 0.0023;
  const bool ok_k = std::abs(klyshko.tau_star - 0.0019) <= 0.10 * 0.0019;
  report("table-1 reproduction (alpha=2, nbar=100)",
         ok_p && ok_w && ok_v && ok_k,
         "tau_P=" + fmt(tau_p) + " tau_W=" + fmt(tau_w) +
             " tau_V=" + fmt(vogel.tau_star) +
             " tau_K=" + fmt(klyshko.tau_star));

  const double fringe_at_tau_p =
      crit::fringe_visibility(state, coefficients(channel, tau_p));
  const bool ordering = klyshko.tau_star < vogel.tau_star &&
                        vogel.tau_star < tau_w && tau_w < tau_p &&
                        fringe_at_tau_p > std::exp(-8.0);
  report("threshold ordering tau_K < tau_V < tau_W < tau_P, fringes persist",
         ordering,
         "F(tau_P)=" + fmt(fringe_at_tau_p) +
             " asymptote=" + fmt(std::exp(-8.0)));
}

void vogel_saturation() {
  const ThermalChannel channel(1.0, 100.0);
  const double tau_w = crit::tau_wigner_negativity(channel);
  double prev = 0.0;
  bool nondecreasing = true;
  double tau10 = 0.0;
  for (int a = 1; a <= 10; ++a) {
    const double tau =
        crit::tau_vogel(CatState(double(a)), channel, 1e-9).tau_star;
    if (tau < prev - 1e-8) nondecreasing = false;
    prev = tau;
    if (a == 10) tau10 = tau;
  }
  const bool within = std::abs(tau10 - tau_w) <= 0.02 * tau_w;
  report("vogel saturation: tau_V(10) within 2% of tau_W, nondecreasing in "
         "alpha",
         within && nondecreasing,
         "tau_V(10)=" + fmt(tau10) + " tau_W=" + fmt(tau_w));
}

void klyshko_dependence() {
  const ThermalChannel hot(1.0, 100.0);
  const std::vector<double> alphas = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0};
  double best_alpha = 0.0, best_tau = -1.0;
  std::string curve;
  for (double a : alphas) {
    const auto res = crit::tau_klyshko(CatState(a), hot, 1e-8, 1);
    const double tau = res.never_nonclassical ? 0.0 : res.tau_star;
    if (tau > best_tau) {
      best_tau = tau;
      best_alpha = a;
    }
    curve += fmt(tau) + " ";
  }
  const bool peak_ok = best_alpha >= 1.5 && best_alpha <= 2.5;

  double prev = 1e300;
  bool decreasing = true;
  std::string nbar_curve;
  for (double nbar : {1.0, 10.0, 100.0}) {
    const double tau =
        crit::tau_klyshko(CatState(2.0), ThermalChannel(1.0, nbar), 1e-8, 1)
            .tau_star;
    if (tau >= prev) decreasing = false;
    prev = tau;
    nbar_curve += fmt(tau) + " ";
  }
  report("klyshko alpha-dependence peaks in [1.5, 2.5], decreasing in nbar",
         peak_ok && decreasing,
         "peak at alpha=" + fmt(best_alpha) + "; tau_K(alpha)=" + curve +
             "; tau_K(nbar)=" + nbar_curve);
}

void klyshko_subsumption() {
  bool ok = true;
  std::string detail;
  for (double nbar : {1.0, 100.0}) {
    const auto report_n = crit::klyshko_subsumption_check(
        CatState(2.0), ThermalChannel(1.0, nbar), 3, 1e-7);
    ok = ok && report_n.subsumed;
    detail += "nbar=" + fmt(nbar) + ":";
    for (const auto& [n, tau] : report_n.thresholds) {
      detail += " B(" + std::to_string(n) + ")=" + fmt(tau);
    }
    detail += "; ";
  }
  report("klyshko subsumption: B(2), B(3) thresholds <= B(1)", ok, detail);
}

void oracle_equivalence() {
  double max_probs = 0.0, max_char = 0.0;
  int worst_cutoff = 0;
  for (double a : {1.0, 2.0, 3.0}) {
    for (double nbar : {1.0, 10.0, 100.0}) {
      const CatState state(a);
      const ThermalChannel channel(1.0, nbar);
      const int dim = fock::suggested_cutoff(state, channel, 0.01);
      worst_cutoff = std::max(worst_cutoff, dim);
      const auto rho0 = fock::cat_density_matrix(state, dim);
      for (double tau : {0.0, 0.001, 0.01}) {
        const auto rho = fock::evolve(rho0, channel, tau);
        const auto co = coefficients(channel, tau);
        const auto probs = fock::oracle_photon_probs(rho);
        for (int n = 0; n <= std::min(20, dim - 1); ++n) {
          max_probs = std::max(
              max_probs,
              std::abs(probs[n] - crit::photon_prob(state, co, n)));
        }
        for (double u : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
          for (double v : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            const auto chi = fock::oracle_char_normal(rho, PhasePoint{u, v});
            max_char = std::max(
                max_char,
                std::abs(chi - std::complex<double>(
                                   char_normal(state, co, PhasePoint{u, v}),
                                   0.0)));
          }
        }
      }
    }
  }
  report("oracle equivalence over the 27-point grid",
         max_probs < 1e-6 && max_char < 1e-6 && worst_cutoff <= 250,
         "max |dp|=" + fmt(max_probs) + " max |dchi|=" + fmt(max_char) +
             " cutoff<=" + std::to_string(worst_cutoff));
}

void property_suite() {
  bool ok = true;
  std::string detail;

  // chi(0) = 1 across states, channels, times
  for (double a : {0.0, 1.0, 2.0, 5.0}) {
    for (double nbar : {0.0, 1.0, 100.0}) {
      for (double tau : {0.0, 0.01, 1.0}) {
        const auto co = coefficients(ThermalChannel(1.0, nbar + 1e-12), tau);
        const double chi0 =
            char_normal(CatState(a), co, PhasePoint{0.0, 0.0});
        if (std::abs(chi0 - 1.0) > 1e-12) ok = false;
      }
    }
  }
  detail += "chi(0)=1; ";

  // photon-number completeness
  {
    const CatState state(2.0);
    const auto co = coefficients(ThermalChannel(1.0, 1.0), 0.1);
    double sum = 0.0;
    for (int n = 0; n <= 40; ++n) sum += crit::photon_prob(state, co, n);
    if (std::abs(sum - 1.0) > 1e-8) ok = false;
    detail += "sum p(n)=" + fmt(sum) + "; ";
  }

  // cat parity at tau = 0
  {
    const CatState state(2.0);
    const auto co = coefficients(ThermalChannel(1.0, 100.0), 0.0);
    for (int n : {1, 3, 5}) {
      if (std::abs(crit::photon_prob(state, co, n)) > 1e-9) ok = false;
    }
    detail += "p(odd)=0; ";
  }

  // poissonian statistics null the klyshko combination
  {
    const double mean = 2.4;
    std::vector<double> p(14);
    double term = std::exp(-mean);
    for (int n = 0; n < 14; ++n) {
      p[n] = term;
      term *= mean / (n + 1.0);
    }
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      worst = std::max(worst, std::abs(crit::klyshko_B_from_probs(
                                  p[n], p[n + 1], p[n + 2], n)));
    }
    if (worst >= 1e-12) ok = false;
    detail += "max |B_poisson|=" + fmt(worst) + "; ";
  }

  // quasiprobability normalization
  {
    const CatState state(2.0);
    const auto co = coefficients(ThermalChannel(1.0, 10.0), 0.01);
    const double integral = testing::plane_integral(
        [&](double x, double y) {
          return eval_quasiprob(state, co, PhasePoint{x, y},
                                OrderingParameter::wigner());
        },
        10.0, 240);
    if (std::abs(integral - 1.0) > 1e-6) ok = false;
    detail += "int W=" + fmt(integral) + "; ";
  }

  // convolution identity on a grid
  {
    const CatState state(1.5);
    const auto co = coefficients(ThermalChannel(1.0, 2.0), 0.1);
    double worst = 0.0;
    for (double x : {0.0, 0.8, 1.5}) {
      for (double y : {0.0, 0.6}) {
        const double direct = eval_quasiprob(state, co, PhasePoint{x, y},
                                             OrderingParameter{-1.0});
        const double conv = testing::convolution_quadrature(
            state, co, PhasePoint{x, y}, 0.0, -1.0);
        worst = std::max(worst, std::abs(direct - conv));
      }
    }
    if (worst >= 1e-6) ok = false;
    detail += "max conv err=" + fmt(worst) + "; ";
  }

  // second-order vogel threshold is at least the first-order one
  {
    const CatState state(2.0);
    const ThermalChannel channel(1.0, 100.0);
    const double t1 = crit::tau_vogel(state, channel, 1e-8).tau_star;
    const double t2 = crit::tau_vogel2(state, channel, 1e-8).tau_star;
    if (!(t2 >= t1 - 1e-7)) ok = false;
    detail += "tau_V2=" + fmt(t2) + " >= tau_V=" + fmt(t1);
  }

  report("property suite", ok, detail);
}

}  // namespace

int main() {
  table_reproduction();
  vogel_saturation();
  klyshko_dependence();
  klyshko_subsumption();
  oracle_equivalence();
  property_suite();
  if (failures > 0) {
    std::printf("%d acceptance criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
