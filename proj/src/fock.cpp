#include "catlab/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "catlab/numerics.hpp"

namespace catlab::fock {

namespace {

using Eigen::MatrixXcd;

/// Lindblad right-hand side of the rescaled-time master equation, written
/// elementwise with the ladder-operator index shifts.
MatrixXcd lindblad_rhs(const MatrixXcd& rho, double nbar) {
  const int dim = static_cast<int>(rho.rows());
  MatrixXcd out(dim, dim);
  const double down = nbar + 1.0;
  const double up = nbar;
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      std::complex<double> val =
          -down * (m + n) * rho(m, n) - up * (m + n + 2.0) * rho(m, n);
      if (m + 1 < dim && n + 1 < dim) {
        val += 2.0 * down * std::sqrt(double(m + 1) * double(n + 1)) *
               rho(m + 1, n + 1);
      }
      if (m > 0 && n > 0) {
        val += 2.0 * up * std::sqrt(double(m) * double(n)) * rho(m - 1, n - 1);
      }
      out(m, n) = val;
    }
  }
  return out;
}

}  // namespace

int suggested_cutoff(const CatState& state, const ThermalChannel& channel,
                     double tau_max) {
  const double a = state.alpha;
  const double nbar_eff = channel.nbar * -std::expm1(-2.0 * tau_max);
  // Margin keeps the truncated tail below the evolve() trace-leakage budget
  // even when strong heating broadens the photon-number distribution.
  return static_cast<int>(std::ceil(a * a + 12.0 * a + 30.0 +
                                    10.0 * std::sqrt(nbar_eff) + 2.0 * nbar_eff));
}

FockDensityMatrix cat_density_matrix(const CatState& state, int dim) {
  if (dim < 1) throw std::invalid_argument("cat_density_matrix: dim must be >= 1");
  Eigen::VectorXcd c(dim);
  const double a = state.alpha;
  double t = std::exp(-0.5 * a * a);  // e^{-a^2/2} a^n / sqrt(n!)
  const double inv_sqrt_norm = 1.0 / std::sqrt(state.norm);
  for (int n = 0; n < dim; ++n) {
    c(n) = (n % 2 == 0) ? 2.0 * t * inv_sqrt_norm : 0.0;
    t *= a / std::sqrt(double(n + 1));
  }
  const double truncated_norm = c.squaredNorm();
  if (truncated_norm < 1.0 - 1e-10) {
    throw std::invalid_argument(
        "cat_density_matrix: dim too small, truncated norm = " +
        std::to_string(truncated_norm));
  }
  FockDensityMatrix rho;
  rho.dim = dim;
  rho.elements = c * c.adjoint();
  return rho;
}

FockDensityMatrix evolve(const FockDensityMatrix& rho,
                         const ThermalChannel& channel, double tau,
                         double dt) {
  if (!(tau >= 0.0)) throw std::domain_error("evolve: tau must be >= 0");
  FockDensityMatrix out = rho;
  if (tau == 0.0) return out;
  // Stability cap: the fastest decaying element of the truncated generator
  // relaxes at rate ~ 2 (2 nbar + 1) (dim - 1).
  const double rate = 2.0 * (2.0 * channel.nbar + 1.0) * (rho.dim + 1.0);
  const double dt_eff = std::min(dt, 0.05 / rate);
  const int steps = std::max(1, static_cast<int>(std::ceil(tau / dt_eff)));
  const double h = tau / steps;
  MatrixXcd r = rho.elements;
  for (int step = 0; step < steps; ++step) {
    const MatrixXcd k1 = lindblad_rhs(r, channel.nbar);
    const MatrixXcd k2 = lindblad_rhs(r + 0.5 * h * k1, channel.nbar);
    const MatrixXcd k3 = lindblad_rhs(r + 0.5 * h * k2, channel.nbar);
    const MatrixXcd k4 = lindblad_rhs(r + h * k3, channel.nbar);
    r += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  out.elements = r;
  const double leakage = std::abs(out.trace() - rho.trace());
  if (leakage > 1e-6) {
    throw std::runtime_error(
        "evolve: trace leakage " + std::to_string(leakage) +
        " exceeds 1e-6; increase the Fock cutoff");
  }
  return out;
}

std::vector<double> oracle_photon_probs(const FockDensityMatrix& rho) {
  std::vector<double> p(rho.dim);
  for (int n = 0; n < rho.dim; ++n) {
    double val = rho.elements(n, n).real();
    if (val < 0.0 && val > -1e-14) val = 0.0;
    p[n] = val;
  }
  return p;
}

std::complex<double> oracle_char_normal(const FockDensityMatrix& rho,
                                        PhasePoint xi) {
  const std::complex<double> z(xi.u, xi.v);
  const double r2 = xi.abs2();
  const double gauss = std::exp(-0.5 * r2);
  const int dim = rho.dim;

  // D_{mn} = sqrt(n!/m!) xi^{m-n} e^{-|xi|^2/2} L_n^{(m-n)}(|xi|^2), m >= n;
  // the m < n block follows from D(-xi) symmetry.
  Eigen::MatrixXcd disp(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n <= m; ++n) {
      const int k = m - n;
      double ratio = 1.0;  // sqrt(n!/m!)
      for (int j = n + 1; j <= m; ++j) ratio /= std::sqrt(double(j));
      const double lag = num::assoc_laguerre(n, k, r2);
      const std::complex<double> zk = std::pow(z, k);
      disp(m, n) = ratio * zk * gauss * lag;
      if (m != n) {
        disp(n, m) = ratio * std::pow(-std::conj(z), k) * gauss * lag;
      }
    }
  }
  std::complex<double> tr = 0.0;
  double tail = 0.0;
  for (int m = 0; m < dim; ++m) {
    for (int k = 0; k < dim; ++k) {
      const std::complex<double> term = rho.elements(m, k) * disp(k, m);
      tr += term;
      if (m >= dim - 3 || k >= dim - 3) tail += std::abs(term);
    }
  }
  if (tail > 1e-8) {
    throw std::runtime_error(
        "oracle_char_normal: truncated displacement trace not converged at "
        "this |xi|; residual estimate " + std::to_string(tail));
  }
  return tr * std::exp(0.5 * r2);
}

double mean_photon_number(const FockDensityMatrix& rho) {
  double sum = 0.0;
  for (int n = 0; n < rho.dim; ++n) sum += n * rho.elements(n, n).real();
  return sum;
}

}  // namespace catlab::fock
