// fock.hpp — independent brute-force verification path: truncated Fock-basis
// density matrix of the cat state, direct master-equation integration, and
// photon statistics / characteristic-function samples for cross-validation
// of the analytic path. The analytic modules never call into this one.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "catlab/types.hpp"

namespace catlab::fock {

struct FockDensityMatrix {
  int dim{0};                 // truncation cutoff N_max + 1
  Eigen::MatrixXcd elements;  // rho_{mn}, m, n in [0, dim)

  double trace() const { return elements.trace().real(); }
  double hermiticity_defect() const {
    return (elements - elements.adjoint()).cwiseAbs().maxCoeff();
  }
};

/// Cutoff covering the coherent support plus thermal broadening at the
/// largest simulated time.
int suggested_cutoff(const CatState& state, const ThermalChannel& channel,
                     double tau_max);

/// rho = |Psi><Psi| with <n|Psi> = (1 + (-1)^n) e^{-a^2/2} a^n / sqrt(n! N);
/// odd rows/columns are exactly zero. Throws if the truncated norm falls
/// below 1 - 1e-10.
FockDensityMatrix cat_density_matrix(const CatState& state, int dim);

/// Integrate the thermal-channel master equation (rescaled time tau = gamma t)
///   drho/dtau = (nbar+1)[2 a rho a+ - a+a rho - rho a+a]
///             + nbar   [2 a+ rho a - a a+ rho - rho a a+]
/// with a classical 4th-order stepper. dt is capped by the truncated
/// generator's stiffness scale ~ nbar * dim. Throws if trace leakage exceeds
/// 1e-6 (advising a larger dim).
FockDensityMatrix evolve(const FockDensityMatrix& rho,
                         const ThermalChannel& channel, double tau,
                         double dt = 1e-3);

/// Diagonal of rho with negative round-off below 1e-14 clipped to zero.
std::vector<double> oracle_photon_probs(const FockDensityMatrix& rho);

/// Normally ordered characteristic function Tr[rho D(xi)] e^{|xi|^2/2} via
/// the associated-Laguerre closed form for displacement matrix elements.
/// Throws if the truncated trace has not converged at this |xi|.
std::complex<double> oracle_char_normal(const FockDensityMatrix& rho,
                                        PhasePoint xi);

/// <a+ a> of rho.
double mean_photon_number(const FockDensityMatrix& rho);

}  // namespace catlab::fock
