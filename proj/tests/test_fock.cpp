#include <cmath>
#include <complex>
#include <doctest.h>

#include "catlab/criteria.hpp"
#include "catlab/fock.hpp"
#include "catlab/phase_space.hpp"
#include "oracles.hpp"

using namespace catlab;
using namespace catlab::fock;

TEST_CASE("vacuum density matrix") {
  const auto rho = cat_density_matrix(CatState(0.0), 8);
  CHECK(rho.elements(0, 0).real() == doctest::Approx(1.0));
  CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-14));
  for (int n = 1; n < 8; ++n) {
    CHECK(std::abs(rho.elements(n, n)) < 1e-15);
  }
}

TEST_CASE("cat density matrix trace and parity") {
  const auto rho = cat_density_matrix(CatState(2.0), 40);
  CHECK(rho.trace() >= 1.0 - 1e-10);
  CHECK(rho.trace() <= 1.0 + 1e-12);
  CHECK(std::abs(rho.elements(0, 1)) == 0.0);
  CHECK(std::abs(rho.elements(3, 3)) == 0.0);
  CHECK(rho.hermiticity_defect() < 1e-12);
}

TEST_CASE("insufficient cutoff is rejected with the truncated norm") {
  CHECK_THROWS_WITH_AS(cat_density_matrix(CatState(3.0), 5),
                       doctest::Contains("truncated norm"),
                       std::invalid_argument);
}

TEST_CASE("evolution at tau = 0 is the identity") {
  const auto rho = cat_density_matrix(CatState(2.0), 40);
  const auto out = evolve(rho, ThermalChannel(1.0, 1.0), 0.0);
  CHECK((out.elements - rho.elements).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("vacuum thermalizes to the bath occupation") {
  const ThermalChannel channel(1.0, 1.0);
  auto rho = cat_density_matrix(CatState(0.0), 30);
  for (double tau : {0.1, 0.5, 2.0}) {
    const auto out = evolve(rho, channel, tau);
    const double expected = 1.0 * -std::expm1(-2.0 * tau);
    CHECK(mean_photon_number(out) == doctest::Approx(expected).epsilon(1e-6));
    CHECK(out.trace() == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("mean photon number decays like the squared amplitude coefficient") {
  const CatState state(2.0);
  const ThermalChannel channel(1.0, 1.0);
  const auto rho0 = cat_density_matrix(state, 45);
  const double a2 = state.alpha * state.alpha;
  const double n0 = a2 * (1.0 - std::exp(-2.0 * a2)) / (1.0 + std::exp(-2.0 * a2));
  CHECK(mean_photon_number(rho0) == doctest::Approx(n0).epsilon(1e-10));
  for (double tau : {0.05, 0.2}) {
    const auto out = evolve(rho0, channel, tau);
    const double c2 = std::exp(-2.0 * tau);
    CHECK(mean_photon_number(out) ==
          doctest::Approx(n0 * c2 + channel.nbar * (1.0 - c2)).epsilon(1e-6));
  }
}

TEST_CASE("evolution preserves hermiticity and positivity") {
  const auto rho0 = cat_density_matrix(CatState(2.0), 45);
  const auto out = evolve(rho0, ThermalChannel(1.0, 1.0), 0.2);
  CHECK(out.hermiticity_defect() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(out.elements);
  CHECK(solver.eigenvalues().minCoeff() > -1e-8);
}

TEST_CASE("photon probabilities from the diagonal") {
  const CatState state(2.0);
  const auto rho = cat_density_matrix(state, 40);
  const auto p = oracle_photon_probs(rho);
  CHECK(p[1] == 0.0);
  CHECK(p[3] == 0.0);
  double sum = 0.0;
  for (double v : p) {
    CHECK(v >= 0.0);
    sum += v;
  }
  CHECK(sum == doctest::Approx(rho.trace()).epsilon(1e-12));
  for (int n = 0; n <= 10; ++n) {
    CHECK(p[n] == doctest::Approx(testing::cat_photon_prob_analytic(state, n))
                      .epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("displacement trace reproduces the characteristic function") {
  const CatState state(2.0);
  const auto rho = cat_density_matrix(state, 40);
  const auto co0 = coefficients(ThermalChannel(1.0, 100.0), 0.0);
  const auto chi = oracle_char_normal(rho, PhasePoint{1.0, 0.0});
  CHECK(chi.real() ==
        doctest::Approx(char_normal(state, co0, PhasePoint{1.0, 0.0}))
            .epsilon(1e-9));
  CHECK(std::abs(chi.imag()) < 1e-10);
  CHECK(oracle_char_normal(rho, PhasePoint{0.0, 0.0}).real() ==
        doctest::Approx(rho.trace()).epsilon(1e-12));
}

TEST_CASE("cross-path check on an evolved state") {
  const CatState state(2.0);
  const ThermalChannel channel(1.0, 100.0);
  const int dim = suggested_cutoff(state, channel, 0.001);
  const auto rho = evolve(cat_density_matrix(state, dim), channel, 0.001);
  const auto co = coefficients(channel, 0.001);

  const auto probs = oracle_photon_probs(rho);
  for (int n = 0; n <= 12; ++n) {
    CHECK(probs[n] ==
          doctest::Approx(criteria::photon_prob(state, co, n))
              .epsilon(1e-6).scale(1.0));
  }
  double max_dev = 0.0;
  for (double u : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    for (double v : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const auto chi = oracle_char_normal(rho, PhasePoint{u, v});
      max_dev = std::max(
          max_dev, std::abs(chi - std::complex<double>(
                                char_normal(state, co, PhasePoint{u, v}), 0.0)));
    }
  }
  CHECK(max_dev < 1e-6);
}
