// numerics.hpp — shared numerical kernels: Laguerre polynomials, Gaussian-
// weighted polar quadrature, bracketing/bisection and golden-section search.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catlab::num {

/// Thrown when an adaptive scheme fails to reach its tolerance; carries the
/// last achieved residual.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual_)
      : std::runtime_error(what), residual(residual_) {}
  double residual;
};

/// Laguerre polynomial L_n(x) via the three-term recurrence
/// (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
double laguerre(int n, double x);

/// Associated Laguerre polynomial L_n^{(k)}(x), same recurrence family.
/// Needed for displacement-operator matrix elements in the Fock oracle.
double assoc_laguerre(int n, int k, double x);

/// Quadrature rule as a list of (node, weight) pairs.
struct QuadratureRule {
  enum class Kind { radial_gaussian, tensor_2d, gauss_legendre };

  Kind kind{Kind::gauss_legendre};
  int order{0};
  std::vector<std::pair<double, double>> nodes;

  /// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
  /// <= 2n - 1. Nodes found by Newton iteration on P_n.
  static QuadratureRule gauss_legendre(int n);

  /// Integrate f over [a, b] with an affine map of this [-1,1] rule.
  double integrate(const std::function<double(double)>& f, double a,
                   double b) const;
};

/// Integral of f(u, v) over the plane for integrands decaying like
/// poly * exp(-width r^2 + growth r). Polar form: Gauss-Legendre in r,
/// trapezoid in the angle (spectrally convergent for smooth periodic
/// integrands); both node counts are doubled until successive estimates
/// differ by less than tol. Throws ConvergenceError after 12 doublings.
double integrate_radial_gaussian(const std::function<double(double, double)>& f,
                                 double width, double tol,
                                 double growth = 0.0);

/// Certified sign-change interval.
struct Bracket {
  double lo;
  double hi;

  /// Certify that f changes sign on [lo, hi]; throws otherwise.
  static Bracket certify(const std::function<double(double)>& f, double lo,
                         double hi);
};

struct RootResult {
  double root;
  double lo;
  double hi;
  int iterations;
};

/// Bisection on a certified bracket down to |hi - lo| <= tol. Never
/// evaluates f outside the initial bracket.
RootResult bisect(const std::function<double(double)>& f, Bracket bracket,
                  double tol);

/// Golden-section maximization of a unimodal f on [lo, hi].
std::pair<double, double> golden_section_max(
    const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace catlab::num
