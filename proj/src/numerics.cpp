#include "catlab/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "catlab/types.hpp"

namespace catlab::num {

double laguerre(int n, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be nonnegative");
  if (n == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double lkp1 = ((2.0 * k + 1.0 - x) * lk - k * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double assoc_laguerre(int n, int k, double x) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("assoc_laguerre: n, k must be nonnegative");
  }
  if (n == 0) return 1.0;
  double lim1 = 1.0;
  double li = 1.0 + k - x;
  for (int i = 1; i < n; ++i) {
    const double lip1 = ((2.0 * i + 1.0 + k - x) * li - (i + k) * lim1) / (i + 1.0);
    lim1 = li;
    li = lip1;
  }
  return li;
}

QuadratureRule QuadratureRule::gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  QuadratureRule rule;
  rule.kind = Kind::gauss_legendre;
  rule.order = n;
  rule.nodes.reserve(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration starting from the Chebyshev-like estimate.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Evaluate P_n and P_n' at x by upward recurrence.
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes.emplace_back(x, w);
  }
  std::sort(rule.nodes.begin(), rule.nodes.end());
  return rule;
}

double QuadratureRule::integrate(const std::function<double(double)>& f,
                                 double a, double b) const {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (const auto& [x, w] : nodes) sum += w * f(mid + half * x);
  return half * sum;
}

double integrate_radial_gaussian(const std::function<double(double, double)>& f,
                                 double width, double tol, double growth) {
  if (!(width > 0.0)) {
    throw std::invalid_argument("integrate_radial_gaussian: width must be > 0");
  }
  // Truncation radius: width R^2 - growth R = 45 puts the envelope below
  // e^-45 at the cut.
  const double radius =
      (growth + std::sqrt(growth * growth + 180.0 * width)) / (2.0 * width);

  int n_radial = 24;
  int n_angular = 16;
  double prev = 0.0;
  bool have_prev = false;
  double residual = 0.0;
  for (int level = 0; level <= 12; ++level) {
    const auto rule = QuadratureRule::gauss_legendre(n_radial);
    const double dtheta = 2.0 * kPi / n_angular;
    double total = 0.0;
    for (int j = 0; j < n_angular; ++j) {
      const double theta = j * dtheta;
      const double ct = std::cos(theta);
      const double st = std::sin(theta);
      total += rule.integrate(
          [&](double r) { return r * f(r * ct, r * st); }, 0.0, radius);
    }
    total *= dtheta;
    if (have_prev) {
      residual = std::abs(total - prev);
      if (residual < tol * (1.0 + std::abs(total))) return total;
    }
    prev = total;
    have_prev = true;
    n_radial *= 2;
    n_angular *= 2;
  }
  throw ConvergenceError(
      "integrate_radial_gaussian: no convergence after 12 refinements "
      "(residual " + std::to_string(residual) + ")",
      residual);
}

Bracket Bracket::certify(const std::function<double(double)>& f, double lo,
                         double hi) {
  if (!(lo < hi)) throw std::invalid_argument("Bracket: requires lo < hi");
  const double flo = f(lo);
  const double fhi = f(hi);
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw std::invalid_argument("Bracket: no sign change on [lo, hi]");
  }
  return Bracket{lo, hi};
}

RootResult bisect(const std::function<double(double)>& f, Bracket bracket,
                  double tol) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  const bool neg_lo = f(lo) < 0.0;
  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0.0) == neg_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
    if (iterations > 200) break;
  }
  return RootResult{0.5 * (lo + hi), lo, hi, iterations};
}

std::pair<double, double> golden_section_max(
    const std::function<double(double)>& f, double lo, double hi, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace catlab::num
