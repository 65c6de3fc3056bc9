#ifndef SUBDYN_QUADRATURE_HPP
#define SUBDYN_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace subdyn {

using RealFn = std::function<double(double)>;

// Adaptive Simpson on [a,b] to absolute tolerance tol.
double adaptive_simpson(const RealFn& f, double a, double b, double tol,
                        int max_depth = 40);

// Adaptive Simpson over a supplied initial partition; panels are refined
// independently. Useful when the integrand has a known boundary layer.
double adaptive_simpson_panels(const RealFn& f, const std::vector<double>& knots,
                               double tol, int max_depth = 40);

// Integrate f on [a,inf) by doubling windows until the increment is below
// tol or the increments stop contracting (the caller inspects `converged`).
struct TailQuadResult {
  double value = 0.0;
  bool converged = false;
  double last_increment = 0.0;
};
TailQuadResult integrate_to_infinity(const RealFn& f, double a, double first_width,
                                     double tol, int max_doublings = 60);

// 64-point Gauss-Legendre on [a,b].
double gauss_legendre_64(const RealFn& f, double a, double b);

}  // namespace subdyn

#endif
