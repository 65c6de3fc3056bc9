#ifndef SUBDYN_LAPLACE_HPP
#define SUBDYN_LAPLACE_HPP

#include <complex>
#include <functional>

namespace subdyn {

using RealTransform = std::function<double(double)>;
using ComplexTransform = std::function<std::complex<double>(std::complex<double>)>;

// Gaver-Stehfest inversion at t from real-axis samples F(k ln2/t), k=1..n.
// n must be even and in [8,18]; the weights are ill-conditioned past that.
// Throws std::overflow_error if the weighted sum leaves the representable
// range and std::invalid_argument for bad n.
double invert_gaver_stehfest(const RealTransform& F, double t, int n = 14);

// Fixed-Talbot inversion with M nodes (Abate & Valko 2004). Requires F
// analytic to the right of the deformed contour; throws std::runtime_error
// when a contour evaluation is non-finite.
double invert_talbot(const ComplexTransform& F, double t, int M = 32);

}  // namespace subdyn

#endif
