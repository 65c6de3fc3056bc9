#ifndef SUBDYN_SPECIAL_FUNCTIONS_HPP
#define SUBDYN_SPECIAL_FUNCTIONS_HPP

#include <complex>

namespace subdyn {

enum class EvalMethod { series, integral, asymptotic };

struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  EvalMethod method = EvalMethod::series;
};

const char* to_string(EvalMethod m);

// Mittag-Leffler E_alpha(z) for 0 < alpha <= 1 and real z. The power series
// is used only while its internal cancellation keeps ~12 significant digits;
// outside that region negative arguments switch to the completely-monotone
// spectral representation
//   E_a(-x) = sin(a pi)/(a pi) Int_0^inf exp(-(ux)^(1/a)) /
//             (u^2 + 2u cos(a pi) + 1) du
// or, when cheaper and accurate enough, to the divergent asymptotic series
// with optimal truncation.
EvalResult mittag_leffler(double alpha, double z);

// Wright function W_{-alpha,1-alpha}(-z) for 0 < alpha < 1 and z >= 0
// (the Mainardi function M_alpha(z), the scaling density of the inverse
// alpha-stable subordinator). The sign convention bakes in the negative
// argument so callers never see signed arguments: wright(a, z) >= 0.
// Beyond the series' cancellation budget the value is obtained from the
// one-sided stable density via M_a(z) = z^{-1-1/a} p_a(z^{-1/a}) / a.
EvalResult wright(double alpha, double z);

// Density and CDF of the standard one-sided alpha-stable law
// (E[exp(-l S)] = exp(-l^alpha)), by the Zolotarev integral representation.
double one_sided_stable_pdf(double alpha, double x);
double one_sided_stable_cdf(double alpha, double x);

// Upper incomplete gamma Gamma(nu, z), z > 0, any real nu.
double upper_incomplete_gamma(double nu, double z);

// Lower incomplete gamma gamma(nu, z) for nu > 0, z >= 0.
double lower_incomplete_gamma(double nu, double z);

// Regularized Q(a, x) = Gamma(a,x)/Gamma(a), a > 0; stable for large a.
double regularized_gamma_q(double a, double x);

// gamma(nu, w) for complex w (used on Laplace-inversion contours).
// Series evaluation; throws std::domain_error when |w| is too large for
// double precision.
std::complex<double> lower_incomplete_gamma(double nu, std::complex<double> w);

// 1/Gamma(x) for any real x; zero at the poles.
double rgamma(double x);

// log|1/Gamma(x)| and its sign.
double log_rgamma(double x, int& sign);

// sin(pi x) with argument reduction.
double sinpi(double x);

}  // namespace subdyn

#endif
