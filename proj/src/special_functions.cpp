#include "subdyn/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "subdyn/quadrature.hpp"

namespace subdyn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = 2.220446049250313e-16;

// Kahan-compensated accumulator.
struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

const char* to_string(EvalMethod m) {
  switch (m) {
    case EvalMethod::series: return "series";
    case EvalMethod::integral: return "integral";
    case EvalMethod::asymptotic: return "asymptotic";
  }
  return "?";
}

double sinpi(double x) {
  double n = std::round(x);
  double r = x - n;  // |r| <= 1/2, exact
  double s = std::sin(kPi * r);
  return std::fmod(n, 2.0) != 0.0 ? -s : s;
}

double log_rgamma(double x, int& sign) {
  if (x > 0.0) {
    sign = 1;
    return -std::lgamma(x);
  }
  // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
  double s = sinpi(x);
  if (s == 0.0) {  // pole of Gamma, 1/Gamma = 0
    sign = 0;
    return -std::numeric_limits<double>::infinity();
  }
  sign = s > 0.0 ? 1 : -1;
  return std::lgamma(1.0 - x) + std::log(std::fabs(s)) - std::log(kPi);
}

double rgamma(double x) {
  int sign;
  double lr = log_rgamma(x, sign);
  if (sign == 0) return 0.0;
  return sign * std::exp(lr);
}

// ---------------------------------------------------------------------------
// Mittag-Leffler
// ---------------------------------------------------------------------------

namespace {

// Power series sum_{n>=0} z^n / Gamma(a n + 1) with a cancellation audit.
// Returns false when round-off in the alternating sum would exceed tol_rel.
bool ml_series(double alpha, double z, double tol_rel, double& out, double& err) {
  Kahan acc;
  double max_term = 0.0;
  double lz = std::log(std::fabs(z));
  int n = 0, below = 0;
  for (; n <= 4000; ++n) {
    double lt = n * lz - std::lgamma(alpha * n + 1.0);
    double term = std::exp(lt);
    if (z < 0.0 && (n & 1)) term = -term;
    acc.add(term);
    max_term = std::max(max_term, std::fabs(term));
    below = std::fabs(term) < kEps * (std::fabs(acc.sum) + 1e-300) ? below + 1 : 0;
    if (below >= 2 && n > 4) break;
    if (lt > 700.0) {  // series will overflow; only happens for large z > 0
      out = std::numeric_limits<double>::infinity();
      err = out;
      return z > 0.0;
    }
  }
  double noise = max_term * kEps * (n + 1);
  out = acc.sum;
  err = noise + std::fabs(out) * kEps * n;
  return noise <= tol_rel * std::max(std::fabs(out), 1e-300);
}

// Asymptotic series E_a(-x) ~ sum_{k>=1} (-1)^{k+1} x^{-k} / Gamma(1 - a k),
// truncated at the smallest term.
bool ml_asymptotic(double alpha, double x, double tol_rel, double& out, double& err) {
  Kahan acc;
  double smallest = std::numeric_limits<double>::infinity();
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 200; ++k) {
    double term = ((k & 1) ? 1.0 : -1.0) * std::pow(x, -k) * rgamma(1.0 - alpha * k);
    double mag = std::fabs(term);
    if (mag > prev && k > 2) break;  // divergence sets in
    acc.add(term);
    prev = mag;
    if (mag > 0.0) smallest = std::min(smallest, mag);
    if (mag < kEps * std::fabs(acc.sum)) break;
  }
  out = acc.sum;
  err = smallest;
  return out > 0.0 && smallest <= tol_rel * out;
}

// Spectral representation; positive integrand, no cancellation.
double ml_integral(double alpha, double x, double& err) {
  double c = std::cos(kPi * alpha);
  double pref = std::sin(kPi * alpha) / (kPi * alpha);
  auto integrand = [&](double u) {
    if (u <= 0.0) return 1.0;  // exp(0)/1
    double e = std::pow(u * x, 1.0 / alpha);
    if (e > 745.0) return 0.0;
    return std::exp(-e) / (u * u + 2.0 * c * u + 1.0);
  };
  double u_max = std::pow(50.0, alpha) / x * 50.0;  // exp factor < e^-50 past here
  std::vector<double> knots{0.0};
  for (int k = 24; k >= 0; --k) knots.push_back(u_max * std::pow(0.5, k));
  if (c < -0.5) {
    // near-resonant denominator around u = 1 as alpha -> 1
    double s = std::sin(kPi * alpha);
    for (double q : {1.0 - 4.0 * s, 1.0 - s, 1.0, 1.0 + s, 1.0 + 4.0 * s}) {
      if (q > 0.0 && q < u_max) knots.push_back(q);
    }
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  double rough = pref * adaptive_simpson_panels(integrand, knots, 1e-8, 24);
  double tol = std::max(1e-16, 1e-13 * std::fabs(rough));
  double val = pref * adaptive_simpson_panels(integrand, knots, tol, 40);
  err = std::max(1e-12 * std::fabs(val), tol);
  return val;
}

}  // namespace

EvalResult mittag_leffler(double alpha, double z) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::domain_error("mittag_leffler: alpha must be in (0, 1]");
  }
  EvalResult r;
  if (alpha == 1.0) {
    r.value = std::exp(z);
    r.abs_error_estimate = std::fabs(r.value) * 4.0 * kEps;
    r.method = EvalMethod::series;
    return r;
  }
  if (z == 0.0) {
    r.value = 1.0;
    r.abs_error_estimate = 0.0;
    r.method = EvalMethod::series;
    return r;
  }
  double v, e;
  if (ml_series(alpha, z, 1e-11, v, e)) {
    r.value = v;
    r.abs_error_estimate = e;
    r.method = EvalMethod::series;
    return r;
  }
  if (z > 0.0) {
    // positive-argument series never cancels; reaching here means overflow
    r.value = std::numeric_limits<double>::infinity();
    r.abs_error_estimate = r.value;
    r.method = EvalMethod::series;
    return r;
  }
  double x = -z;
  if (ml_asymptotic(alpha, x, 1e-9, v, e)) {
    r.value = v;
    r.abs_error_estimate = e;
    r.method = EvalMethod::asymptotic;
    return r;
  }
  r.value = ml_integral(alpha, x, e);
  r.abs_error_estimate = e;
  r.method = EvalMethod::integral;
  return r;
}

// ---------------------------------------------------------------------------
// One-sided stable density / CDF (Zolotarev integral form)
// ---------------------------------------------------------------------------

namespace {

// log of Zolotarev's kernel U(phi) on (0, pi);
// U(phi) = sin(a phi)^(a/(1-a)) sin((1-a) phi) / sin(phi)^(1/(1-a)).
double log_zolotarev_u(double alpha, double phi) {
  if (phi <= 0.0) {
    return alpha / (1.0 - alpha) * std::log(alpha) + std::log1p(-alpha);
  }
  double a1 = 1.0 - alpha;
  return (alpha * std::log(std::sin(alpha * phi)) +
          a1 * std::log(std::sin(a1 * phi)) - std::log(std::sin(phi))) /
         a1;
}

// Initial panel layout: geometric refinement toward both endpoints plus a
// cluster of knots on the exp(-U y) transition layer near phi = pi, whose
// location follows from U(pi - s) ~ c_pi s^{-1/(1-a)}.
std::vector<double> zolotarev_knots(double alpha, double y) {
  std::vector<double> knots{0.0};
  for (int k = 22; k >= 1; --k) knots.push_back(kPi * std::pow(0.5, k));
  for (int k = 2; k <= 14; ++k) knots.push_back(kPi * (1.0 - std::pow(0.5, k)));
  double a1 = 1.0 - alpha;
  double c_pi = std::pow(std::sin(kPi * alpha), alpha / a1) * std::sin(kPi * a1);
  double lcy = std::log(c_pi) + std::log(y);
  if (lcy * a1 > -700.0) {
    double s_star = std::exp(a1 * lcy);  // U(pi - s*) y = 1
    for (int k = -14; k <= 14; ++k) {
      double s = s_star * std::pow(2.0, k);
      if (s > 1e-290 && s < kPi / 2.0) knots.push_back(kPi - s);
    }
  }
  knots.push_back(kPi);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  return knots;
}

}  // namespace

namespace {

// Large-x series p_a(x) = (1/pi) sum_k (-1)^{k+1} Gamma(ka+1)/k! sin(k pi a)
// x^{-ka-1}; convergent for every x > 0 when a < 1, usable once the
// alternating terms stop cancelling. With `tail` set, sums the integrated
// version (1/pi) sum (-1)^{k+1} Gamma(ka)/k! sin(k pi a) x^{-ka} = P(S > x).
bool stable_series_large_x(double alpha, double x, bool tail, double& out) {
  Kahan acc;
  double max_term = 0.0;
  double lx = std::log(x);
  int n_used = 0, below = 0;
  for (int k = 1; k <= 400; ++k) {
    double s = sinpi(k * alpha);
    double lt = std::lgamma(k * alpha + (tail ? 0.0 : 1.0)) - std::lgamma(k + 1.0) -
                (k * alpha + (tail ? 0.0 : 1.0)) * lx;
    if (lt > 600.0) return false;
    double term = ((k & 1) ? 1.0 : -1.0) * s * std::exp(lt);
    acc.add(term);
    max_term = std::max(max_term, std::fabs(term));
    n_used = k;
    // compare the term magnitude ignoring sin(k pi a), which can vanish
    // identically for rational alpha without the series having converged
    below = std::exp(lt) < kEps * (std::fabs(acc.sum) + 1e-300) ? below + 1 : 0;
    if (below >= 3 && k > 3) break;
    if (k == 400) return false;  // did not converge fast enough
  }
  double noise = max_term * kEps * n_used;
  if (noise > 1e-11 * std::max(std::fabs(acc.sum), 1e-300)) return false;
  out = acc.sum / kPi;
  return out >= 0.0;
}

}  // namespace

double one_sided_stable_pdf(double alpha, double x) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("one_sided_stable_pdf: alpha must be in (0, 1)");
  }
  if (!(x > 0.0)) return 0.0;
  if (x >= 1.0) {
    double v;
    if (stable_series_large_x(alpha, x, false, v)) return v;
  }
  double a1 = 1.0 - alpha;
  double y = std::pow(x, -alpha / a1);
  double ly = std::log(y);
  auto integrand = [&](double phi) {
    if (phi >= kPi) return 0.0;
    double lu = log_zolotarev_u(alpha, phi);
    if (lu + ly > 690.0) return 0.0;  // U*y astronomic, exp(lu - U*y) -> 0
    double arg = lu - std::exp(lu) * y;
    return arg < -745.0 ? 0.0 : std::exp(arg);
  };
  const std::vector<double> knots = zolotarev_knots(alpha, y);
  double rough = 0.0;  // trapezoid over the layer-aware knots sets the scale
  double prev = integrand(knots[0]);
  for (std::size_t i = 1; i < knots.size(); ++i) {
    double cur = integrand(knots[i]);
    rough += 0.5 * (prev + cur) * (knots[i] - knots[i - 1]);
    prev = cur;
  }
  if (rough <= 0.0) return 0.0;
  double integral = adaptive_simpson_panels(integrand, knots, 1e-12 * rough, 30);
  return alpha / a1 * std::pow(x, -1.0 / a1) / kPi * integral;
}

double one_sided_stable_cdf(double alpha, double x) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("one_sided_stable_cdf: alpha must be in (0, 1)");
  }
  if (!(x > 0.0)) return 0.0;
  if (x >= 1.0) {
    double tail;
    if (stable_series_large_x(alpha, x, true, tail)) return 1.0 - tail;
  }
  double a1 = 1.0 - alpha;
  double y = std::pow(x, -alpha / a1);
  double ly = std::log(y);
  auto integrand = [&](double phi) {
    if (phi >= kPi) return 0.0;
    double lu = log_zolotarev_u(alpha, phi);
    if (lu + ly > 690.0) return 0.0;
    double uy = std::exp(lu) * y;
    return uy > 745.0 ? 0.0 : std::exp(-uy);
  };
  const std::vector<double> knots = zolotarev_knots(alpha, y);
  double rough = 0.0;
  double prev = integrand(knots[0]);
  for (std::size_t i = 1; i < knots.size(); ++i) {
    double cur = integrand(knots[i]);
    rough += 0.5 * (prev + cur) * (knots[i] - knots[i - 1]);
    prev = cur;
  }
  double tol = std::max(1e-300, 1e-12 * rough);
  return adaptive_simpson_panels(integrand, knots, tol, 30) / kPi;
}

// ---------------------------------------------------------------------------
// Wright / Mainardi function
// ---------------------------------------------------------------------------

namespace {

bool wright_series(double alpha, double z, double tol_rel, double& out, double& err) {
  Kahan acc;
  double max_term = 0.0;
  double lz = z > 0.0 ? std::log(z) : -std::numeric_limits<double>::infinity();
  int n = 0, below = 0;
  for (; n <= 2000; ++n) {
    int sign;
    double lr = log_rgamma(1.0 - alpha - alpha * n, sign);
    if (sign != 0) {
      double lt = (n == 0 ? 0.0 : n * lz) - std::lgamma(n + 1.0) + lr;
      if (lt > 700.0) return false;
      double term = sign * std::exp(lt);
      if (n & 1) term = -term;  // (-z)^n
      acc.add(term);
      max_term = std::max(max_term, std::fabs(term));
    }
    // tail control: |1/Gamma(1-a-an)| <= Gamma(a(n+1)) e / pi, so once n!
    // dominates the terms fall super-geometrically
    double bound = (n == 0 ? 0.0 : n * lz) - std::lgamma(n + 1.0) +
                   std::lgamma(alpha * (n + 1.0)) + 1.0;
    below = bound < std::log(kEps * (std::fabs(acc.sum) + 1e-300)) ? below + 1 : 0;
    if (below >= 3 && n > 6) break;
  }
  double noise = max_term * kEps * (n + 1);
  out = acc.sum;
  err = noise;
  return noise <= tol_rel * std::max(std::fabs(out), 1e-300);
}

}  // namespace

EvalResult wright(double alpha, double z) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("wright: alpha must be in (0, 1)");
  }
  if (z < 0.0) throw std::domain_error("wright: z must be >= 0");
  EvalResult r;
  if (z == 0.0) {
    r.value = rgamma(1.0 - alpha);
    r.abs_error_estimate = r.value * 4.0 * kEps;
    r.method = EvalMethod::series;
    return r;
  }
  double v, e;
  if (wright_series(alpha, z, 1e-9, v, e)) {
    r.value = std::max(v, 0.0);
    r.abs_error_estimate = e;
    r.method = EvalMethod::series;
    return r;
  }
  // M_a(z) = z^{-1-1/a} p_a(z^{-1/a}) / a  via the stable density
  double x = std::pow(z, -1.0 / alpha);
  double p = one_sided_stable_pdf(alpha, x);
  r.value = std::pow(z, -1.0 - 1.0 / alpha) * p / alpha;
  r.abs_error_estimate = 1e-10 * r.value + 1e-300;
  r.method = EvalMethod::integral;
  return r;
}

// ---------------------------------------------------------------------------
// Incomplete gamma
// ---------------------------------------------------------------------------

namespace {

// Continued fraction for Gamma(nu, z), z > 0 (modified Lentz).
double upper_gamma_cf(double nu, double z) {
  const double tiny = 1e-300;
  double b = z + 1.0 - nu;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 600; ++i) {
    double an = -i * (i - nu);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return std::exp(-z + nu * std::log(z)) * h;
}

// Series for the lower incomplete gamma, nu > 0.
double lower_gamma_series(double nu, double z) {
  double ap = nu;
  double sum = 1.0 / nu;
  double del = sum;
  for (int i = 0; i < 600; ++i) {
    ap += 1.0;
    del *= z / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-z + nu * std::log(z));
}

// Gamma(0, z) = E1(z) for small z, by the log series.
double e1_series(double z) {
  const double euler = 0.57721566490153286060651209;
  double sum = -euler - std::log(z);
  double term = 1.0;
  for (int n = 1; n <= 200; ++n) {
    term *= -z / n;
    double add = -term / n;
    sum += add;
    if (std::fabs(add) < std::fabs(sum) * kEps) break;
  }
  return sum;
}

}  // namespace

double upper_incomplete_gamma(double nu, double z) {
  if (!(z > 0.0)) throw std::domain_error("upper_incomplete_gamma: z must be > 0");
  if (z > nu + 1.0) return upper_gamma_cf(nu, z);
  if (nu == 0.0) return e1_series(z);
  if (nu > 0.0) return std::tgamma(nu) - lower_gamma_series(nu, z);
  // nu < 0, z small: lift by recurrence Gamma(nu,z) = (Gamma(nu+1,z) - z^nu e^-z)/nu
  int k = static_cast<int>(std::ceil(-nu)) + 1;
  double g = upper_incomplete_gamma(nu + k, z);
  for (int i = k - 1; i >= 0; --i) {
    double v = nu + i;
    g = (g - std::pow(z, v) * std::exp(-z)) / v;
  }
  return g;
}

double lower_incomplete_gamma(double nu, double z) {
  if (!(nu > 0.0)) throw std::domain_error("lower_incomplete_gamma: nu must be > 0");
  if (z <= 0.0) return 0.0;
  if (z < nu + 1.0) return lower_gamma_series(nu, z);
  return std::tgamma(nu) - upper_gamma_cf(nu, z);
}

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("regularized_gamma_q: a must be > 0");
  if (x <= 0.0) return 1.0;
  double lpref = -x + a * std::log(x) - std::lgamma(a);
  if (x < a + 1.0) {
    // P(a,x) by series, Q = 1 - P
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 1000; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    return 1.0 - sum * std::exp(lpref);
  }
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return std::exp(lpref) * h;
}

std::complex<double> lower_incomplete_gamma(double nu, std::complex<double> w) {
  if (!(nu > 0.0)) throw std::domain_error("lower_incomplete_gamma: nu must be > 0");
  if (std::abs(w) > 40.0) {
    throw std::domain_error("lower_incomplete_gamma: |w| too large for series");
  }
  // gamma(nu, w) = w^nu sum_n (-w)^n / (n! (nu + n))
  std::complex<double> sum(0.0, 0.0), term(1.0, 0.0);
  for (int n = 0; n <= 400; ++n) {
    sum += term / (nu + n);
    term *= -w / static_cast<double>(n + 1);
    if (std::abs(term) < kEps * (std::abs(sum) + 1e-280) && n > 4) break;
  }
  return std::pow(w, nu) * sum;
}

}  // namespace subdyn
