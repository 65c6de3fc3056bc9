#include "subdyn/laplace.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace subdyn {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kPi = 3.14159265358979323846;

// Stehfest weights V_k, k = 1..n, computed once per n in extended precision.
const std::vector<double>& stehfest_weights(int n) {
  static std::map<int, std::vector<double>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  int half = n / 2;
  std::vector<long double> fact(2 * n + 1, 1.0L);
  for (int i = 1; i <= 2 * n; ++i) fact[i] = fact[i - 1] * i;

  std::vector<double> w(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    long double sum = 0.0L;
    int j0 = (k + 1) / 2;
    int j1 = std::min(k, half);
    for (int j = j0; j <= j1; ++j) {
      long double num = std::pow(static_cast<long double>(j), half) * fact[2 * j];
      long double den = fact[half - j] * fact[j] * fact[j - 1] * fact[k - j] *
                        fact[2 * j - k];
      sum += num / den;
    }
    if ((half + k) % 2 != 0) sum = -sum;
    w[k] = static_cast<double>(sum);
  }
  return cache.emplace(n, std::move(w)).first->second;
}

}  // namespace

double invert_gaver_stehfest(const RealTransform& F, double t, int n) {
  if (n < 8 || n > 18 || n % 2 != 0) {
    throw std::invalid_argument("invert_gaver_stehfest: n must be even, in [8,18]");
  }
  if (!(t > 0.0)) throw std::invalid_argument("invert_gaver_stehfest: t must be > 0");
  const auto& w = stehfest_weights(n);
  double a = kLn2 / t;
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    double fk = F(k * a);
    sum += w[k] * fk;
    if (!std::isfinite(sum)) {
      throw std::overflow_error("invert_gaver_stehfest: weighted sum not finite");
    }
  }
  return a * sum;
}

double invert_talbot(const ComplexTransform& F, double t, int M) {
  if (M < 16) throw std::invalid_argument("invert_talbot: M must be >= 16");
  if (!(t > 0.0)) throw std::invalid_argument("invert_talbot: t must be > 0");
  const double r = 2.0 * M / (5.0 * t);
  // theta = 0 node
  std::complex<double> f0 = F(std::complex<double>(r, 0.0));
  double sum = 0.5 * std::exp(r * t) * f0.real();
  for (int k = 1; k < M; ++k) {
    double theta = k * kPi / M;
    double cot = std::cos(theta) / std::sin(theta);
    std::complex<double> s(r * theta * cot, r * theta);
    double sigma = theta + (theta * cot - 1.0) * cot;
    std::complex<double> val =
        std::exp(s * t) * F(s) * std::complex<double>(1.0, sigma);
    sum += val.real();
  }
  double result = sum * r / M;
  if (!std::isfinite(result)) {
    throw std::runtime_error("invert_talbot: contour evaluation not finite");
  }
  return result;
}

}  // namespace subdyn
