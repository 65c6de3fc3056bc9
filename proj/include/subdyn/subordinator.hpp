#ifndef SUBDYN_SUBORDINATOR_HPP
#define SUBDYN_SUBORDINATOR_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace subdyn {

// Thrown when an operation is asked for a subordinator family it does not
// cover (e.g. Lemma-style asymptotics for a compound Poisson process).
class unsupported_spec : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Jump-size law of a compound Poisson subordinator.
struct JumpDist {
  enum class Kind { exponential, pareto, deterministic };
  Kind kind = Kind::exponential;
  double p1 = 1.0;  // exponential: rate mu | pareto: tail index | deterministic: r
  double p2 = 0.0;  // pareto: scale x_m

  static JumpDist exponential(double mu);
  static JumpDist pareto(double tail_index, double scale);
  static JumpDist deterministic(double r);

  double tail(double t) const;          // P(R >= t)
  double laplace(double s) const;       // E[exp(-sR)], s >= 0
  double mean() const;                  // may be inf (pareto, tail index <= 1)
  bool has_moment(double q) const;
  double moment(double q) const;        // E[R^q]; requires has_moment(q)
  bool mgf_finite(double eta) const;
  double mgf(double eta) const;         // E[exp(eta R)]; requires mgf_finite
  std::string name() const;
};

enum class Variant {
  alpha_stable,
  gamma,
  truncated_stable,
  sum_stable,
  exp_weighted,
  distributed_order,
  compound_poisson,
};

// Immutable description of a subordinator family. Carries the closed-form
// analytic objects: Laplace exponent Phi, Levy tail kernel k, its Laplace
// transform K (Phi = lambda K), and the small-lambda asymptotic data.
class SubordinatorSpec {
 public:
  static SubordinatorSpec alpha_stable(double alpha);
  static SubordinatorSpec gamma_process(double a, double b);
  static SubordinatorSpec truncated_stable(double alpha, double delta);
  static SubordinatorSpec sum_stable(double alpha, double beta);
  static SubordinatorSpec exp_weighted(double alpha, double gamma_w);
  static SubordinatorSpec distributed_order();
  static SubordinatorSpec compound_poisson(double rate, JumpDist jumps);

  Variant variant() const { return variant_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double delta() const { return delta_; }
  double gamma_w() const { return gamma_w_; }
  double rate() const { return rate_; }
  const JumpDist& jumps() const { return jumps_; }

  bool is_compound_poisson() const { return variant_ == Variant::compound_poisson; }

  std::string name() const;
  nlohmann::json to_json() const;
  static SubordinatorSpec from_json(const nlohmann::json& j);
  std::uint64_t hash() const;  // FNV-1a over the canonical JSON encoding

 private:
  SubordinatorSpec() = default;
  Variant variant_ = Variant::alpha_stable;
  double alpha_ = 0, beta_ = 0, a_ = 0, b_ = 0, delta_ = 0, gamma_w_ = 0, rate_ = 0;
  JumpDist jumps_;
};

// Laplace exponent Phi(lambda), lambda >= 0 (Phi(0) = 0 by continuity).
double laplace_exponent(const SubordinatorSpec& spec, double lambda);
std::complex<double> laplace_exponent(const SubordinatorSpec& spec,
                                      std::complex<double> lambda);

// Levy tail kernel k(t) = sigma((t, inf)), t > 0.
double kernel_k(const SubordinatorSpec& spec, double t);

// K(lambda) = Laplace transform of k; Phi(lambda) = lambda K(lambda).
double kernel_laplace(const SubordinatorSpec& spec, double lambda);
std::complex<double> kernel_laplace(const SubordinatorSpec& spec,
                                    std::complex<double> lambda);

// N(t) = int_0^t k(s) ds, exact per family (the GFD product-integration
// moments and the renormalized-potential normalizer).
double kernel_integral(const SubordinatorSpec& spec, double t);

// Small-lambda behavior K(lambda) ~ lambda^{-gamma} Q(1/lambda).
struct AsymptoticParams {
  double gamma = 0.0;                        // in [0,1]
  std::function<double(double)> Q;           // slowly varying, Q(t) > 0
  std::string description;
};
AsymptoticParams asymptotic_params(const SubordinatorSpec& spec);

// Numerical probe of the four limit conditions on K and Phi.
struct LimitCheck {
  enum class Verdict { satisfied, failed, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  double last_value = 0.0;
  std::string note;
};
struct HypothesisReport {
  LimitCheck K_to_infinity_at_zero;
  LimitCheck K_to_zero_at_infinity;
  LimitCheck Phi_to_zero_at_zero;
  LimitCheck Phi_to_infinity_at_infinity;
  bool all_satisfied() const;
};
HypothesisReport check_hypotheses(const SubordinatorSpec& spec);

const char* to_string(LimitCheck::Verdict v);

}  // namespace subdyn

#endif
