#include "subdyn/subordinator.hpp"

#include <cmath>
#include <sstream>

#include "subdyn/quadrature.hpp"
#include "subdyn/special_functions.hpp"

namespace subdyn {

namespace {

// (lambda - 1) / log(lambda), continuously extended across lambda = 1.
template <typename T>
T expm1_ratio(T lambda) {
  T w = lambda - 1.0;
  if (std::abs(w) < 1e-4) {
    // w / log1p(w) = 1 + w/2 - w^2/12 + w^3/24 + O(w^4)
    return 1.0 + w * (0.5 + w * (-1.0 / 12.0 + w / 24.0));
  }
  return w / std::log(lambda);
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// JumpDist
// ---------------------------------------------------------------------------

JumpDist JumpDist::exponential(double mu) {
  require(mu > 0.0, "JumpDist::exponential: rate must be > 0");
  JumpDist j;
  j.kind = Kind::exponential;
  j.p1 = mu;
  return j;
}

JumpDist JumpDist::pareto(double tail_index, double scale) {
  require(tail_index > 0.0 && scale > 0.0, "JumpDist::pareto: parameters must be > 0");
  JumpDist j;
  j.kind = Kind::pareto;
  j.p1 = tail_index;
  j.p2 = scale;
  return j;
}

JumpDist JumpDist::deterministic(double r) {
  require(r > 0.0, "JumpDist::deterministic: r must be > 0");
  JumpDist j;
  j.kind = Kind::deterministic;
  j.p1 = r;
  return j;
}

double JumpDist::tail(double t) const {
  if (t <= 0.0) return 1.0;
  switch (kind) {
    case Kind::exponential: return std::exp(-p1 * t);
    case Kind::pareto: return t <= p2 ? 1.0 : std::pow(p2 / t, p1);
    case Kind::deterministic: return t <= p1 ? 1.0 : 0.0;
  }
  return 0.0;
}

double JumpDist::laplace(double s) const {
  if (s == 0.0) return 1.0;
  switch (kind) {
    case Kind::exponential: return p1 / (p1 + s);
    case Kind::pareto: {
      double z = s * p2;
      return p1 * std::pow(z, p1) * upper_incomplete_gamma(-p1, z);
    }
    case Kind::deterministic: return std::exp(-s * p1);
  }
  return 0.0;
}

double JumpDist::mean() const {
  switch (kind) {
    case Kind::exponential: return 1.0 / p1;
    case Kind::pareto:
      return p1 > 1.0 ? p1 * p2 / (p1 - 1.0)
                      : std::numeric_limits<double>::infinity();
    case Kind::deterministic: return p1;
  }
  return 0.0;
}

bool JumpDist::has_moment(double q) const {
  return kind != Kind::pareto || q < p1;
}

double JumpDist::moment(double q) const {
  if (!has_moment(q)) {
    throw std::domain_error("JumpDist::moment: moment of this order is infinite");
  }
  switch (kind) {
    case Kind::exponential: return std::tgamma(1.0 + q) / std::pow(p1, q);
    case Kind::pareto: return p1 * std::pow(p2, q) / (p1 - q);
    case Kind::deterministic: return std::pow(p1, q);
  }
  return 0.0;
}

bool JumpDist::mgf_finite(double eta) const {
  if (eta <= 0.0) return true;
  switch (kind) {
    case Kind::exponential: return eta < p1;
    case Kind::pareto: return false;
    case Kind::deterministic: return true;
  }
  return false;
}

double JumpDist::mgf(double eta) const {
  if (!mgf_finite(eta)) {
    throw std::domain_error("JumpDist::mgf: E[exp(eta R)] is infinite");
  }
  switch (kind) {
    case Kind::exponential: return p1 / (p1 - eta);
    case Kind::pareto: break;  // unreachable, mgf_finite rejected it
    case Kind::deterministic: return std::exp(eta * p1);
  }
  return 0.0;
}

std::string JumpDist::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::exponential: os << "Exponential(mu=" << p1 << ")"; break;
    case Kind::pareto: os << "Pareto(index=" << p1 << ",scale=" << p2 << ")"; break;
    case Kind::deterministic: os << "Deterministic(r=" << p1 << ")"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// SubordinatorSpec constructors / serialization
// ---------------------------------------------------------------------------

SubordinatorSpec SubordinatorSpec::alpha_stable(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "alpha_stable: alpha must be in (0,1)");
  SubordinatorSpec s;
  s.variant_ = Variant::alpha_stable;
  s.alpha_ = alpha;
  return s;
}

SubordinatorSpec SubordinatorSpec::gamma_process(double a, double b) {
  require(a > 0.0 && b > 0.0, "gamma_process: a, b must be > 0");
  SubordinatorSpec s;
  s.variant_ = Variant::gamma;
  s.a_ = a;
  s.b_ = b;
  return s;
}

SubordinatorSpec SubordinatorSpec::truncated_stable(double alpha, double delta) {
  require(alpha > 0.0 && alpha < 1.0, "truncated_stable: alpha must be in (0,1)");
  require(delta > 0.0, "truncated_stable: delta must be > 0");
  SubordinatorSpec s;
  s.variant_ = Variant::truncated_stable;
  s.alpha_ = alpha;
  s.delta_ = delta;
  return s;
}

SubordinatorSpec SubordinatorSpec::sum_stable(double alpha, double beta) {
  require(alpha > 0.0 && alpha < beta && beta < 1.0,
          "sum_stable: need 0 < alpha < beta < 1");
  SubordinatorSpec s;
  s.variant_ = Variant::sum_stable;
  s.alpha_ = alpha;
  s.beta_ = beta;
  return s;
}

SubordinatorSpec SubordinatorSpec::exp_weighted(double alpha, double gamma_w) {
  require(alpha > 0.0 && alpha < 1.0, "exp_weighted: alpha must be in (0,1)");
  require(gamma_w >= 0.0, "exp_weighted: gamma must be >= 0");
  SubordinatorSpec s;
  s.variant_ = Variant::exp_weighted;
  s.alpha_ = alpha;
  s.gamma_w_ = gamma_w;
  return s;
}

SubordinatorSpec SubordinatorSpec::distributed_order() {
  SubordinatorSpec s;
  s.variant_ = Variant::distributed_order;
  return s;
}

SubordinatorSpec SubordinatorSpec::compound_poisson(double rate, JumpDist jumps) {
  require(rate > 0.0, "compound_poisson: rate must be > 0");
  SubordinatorSpec s;
  s.variant_ = Variant::compound_poisson;
  s.rate_ = rate;
  s.jumps_ = jumps;
  return s;
}

std::string SubordinatorSpec::name() const {
  std::ostringstream os;
  switch (variant_) {
    case Variant::alpha_stable: os << "AlphaStable(alpha=" << alpha_ << ")"; break;
    case Variant::gamma: os << "Gamma(a=" << a_ << ",b=" << b_ << ")"; break;
    case Variant::truncated_stable:
      os << "TruncatedStable(alpha=" << alpha_ << ",delta=" << delta_ << ")";
      break;
    case Variant::sum_stable:
      os << "SumStable(alpha=" << alpha_ << ",beta=" << beta_ << ")";
      break;
    case Variant::exp_weighted:
      os << "ExpWeighted(alpha=" << alpha_ << ",gamma=" << gamma_w_ << ")";
      break;
    case Variant::distributed_order: os << "DistributedOrder"; break;
    case Variant::compound_poisson:
      os << "CompoundPoisson(rate=" << rate_ << "," << jumps_.name() << ")";
      break;
  }
  return os.str();
}

nlohmann::json SubordinatorSpec::to_json() const {
  nlohmann::json j;
  switch (variant_) {
    case Variant::alpha_stable:
      j = {{"variant", "AlphaStable"}, {"params", {{"alpha", alpha_}}}};
      break;
    case Variant::gamma:
      j = {{"variant", "Gamma"}, {"params", {{"a", a_}, {"b", b_}}}};
      break;
    case Variant::truncated_stable:
      j = {{"variant", "TruncatedStable"},
           {"params", {{"alpha", alpha_}, {"delta", delta_}}}};
      break;
    case Variant::sum_stable:
      j = {{"variant", "SumStable"}, {"params", {{"alpha", alpha_}, {"beta", beta_}}}};
      break;
    case Variant::exp_weighted:
      j = {{"variant", "ExpWeighted"},
           {"params", {{"alpha", alpha_}, {"gamma", gamma_w_}}}};
      break;
    case Variant::distributed_order:
      j = {{"variant", "DistributedOrder"}, {"params", nlohmann::json::object()}};
      break;
    case Variant::compound_poisson: {
      nlohmann::json jumps;
      switch (jumps_.kind) {
        case JumpDist::Kind::exponential:
          jumps = {{"variant", "Exponential"}, {"params", {{"mu", jumps_.p1}}}};
          break;
        case JumpDist::Kind::pareto:
          jumps = {{"variant", "Pareto"},
                   {"params", {{"tail_index", jumps_.p1}, {"scale", jumps_.p2}}}};
          break;
        case JumpDist::Kind::deterministic:
          jumps = {{"variant", "Deterministic"}, {"params", {{"r", jumps_.p1}}}};
          break;
      }
      j = {{"variant", "CompoundPoisson"},
           {"params", {{"rate", rate_}}},
           {"jumps", jumps}};
      break;
    }
  }
  return j;
}

namespace {

void check_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) {
      if (it.key() == k) ok = true;
    }
    if (!ok) {
      throw std::invalid_argument(std::string("unknown key '") + it.key() + "' in " +
                                  where);
    }
  }
}

double need_number(const nlohmann::json& params, const char* key, const char* where) {
  if (!params.contains(key) || !params[key].is_number()) {
    throw std::invalid_argument(std::string("missing numeric '") + key + "' in " +
                                where);
  }
  return params[key].get<double>();
}

JumpDist jumps_from_json(const nlohmann::json& j) {
  check_keys(j, {"variant", "params"}, "jumps");
  if (!j.contains("variant") || !j["variant"].is_string()) {
    throw std::invalid_argument("jumps: missing variant");
  }
  std::string v = j["variant"].get<std::string>();
  nlohmann::json params = j.value("params", nlohmann::json::object());
  if (v == "Exponential") {
    check_keys(params, {"mu"}, "jumps.params");
    return JumpDist::exponential(need_number(params, "mu", "jumps.params"));
  }
  if (v == "Pareto") {
    check_keys(params, {"tail_index", "scale"}, "jumps.params");
    return JumpDist::pareto(need_number(params, "tail_index", "jumps.params"),
                            need_number(params, "scale", "jumps.params"));
  }
  if (v == "Deterministic") {
    check_keys(params, {"r"}, "jumps.params");
    return JumpDist::deterministic(need_number(params, "r", "jumps.params"));
  }
  throw std::invalid_argument("jumps: unknown variant '" + v + "'");
}

}  // namespace

SubordinatorSpec SubordinatorSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("spec: expected JSON object");
  check_keys(j, {"variant", "params", "jumps"}, "spec");
  if (!j.contains("variant") || !j["variant"].is_string()) {
    throw std::invalid_argument("spec: missing variant");
  }
  std::string v = j["variant"].get<std::string>();
  nlohmann::json params = j.value("params", nlohmann::json::object());
  if (v != "CompoundPoisson" && j.contains("jumps")) {
    throw std::invalid_argument("spec: 'jumps' only valid for CompoundPoisson");
  }
  if (v == "AlphaStable") {
    check_keys(params, {"alpha"}, "params");
    return alpha_stable(need_number(params, "alpha", "params"));
  }
  if (v == "Gamma") {
    check_keys(params, {"a", "b"}, "params");
    return gamma_process(need_number(params, "a", "params"),
                         need_number(params, "b", "params"));
  }
  if (v == "TruncatedStable") {
    check_keys(params, {"alpha", "delta"}, "params");
    return truncated_stable(need_number(params, "alpha", "params"),
                            need_number(params, "delta", "params"));
  }
  if (v == "SumStable") {
    check_keys(params, {"alpha", "beta"}, "params");
    return sum_stable(need_number(params, "alpha", "params"),
                      need_number(params, "beta", "params"));
  }
  if (v == "ExpWeighted") {
    check_keys(params, {"alpha", "gamma"}, "params");
    return exp_weighted(need_number(params, "alpha", "params"),
                        need_number(params, "gamma", "params"));
  }
  if (v == "DistributedOrder") {
    check_keys(params, {}, "params");
    return distributed_order();
  }
  if (v == "CompoundPoisson") {
    check_keys(params, {"rate"}, "params");
    if (!j.contains("jumps")) {
      throw std::invalid_argument("CompoundPoisson: missing 'jumps'");
    }
    return compound_poisson(need_number(params, "rate", "params"),
                            jumps_from_json(j["jumps"]));
  }
  throw std::invalid_argument("spec: unknown variant '" + v + "'");
}

std::uint64_t SubordinatorSpec::hash() const {
  std::string s = to_json().dump();
  std::uint64_t h = 14695981039346656037ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Analytic objects
// ---------------------------------------------------------------------------

double kernel_laplace(const SubordinatorSpec& spec, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("kernel_laplace: lambda must be > 0");
  switch (spec.variant()) {
    case Variant::alpha_stable:
      return std::pow(lambda, spec.alpha() - 1.0);
    case Variant::gamma:
      return spec.a() / lambda * std::log1p(lambda / spec.b());
    case Variant::truncated_stable: {
      double a = spec.alpha(), d = spec.delta();
      double g1 = std::tgamma(1.0 - a);
      return (std::pow(lambda, a - 1.0) * lower_incomplete_gamma(1.0 - a, lambda * d) -
              std::pow(d, -a) * (-std::expm1(-lambda * d)) / lambda) /
             g1;
    }
    case Variant::sum_stable:
      return std::pow(lambda, spec.alpha() - 1.0) + std::pow(lambda, spec.beta() - 1.0);
    case Variant::exp_weighted:
      return std::pow(lambda + spec.gamma_w(), spec.alpha() - 1.0);
    case Variant::distributed_order:
      return expm1_ratio(lambda) / lambda;
    case Variant::compound_poisson:
      return spec.rate() * (1.0 - spec.jumps().laplace(lambda)) / lambda;
  }
  throw std::logic_error("kernel_laplace: unhandled variant");
}

std::complex<double> kernel_laplace(const SubordinatorSpec& spec,
                                    std::complex<double> lambda) {
  using C = std::complex<double>;
  switch (spec.variant()) {
    case Variant::alpha_stable:
      return std::pow(lambda, C(spec.alpha() - 1.0, 0.0));
    case Variant::gamma:
      return spec.a() / lambda * std::log(1.0 + lambda / spec.b());
    case Variant::truncated_stable: {
      double a = spec.alpha(), d = spec.delta();
      double g1 = std::tgamma(1.0 - a);
      C w = lambda * d;
      C li = lower_incomplete_gamma(1.0 - a, w);
      return (std::pow(lambda, C(a - 1.0, 0.0)) * li -
              std::pow(d, -a) * (1.0 - std::exp(-w)) / lambda) /
             g1;
    }
    case Variant::sum_stable:
      return std::pow(lambda, C(spec.alpha() - 1.0, 0.0)) +
             std::pow(lambda, C(spec.beta() - 1.0, 0.0));
    case Variant::exp_weighted:
      return std::pow(lambda + spec.gamma_w(), C(spec.alpha() - 1.0, 0.0));
    case Variant::distributed_order:
      return expm1_ratio(lambda) / lambda;
    case Variant::compound_poisson:
      throw unsupported_spec("kernel_laplace: no contour evaluation for CPP");
  }
  throw std::logic_error("kernel_laplace: unhandled variant");
}

double laplace_exponent(const SubordinatorSpec& spec, double lambda) {
  if (lambda < 0.0) throw std::domain_error("laplace_exponent: lambda must be >= 0");
  if (lambda == 0.0) return 0.0;
  if (spec.variant() == Variant::gamma) {
    return spec.a() * std::log1p(lambda / spec.b());  // exact form, no 1/lambda trip
  }
  return lambda * kernel_laplace(spec, lambda);
}

std::complex<double> laplace_exponent(const SubordinatorSpec& spec,
                                      std::complex<double> lambda) {
  return lambda * kernel_laplace(spec, lambda);
}

double kernel_k(const SubordinatorSpec& spec, double t) {
  if (!(t > 0.0)) throw std::domain_error("kernel_k: t must be > 0");
  switch (spec.variant()) {
    case Variant::alpha_stable:
      return std::pow(t, -spec.alpha()) * rgamma(1.0 - spec.alpha());
    case Variant::gamma:
      return spec.a() * upper_incomplete_gamma(0.0, spec.b() * t);
    case Variant::truncated_stable: {
      double a = spec.alpha(), d = spec.delta();
      if (t > d) return 0.0;
      return (std::pow(t, -a) - std::pow(d, -a)) * rgamma(1.0 - a);
    }
    case Variant::sum_stable:
      return std::pow(t, -spec.alpha()) * rgamma(1.0 - spec.alpha()) +
             std::pow(t, -spec.beta()) * rgamma(1.0 - spec.beta());
    case Variant::exp_weighted:
      return std::pow(t, -spec.alpha()) * rgamma(1.0 - spec.alpha()) *
             std::exp(-spec.gamma_w() * t);
    case Variant::distributed_order: {
      // k(t) = (1/t) int_0^1 exp(a log t) / Gamma(a) da, evaluated so the
      // integrand never overflows; for |log t| large the mass concentrates
      // at one endpoint and a Laplace-type substitution keeps it resolved.
      double lt = std::log(t);
      double I;
      if (std::fabs(lt) <= 20.0) {
        I = gauss_legendre_64([&](double a) { return std::exp(a * lt) * rgamma(a); },
                              0.0, 1.0);
      } else if (lt < 0.0) {
        double L = -lt;
        I = gauss_legendre_64(
                [&](double u) { return std::exp(-u) * rgamma(u / L); }, 0.0,
                std::min(L, 45.0)) /
            L;
      } else {
        I = gauss_legendre_64(
                [&](double u) { return std::exp(lt - u) * rgamma(1.0 - u / lt); },
                0.0, std::min(lt, 45.0)) /
            lt;
      }
      return I / t;
    }
    case Variant::compound_poisson:
      return spec.rate() * spec.jumps().tail(t);
  }
  throw std::logic_error("kernel_k: unhandled variant");
}

double kernel_integral(const SubordinatorSpec& spec, double t) {
  if (t < 0.0) throw std::domain_error("kernel_integral: t must be >= 0");
  if (t == 0.0) return 0.0;
  switch (spec.variant()) {
    case Variant::alpha_stable:
      return std::pow(t, 1.0 - spec.alpha()) * rgamma(2.0 - spec.alpha());
    case Variant::gamma:
      return spec.a() * (t * upper_incomplete_gamma(0.0, spec.b() * t) +
                         (-std::expm1(-spec.b() * t)) / spec.b());
    case Variant::truncated_stable: {
      double a = spec.alpha(), d = spec.delta();
      double g1 = std::tgamma(1.0 - a);
      if (t >= d) return a * std::pow(d, 1.0 - a) / ((1.0 - a) * g1);
      return (std::pow(t, 1.0 - a) / (1.0 - a) - t * std::pow(d, -a)) / g1;
    }
    case Variant::sum_stable:
      return std::pow(t, 1.0 - spec.alpha()) * rgamma(2.0 - spec.alpha()) +
             std::pow(t, 1.0 - spec.beta()) * rgamma(2.0 - spec.beta());
    case Variant::exp_weighted: {
      double a = spec.alpha(), g = spec.gamma_w();
      if (g == 0.0) return std::pow(t, 1.0 - a) * rgamma(2.0 - a);
      return std::pow(g, a - 1.0) * lower_incomplete_gamma(1.0 - a, g * t) /
             std::tgamma(1.0 - a);
    }
    case Variant::distributed_order: {
      // N(t) = int_0^1 t^a / Gamma(a+1) da, same overflow-safe treatment
      double lt = std::log(t);
      if (std::fabs(lt) <= 20.0) {
        return gauss_legendre_64(
            [&](double a) { return std::exp(a * lt) * rgamma(a + 1.0); }, 0.0, 1.0);
      }
      if (lt < 0.0) {
        double L = -lt;
        return gauss_legendre_64(
                   [&](double u) { return std::exp(-u) * rgamma(1.0 + u / L); },
                   0.0, std::min(L, 45.0)) /
               L;
      }
      return gauss_legendre_64(
                 [&](double u) { return std::exp(lt - u) * rgamma(2.0 - u / lt); },
                 0.0, std::min(lt, 45.0)) /
             lt;
    }
    case Variant::compound_poisson: {
      double lp = spec.rate();
      const JumpDist& J = spec.jumps();
      switch (J.kind) {
        case JumpDist::Kind::exponential:
          return lp * (-std::expm1(-J.p1 * t)) / J.p1;
        case JumpDist::Kind::deterministic:
          return lp * std::min(t, J.p1);
        case JumpDist::Kind::pareto: {
          double ai = J.p1, xm = J.p2;
          if (t <= xm) return lp * t;
          double tail_part;
          if (ai == 1.0) {
            tail_part = xm * std::log(t / xm);
          } else {
            tail_part = std::pow(xm, ai) *
                        (std::pow(t, 1.0 - ai) - std::pow(xm, 1.0 - ai)) / (1.0 - ai);
          }
          return lp * (xm + tail_part);
        }
      }
      break;
    }
  }
  throw std::logic_error("kernel_integral: unhandled variant");
}

// ---------------------------------------------------------------------------
// Asymptotics and hypothesis probing
// ---------------------------------------------------------------------------

AsymptoticParams asymptotic_params(const SubordinatorSpec& spec) {
  AsymptoticParams p;
  switch (spec.variant()) {
    case Variant::alpha_stable:
      p.gamma = 1.0 - spec.alpha();
      p.Q = [](double) { return 1.0; };
      p.description = "gamma=1-alpha, Q=1";
      return p;
    case Variant::sum_stable: {
      double d = spec.alpha() - spec.beta();  // negative
      p.gamma = 1.0 - spec.alpha();
      p.Q = [d](double t) { return 1.0 + std::pow(t, d); };
      p.description = "gamma=1-alpha, Q(t)=1+t^(alpha-beta)";
      return p;
    }
    case Variant::gamma: {
      double c = spec.a() / spec.b();
      p.gamma = 0.0;
      p.Q = [c](double) { return c; };
      p.description = "gamma=0, Q=a/b (degenerate: K(0) finite)";
      return p;
    }
    case Variant::truncated_stable: {
      // K(0) = int_0^delta k < inf, so the kernel scale is a constant:
      // gamma = 0 with Q = N(inf), like the Gamma subordinator.
      double c = kernel_integral(spec, spec.delta());
      p.gamma = 0.0;
      p.Q = [c](double) { return c; };
      p.description = "gamma=0, Q=N(inf) (degenerate: K(0) finite)";
      return p;
    }
    case Variant::exp_weighted: {
      if (spec.gamma_w() == 0.0) return asymptotic_params(
          SubordinatorSpec::alpha_stable(spec.alpha()));
      double c = std::pow(spec.gamma_w(), spec.alpha() - 1.0);
      p.gamma = 0.0;
      p.Q = [c](double) { return c; };
      p.description = "gamma=0, Q=gamma_w^(alpha-1) (degenerate: K(0) finite)";
      return p;
    }
    case Variant::distributed_order:
      p.gamma = 1.0;
      p.Q = [](double t) { return 1.0 / std::log(t); };
      p.description = "gamma=1, Q(t)=1/log t";
      return p;
    case Variant::compound_poisson:
      throw unsupported_spec(
          "asymptotic_params: CPP violates the kernel hypotheses; no (gamma, Q)");
  }
  throw std::logic_error("asymptotic_params: unhandled variant");
}

namespace {

LimitCheck probe_limit(const std::function<double(double)>& f, bool at_zero,
                       bool to_infinity) {
  LimitCheck c;
  double v[9];
  for (int k = 1; k <= 8; ++k) {
    double lam = at_zero ? std::pow(10.0, -k) : std::pow(10.0, k);
    v[k] = f(lam);
  }
  c.last_value = v[8];
  bool rising = v[6] < v[7] && v[7] < v[8];
  bool falling = v[6] > v[7] && v[7] > v[8];
  bool plateau = std::fabs(v[8] - v[7]) <= 1e-3 * std::fabs(v[7]);
  if (to_infinity) {
    if (rising && v[8] >= 1e3) {
      c.verdict = LimitCheck::Verdict::satisfied;
    } else if (plateau || falling) {
      c.verdict = LimitCheck::Verdict::failed;
      c.note = "levels off near " + std::to_string(v[8]);
    } else {
      c.verdict = LimitCheck::Verdict::inconclusive;
      c.note = "still rising but below 1e3 at the last probe";
    }
  } else {
    if (falling && std::fabs(v[8]) <= 1e-3) {
      c.verdict = LimitCheck::Verdict::satisfied;
    } else if ((plateau && std::fabs(v[8]) > 1e-3) || rising) {
      c.verdict = LimitCheck::Verdict::failed;
      c.note = "levels off near " + std::to_string(v[8]);
    } else {
      c.verdict = LimitCheck::Verdict::inconclusive;
      c.note = "still falling but above 1e-3 at the last probe";
    }
  }
  return c;
}

}  // namespace

bool HypothesisReport::all_satisfied() const {
  using V = LimitCheck::Verdict;
  return K_to_infinity_at_zero.verdict == V::satisfied &&
         K_to_zero_at_infinity.verdict == V::satisfied &&
         Phi_to_zero_at_zero.verdict == V::satisfied &&
         Phi_to_infinity_at_infinity.verdict == V::satisfied;
}

HypothesisReport check_hypotheses(const SubordinatorSpec& spec) {
  auto K = [&](double l) { return kernel_laplace(spec, l); };
  auto Phi = [&](double l) { return laplace_exponent(spec, l); };
  HypothesisReport r;
  r.K_to_infinity_at_zero = probe_limit(K, true, true);
  r.K_to_zero_at_infinity = probe_limit(K, false, false);
  r.Phi_to_zero_at_zero = probe_limit(Phi, true, false);
  r.Phi_to_infinity_at_infinity = probe_limit(Phi, false, true);
  return r;
}

const char* to_string(LimitCheck::Verdict v) {
  switch (v) {
    case LimitCheck::Verdict::satisfied: return "satisfied";
    case LimitCheck::Verdict::failed: return "failed";
    case LimitCheck::Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace subdyn
