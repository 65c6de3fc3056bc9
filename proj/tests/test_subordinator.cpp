#include <doctest.h>

#include <cmath>
#include <vector>

#include "subdyn/quadrature.hpp"
#include "subdyn/rng.hpp"
#include "subdyn/subordinator.hpp"

using namespace subdyn;

namespace {

std::vector<SubordinatorSpec> catalog() {
  return {
      SubordinatorSpec::alpha_stable(0.5),
      SubordinatorSpec::alpha_stable(0.3),
      SubordinatorSpec::alpha_stable(0.7),
      SubordinatorSpec::gamma_process(1.0, 1.0),
      SubordinatorSpec::gamma_process(2.0, 0.5),
      SubordinatorSpec::truncated_stable(0.5, 1.0),
      SubordinatorSpec::truncated_stable(0.4, 0.25),
      SubordinatorSpec::sum_stable(0.3, 0.7),
      SubordinatorSpec::exp_weighted(0.5, 1.0),
      SubordinatorSpec::exp_weighted(0.6, 0.0),
      SubordinatorSpec::distributed_order(),
      SubordinatorSpec::compound_poisson(2.0, JumpDist::exponential(1.0)),
      SubordinatorSpec::compound_poisson(1.0, JumpDist::deterministic(1.0)),
      SubordinatorSpec::compound_poisson(1.5, JumpDist::pareto(2.5, 0.5)),
  };
}

// Mass of k below t0 ~ 1e-280, where double arithmetic cannot represent the
// integrand. Nonzero only for the distributed-order kernel, whose N(t) =
// (1/L)(1 + g/L + (g^2 - pi^2/6)/L^2 + O(1/L^3)), L = log(1/t), from
// 1/Gamma(1+x) = 1 + g x + (g^2/2 - pi^2/12) x^2 + ...
double sliver_below(const SubordinatorSpec& spec, double t0) {
  if (spec.variant() != Variant::distributed_order) return 0.0;
  const double g = 0.57721566490153286;
  double L = std::log(1.0 / t0);
  return (1.0 + g / L + (g * g - M_PI * M_PI / 6.0) / (L * L)) / L;
}

// int_0^inf e^{-lam t} k(t) dt by quadrature that respects the t->0
// singularity: t = exp(-e^v) on [t0, 0.1] (handles even the 1/(t log^2 t)
// distributed-order kernel), doubling windows above, analytic sliver below.
double kernel_laplace_by_quadrature(const SubordinatorSpec& spec, double lam) {
  auto f = [&](double t) { return std::exp(-lam * t) * kernel_k(spec, t); };
  auto g = [&](double v) {
    double ev = std::exp(v);
    double t = std::exp(-ev);
    return t > 1e-280 ? f(t) * t * ev : 0.0;
  };
  double v0 = std::log(std::log(1.0 / 0.1));
  double v1 = std::log(std::log(1e280));
  std::vector<double> knots{v0};
  for (double v = std::ceil(v0 * 8.0) / 8.0; v < v1; v += 0.125) knots.push_back(v);
  knots.push_back(v1);
  double head = adaptive_simpson_panels(g, knots, 1e-12);
  double tail = integrate_to_infinity(f, 0.1, 0.1, 1e-12).value;
  return head + tail + sliver_below(spec, 1e-280);
}

}  // namespace

TEST_CASE("laplace exponent closed forms") {
  CHECK(laplace_exponent(SubordinatorSpec::alpha_stable(0.5), 4.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(laplace_exponent(SubordinatorSpec::compound_poisson(
                             2.0, JumpDist::deterministic(1.0)),
                         0.0) == 0.0);
  CHECK(laplace_exponent(SubordinatorSpec::gamma_process(1.0, 1.0),
                         std::exp(1.0) - 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(laplace_exponent(SubordinatorSpec::alpha_stable(0.5), -1.0),
                  std::domain_error);
}

TEST_CASE("kernel closed forms") {
  // gamma_w = 0 reduces the weighted kernel to the stable one
  for (double t : {0.2, 1.0, 7.0}) {
    CHECK(kernel_k(SubordinatorSpec::exp_weighted(0.6, 0.0), t) ==
          doctest::Approx(kernel_k(SubordinatorSpec::alpha_stable(0.6), t))
              .epsilon(1e-14));
  }
  // truncated kernel vanishes past the cutoff
  CHECK(kernel_k(SubordinatorSpec::truncated_stable(0.5, 1.0), 2.0) == 0.0);
  // CPP kernel is rate * P(R >= t)
  CHECK(kernel_k(SubordinatorSpec::compound_poisson(3.0, JumpDist::exponential(2.0)),
                 1.0) == doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(kernel_k(SubordinatorSpec::alpha_stable(0.5), 0.0),
                  std::domain_error);
}

TEST_CASE("kernel laplace transform closed forms") {
  CHECK(kernel_laplace(SubordinatorSpec::sum_stable(0.3, 0.7), 1.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(kernel_laplace(SubordinatorSpec::alpha_stable(0.5), 4.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  double e = std::exp(1.0);
  CHECK(kernel_laplace(SubordinatorSpec::distributed_order(), e) ==
        doctest::Approx((e - 1.0) / e).epsilon(1e-14));
  // removable singularity at lambda = 1
  CHECK(kernel_laplace(SubordinatorSpec::distributed_order(), 1.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(kernel_laplace(SubordinatorSpec::distributed_order(), 1.0 + 1e-9) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("Phi(lambda) = lambda K(lambda) across the catalog") {
  for (const auto& spec : catalog()) {
    CAPTURE(spec.name());
    for (double lam : {0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
      double lhs = laplace_exponent(spec, lam);
      double rhs = lam * kernel_laplace(spec, lam);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("K equals the quadrature transform of k for every variant") {
  for (const auto& spec : catalog()) {
    CAPTURE(spec.name());
    for (double lam : {0.1, 0.5, 2.0, 10.0}) {
      CAPTURE(lam);
      double expected = kernel_laplace(spec, lam);
      double got = kernel_laplace_by_quadrature(spec, lam);
      CHECK(got == doctest::Approx(expected).epsilon(1e-6));
    }
  }
}

TEST_CASE("kernel integral N(t) matches quadrature of k") {
  for (const auto& spec : catalog()) {
    CAPTURE(spec.name());
    for (double t : {0.3, 1.0, 4.0}) {
      CAPTURE(t);
      auto g = [&](double v) {  // t' = exp(-e^v) substitution below t/8
        double ev = std::exp(v);
        double tt = std::exp(-ev);
        return tt > 1e-280 ? kernel_k(spec, tt) * tt * ev : 0.0;
      };
      double cut = t / 8.0;
      double v0 = std::log(std::log(1.0 / cut));
      double v1 = std::log(std::log(1e280));
      std::vector<double> knots{v0};
      for (double v = std::ceil(v0 * 8.0) / 8.0; v < v1; v += 0.125) knots.push_back(v);
      knots.push_back(v1);
      double head = adaptive_simpson_panels(g, knots, 1e-12);
      double body = adaptive_simpson([&](double s) { return kernel_k(spec, s); },
                                     cut, t, 1e-12);
      CHECK(kernel_integral(spec, t) ==
            doctest::Approx(head + body + sliver_below(spec, 1e-280)).epsilon(1e-7));
    }
  }
}

TEST_CASE("k is nonincreasing on random pairs") {
  Rng rng(20240517, 0);
  for (const auto& spec : catalog()) {
    CAPTURE(spec.name());
    for (int i = 0; i < 200; ++i) {
      double t1 = 1e-3 * std::pow(1e6, rng.uniform());
      double t2 = 1e-3 * std::pow(1e6, rng.uniform());
      if (t1 > t2) std::swap(t1, t2);
      CHECK(kernel_k(spec, t1) >= kernel_k(spec, t2) - 1e-12);
    }
  }
}

TEST_CASE("Phi is nondecreasing and concave on a probe grid") {
  for (const auto& spec : catalog()) {
    CAPTURE(spec.name());
    std::vector<double> lam, phi;
    for (double l = 1e-3; l <= 1e3; l *= 1.25) {
      lam.push_back(l);
      phi.push_back(laplace_exponent(spec, l));
    }
    for (std::size_t i = 1; i < lam.size(); ++i) {
      CHECK(phi[i] >= phi[i - 1] - 1e-12 * std::fabs(phi[i]));
    }
    // concavity: slopes of successive chords nonincreasing
    for (std::size_t i = 2; i < lam.size(); ++i) {
      double s1 = (phi[i - 1] - phi[i - 2]) / (lam[i - 1] - lam[i - 2]);
      double s2 = (phi[i] - phi[i - 1]) / (lam[i] - lam[i - 1]);
      CHECK(s2 <= s1 * (1.0 + 1e-9) + 1e-14);
    }
  }
}

TEST_CASE("hypothesis report per the probing heuristic") {
  auto stable = check_hypotheses(SubordinatorSpec::alpha_stable(0.5));
  CHECK(stable.all_satisfied());

  auto cpp = check_hypotheses(
      SubordinatorSpec::compound_poisson(1.0, JumpDist::exponential(1.0)));
  CHECK(cpp.Phi_to_infinity_at_infinity.verdict == LimitCheck::Verdict::failed);

  auto gam = check_hypotheses(SubordinatorSpec::gamma_process(1.0, 1.0));
  CHECK(gam.K_to_infinity_at_zero.verdict == LimitCheck::Verdict::failed);
  CHECK(gam.K_to_infinity_at_zero.last_value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("asymptotic parameters") {
  auto ss = asymptotic_params(SubordinatorSpec::sum_stable(0.3, 0.7));
  CHECK(ss.gamma == doctest::Approx(0.7));
  CHECK(ss.Q(10.0) == doctest::Approx(1.0 + std::pow(10.0, -0.4)).epsilon(1e-14));

  auto as = asymptotic_params(SubordinatorSpec::alpha_stable(0.5));
  CHECK(as.gamma == doctest::Approx(0.5));
  CHECK(as.Q(123.0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(asymptotic_params(SubordinatorSpec::compound_poisson(
                      1.0, JumpDist::exponential(1.0))),
                  unsupported_spec);
}

TEST_CASE("asymptotic consistency: K(l) l^gamma / Q(1/l) -> 1 as l -> 0") {
  for (const auto& spec : catalog()) {
    if (spec.is_compound_poisson()) continue;
    CAPTURE(spec.name());
    auto ap = asymptotic_params(spec);
    double lam = 1e-6;
    double ratio = kernel_laplace(spec, lam) * std::pow(lam, ap.gamma) / ap.Q(1.0 / lam);
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.05));
  }
}

TEST_CASE("slowly varying Q: Q(cx)/Q(x) -> 1 along a log grid") {
  // convergence can be logarithmic (Q = 1/log t), so check the deviation
  // shrinks along x = 1e8, 1e16, 1e32 and ends small
  for (const auto& spec : catalog()) {
    if (spec.is_compound_poisson()) continue;
    CAPTURE(spec.name());
    auto ap = asymptotic_params(spec);
    for (double c : {0.5, 2.0, 10.0}) {
      CAPTURE(c);
      double prev = 1e9;
      for (double x : {1e8, 1e16, 1e32}) {
        double dev = std::fabs(ap.Q(c * x) / ap.Q(x) - 1.0);
        CHECK(dev <= prev + 1e-12);
        prev = dev;
      }
      CHECK(prev < 0.04);
    }
  }
}

TEST_CASE("json round trip is lossless") {
  for (const auto& spec : catalog()) {
    CAPTURE(spec.name());
    auto j = spec.to_json();
    auto back = SubordinatorSpec::from_json(j);
    CHECK(back.to_json().dump() == j.dump());
    CHECK(back.hash() == spec.hash());
  }
  // bit-exactness through text serialization
  auto s = SubordinatorSpec::alpha_stable(0.1 + 0.2 * 1e-3);
  auto back = SubordinatorSpec::from_json(
      nlohmann::json::parse(s.to_json().dump()));
  CHECK(back.alpha() == s.alpha());
}

TEST_CASE("json validation rejects malformed specs") {
  using nlohmann::json;
  CHECK_THROWS_AS(SubordinatorSpec::from_json(json::parse(
                      R"({"variant":"AlphaStable","params":{"alpha":0.5},"extra":1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(SubordinatorSpec::from_json(json::parse(
                      R"({"variant":"AlphaStable","params":{"a":0.5}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(SubordinatorSpec::from_json(json::parse(
                      R"({"variant":"NoSuch","params":{}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(SubordinatorSpec::from_json(json::parse(
                      R"({"variant":"AlphaStable","params":{"alpha":1.5}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(SubordinatorSpec::from_json(json::parse(
                      R"({"variant":"SumStable","params":{"alpha":0.7,"beta":0.3}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(SubordinatorSpec::from_json(json::parse(
                      R"({"variant":"Gamma","params":{"a":1,"b":1},"jumps":{}})")),
                  std::invalid_argument);
  // CPP requires the jumps object
  CHECK_THROWS_AS(SubordinatorSpec::from_json(json::parse(
                      R"({"variant":"CompoundPoisson","params":{"rate":1}})")),
                  std::invalid_argument);
  CHECK_NOTHROW(SubordinatorSpec::from_json(json::parse(
      R"({"variant":"CompoundPoisson","params":{"rate":1},
          "jumps":{"variant":"Pareto","params":{"tail_index":2,"scale":1}}})")));
}

TEST_CASE("jump distribution moments and transforms") {
  auto exp1 = JumpDist::exponential(2.0);
  CHECK(exp1.mean() == doctest::Approx(0.5));
  CHECK(exp1.moment(2.0) == doctest::Approx(2.0 / 4.0));
  CHECK(exp1.laplace(1.0) == doctest::Approx(2.0 / 3.0));
  CHECK(exp1.mgf(1.0) == doctest::Approx(2.0));
  CHECK_FALSE(exp1.mgf_finite(2.0));

  auto par = JumpDist::pareto(2.5, 0.5);
  CHECK(par.has_moment(2.0));
  CHECK_FALSE(par.has_moment(2.5));
  CHECK(par.mean() == doctest::Approx(2.5 * 0.5 / 1.5));
  CHECK_FALSE(par.mgf_finite(0.1));
  // laplace transform via quadrature oracle
  double lam = 1.3;
  auto f = [&](double r) {
    return std::exp(-lam * r) * 2.5 * std::pow(0.5, 2.5) * std::pow(r, -3.5);
  };
  double direct = integrate_to_infinity(f, 0.5, 0.5, 1e-13).value;
  CHECK(par.laplace(lam) == doctest::Approx(direct).epsilon(1e-9));

  auto det = JumpDist::deterministic(2.0);
  CHECK(det.tail(2.0) == 1.0);
  CHECK(det.tail(2.0 + 1e-12) == 0.0);
  CHECK(det.moment(3.0) == doctest::Approx(8.0));
}
