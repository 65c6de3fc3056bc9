#include "subdyn/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace subdyn {

namespace {

double simpson_step(const RealFn& f, double a, double m, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth,
                    int max_depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double h6 = (b - a) / 12.0;
  double left = h6 * (fa + 4.0 * flm + fm);
  double right = h6 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  // second test: delta at the round-off floor of the panel itself
  if (depth >= max_depth || std::fabs(delta) <= 15.0 * tol ||
      std::fabs(delta) <= 8.0 * 2.2e-16 * (std::fabs(left) + std::fabs(right))) {
    return left + right + delta / 15.0;
  }
  double child_tol = std::max(0.5 * tol, 0.25 * 2.2e-16 * std::fabs(whole));
  return simpson_step(f, a, lm, m, fa, flm, fm, left, child_tol, depth + 1, max_depth) +
         simpson_step(f, m, rm, b, fm, frm, fb, right, child_tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_simpson(const RealFn& f, double a, double b, double tol,
                        int max_depth) {
  if (!(b > a)) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, m, b, fa, fm, fb, whole, tol, 0, max_depth);
}

double adaptive_simpson_panels(const RealFn& f, const std::vector<double>& knots,
                               double tol, int max_depth) {
  double sum = 0.0;
  double panel_tol = tol / static_cast<double>(knots.size() > 1 ? knots.size() - 1 : 1);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    sum += adaptive_simpson(f, knots[i], knots[i + 1], panel_tol, max_depth);
  }
  return sum;
}

TailQuadResult integrate_to_infinity(const RealFn& f, double a, double first_width,
                                     double tol, int max_doublings) {
  TailQuadResult res;
  double lo = a, width = first_width;
  double prev_inc = 0.0;
  for (int k = 0; k < max_doublings; ++k) {
    double inc = adaptive_simpson(f, lo, lo + width, tol * 0.25);
    res.value += inc;
    res.last_increment = inc;
    if (k > 0 && std::fabs(inc) < tol && std::fabs(prev_inc) < tol) {
      res.converged = true;
      return res;
    }
    prev_inc = inc;
    lo += width;
    width *= 2.0;
  }
  return res;
}

double gauss_legendre_64(const RealFn& f, double a, double b) {
  // Abscissas/weights for n=64 on [-1,1], positive half (symmetric).
  static const std::array<double, 32> x = {
      0.0243502926634244325089558, 0.0729931217877990394495429,
      0.1214628192961205544703765, 0.1696444204239928180373136,
      0.2174236437400070841496487, 0.2646871622087674163739642,
      0.3113228719902109561575127, 0.3572201583376681159504426,
      0.4022701579639916036957668, 0.4463660172534640879849477,
      0.4894031457070529574785263, 0.5312794640198945456580139,
      0.5718956462026340342838781, 0.6111553551723932502488530,
      0.6489654712546573398577612, 0.6852363130542332425635584,
      0.7198818501716108268489402, 0.7528199072605318966118638,
      0.7839723589433414076102205, 0.8132653151227975597419233,
      0.8406292962525803627516915, 0.8659993981540928197607834,
      0.8893154459951141058534040, 0.9105221370785028057563807,
      0.9295691721319395758214902, 0.9464113748584028160624815,
      0.9610087996520537189186141, 0.9733268277899109637418535,
      0.9833362538846259569312993, 0.9910133714767443207393824,
      0.9963401167719552793469245, 0.9993050417357721394569056};
  static const std::array<double, 32> w = {
      0.0486909570091397203833654, 0.0485754674415034269347991,
      0.0483447622348029571697695, 0.0479993885964583077281262,
      0.0475401657148303086622822, 0.0469681828162100173253263,
      0.0462847965813144172959532, 0.0454916279274181444797710,
      0.0445905581637565630601347, 0.0435837245293234533768279,
      0.0424735151236535890073398, 0.0412625632426235286101563,
      0.0399537411327203413866569, 0.0385501531786156291289625,
      0.0370551285402400460404151, 0.0354722132568823838106931,
      0.0338051618371416093915655, 0.0320579283548515535854675,
      0.0302346570724024788679741, 0.0283396726142594832275113,
      0.0263774697150546586716918, 0.0243527025687108733381776,
      0.0222701738083832541592983, 0.0201348231535302093723403,
      0.0179517157756973430850453, 0.0157260304760247193219660,
      0.0134630478967186425980608, 0.0111681394601311288185905,
      0.0088467598263639477230309, 0.0065044579689783628561174,
      0.0041470332605624676352875, 0.0017832807216964329472961};
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 32; ++i) {
    s += w[i] * (f(c + h * x[i]) + f(c - h * x[i]));
  }
  return s * h;
}

}  // namespace subdyn
