#include "metapool/normal.hpp"

#include <cmath>

#include "metapool/errors.hpp"
#include "metapool/util.hpp"

namespace metapool {

namespace {

// Rational-approximation erfc after W. J. Cody's SPECFUN, good to a few
// ulps over the whole double range. Split at |x| = 0.46875 and 4.

// erf(x) for |x| <= 0.46875
double erf_small(double x) {
  static const double a[5] = {3.16112374387056560e0, 1.13864154151050156e2,
                              3.77485237685302021e2, 3.20937758913846947e3,
                              1.85777706184603153e-1};
  static const double b[4] = {2.36012909523441209e1, 2.44024637934444173e2,
                              1.28261652607737228e3, 2.84423683343917062e3};
  const double z = x * x;
  double num = a[4] * z;
  double den = z;
  for (int i = 0; i < 3; ++i) {
    num = (num + a[i]) * z;
    den = (den + b[i]) * z;
  }
  return x * (num + a[3]) / (den + b[3]);
}

// Scaled exponential factor shared by both erfc branches: exp(-y^2)
// evaluated as exp(-ysq^2) * exp(-del) with ysq = trunc(16 y)/16, which
// keeps the argument splitting exact.
double exp_my2(double y) {
  const double ysq = std::trunc(y * 16.0) / 16.0;
  const double del = (y - ysq) * (y + ysq);
  return std::exp(-ysq * ysq) * std::exp(-del);
}

// erfc(y) for 0.46875 < y <= 4
double erfc_mid(double y) {
  static const double c[9] = {5.64188496988670089e-1, 8.88314979438837594e0,
                              6.61191906371416295e1,  2.98635138197400131e2,
                              8.81952221241769090e2,  1.71204761263407058e3,
                              2.05107837782607147e3,  1.23033935479799725e3,
                              2.15311535474403846e-8};
  static const double d[8] = {1.57449261107098347e1, 1.17693950891312499e2,
                              5.37181101862009858e2, 1.62138957456669019e3,
                              3.29079923573345963e3, 4.36261909014324716e3,
                              3.43936767414372164e3, 1.23033935480374942e3};
  double num = c[8] * y;
  double den = y;
  for (int i = 0; i < 7; ++i) {
    num = (num + c[i]) * y;
    den = (den + d[i]) * y;
  }
  return exp_my2(y) * (num + c[7]) / (den + d[7]);
}

// erfc(y) for y > 4
double erfc_large(double y) {
  static const double p[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                              1.25781726111229246e-1, 1.60837851487422766e-2,
                              6.58749161529837803e-4, 1.63153871373020978e-2};
  static const double q[5] = {2.56852019228982242e0,  1.87295284992346047e0,
                              5.27905102951428412e-1, 6.05183413124413191e-2,
                              2.33520497626869185e-3};
  static const double one_over_sqrt_pi = 5.6418958354775628695e-1;
  if (y >= 26.543) return 0.0;  // below the smallest normal double
  const double z = 1.0 / (y * y);
  double num = p[5] * z;
  double den = z;
  for (int i = 0; i < 4; ++i) {
    num = (num + p[i]) * z;
    den = (den + q[i]) * z;
  }
  double r = z * (num + p[4]) / (den + q[4]);
  r = (one_over_sqrt_pi - r) / y;
  return exp_my2(y) * r;
}

double erfc_impl(double x) {
  const double y = std::fabs(x);
  if (y <= 0.46875) return 1.0 - erf_small(x);
  const double r = y <= 4.0 ? erfc_mid(y) : erfc_large(y);
  return x > 0.0 ? r : 2.0 - r;
}

double horner(const double* coef, int n, double r) {
  double acc = coef[n - 1];
  for (int i = n - 2; i >= 0; --i) acc = acc * r + coef[i];
  return acc;
}

}  // namespace

double normal_cdf(double x) {
  static const double inv_sqrt2 = 7.0710678118654752440e-1;
  return 0.5 * erfc_impl(-x * inv_sqrt2);
}

// Wichura's PPND16 rational approximation.
double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw AnalysisError(errc::out_of_domain,
                        "normal_quantile: p = " + format_shortest(p) +
                            " outside (0, 1)");
  }
  static const double a[8] = {
      3.3871328727963666080e0,  1.3314166789178437745e2,
      1.9715909503065514427e3,  1.3731693765509461125e4,
      4.5921953931549871457e4,  6.7265770927008700853e4,
      3.3430575583588128105e4,  2.5090809287301226727e3};
  static const double b[8] = {
      1.0,                      4.2313330701600911252e1,
      6.8718700749205790830e2,  5.3941960214247511077e3,
      2.1213794301586595867e4,  3.9307895800092710610e4,
      2.8729085735721942674e4,  5.2264952788528545610e3};
  static const double c[8] = {
      1.42343711074968357734e0,  4.63033784615654529590e0,
      5.76949722146069140550e0,  3.64784832476320460504e0,
      1.27045825245236838258e0,  2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static const double d[8] = {
      1.0,                       2.05319162663775882187e0,
      1.67638483018380384940e0,  6.89767334985100004550e-1,
      1.48103976427480074590e-1, 1.51986665636164571966e-2,
      5.47593808499534494600e-4, 1.05075007164441684324e-9};
  static const double e[8] = {
      6.65790464350110377720e0,  5.46378491116411436990e0,
      1.78482653991729133580e0,  2.96560571828504891230e-1,
      2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static const double f[8] = {
      1.0,                       5.99832206555887937690e-1,
      1.36929880922735805310e-1, 1.48753612908506148525e-2,
      7.86869131145613259100e-4, 1.84631831751005468180e-5,
      1.42151175831644588870e-7, 2.04426310338993978564e-15};

  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * horner(a, 8, r) / horner(b, 8, r);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = horner(c, 8, r) / horner(d, 8, r);
  } else {
    r -= 5.0;
    value = horner(e, 8, r) / horner(f, 8, r);
  }
  return q < 0.0 ? -value : value;
}

}  // namespace metapool
