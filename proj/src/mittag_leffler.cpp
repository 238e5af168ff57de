#include "fracreg/mittag_leffler.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace fracreg {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// sin(pi*y) with argument reduction done on y, not on pi*y, so integer y
// gives an exact zero (Gamma poles must not leak rounding noise).
long double sin_pi(long double y) {
  const long double n = std::nearbyint(y);
  const long double r = y - n;
  if (r == 0.0L) return 0.0L;
  const long double s = std::sin(kPi * r);
  return std::fmod(std::fabs(n), 2.0L) == 1.0L ? -s : s;
}

// Reciprocal gamma, entire in y.  Reflection keeps lgammal on positive
// arguments where it is accurate.
long double rgamma(long double y) {
  if (y > 0.5L) {
    if (y > 1.0e17L) return 0.0L;
    long double lg = std::lgamma(y);
    if (lg > 11300.0L) return 0.0L;  // underflows long double anyway
    return std::exp(-lg);
  }
  long double s = sin_pi(y);
  if (s == 0.0L) return 0.0L;  // pole of Gamma
  long double lg = std::lgamma(1.0L - y);
  long double mag = std::exp(lg + std::log(std::fabs(s)) - std::log(kPi));
  return s > 0.0L ? mag : -mag;
}

// Power series sum_k z^k / Gamma(alpha k + beta) in long double.
// Safe when the largest term exp(|z|^{1/alpha}) stays well under the target
// accuracy divided by long double eps.
long double series(long double alpha, long double beta, long double z) {
  if (z == 0.0L) return rgamma(beta);
  const long double lnx = std::log(std::fabs(z));
  const bool neg = z < 0.0L;
  long double acc = 0.0L, comp = 0.0L;  // Kahan
  long double peak = std::pow(std::fabs(z), 1.0L / alpha) / alpha;
  long double maxabs = 0.0L;
  for (int k = 0; k < 200000; ++k) {
    const long double g = alpha * k + beta;
    long double term;
    if (g > 0.5L) {
      long double e = k * lnx - std::lgamma(g);
      if (e > 11300.0L) return std::numeric_limits<long double>::infinity();
      term = std::exp(e);
    } else {
      term = std::pow(std::fabs(z), (long double)k) * rgamma(g);
    }
    if (neg && (k & 1)) term = -term;
    const long double y = term - comp;
    const long double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
    maxabs = std::max(maxabs, std::fabs(term));
    if (k > peak + 8 && std::fabs(term) < 1e-25L * std::max(maxabs * 1e-22L, std::fabs(acc)))
      break;
  }
  return acc;
}

// Pole-pair contribution for alpha >= 1 (z = -x < 0):
// (2/alpha) Re[e^{s0} s0^{1-beta}], s0 = x^{1/alpha} e^{i pi/alpha}.
// At alpha == 1 the pair merges on the cut; the symmetric limit is
// e^{-x} x^{1-beta} cos(pi(1-beta)).
long double pole_terms(long double alpha, long double beta, long double x) {
  if (alpha < 1.0L) return 0.0L;
  const long double s = std::pow(x, 1.0L / alpha);
  if (alpha == 1.0L) return std::exp(-x) * std::pow(x, 1.0L - beta) * std::cos(kPi * (1.0L - beta));
  const long double phi = kPi / alpha;
  // e^{s0} s0^{1-beta} = exp(s cos(phi)) * s^{1-beta} * e^{i(s sin(phi) + (1-beta) phi)}
  const long double mag = std::exp(s * std::cos(phi)) * std::pow(s, 1.0L - beta);
  const long double arg = s * std::sin(phi) + (1.0L - beta) * phi;
  return (2.0L / alpha) * mag * std::cos(arg);
}

struct AsymResult {
  long double value;
  long double err;  // magnitude of the smallest retained/first dropped term
};

// Algebraic expansion -sum_{k>=1} z^{-k} / Gamma(beta - alpha k) plus pole
// terms, adaptively truncated at the smallest term.
AsymResult asymptotic(long double alpha, long double beta, long double x) {
  long double acc = pole_terms(alpha, beta, x);
  long double minterm = std::numeric_limits<long double>::infinity();
  long double prev = std::numeric_limits<long double>::infinity();
  for (int k = 1; k <= 300; ++k) {
    long double t = -std::pow(-1.0L / x, (long double)k) * rgamma(beta - alpha * k);
    long double at = std::fabs(t);
    if (at == 0.0L) continue;  // Gamma pole, not decay
    if (at > prev && k > 2) break;  // divergence point reached
    acc += t;
    prev = at;
    minterm = std::min(minterm, at);
    if (at < 1e-30L) break;
  }
  return {acc, minterm};
}

// Laplace inversion on the parabola w(u) = mu (1 + iu)^2:
//   E = poles + (mu/pi) Re  integral_R e^{w} w^{alpha-beta} / (w^alpha + x) (1 + iu) du,
// trapezoid rule, conjugate symmetry halves the work.
long double contour_once(long double alpha, long double beta, long double x, long double mu,
                         long double h) {
  using C = std::complex<long double>;
  const long double umax = std::sqrt(1.0L + 60.0L / mu);
  auto integrand = [&](long double u) -> long double {
    const C iu1(1.0L, u);
    const C w = mu * iu1 * iu1;
    const C lw = std::log(w);  // principal branch; w never on the cut
    const C f = std::exp(w + (alpha - beta) * lw) / (std::exp(alpha * lw) + x);
    return (f * iu1).real();
  };
  long double sum = 0.5L * integrand(0.0L);
  for (int j = 1; j * h <= umax; ++j) sum += integrand(j * h);
  long double val = (2.0L * mu / kPi) * h * sum;
  return val + pole_terms(alpha, beta, x);
}

long double contour(long double alpha, long double beta, long double x) {
  const long double s = std::pow(x, 1.0L / alpha);
  long double mu = 12.0L;
  if (alpha > 1.0L) {
    const long double im0 = s * std::sin(kPi / alpha);
    mu = std::max(mu, 0.55L * im0 + 3.0L);
  }
  const long double v1 = contour_once(alpha, beta, x, mu, 0.06L);
  const long double v2 = contour_once(alpha, beta, x, mu * 1.17L, 0.045L);
  if (std::fabs(v1 - v2) <= 2e-13L * std::max(std::fabs(v2), (long double)1e-300L)) return v2;
  return contour_once(alpha, beta, x, mu * 1.3L, 0.03L);
}

}  // namespace

double mittag_leffler(double alpha_, double beta_, double z_) {
  if (!(alpha_ > 0.0) || !std::isfinite(alpha_))
    throw std::invalid_argument("mittag_leffler: alpha must be positive");
  if (!std::isfinite(beta_) || !std::isfinite(z_))
    throw std::invalid_argument("mittag_leffler: non-finite argument");

  const long double alpha = alpha_, beta = beta_, z = z_;

  if (z_ == 0.0) return double(rgamma(beta));

  if (z_ > 0.0) {
    const long double s = std::pow(z, 1.0L / alpha);
    if (s > 700.0L) throw std::overflow_error("mittag_leffler: overflow for large positive z");
    const long double v = series(alpha, beta, z);
    if (!(std::fabs(v) <= std::numeric_limits<double>::max()))
      throw std::overflow_error("mittag_leffler: overflow for large positive z");
    return double(v);
  }

  // z < 0
  if (alpha == 1.0L && beta == 1.0L) return std::exp(z_);
  if (alpha == 1.0L && beta == 2.0L) return std::expm1(z_) / z_;

  const long double x = -z;
  const long double s = std::pow(x, 1.0L / alpha);

  if (s <= 12.0L) return double(series(alpha, beta, z));

  AsymResult a = asymptotic(alpha, beta, x);
  const long double scale = std::max(std::fabs(a.value), (long double)1e-300L);
  if (a.err <= 1e-14L * scale) return double(a.value);

  return double(contour(alpha, beta, x));
}

double ml_step_response(double alpha, double lambda, double g, double t) {
  if (t == 0.0) return 0.0;
  const double ta = std::pow(t, alpha);
  return g * ta * mittag_leffler(alpha, alpha + 1.0, -lambda * ta);
}

}  // namespace fracreg
