#pragma once

namespace fracreg {

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) for real z.
///
/// Intended use is the spectral oracle for constant-coefficient fractional
/// solves, so the negative real axis is the hot path.  Evaluation switches
/// between three representations:
///   - power series (long double) near the origin,
///   - algebraic asymptotic expansion plus, for alpha >= 1, the pole-pair
///     contribution (2/alpha) Re[e^{s0} s0^{1-beta}], s0 = |z|^{1/alpha}
///     e^{i pi/alpha}, deep on the negative axis,
///   - a parabolic Laplace-inversion contour in the band where neither of
///     the above reaches the target accuracy.
/// Relative error <= 1e-10 for |z| <= 100 and alpha in (0, 2).
///
/// Throws std::invalid_argument for alpha <= 0 and std::overflow_error when
/// the result exceeds the double range (large positive z).
double mittag_leffler(double alpha, double beta, double z);

/// Solution at time t of d^alpha u = -lambda u + g (Caputo, zero initial
/// data, constant g):  u(t) = g t^alpha E_{alpha, alpha+1}(-lambda t^alpha).
double ml_step_response(double alpha, double lambda, double g, double t);

}  // namespace fracreg
