#pragma once

#include "fracreg/time_grid.hpp"

namespace fracreg {

/// Riemann-Liouville integral (I^alpha phi)(t) = Gamma(alpha)^{-1} *
/// integral_0^t (t-s)^{alpha-1} phi(s) ds, evaluated at every grid node by
/// product integration: the piecewise-linear interpolant of phi is integrated
/// exactly against the kernel.  Exact on piecewise-linear phi; weights are
/// nonnegative, so phi >= 0 implies I^alpha phi >= 0.
TimeSeries frac_integral(const TimeSeries& phi, FracOrder order);

/// Riemann-Liouville derivative D^alpha phi = (d/dt)^n I^{n-alpha} phi with
/// n-1 <= alpha < n, n in {1,2}.  The outer derivative is an order-2
/// finite difference on the (possibly graded) grid, so output near t = 0 is
/// only as good as I^{n-alpha} phi is smooth there.
TimeSeries rl_derivative(const TimeSeries& phi, FracOrder order);

/// Caputo derivative: the Taylor head phi(0) + 1_{alpha>1} phi'(0) t is
/// subtracted and the result is differentiated.  Computed in the commuted
/// form I^{n-alpha} (d/dt)^n (phi - head), which is exactly zero on the head
/// and avoids finite-differencing the weakly singular I^{n-alpha} phi.
TimeSeries caputo_derivative(const TimeSeries& phi, FracOrder order);

/// Discrete derivative of order `order` (1 or 2) on an arbitrary strictly
/// increasing grid.  Interior stencils are centered, boundary stencils
/// one-sided; all stencils carry one extra node, so first derivatives are
/// exact on quadratics and second derivatives on cubics.
Eigen::ArrayXd grid_derivative(const TimeGrid& grid, const Eigen::ArrayXd& values, int order);

/// One-sided estimate of phi'(0) from the first three nodes (second order).
double initial_slope(const TimeSeries& phi);

/// Quadrature weights w_j with (I^alpha phi)(t_n) = sum_j w_j phi(t_j),
/// row n of the product-integration rule.  Exposed for the dense solver.
Eigen::ArrayXd frac_integral_row(const TimeGrid& grid, double alpha, int n);

}  // namespace fracreg
