#include "fracreg/frac_calc.hpp"

#include <cmath>

namespace fracreg {

namespace {

void require_finite(const TimeSeries& phi, const char* op) {
  if (!phi.values.allFinite())
    throw std::invalid_argument(std::string(op) + ": input series has non-finite values");
}

// Weights of the derivative of order m (1 or 2) of the Lagrange interpolant
// through nodes xs, evaluated at xe.
void lagrange_derivative_weights(const double* xs, int k, double xe, int m, double* w) {
  for (int i = 0; i < k; ++i) {
    double denom = 1.0;
    for (int j = 0; j < k; ++j)
      if (j != i) denom *= xs[i] - xs[j];
    double num = 0.0;
    if (m == 1) {
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        double prod = 1.0;
        for (int l = 0; l < k; ++l)
          if (l != i && l != j) prod *= xe - xs[l];
        num += prod;
      }
    } else {  // m == 2
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        for (int l = j + 1; l < k; ++l) {
          if (l == i) continue;
          double prod = 2.0;
          for (int q = 0; q < k; ++q)
            if (q != i && q != j && q != l) prod *= xe - xs[q];
          num += prod;
        }
      }
    }
    w[i] = num / denom;
  }
}

}  // namespace

Eigen::ArrayXd frac_integral_row(const TimeGrid& grid, double alpha, int n) {
  const auto& t = grid.nodes();
  Eigen::ArrayXd w = Eigen::ArrayXd::Zero(n + 1);
  const double tn = t[n];
  for (int j = 0; j < n; ++j) {
    const double h = t[j + 1] - t[j];
    const double a = tn - t[j + 1];
    const double b = tn - t[j];
    const double m0 = (std::pow(b, alpha) - std::pow(a, alpha)) / alpha;
    const double m1 =
        b * m0 - (std::pow(b, alpha + 1.0) - std::pow(a, alpha + 1.0)) / (alpha + 1.0);
    w[j] += m0 - m1 / h;
    w[j + 1] += m1 / h;
  }
  w /= std::tgamma(alpha);
  return w;
}

TimeSeries frac_integral(const TimeSeries& phi, FracOrder order) {
  require_finite(phi, "frac_integral");
  const double alpha = order.alpha;
  const auto& t = phi.grid.nodes();
  const int N = phi.grid.steps();
  const double inv_gamma = 1.0 / std::tgamma(alpha);

  Eigen::ArrayXd out(N + 1);
  out[0] = 0.0;
  for (int n = 1; n <= N; ++n) {
    const double tn = t[n];
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double h = t[j + 1] - t[j];
      const double a = tn - t[j + 1];
      const double b = tn - t[j];
      const double m0 = (std::pow(b, alpha) - std::pow(a, alpha)) / alpha;
      const double m1 =
          b * m0 - (std::pow(b, alpha + 1.0) - std::pow(a, alpha + 1.0)) / (alpha + 1.0);
      acc += phi.values[j] * m0 + (phi.values[j + 1] - phi.values[j]) * (m1 / h);
    }
    out[n] = acc * inv_gamma;
  }
  return TimeSeries(phi.grid, std::move(out));
}

Eigen::ArrayXd grid_derivative(const TimeGrid& grid, const Eigen::ArrayXd& values, int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("grid_derivative: order must be 1 or 2");
  const int N = grid.steps();
  const int k = order + 2;  // stencil size
  if (N + 1 < k) throw std::invalid_argument("grid_derivative: grid too small for stencil");
  const auto& t = grid.nodes();
  Eigen::ArrayXd out(N + 1);
  double xs[4], w[4];
  for (int i = 0; i <= N; ++i) {
    int lo = std::clamp(i - (k - 1) / 2, 0, N + 1 - k);
    for (int m = 0; m < k; ++m) xs[m] = t[lo + m];
    lagrange_derivative_weights(xs, k, t[i], order, w);
    double acc = 0.0;
    for (int m = 0; m < k; ++m) acc += w[m] * values[lo + m];
    out[i] = acc;
  }
  return out;
}

double initial_slope(const TimeSeries& phi) {
  const auto& t = phi.grid.nodes();
  double xs[3] = {t[0], t[1], t[2]}, w[3];
  lagrange_derivative_weights(xs, 3, t[0], 1, w);
  return w[0] * phi.values[0] + w[1] * phi.values[1] + w[2] * phi.values[2];
}

TimeSeries rl_derivative(const TimeSeries& phi, FracOrder order) {
  require_finite(phi, "rl_derivative");
  if (!order.in_equation_range())
    throw std::invalid_argument("rl_derivative: alpha must lie in (0, 2)");
  const double alpha = order.alpha;
  const int n = alpha <= 1.0 ? 1 : 2;
  TimeSeries g = (double(n) == alpha) ? phi : frac_integral(phi, FracOrder(n - alpha));
  return TimeSeries(phi.grid, grid_derivative(phi.grid, g.values, n));
}

TimeSeries caputo_derivative(const TimeSeries& phi, FracOrder order) {
  require_finite(phi, "caputo_derivative");
  if (!order.in_equation_range())
    throw std::invalid_argument("caputo_derivative: alpha must lie in (0, 2)");
  const double alpha = order.alpha;
  const int n = alpha <= 1.0 ? 1 : 2;

  Eigen::ArrayXd shifted = phi.values - phi.values[0];
  if (n == 2) shifted -= initial_slope(phi) * phi.grid.nodes();

  Eigen::ArrayXd dn = grid_derivative(phi.grid, shifted, n);
  if (double(n) == alpha) return TimeSeries(phi.grid, std::move(dn));
  return frac_integral(TimeSeries(phi.grid, std::move(dn)), FracOrder(n - alpha));
}

}  // namespace fracreg
