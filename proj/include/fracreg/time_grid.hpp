#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace fracreg {

/// Time grid on [0, T].  Nodes t_n = T * (n/N)^grading; grading = 1 gives
/// the uniform grid, grading > 1 clusters nodes at t = 0 where fractional
/// kernels are weakly singular.
class TimeGrid {
 public:
  TimeGrid(double T, int steps, double grading = 1.0) : T_(T), N_(steps), grading_(grading) {
    if (!(T > 0.0)) throw std::invalid_argument("TimeGrid: T must be positive");
    if (N_ < 1) throw std::invalid_argument("TimeGrid: need at least one step");
    if (!(grading_ >= 1.0)) throw std::invalid_argument("TimeGrid: grading exponent must be >= 1");
    nodes_.resize(N_ + 1);
    for (int n = 0; n <= N_; ++n)
      nodes_[n] = T_ * std::pow(double(n) / double(N_), grading_);
    nodes_[N_] = T_;
  }

  /// Default grading used to resolve the t^alpha startup layer of order-alpha
  /// problems: max(1, 2/alpha) capped at 4.
  static double default_grading(double alpha) { return std::min(4.0, std::max(1.0, 2.0 / alpha)); }

  double final_time() const { return T_; }
  int steps() const { return N_; }
  int size() const { return N_ + 1; }
  double grading() const { return grading_; }
  bool uniform() const { return grading_ == 1.0; }
  double node(int n) const { return nodes_[n]; }
  const Eigen::ArrayXd& nodes() const { return nodes_; }

  bool operator==(const TimeGrid& o) const {
    return T_ == o.T_ && N_ == o.N_ && grading_ == o.grading_;
  }

 private:
  double T_;
  int N_;
  double grading_;
  Eigen::ArrayXd nodes_;
};

/// Real-valued samples on the nodes of a TimeGrid.
struct TimeSeries {
  TimeGrid grid;
  Eigen::ArrayXd values;

  TimeSeries(const TimeGrid& g, Eigen::ArrayXd v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
      throw std::invalid_argument("TimeSeries: value count must equal node count");
  }
  TimeSeries(const TimeGrid& g, double fill = 0.0)
      : grid(g), values(Eigen::ArrayXd::Constant(g.size(), fill)) {}

  template <class F>
  static TimeSeries sample(const TimeGrid& g, F&& f) {
    Eigen::ArrayXd v(g.size());
    for (int n = 0; n < g.size(); ++n) v[n] = f(g.node(n));
    return TimeSeries(g, std::move(v));
  }
};

/// Fractional order with the validity ranges used across the library.
struct FracOrder {
  double alpha;

  explicit FracOrder(double a) : alpha(a) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw std::invalid_argument("FracOrder: alpha must be positive and finite");
  }
  /// Orders admissible for the evolution equation (and for D^alpha).
  bool in_equation_range() const { return alpha > 0.0 && alpha < 2.0; }
};

}  // namespace fracreg
