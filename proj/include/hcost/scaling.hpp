#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hcost {

/// Strictly increasing f with f(0) = 0, applied to subtree sizes in the
/// generalized cost.
class ScalingFunction {
 public:
  enum class Kind { linear, logarithmic, power, table };

  /// f(x) = x
  static ScalingFunction linear();
  /// f(x) = ln(1 + x)
  static ScalingFunction logarithmic();
  /// f(x) = x^a, a > 0
  static ScalingFunction power(double exponent);
  /// f(k) = values[k] on 0..values.size()-1; values[0] must be 0 and the
  /// sequence strictly increasing.
  static ScalingFunction table(std::vector<double> values);

  /// Accepts "linear", "log", "power:A" (also "square" for power:2) and
  /// "table:v0,v1,...". Throws DataError otherwise.
  static ScalingFunction parse(std::string_view spec);

  double operator()(double x) const;

  Kind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return exponent_; }
  /// Largest argument the function is defined on (infinity unless a table).
  double domain_max() const noexcept;
  std::string name() const;

 private:
  ScalingFunction(Kind k, double a, std::vector<double> t) : kind_(k), exponent_(a), table_(std::move(t)) {}

  Kind kind_ = Kind::linear;
  double exponent_ = 1.0;
  std::vector<double> table_;
};

}  // namespace hcost
