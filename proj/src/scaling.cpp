#include "hcost/scaling.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "hcost/error.hpp"

namespace hcost {

ScalingFunction ScalingFunction::linear() { return {Kind::linear, 1.0, {}}; }

ScalingFunction ScalingFunction::logarithmic() { return {Kind::logarithmic, 1.0, {}}; }

ScalingFunction ScalingFunction::power(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) throw DataError("power scaling needs a positive exponent");
  return {Kind::power, exponent, {}};
}

ScalingFunction ScalingFunction::table(std::vector<double> values) {
  if (values.empty() || values.front() != 0.0) throw DataError("table scaling must start with f(0) = 0");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) throw DataError("table scaling must be strictly increasing");
  }
  return {Kind::table, 1.0, std::move(values)};
}

namespace {

double parse_double(std::string_view s) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DataError("bad number in scaling spec: " + std::string(s));
  return x;
}

}  // namespace

ScalingFunction ScalingFunction::parse(std::string_view spec) {
  if (spec == "linear") return linear();
  if (spec == "log") return logarithmic();
  if (spec == "square") return power(2.0);
  if (spec.starts_with("power:")) return power(parse_double(spec.substr(6)));
  if (spec.starts_with("table:")) {
    std::vector<double> values;
    auto rest = spec.substr(6);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      values.push_back(parse_double(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return table(std::move(values));
  }
  throw DataError("unknown scaling function '" + std::string(spec) + "'");
}

double ScalingFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::linear:
      return x;
    case Kind::logarithmic:
      return std::log1p(x);
    case Kind::power:
      return std::pow(x, exponent_);
    case Kind::table: {
      const double r = std::round(x);
      if (r != x || r < 0.0 || r >= static_cast<double>(table_.size()))
        throw DataError("table scaling evaluated outside its integer domain");
      return table_[static_cast<std::size_t>(r)];
    }
  }
  return x;
}

double ScalingFunction::domain_max() const noexcept {
  return kind_ == Kind::table ? static_cast<double>(table_.size() - 1) : std::numeric_limits<double>::infinity();
}

std::string ScalingFunction::name() const {
  switch (kind_) {
    case Kind::linear:
      return "linear";
    case Kind::logarithmic:
      return "log";
    case Kind::power: {
      char buf[32];
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, exponent_);
      (void)ec;
      return "power:" + std::string(buf, p);
    }
    case Kind::table: {
      std::string s = "table:";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        char buf[32];
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, table_[i]);
        (void)ec;
        if (i) s += ',';
        s.append(buf, p);
      }
      return s;
    }
  }
  return "linear";
}

}  // namespace hcost
