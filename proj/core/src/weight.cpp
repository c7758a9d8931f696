#include "greedylab/weight.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "greedylab/error.hpp"

namespace greedylab {

namespace {

double parse_double(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::parse, "bad number '" + s + "' in weight function");
  }
  if (used != s.size()) fail(ErrorCode::parse, "bad number '" + s + "' in weight function");
  return v;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

WeightFunction WeightFunction::constant(double c) { return {Kind::constant, c}; }
WeightFunction WeightFunction::alternating() { return {Kind::alternating, 0.0}; }
WeightFunction WeightFunction::reciprocal() { return {Kind::reciprocal, 0.0}; }
WeightFunction WeightFunction::power(double q) { return {Kind::power, q}; }

WeightFunction WeightFunction::geometric(double r) {
  if (r == 0.0) fail(ErrorCode::invalid_argument, "geometric weight needs r != 0");
  return {Kind::geometric, r};
}

WeightFunction WeightFunction::table(std::vector<double> values) {
  if (values.empty()) fail(ErrorCode::invalid_argument, "table weight needs at least one value");
  WeightFunction f(Kind::table, 0.0);
  f.table_ = std::move(values);
  return f;
}

WeightFunction WeightFunction::scaled(double factor) const {
  WeightFunction f = *this;
  f.scale_ *= factor;
  return f;
}

double WeightFunction::operator()(std::uint64_t n) const {
  if (n == 0) fail(ErrorCode::invalid_argument, "weight functions are defined on n >= 1");
  switch (kind_) {
    case Kind::alternating: return (n % 2 == 0) ? scale_ : -scale_;
    case Kind::table:
      if (n > table_.size()) {
        fail(ErrorCode::invalid_argument,
             "table weight undefined at n = " + std::to_string(n) + " (size " +
                 std::to_string(table_.size()) + ")");
      }
      return scale_ * table_[n - 1];
    default: return at(static_cast<double>(n));
  }
}

double WeightFunction::at(double n) const {
  switch (kind_) {
    case Kind::constant: return scale_ * param_;
    case Kind::alternating: return (std::fmod(n, 2.0) == 0.0) ? scale_ : -scale_;
    case Kind::reciprocal: return scale_ / n;
    case Kind::power: return scale_ * std::pow(n, -param_);
    case Kind::geometric: return scale_ * std::pow(param_, n);
    case Kind::table: return (*this)(static_cast<std::uint64_t>(n));
  }
  return 0.0;
}

std::optional<std::uint64_t> WeightFunction::domain_size() const {
  if (kind_ == Kind::table) return table_.size();
  return std::nullopt;
}

std::optional<Regularity> WeightFunction::regularity() const {
  const double s = std::abs(scale_);
  if (s == 0.0) return std::nullopt;
  switch (kind_) {
    case Kind::constant:
      if (param_ == 0.0) return std::nullopt;
      return Regularity{s * std::abs(param_), s * std::abs(param_)};
    case Kind::alternating: return Regularity{s, s};
    case Kind::power:
      if (param_ == 0.0) return Regularity{s, s};
      return std::nullopt;
    case Kind::geometric:
      if (std::abs(param_) == 1.0) return Regularity{s, s};
      return std::nullopt;
    case Kind::table: {
      auto [lo, hi] = std::minmax_element(table_.begin(), table_.end(),
                                          [](double a, double b) { return std::abs(a) < std::abs(b); });
      if (*lo == 0.0) return std::nullopt;
      return Regularity{s * std::abs(*lo), s * std::abs(*hi)};
    }
    case Kind::reciprocal: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<double> WeightFunction::ratio_infimum() const {
  if (scale_ <= 0.0) return std::nullopt;
  if (kind_ == Kind::power && param_ <= -1.0) {
    // n^{-q-1} is nondecreasing, so the infimum sits at n = 1.
    return scale_;
  }
  if (kind_ == Kind::geometric && param_ > 1.0) {
    const double peak = std::ceil(2.0 / std::log(param_)) + 2.0;
    double best = at(1.0);
    for (double n = 2.0; n <= peak; n += 1.0) best = std::min(best, at(n) / n);
    return best;
  }
  return std::nullopt;
}

std::string WeightFunction::describe() const {
  std::string out;
  switch (kind_) {
    case Kind::constant: out = "constant:" + format_double(param_); break;
    case Kind::alternating: out = "alternating"; break;
    case Kind::reciprocal: out = "reciprocal"; break;
    case Kind::power: out = "power:" + format_double(param_); break;
    case Kind::geometric: out = "geometric:" + format_double(param_); break;
    case Kind::table: {
      out = "table:";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i) out += ',';
        out += format_double(table_[i]);
      }
      break;
    }
  }
  if (scale_ != 1.0) out += "*" + format_double(scale_);
  return out;
}

WeightFunction WeightFunction::parse(std::string_view text) {
  std::string_view body = text;
  double scale = 1.0;
  if (auto star = text.rfind('*'); star != std::string_view::npos) {
    body = text.substr(0, star);
    scale = parse_double(text.substr(star + 1));
  }
  std::string_view name = body;
  std::string_view param;
  bool has_param = false;
  if (auto colon = body.find(':'); colon != std::string_view::npos) {
    name = body.substr(0, colon);
    param = body.substr(colon + 1);
    has_param = true;
  }
  auto need_param = [&](std::string_view what) {
    if (!has_param) fail(ErrorCode::parse, "weight '" + std::string(what) + "' needs a parameter");
    return parse_double(param);
  };

  WeightFunction f = constant(1.0);
  if (name == "constant" || name == "one") {
    f = constant(has_param ? parse_double(param) : 1.0);
  } else if (name == "alternating") {
    f = alternating();
  } else if (name == "reciprocal") {
    f = reciprocal();
  } else if (name == "power") {
    f = power(need_param(name));
  } else if (name == "geometric") {
    f = geometric(need_param(name));
  } else if (name == "table") {
    if (!has_param) fail(ErrorCode::parse, "weight 'table' needs comma separated values");
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= param.size()) {
      auto comma = param.find(',', start);
      auto piece = param.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      values.push_back(parse_double(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    f = table(std::move(values));
  } else {
    fail(ErrorCode::parse, "unknown weight function '" + std::string(name) + "'");
  }
  return f.scaled(scale);
}

}  // namespace greedylab
