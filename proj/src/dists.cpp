#include "fifogap/dists.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "fifogap/error.hpp"

namespace fifogap {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

void require(bool ok, std::string_view what, double value) {
  if (!ok) throw ValidationError(fmt::format("invalid distribution parameter {} = {}", what, value));
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double parse_number(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ValidationError(fmt::format("cannot parse distribution parameter '{}'", s));
  }
  return v;
}

}  // namespace

void validate(const UtilityDistribution& d) {
  std::visit(Overloaded{
                 [](const Exponential& e) { require(positive_finite(e.theta), "theta", e.theta); },
                 [](const LogNormal& l) {
                   require(std::isfinite(l.mu), "mu", l.mu);
                   require(positive_finite(l.sigma), "sigma", l.sigma);
                 },
                 [](const Rayleigh& r) { require(positive_finite(r.sigma), "sigma", r.sigma); },
                 [](const Levy& l) {
                   require(std::isfinite(l.mu), "mu", l.mu);
                   require(positive_finite(l.sigma), "sigma", l.sigma);
                 },
                 [](const Pareto& p) { require(positive_finite(p.alpha), "alpha", p.alpha); },
             },
             d);
}

std::size_t family_index(const UtilityDistribution& d) { return d.index(); }

std::string to_string(const UtilityDistribution& d) {
  return std::visit(
      Overloaded{
          [](const Exponential& e) { return fmt::format("Exponential({})", e.theta); },
          [](const LogNormal& l) { return fmt::format("LogNormal({},{})", l.mu, l.sigma); },
          [](const Rayleigh& r) { return fmt::format("Rayleigh({})", r.sigma); },
          [](const Levy& l) { return fmt::format("Levy({},{})", l.mu, l.sigma); },
          [](const Pareto& p) { return fmt::format("Pareto({})", p.alpha); },
      },
      d);
}

UtilityDistribution parse_distribution(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  const auto open = compact.find('(');
  if (open == std::string::npos || compact.empty() || compact.back() != ')') {
    throw ValidationError(fmt::format("distribution '{}' is not of the form Name(params)", text));
  }
  const std::string name = lower(std::string_view(compact).substr(0, open));
  std::string_view inner = std::string_view(compact).substr(open + 1, compact.size() - open - 2);
  std::vector<double> params;
  while (!inner.empty()) {
    const auto comma = inner.find(',');
    params.push_back(parse_number(inner.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
    if (inner.empty()) throw ValidationError(fmt::format("trailing comma in '{}'", text));
  }

  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw ValidationError(fmt::format("distribution '{}' expects {} parameter(s), got {}", name,
                                        count, params.size()));
    }
  };

  UtilityDistribution d;
  if (name == "exponential") {
    expect(1);
    d = Exponential{params[0]};
  } else if (name == "lognormal") {
    expect(2);
    d = LogNormal{params[0], params[1]};
  } else if (name == "rayleigh") {
    expect(1);
    d = Rayleigh{params[0]};
  } else if (name == "levy") {
    expect(2);
    d = Levy{params[0], params[1]};
  } else if (name == "pareto") {
    expect(1);
    d = Pareto{params[0]};
  } else {
    throw ValidationError(fmt::format("unknown distribution '{}'", name));
  }
  validate(d);
  return d;
}

bool is_heavy_tailed(const UtilityDistribution& d) {
  return std::holds_alternative<Levy>(d) || std::holds_alternative<Pareto>(d);
}

double pdf(const UtilityDistribution& d, double x) {
  using std::numbers::pi;
  return std::visit(
      Overloaded{
          [x](const Exponential& e) { return x > 0.0 ? std::exp(-x / e.theta) / e.theta : 0.0; },
          [x](const LogNormal& l) {
            if (!(x > 0.0)) return 0.0;
            const double z = (std::log(x) - l.mu) / l.sigma;
            return std::exp(-0.5 * z * z) / (x * l.sigma * std::sqrt(2.0 * pi));
          },
          [x](const Rayleigh& r) {
            if (!(x > 0.0)) return 0.0;
            const double s2 = r.sigma * r.sigma;
            return x / s2 * std::exp(-x * x / (2.0 * s2));
          },
          [x](const Levy& l) {
            if (!(x > l.mu)) return 0.0;
            const double t = x - l.mu;
            return std::sqrt(l.sigma / (2.0 * pi * t * t * t)) * std::exp(-l.sigma / (2.0 * t));
          },
          [x](const Pareto& p) { return x >= 1.0 ? p.alpha / std::pow(x, p.alpha + 1.0) : 0.0; },
      },
      d);
}

double cdf(const UtilityDistribution& d, double x) {
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  return std::visit(
      Overloaded{
          [x](const Exponential& e) { return x > 0.0 ? -std::expm1(-x / e.theta) : 0.0; },
          [x](const LogNormal& l) {
            if (!(x > 0.0)) return 0.0;
            return 0.5 * std::erfc(-(std::log(x) - l.mu) / (l.sigma * std::numbers::sqrt2));
          },
          [x](const Rayleigh& r) {
            return x > 0.0 ? -std::expm1(-x * x / (2.0 * r.sigma * r.sigma)) : 0.0;
          },
          [x](const Levy& l) {
            if (!(x > l.mu)) return 0.0;
            return std::erfc(std::sqrt(l.sigma / (2.0 * (x - l.mu))));
          },
          [x](const Pareto& p) { return x >= 1.0 ? 1.0 - std::pow(x, -p.alpha) : 0.0; },
      },
      d);
}

double sample_one(const UtilityDistribution& d, RandomStream& rng) {
  return std::visit(
      Overloaded{
          [&rng](const Exponential& e) { return -e.theta * std::log(rng.uniform_open01()); },
          [&rng](const LogNormal& l) { return std::exp(l.mu + l.sigma * rng.standard_normal()); },
          [&rng](const Rayleigh& r) {
            return r.sigma * std::sqrt(-2.0 * std::log(rng.uniform_open01()));
          },
          [&rng](const Levy& l) {
            const double z = rng.standard_normal();
            return l.mu + l.sigma / (z * z);
          },
          [&rng](const Pareto& p) { return std::pow(rng.uniform_open01(), -1.0 / p.alpha); },
      },
      d);
}

std::vector<double> sample(const UtilityDistribution& d, std::size_t n, RandomStream& rng) {
  validate(d);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_one(d, rng));
  return out;
}

std::vector<double> sample_gas(double lo, double hi, std::size_t n, RandomStream& rng) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
    throw ValidationError(fmt::format("gas interval needs 0 < lo <= hi, got [{}, {}]", lo, hi));
  }
  std::vector<double> out;
  out.reserve(n);
  const double width = hi - lo;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(std::min(hi, lo + width * rng.uniform01()));
  }
  return out;
}

}  // namespace fifogap
