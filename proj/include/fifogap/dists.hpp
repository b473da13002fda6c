#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fifogap/rng.hpp"

namespace fifogap {

// Utility distributions used by the experiments. Parameters follow the
// densities below; all of them are scale/shape parameters, not rates.

/// f(x) = e^{-x/θ} / θ, x > 0.
struct Exponential {
  double theta = 1.0;
};
/// f(x) = exp(-(log x - μ)² / 2σ²) / (x √(2πσ²)), x > 0.
struct LogNormal {
  double mu = 0.0;
  double sigma = 1.0;
};
/// f(x) = x/σ² · e^{-x²/2σ²}, x > 0.
struct Rayleigh {
  double sigma = 1.0;
};
/// f(x) = √(σ / 2π(x-μ)³) · e^{-σ/2(x-μ)}, x > μ.
struct Levy {
  double mu = 0.0;
  double sigma = 1.0;
};
/// f(x) = α / x^{α+1}, x ≥ 1.
struct Pareto {
  double alpha = 1.0;
};

using UtilityDistribution = std::variant<Exponential, LogNormal, Rayleigh, Levy, Pareto>;

/// Throws ValidationError if a parameter is outside its range.
void validate(const UtilityDistribution& d);

/// Stable family index (Exponential = 0 ... Pareto = 4); used in seed derivation.
std::size_t family_index(const UtilityDistribution& d);

/// Canonical text form, e.g. "LogNormal(1,1)". Round-trips through
/// parse_distribution.
std::string to_string(const UtilityDistribution& d);

/// Parses `Name(p1[,p2])`. Names are case-insensitive; whitespace is ignored.
UtilityDistribution parse_distribution(std::string_view text);

bool is_heavy_tailed(const UtilityDistribution& d);

/// Density; 0 outside the support.
double pdf(const UtilityDistribution& d, double x);

/// Distribution function, with the limits 0 at -∞ and 1 at +∞.
double cdf(const UtilityDistribution& d, double x);

/// n independent draws consumed from `rng` in order.
std::vector<double> sample(const UtilityDistribution& d, std::size_t n, RandomStream& rng);

double sample_one(const UtilityDistribution& d, RandomStream& rng);

/// n uniform draws on [lo, hi]. Throws ValidationError unless 0 < lo ≤ hi.
std::vector<double> sample_gas(double lo, double hi, std::size_t n, RandomStream& rng);

}  // namespace fifogap
