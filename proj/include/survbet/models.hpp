#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace survbet {

/// Gompertz law: survival Phi(t) = exp(-eta*(e^{b*t}-1)), t >= 0.
struct GompertzParams {
  double eta;  ///< shape, dimensionless, > 0
  double b;    ///< scale, 1/years, > 0

  GompertzParams(double eta_, double b_);

  /// A positive mode exists only for eta in (0,1).
  bool has_mode() const { return eta < 1.0; }
  /// (1/b)*ln(1/eta); throws InvalidParamsError when eta >= 1.
  double mode() const;
};

/// Gompertz-Makeham law: hazard lambda + b*eta*e^{b*t}. lambda = 0 reduces
/// every function exactly to the Gompertz case.
struct MakehamParams {
  double lambda;  ///< age-independent hazard, 1/years, >= 0
  GompertzParams gompertz;

  MakehamParams(double lambda_, GompertzParams gompertz_);
};

/// Normal lifetime law. Only used for tail-limit study: Phi(0) < 1, and
/// quantiles may fall below zero. Pointwise functions are still restricted
/// to t >= 0 like every other law here.
struct NormalParams {
  double mu;     ///< years
  double sigma;  ///< years, > 0

  NormalParams(double mu_, double sigma_);
};

/// Exponential lifetime law, the boundary case of a constant hazard.
struct ExponentialParams {
  double rate;  ///< 1/years, > 0

  explicit ExponentialParams(double rate_);
};

/// Uniform lifetime on [0, t0]: survival hits exactly zero at t0
/// (finite support).
struct UniformBoundedParams {
  double t0;  ///< years, > 0

  explicit UniformBoundedParams(double t0_);
};

/// Tagged union naming one supported lifetime law with its parameters.
using DistributionSpec = std::variant<GompertzParams, MakehamParams,
                                      NormalParams, ExponentialParams,
                                      UniformBoundedParams>;

/// Lower-case tag of the active law ("gompertz", "makeham", ...).
std::string spec_name(const DistributionSpec& spec);

// Pointwise functions. All take t in years, t >= 0 (DomainError otherwise).

/// Phi(t) = 1 - F(t). Thin exponential wrapper over log_survival.
double survival(const DistributionSpec& spec, double t);

/// ln Phi(t), computed without evaluating Phi; -inf where Phi(t) = 0.
/// This is the underflow-safe core every tail computation routes through.
double log_survival(const DistributionSpec& spec, double t);

/// F(t) = 1 - Phi(t).
double cdf(const DistributionSpec& spec, double t);

/// Density, 1/years.
double pdf(const DistributionSpec& spec, double t);

/// Force of mortality pdf/Phi; UndefinedHazardError where Phi(t) = 0.
double hazard(const DistributionSpec& spec, double t);

/// Inverse of cdf on u in (0,1). Closed form where one exists, bracketed
/// bisection (1e-12 absolute on t) otherwise.
double quantile(const DistributionSpec& spec, double u);

/// ln( Phi(t + dt) / Phi(t) ), dt >= 0. Uses the law's cancellation-free
/// form where one exists (e.g. Gompertz -eta*e^{bt}*expm1(b*dt)) so that
/// exponential memorylessness is exact and Gompertz windows of one second
/// do not lose precision. -inf when Phi(t+dt) = 0; throws
/// ConditioningOnNullEventError when Phi(t) = 0.
double log_conditional_survival(const DistributionSpec& spec, double t,
                                double dt);

// Mode parameterization: (1/b)*ln(1/eta) = mode ties the Gompertz pair to a
// single most-likely age at death.

/// eta with the given mode and scale: eta = e^{-b*mode}.
double mode_to_eta(double mode, double b);

/// b with the given mode and shape: b = ln(1/eta)/mode. Requires eta in
/// (0,1); otherwise the law has no positive mode.
double eta_to_b(double mode, double eta);

/// Ages at death, years. `seed` is set when the values were drawn by
/// sample() rather than observed.
struct LifetimeSample {
  std::vector<double> values;
  std::optional<std::uint64_t> seed;

  LifetimeSample(std::vector<double> values_,
                 std::optional<std::uint64_t> seed_ = std::nullopt);
};

/// Name of the PRNG family used by every stochastic operation in this
/// project; recorded in output metadata for reproducibility.
inline constexpr const char* kRngName = "mt19937_64";

/// Inverse-transform sampling, deterministic for a fixed seed. n >= 1.
LifetimeSample sample(const DistributionSpec& spec, std::size_t n,
                      std::uint64_t seed);

}  // namespace survbet
