#include "survbet/models.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "survbet/errors.hpp"

namespace survbet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln sqrt(2*pi)

void require_age(double t) {
  if (!(t >= 0.0)) throw DomainError("age t must be >= 0, got " + std::to_string(t));
}

void require_unit_open(double u) {
  if (!(u > 0.0 && u < 1.0))
    throw DomainError("probability u must lie in (0,1), got " + std::to_string(u));
}

// ln Phi_z(z) for the standard normal upper tail, valid for every finite z.
// erfc underflows near z ~ 37, so the far tail switches to the asymptotic
// expansion of the Mills ratio:
//   Phi_z(z) = phi(z)/z * (1 - 1/z^2 + 3/z^4 - 15/z^6 + ...)
double log_std_normal_tail(double z) {
  if (z < 12.0) return std::log(0.5 * std::erfc(z * kInvSqrt2));
  const double z2 = z * z;
  double sum = 0.0;
  double term = 1.0;
  double prev = kInf;
  for (int k = 1; k <= 14; ++k) {
    term *= -static_cast<double>(2 * k - 1) / z2;
    if (std::abs(term) >= prev) break;  // series is asymptotic, not convergent
    sum += term;
    prev = std::abs(term);
  }
  return -0.5 * z2 - kLogSqrt2Pi - std::log(z) + std::log1p(sum);
}

double std_normal_log_pdf(double z) { return -0.5 * z * z - kLogSqrt2Pi; }

// --- per-law log-survival -------------------------------------------------

double logsf(const GompertzParams& p, double t) {
  return -p.eta * std::expm1(p.b * t);
}

double logsf(const MakehamParams& p, double t) {
  return -p.lambda * t - p.gompertz.eta * std::expm1(p.gompertz.b * t);
}

double logsf(const NormalParams& p, double t) {
  return log_std_normal_tail((t - p.mu) / p.sigma);
}

double logsf(const ExponentialParams& p, double t) { return -p.rate * t; }

double logsf(const UniformBoundedParams& p, double t) {
  if (t >= p.t0) return -kInf;
  return std::log1p(-t / p.t0);
}

// --- per-law hazard (only where Phi(t) > 0) --------------------------------

double haz(const GompertzParams& p, double t) {
  return p.b * p.eta * std::exp(p.b * t);
}

double haz(const MakehamParams& p, double t) {
  return p.lambda + haz(p.gompertz, t);
}

double haz(const NormalParams& p, double t) {
  const double z = (t - p.mu) / p.sigma;
  return std::exp(std_normal_log_pdf(z) - log_std_normal_tail(z)) / p.sigma;
}

double haz(const ExponentialParams& p, double /*t*/) { return p.rate; }

double haz(const UniformBoundedParams& p, double t) { return 1.0 / (p.t0 - t); }

// --- per-law log conditional survival --------------------------------------
// ln(Phi(t+dt)/Phi(t)). Callers have already checked Phi(t) > 0.

double logcond(const GompertzParams& p, double t, double dt) {
  return -p.eta * std::exp(p.b * t) * std::expm1(p.b * dt);
}

double logcond(const MakehamParams& p, double t, double dt) {
  return -p.lambda * dt + logcond(p.gompertz, t, dt);
}

double logcond(const NormalParams& p, double t, double dt) {
  return logsf(p, t + dt) - logsf(p, t);
}

double logcond(const ExponentialParams& p, double /*t*/, double dt) {
  return -p.rate * dt;  // memoryless: independent of t
}

double logcond(const UniformBoundedParams& p, double t, double dt) {
  if (t + dt >= p.t0) return -kInf;
  return std::log((p.t0 - t - dt) / (p.t0 - t));
}

}  // namespace

GompertzParams::GompertzParams(double eta_, double b_) : eta(eta_), b(b_) {
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw InvalidParamsError("Gompertz shape eta must be > 0");
  if (!(b > 0.0) || !std::isfinite(b))
    throw InvalidParamsError("Gompertz scale b must be > 0");
}

double GompertzParams::mode() const {
  if (!has_mode())
    throw InvalidParamsError("Gompertz law with eta >= 1 has no positive mode");
  return std::log(1.0 / eta) / b;
}

MakehamParams::MakehamParams(double lambda_, GompertzParams gompertz_)
    : lambda(lambda_), gompertz(gompertz_) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw InvalidParamsError("Makeham hazard lambda must be >= 0");
}

NormalParams::NormalParams(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
  if (!std::isfinite(mu)) throw InvalidParamsError("normal mu must be finite");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw InvalidParamsError("normal sigma must be > 0");
}

ExponentialParams::ExponentialParams(double rate_) : rate(rate_) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw InvalidParamsError("exponential rate must be > 0");
}

UniformBoundedParams::UniformBoundedParams(double t0_) : t0(t0_) {
  if (!(t0 > 0.0) || !std::isfinite(t0))
    throw InvalidParamsError("uniform support bound t0 must be > 0");
}

std::string spec_name(const DistributionSpec& spec) {
  struct Namer {
    std::string operator()(const GompertzParams&) const { return "gompertz"; }
    std::string operator()(const MakehamParams&) const { return "makeham"; }
    std::string operator()(const NormalParams&) const { return "normal"; }
    std::string operator()(const ExponentialParams&) const { return "exponential"; }
    std::string operator()(const UniformBoundedParams&) const { return "uniform"; }
  };
  return std::visit(Namer{}, spec);
}

double log_survival(const DistributionSpec& spec, double t) {
  require_age(t);
  return std::visit([t](const auto& p) { return logsf(p, t); }, spec);
}

double survival(const DistributionSpec& spec, double t) {
  return std::exp(log_survival(spec, t));
}

double cdf(const DistributionSpec& spec, double t) {
  return -std::expm1(log_survival(spec, t));
}

double hazard(const DistributionSpec& spec, double t) {
  require_age(t);
  if (log_survival(spec, t) == -kInf)
    throw UndefinedHazardError("hazard undefined: survival is zero at t = " +
                               std::to_string(t));
  return std::visit([t](const auto& p) { return haz(p, t); }, spec);
}

double pdf(const DistributionSpec& spec, double t) {
  require_age(t);
  const double ls = log_survival(spec, t);
  if (ls == -kInf) return 0.0;  // beyond finite support
  return std::visit([t](const auto& p) { return haz(p, t); }, spec) *
         std::exp(ls);
}

double log_conditional_survival(const DistributionSpec& spec, double t,
                                double dt) {
  require_age(t);
  if (!(dt >= 0.0)) throw DomainError("window dt must be >= 0");
  if (log_survival(spec, t) == -kInf)
    throw ConditioningOnNullEventError(
        "conditioning on extinct cohort: survival is zero at t = " +
        std::to_string(t));
  const double lr = std::visit(
      [t, dt](const auto& p) { return logcond(p, t, dt); }, spec);
  return std::min(lr, 0.0);  // guard rounding above a certain event
}

namespace {

// Generic monotone bracketed bisection for laws without a closed-form
// quantile, to 1e-12 absolute on t.
double quantile_bisect(const DistributionSpec& spec, double u, double lo,
                       double hi) {
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval exhausted in doubles
    if (cdf(spec, mid) < u)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double quant(const GompertzParams& p, double u, const DistributionSpec&) {
  // F(t) = u  =>  t = (1/b) * ln(1 - ln(1-u)/eta)
  return std::log1p(-std::log1p(-u) / p.eta) / p.b;
}

double quant(const ExponentialParams& p, double u, const DistributionSpec&) {
  return -std::log1p(-u) / p.rate;
}

double quant(const UniformBoundedParams& p, double u, const DistributionSpec&) {
  return u * p.t0;
}

double quant(const MakehamParams& p, double u, const DistributionSpec& spec) {
  // cumulative hazard lambda*t + eta*expm1(b*t) is increasing; bracket by
  // the pure-Gompertz and pure-exponential inverses.
  double hi = quant(p.gompertz, u, spec);
  if (p.lambda > 0.0) hi = std::min(hi, -std::log1p(-u) / p.lambda);
  return quantile_bisect(spec, u, 0.0, hi);
}

double quant(const NormalParams& p, double u, const DistributionSpec&) {
  // The normal law is not truncated at zero, so its bracket extends below
  // birth; bisect on the law's own cdf rather than the age-guarded one.
  double lo = p.mu - 40.0 * p.sigma;
  double hi = p.mu + 40.0 * p.sigma;
  const auto cdf_at = [&p](double t) {
    return -std::expm1(log_std_normal_tail((t - p.mu) / p.sigma));
  };
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (cdf_at(mid) < u)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double quantile(const DistributionSpec& spec, double u) {
  require_unit_open(u);
  return std::visit([u, &spec](const auto& p) { return quant(p, u, spec); },
                    spec);
}

double mode_to_eta(double mode, double b) {
  if (!(mode > 0.0)) throw DomainError("mode must be > 0");
  if (!(b > 0.0)) throw DomainError("scale b must be > 0");
  return std::exp(-b * mode);
}

double eta_to_b(double mode, double eta) {
  if (!(mode > 0.0)) throw DomainError("mode must be > 0");
  if (!(eta > 0.0 && eta < 1.0))
    throw InvalidParamsError(
        "eta must lie in (0,1): a Gompertz law with eta >= 1 has no positive "
        "mode");
  return -std::log(eta) / mode;
}

LifetimeSample::LifetimeSample(std::vector<double> values_,
                               std::optional<std::uint64_t> seed_)
    : values(std::move(values_)), seed(seed_) {
  if (values.empty()) throw DomainError("lifetime sample must be nonempty");
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw DomainError("lifetime sample values must be finite and >= 0");
}

LifetimeSample sample(const DistributionSpec& spec, std::size_t n,
                      std::uint64_t seed) {
  if (n == 0) throw DomainError("sample size n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // 53-bit uniform on the open interval (0,1); independent of the
    // library's distribution adaptors so streams are stable everywhere.
    const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    double x = quantile(spec, u);
    if (x < 0.0) x = 0.0;  // normal law can produce pre-birth quantiles
    values.push_back(x);
  }
  return LifetimeSample(std::move(values), seed);
}

}  // namespace survbet
