#include "survbet/betting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "survbet/errors.hpp"

namespace survbet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Age scale the classifier grid starts from.
double characteristic_age(const DistributionSpec& spec) {
  struct Scale {
    double operator()(const GompertzParams& p) const {
      return p.has_mode() ? p.mode() : 1.0 / p.b;
    }
    double operator()(const MakehamParams& p) const {
      return (*this)(p.gompertz);
    }
    double operator()(const NormalParams& p) const {
      return std::max(p.mu, p.sigma);
    }
    double operator()(const ExponentialParams& p) const { return 1.0 / p.rate; }
    double operator()(const UniformBoundedParams& p) const { return 0.5 * p.t0; }
  };
  return std::visit(Scale{}, spec);
}

// Ratio for the grid walk: 0 beyond finite support instead of an error,
// because "surely lost" is a legitimate data point for the classifier and
// the epsilon search.
double ratio_or_zero(const DistributionSpec& spec, double t, double dt) {
  if (log_survival(spec, t) == -kInf) return 0.0;
  return std::exp(log_conditional_survival(spec, t, dt));
}

}  // namespace

BetQuery::BetQuery(double t_, double delta_t_) : t(t_), delta_t(delta_t_) {
  if (!(t >= 0.0)) throw DomainError("bet age t must be >= 0");
  if (!(delta_t > 0.0)) throw DomainError("bet window delta_t must be > 0");
}

ThresholdQuery::ThresholdQuery(double delta_t_, double p_)
    : delta_t(delta_t_), p(p_) {
  if (!(delta_t > 0.0)) throw DomainError("window delta_t must be > 0");
  if (!(p > 0.0 && p < 1.0))
    throw DomainError("target probability p must lie in (0,1)");
}

std::string to_string(TailCase c) {
  switch (c) {
    case TailCase::FiniteSupport: return "FiniteSupport";
    case TailCase::FasterThanExponential: return "FasterThanExponential";
    case TailCase::Exponential: return "Exponential";
    case TailCase::SlowerThanExponential: return "SlowerThanExponential";
  }
  return "?";
}

double conditional_survival(const DistributionSpec& spec, const BetQuery& q) {
  return std::exp(log_conditional_survival(spec, q.t, q.delta_t));
}

ThresholdResult threshold_age(const GompertzParams& params,
                              const ThresholdQuery& q) {
  // t = (1/b) ln( -ln p / (eta (e^{b dt} - 1)) ); expm1 keeps one-second
  // windows (b*dt ~ 4e-9) exact.
  const double t = (std::log(-std::log(q.p)) - std::log(params.eta) -
                    std::log(std::expm1(params.b * q.delta_t))) /
                   params.b;
  return ThresholdResult{t, t < 0.0};
}

double threshold_age_bisect(const DistributionSpec& spec,
                            const ThresholdQuery& q, double horizon) {
  double lo = 0.0;
  double hi = horizon;
  if (ratio_or_zero(spec, lo, q.delta_t) <= q.p) return lo;
  if (ratio_or_zero(spec, hi, q.delta_t) > q.p)
    throw DomainError("ratio never reaches p within the horizon");
  for (int i = 0; i < 200 && hi - lo > 1e-9; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (ratio_or_zero(spec, mid, q.delta_t) > q.p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

TailCase classify_ratio_sequence(const std::vector<double>& ratios,
                                 bool hit_finite_support, double tol) {
  if (hit_finite_support) return TailCase::FiniteSupport;
  const std::size_t window = 10;
  if (ratios.size() < window)
    throw IndeterminateClassificationError(
        "too few grid points for a verdict", ratios);

  const auto last = ratios.end();
  const auto first = last - static_cast<std::ptrdiff_t>(window);
  const double tail_ratio = ratios.back();

  bool nonincreasing = true, nondecreasing = true;
  double wmin = *first, wmax = *first;
  for (auto it = first + 1; it != last; ++it) {
    if (*it > *(it - 1)) nonincreasing = false;
    if (*it < *(it - 1)) nondecreasing = false;
    wmin = std::min(wmin, *it);
    wmax = std::max(wmax, *it);
  }
  const bool collapsed_overall = ratios.front() > tail_ratio;

  if (tail_ratio < tol && nonincreasing && collapsed_overall)
    return TailCase::FasterThanExponential;
  if (tail_ratio > 1.0 - tol && nondecreasing && ratios.front() < tail_ratio)
    return TailCase::SlowerThanExponential;
  // Constant within relative drift tol, away from both 0 and 1.
  if (tail_ratio > tol && tail_ratio < 1.0 - tol && wmax - wmin <= tol * wmax)
    return TailCase::Exponential;

  throw IndeterminateClassificationError(
      "ratio sequence matches none of the four tail cases within the horizon",
      ratios);
}

TailClass classify_tail(const DistributionSpec& spec, double delta_t,
                        double horizon, double tol) {
  if (!(delta_t > 0.0)) throw DomainError("window delta_t must be > 0");
  if (!(horizon > 0.0)) throw DomainError("horizon must be > 0");
  if (!(tol > 0.0 && tol < 0.1)) throw DomainError("tol must lie in (0, 0.1)");

  const double start = std::min(characteristic_age(spec), horizon);
  std::vector<double> evidence;
  bool finite_support = false;
  for (double t = start; t <= horizon; t *= 1.25) {
    if (log_survival(spec, t) == -kInf) {
      finite_support = true;
      break;
    }
    evidence.push_back(std::exp(log_conditional_survival(spec, t, delta_t)));
  }
  if (evidence.empty() && finite_support)
    evidence.push_back(0.0);  // support ended before the first grid point
  return TailClass{classify_ratio_sequence(evidence, finite_support, tol),
                   std::move(evidence)};
}

double epsilon_age(const DistributionSpec& spec, double delta_t,
                   double epsilon, double horizon) {
  if (!(delta_t > 0.0)) throw DomainError("window delta_t must be > 0");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw DomainError("epsilon must lie in (0,1)");

  if (ratio_or_zero(spec, 0.0, delta_t) < epsilon) return 0.0;

  // March one year at a time, then bisect the first bracket and report the
  // crossing at 0.01-year resolution. Every shipped law has a nonincreasing
  // ratio in t.
  double prev = 0.0;
  for (double t = 1.0; t <= horizon; t += 1.0) {
    if (ratio_or_zero(spec, t, delta_t) < epsilon) {
      double lo = prev, hi = t;
      while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (ratio_or_zero(spec, mid, delta_t) < epsilon)
          hi = mid;
        else
          lo = mid;
      }
      return std::round(hi * 100.0) / 100.0;
    }
    prev = t;
  }
  throw UnreachableEpsilonError(
      "win probability never drops below epsilon = " + std::to_string(epsilon) +
      " within the horizon; the ratio has a floor above it");
}

double odds_against(double death_prob) {
  if (!(death_prob >= 0.0 && death_prob <= 1.0))
    throw DomainError("probability must lie in [0,1]");
  if (death_prob == 0.0) return kInf;  // documented sentinel
  return (1.0 - death_prob) / death_prob;
}

BuffonOdds buffon_odds(const DistributionSpec& spec, double age,
                       double window) {
  const double d =
      -std::expm1(log_conditional_survival(spec, age, window));
  return BuffonOdds{d, odds_against(d), d <= kBuffonDisregardThreshold};
}

}  // namespace survbet
