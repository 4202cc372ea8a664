#pragma once

#include <string>
#include <vector>

#include "survbet/models.hpp"

namespace survbet {

/// The bet statement: a t-year-old survives another delta_t years.
struct BetQuery {
  double t;        ///< current age, years, >= 0
  double delta_t;  ///< bet window, years, > 0

  BetQuery(double t_, double delta_t_);
};

/// Inverse question: minimal age at which the bet wins with probability p.
struct ThresholdQuery {
  double delta_t;  ///< bet window, years, > 0
  double p;        ///< target win probability, in (0,1)

  ThresholdQuery(double delta_t_, double p_);
};

/// The four asymptotic behaviours of the survival tail.
enum class TailCase {
  FiniteSupport,          // Phi(t) = 0 beyond some finite t0
  FasterThanExponential,  // ratio Phi(t+dt)/Phi(t) collapses to 0
  Exponential,            // ratio settles to a t-independent constant
  SlowerThanExponential,  // ratio climbs toward 1
};

std::string to_string(TailCase c);

/// Classifier verdict plus the ratio sequence it examined.
struct TailClass {
  TailCase kind;
  std::vector<double> evidence;
};

/// Threshold age result. The inverse formula is faithful: it can land
/// before birth when even a newborn wins with probability < p, in which
/// case the age is returned as-is and flagged, never clamped.
struct ThresholdResult {
  double age;  ///< years; may be negative
  bool before_birth;
};

/// Pr( lifetime > t + delta_t | lifetime > t ) = Phi(t+dt)/Phi(t).
/// Throws ConditioningOnNullEventError when Phi(t) = 0.
double conditional_survival(const DistributionSpec& spec, const BetQuery& q);

/// Closed-form minimal age for the Gompertz law:
///   t = (1/b) * ln( -ln p / (eta * (e^{b*dt} - 1)) ).
ThresholdResult threshold_age(const GompertzParams& params,
                              const ThresholdQuery& q);

/// Generic threshold age by bisection on conditional_survival; covers laws
/// without the closed form and cross-checks it for Gompertz. Requires the
/// ratio to be decreasing in t (true for every shipped non-exponential law).
double threshold_age_bisect(const DistributionSpec& spec,
                            const ThresholdQuery& q,
                            double horizon = 5000.0);

/// Verdict for a precomputed ratio sequence; factored out so the decision
/// rules can be exercised directly (including the slower-than-exponential
/// case, for which no lifetime law is shipped).
TailCase classify_ratio_sequence(const std::vector<double>& ratios,
                                 bool hit_finite_support, double tol);

/// Evaluates the ratio on a geometric age grid (factor 1.25 from the law's
/// characteristic age up to `horizon`) and matches it against the four
/// cases. Laws whose constant ratio falls outside (tol, 1-tol) are reported
/// via IndeterminateClassificationError, which carries the evidence.
TailClass classify_tail(const DistributionSpec& spec, double delta_t,
                        double horizon = 5000.0, double tol = 1e-3);

/// Smallest age (refined to 0.01 years) at which the bet's win probability
/// drops below epsilon. Throws UnreachableEpsilonError when the ratio never
/// gets there (constant or rising tails with a floor above epsilon).
double epsilon_age(const DistributionSpec& spec, double delta_t,
                   double epsilon, double horizon = 5000.0);

/// Buffon's threshold: a probability of 1/10,000 or less may be disregarded.
inline constexpr double kBuffonDisregardThreshold = 1.0 / 10000.0;

/// Odds against an event of probability d, as "x to 1": (1-d)/d.
/// d = 0 yields +infinity, a documented sentinel rather than an error.
double odds_against(double death_prob);

/// Odds against dying within `window` years starting at `age`.
struct BuffonOdds {
  double death_prob;     ///< d = 1 - Phi(age+window)/Phi(age)
  double odds;           ///< (1-d)/d, +inf when d = 0
  bool disregardable;    ///< d <= 1/10,000
};

BuffonOdds buffon_odds(const DistributionSpec& spec, double age,
                       double window);

}  // namespace survbet
