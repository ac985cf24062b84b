#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betaorder/distributions.hpp"

namespace betaorder {

/// Exceedance probabilities P(X >= t) for X ~ Beta(a, b) and t the mean, the
/// mode or the anti-mode. For a continuous law >= and > coincide.
struct ExceedanceRow {
  double a = 0.0;
  double b = 0.0;
  double mean = 0.0;
  ShapeClass shape{ShapeKind::uniform, std::nullopt};
  double p_over_mean = 0.0;
  std::optional<double> p_over_mode;      // unimodal only
  std::optional<double> p_over_antimode;  // uniantimodal only
};

ExceedanceRow exceedance_row(const BetaParams& params);

// e^-1 < (b/(1+b))^b <= P(X >= mean) <= 1 - (a/(1+a))^a < 1 - e^-1.
// Requires a, b >= 1 (DomainError otherwise).
bool bounds_check(const BetaParams& params, double tol = 1e-12);

enum class ScanAxis { a, b, binomial_p };
enum class Direction { increasing, decreasing };
enum class ExceedanceTarget { mean, mode, antimode };

std::string to_string(ScanAxis axis);
std::string to_string(Direction direction);
std::string to_string(ExceedanceTarget target);
ScanAxis parse_scan_axis(std::string_view text);
Direction parse_direction(std::string_view text);
// Accepts "mean", "mode", "antimode" and the "-exceedance" forms.
ExceedanceTarget parse_exceedance_target(std::string_view text);

struct MonotonicityReport {
  ScanAxis axis = ScanAxis::a;
  Direction direction = Direction::increasing;
  std::vector<std::pair<double, double>> samples;  // (parameter, probability)
  std::vector<std::size_t> violations;             // i such that samples i, i+1 break the direction

  bool monotone() const noexcept { return violations.empty(); }
};

// Indices i where the step from values[i] to values[i + 1] goes against
// `direction` by more than tol.
std::vector<std::size_t> direction_violations(std::span<const double> values, Direction direction, double tol);

// The direction in which the exceedance probability moves along the axis.
Direction claimed_direction(ScanAxis axis, ExceedanceTarget target);

/// Evaluates the target exceedance probability along one parameter axis with
/// the other parameter held at `fixed`. Values must be strictly increasing.
/// Mode targets need a, b > 1 and anti-mode targets a, b < 1 at every point;
/// otherwise ShapeClassError.
MonotonicityReport scan_monotone(ScanAxis axis, double fixed, std::span<const double> values,
                                 ExceedanceTarget target, double tol = 1e-10);

// max over p of |P(Beta(k+1, n-k) >= p) - P(B(n, p) <= k)|; needs 0 <= k < n.
double beta_binomial_identity_check(int n, int k, std::span<const double> p_grid);

/// P(B(n,p) > np - p) at p = k/(n-1), k = 1..n-2, claimed increasing, and
/// P(B(n,p) > np - (1-p)) at p = k/(n+1), k = 1..n, claimed decreasing. At
/// these points the thresholds are integers, so the strict events are
/// B >= k + 1 and B >= k.
std::pair<MonotonicityReport, MonotonicityReport> binomial_monotonicity(int n, double tol = 1e-12);

struct MmmReport {
  std::optional<double> mode_or_antimode;
  double median = 0.0;
  double mean = 0.0;
  bool inequalities_hold = false;
};

/// Mode-median-mean inequality for a positively skewed Beta (a <= b):
///   b >= a >= 1:  mode <= median <= mean (mode 0 when a = 1 < b, none if uniform)
///   a <= b <= 1:  median <= mean and median <= anti-mode (anti-mode 1 when b = 1)
///   a < 1 < b:    the density decreases, mode 0 <= median <= mean
/// For a > b all inequalities are reversed (the law of 1 - X is checked).
MmmReport mmm_check(const BetaParams& params, double tol = 1e-10);

/// For P <=c Q: P(X >= mean) >= P(Y >= mean), P(X >= mode) <= P(Y >= mode),
/// P(X >= anti-mode) >= P(Y >= anti-mode). Throws OrderingError unless the
/// closed-form convex verdict is LessThan or Equivalent.
bool jensen_exceedance_compare(const BetaParams& p, const BetaParams& q, ExceedanceTarget functional,
                               double tol = 1e-10);

}  // namespace betaorder
