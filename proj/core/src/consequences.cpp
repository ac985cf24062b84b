#include "betaorder/consequences.hpp"

#include <cmath>
#include <numbers>

#include "betaorder/errors.hpp"
#include "betaorder/orders.hpp"

namespace betaorder {
namespace {

// (t/(1+t))^t without cancellation for large t.
double ratio_power(double t) { return std::exp(-t * std::log1p(1.0 / t)); }

double exceedance(const BetaParams& p, ExceedanceTarget target) {
  switch (target) {
    case ExceedanceTarget::mean: return beta_sf(p, beta_mean(p));
    case ExceedanceTarget::mode: return beta_sf(p, beta_mode(p));
    case ExceedanceTarget::antimode: return beta_sf(p, beta_antimode(p));
  }
  return 0.0;
}

void require_shape(const BetaParams& p, ExceedanceTarget target) {
  if (target == ExceedanceTarget::mode && !(p.a() > 1.0 && p.b() > 1.0)) {
    throw ShapeClassError("mode exceedance needs a, b > 1");
  }
  if (target == ExceedanceTarget::antimode && !(p.a() < 1.0 && p.b() < 1.0)) {
    throw ShapeClassError("anti-mode exceedance needs a, b < 1");
  }
}

MonotonicityReport make_report(ScanAxis axis, Direction direction, std::vector<std::pair<double, double>> samples,
                               double tol) {
  MonotonicityReport report;
  report.axis = axis;
  report.direction = direction;
  std::vector<double> values;
  values.reserve(samples.size());
  for (const auto& s : samples) values.push_back(s.second);
  report.violations = direction_violations(values, direction, tol);
  report.samples = std::move(samples);
  return report;
}

// Positively skewed case (a <= b), in the original coordinates.
MmmReport mmm_positive(const BetaParams& p, double tol) {
  const double a = p.a();
  const double b = p.b();
  MmmReport r;
  r.median = beta_median(p);
  r.mean = beta_mean(p);
  const bool median_below_mean = r.median <= r.mean + tol;
  if (a >= 1.0) {
    if (a > 1.0) {
      r.mode_or_antimode = beta_mode(p);
    } else if (b > 1.0) {
      r.mode_or_antimode = 0.0;
    }
    const bool mode_below_median = !r.mode_or_antimode || *r.mode_or_antimode <= r.median + tol;
    r.inequalities_hold = mode_below_median && median_below_mean;
  } else if (b <= 1.0) {
    r.mode_or_antimode = b < 1.0 ? beta_antimode(p) : 1.0;
    r.inequalities_hold = median_below_mean && r.median <= *r.mode_or_antimode + tol;
  } else {
    r.mode_or_antimode = 0.0;
    r.inequalities_hold = median_below_mean;
  }
  return r;
}

}  // namespace

ExceedanceRow exceedance_row(const BetaParams& params) {
  ExceedanceRow row;
  row.a = params.a();
  row.b = params.b();
  row.mean = beta_mean(params);
  row.shape = beta_mode_or_antimode(params);
  row.p_over_mean = beta_sf(params, row.mean);
  if (row.shape.kind == ShapeKind::unimodal) {
    row.p_over_mode = beta_sf(params, *row.shape.location);
  } else if (row.shape.kind == ShapeKind::uniantimodal) {
    row.p_over_antimode = beta_sf(params, *row.shape.location);
  }
  return row;
}

bool bounds_check(const BetaParams& params, double tol) {
  if (!(params.a() >= 1.0 && params.b() >= 1.0)) throw DomainError("bounds_check needs a, b >= 1");
  const double inv_e = std::exp(-1.0);
  const double lower = ratio_power(params.b());
  const double upper = 1.0 - ratio_power(params.a());
  const double p = exceedance_row(params).p_over_mean;
  return inv_e < lower && lower <= p + tol && p <= upper + tol && upper < 1.0 - inv_e;
}

std::string to_string(ScanAxis axis) {
  switch (axis) {
    case ScanAxis::a: return "a";
    case ScanAxis::b: return "b";
    case ScanAxis::binomial_p: return "binomial-p";
  }
  return "unknown";
}

std::string to_string(Direction direction) {
  return direction == Direction::increasing ? "increasing" : "decreasing";
}

std::string to_string(ExceedanceTarget target) {
  switch (target) {
    case ExceedanceTarget::mean: return "mean-exceedance";
    case ExceedanceTarget::mode: return "mode-exceedance";
    case ExceedanceTarget::antimode: return "antimode-exceedance";
  }
  return "unknown";
}

ScanAxis parse_scan_axis(std::string_view text) {
  if (text == "a") return ScanAxis::a;
  if (text == "b") return ScanAxis::b;
  if (text == "binomial-p" || text == "p") return ScanAxis::binomial_p;
  throw DomainError("unknown axis '" + std::string(text) + "'");
}

Direction parse_direction(std::string_view text) {
  if (text == "increasing") return Direction::increasing;
  if (text == "decreasing") return Direction::decreasing;
  throw DomainError("unknown direction '" + std::string(text) + "'");
}

ExceedanceTarget parse_exceedance_target(std::string_view text) {
  if (text == "mean" || text == "mean-exceedance") return ExceedanceTarget::mean;
  if (text == "mode" || text == "mode-exceedance") return ExceedanceTarget::mode;
  if (text == "antimode" || text == "anti-mode" || text == "antimode-exceedance") return ExceedanceTarget::antimode;
  throw DomainError("unknown target '" + std::string(text) + "'");
}

std::vector<std::size_t> direction_violations(std::span<const double> values, Direction direction, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double step = values[i + 1] - values[i];
    const bool bad = direction == Direction::increasing ? step < -tol : step > tol;
    if (bad) out.push_back(i);
  }
  return out;
}

Direction claimed_direction(ScanAxis axis, ExceedanceTarget target) {
  if (axis == ScanAxis::binomial_p) throw DomainError("exceedance scans run along a or b");
  const bool along_a = axis == ScanAxis::a;
  // mean and anti-mode: up in a, down in b; mode the other way round.
  const bool up = target == ExceedanceTarget::mode ? !along_a : along_a;
  return up ? Direction::increasing : Direction::decreasing;
}

MonotonicityReport scan_monotone(ScanAxis axis, double fixed, std::span<const double> values,
                                 ExceedanceTarget target, double tol) {
  const Direction direction = claimed_direction(axis, target);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (!(values[i] < values[i + 1])) throw DomainError("scan values must be strictly increasing");
  }
  std::vector<BetaParams> laws;
  laws.reserve(values.size());
  for (double v : values) {
    laws.push_back(axis == ScanAxis::a ? BetaParams(v, fixed) : BetaParams(fixed, v));
    require_shape(laws.back(), target);
  }
  std::vector<std::pair<double, double>> samples;
  samples.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) samples.emplace_back(values[i], exceedance(laws[i], target));
  return make_report(axis, direction, std::move(samples), tol);
}

double beta_binomial_identity_check(int n, int k, std::span<const double> p_grid) {
  if (n < 1 || k < 0 || k > n - 1) throw DomainError("identity check needs n >= 1 and 0 <= k <= n - 1");
  const BetaParams beta(k + 1.0, n - k);
  double worst = 0.0;
  for (double p : p_grid) {
    const double lhs = beta_sf(beta, p);
    const double rhs = binomial_cdf(BinomialParams(n, p), k);
    worst = std::max(worst, std::fabs(lhs - rhs));
  }
  return worst;
}

std::pair<MonotonicityReport, MonotonicityReport> binomial_monotonicity(int n, double tol) {
  if (n < 2) throw DomainError("binomial monotonicity needs n >= 2");
  std::vector<std::pair<double, double>> first;
  for (int k = 1; k <= n - 2; ++k) {
    const double p = static_cast<double>(k) / (n - 1);
    first.emplace_back(p, binomial_tail(BinomialParams(n, p), k + 1));
  }
  std::vector<std::pair<double, double>> second;
  for (int k = 1; k <= n; ++k) {
    const double p = static_cast<double>(k) / (n + 1);
    second.emplace_back(p, binomial_tail(BinomialParams(n, p), k));
  }
  return {make_report(ScanAxis::binomial_p, Direction::increasing, std::move(first), tol),
          make_report(ScanAxis::binomial_p, Direction::decreasing, std::move(second), tol)};
}

MmmReport mmm_check(const BetaParams& params, double tol) {
  if (params.a() <= params.b()) return mmm_positive(params, tol);
  // 1 - X is positively skewed; map its summary back.
  MmmReport r = mmm_positive(params.reflected(), tol);
  if (r.mode_or_antimode) r.mode_or_antimode = 1.0 - *r.mode_or_antimode;
  r.median = beta_median(params);
  r.mean = beta_mean(params);
  return r;
}

bool jensen_exceedance_compare(const BetaParams& p, const BetaParams& q, ExceedanceTarget functional, double tol) {
  const Relation rel = decide_beta_order(OrderKind::convex_transform, p, q).result;
  if (rel != Relation::less_than && rel != Relation::equivalent) {
    throw OrderingError("jensen comparison needs P <=c Q, got " + to_string(rel));
  }
  require_shape(p, functional);
  require_shape(q, functional);
  const double xp = exceedance(p, functional);
  const double xq = exceedance(q, functional);
  return functional == ExceedanceTarget::mode ? xp <= xq + tol : xp >= xq - tol;
}

}  // namespace betaorder
