#include "betaorder/orders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "betaorder/errors.hpp"

namespace betaorder {
namespace {

// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
class UnitSampler {
 public:
  explicit UnitSampler(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 engine_;
};

// Samples of H(x) = G^-1(F(x)) on a grid over the support of F. The tail of F
// that is smaller decides which inverse of G is used, so H keeps relative
// accuracy near both ends.
struct TransformSamples {
  std::vector<double> xs;
  std::vector<double> h;
  std::vector<char> valid;
};

double transform_at(const Law& f, const Law& g, double x) {
  const double u = f.cdf(x);
  if (u <= 0.5) return g.quantile(u);
  return g.isf(f.sf(x));
}

TransformSamples sample_transform(const Law& f, const Law& g, const GridPolicy& grid) {
  if (!std::isfinite(f.lo) || !std::isfinite(f.hi)) {
    throw DomainError("order checkers require the first law to have bounded support");
  }
  TransformSamples out;
  out.xs = chebyshev_grid(f.lo, f.hi, grid);
  out.h.assign(out.xs.size(), 0.0);
  out.valid.assign(out.xs.size(), 0);
  for (std::size_t i = 0; i < out.xs.size(); ++i) {
    try {
      const double h = transform_at(f, g, out.xs[i]);
      if (std::isfinite(h)) {
        out.h[i] = h;
        out.valid[i] = 1;
      }
    } catch (const ConvergenceError&) {
      // left invalid; the point contributes the unit sign
    }
  }
  return out;
}

// Sign pattern of x -> F(x) - G(line(x)) on the grid. Since G^-1 is increasing
// this has the sign of H(x) - line(x); values within zero_tol * (scale + |H|)
// of zero are the unit.
struct LinePattern {
  SignPattern pattern;
  std::optional<double> first_excess_x;  // grid point where the pattern left the bound
};

LinePattern line_pattern(const TransformSamples& t, const AffineMap& line, double zero_tol, double scale,
                         const SignPattern& bound) {
  LinePattern out;
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    if (!t.valid[i]) continue;
    const double v = t.h[i] - line(t.xs[i]);
    const Sign s = sign_of(v, zero_tol * (scale + std::fabs(t.h[i])));
    if (s == Sign::zero) continue;
    if (!out.pattern.empty() && out.pattern.back() == s) continue;
    out.pattern = concat(out.pattern, SignPattern(s));
    if (!out.first_excess_x && !leq(out.pattern, bound)) out.first_excess_x = t.xs[i];
  }
  return out;
}

std::vector<double> logistic_levels(std::size_t m) {
  std::vector<double> t(m);
  for (std::size_t j = 0; j < m; ++j) {
    t[j] = -8.0 + 16.0 * static_cast<double>(j) / static_cast<double>(m - 1);
  }
  return t;
}

struct QuantilePoint {
  double x;
  double y;
};

// Point (F^-1(u), G^-1(u)) for u = 1 / (1 + e^-t).
std::optional<QuantilePoint> quantile_point(const Law& f, const Law& g, double t) {
  try {
    const double u = 1.0 / (1.0 + std::exp(-t));
    const double s = 1.0 / (1.0 + std::exp(t));
    const double x = u <= 0.5 ? f.quantile(u) : f.isf(s);
    const double y = u <= 0.5 ? g.quantile(u) : g.isf(s);
    if (!std::isfinite(x) || !std::isfinite(y)) return std::nullopt;
    return QuantilePoint{x, y};
  } catch (const ConvergenceError&) {
    return std::nullopt;
  }
}

constexpr double kSecantShift = 1e-6;

const SignPattern& star_bound() {
  static const SignPattern bound = SignPattern::parse("-+");
  return bound;
}

const SignPattern& convex_bound() {
  static const SignPattern bound = SignPattern::parse("+-+");
  return bound;
}

void validate_options(const CheckOptions& opts) {
  if (!(opts.zero_tol >= 0.0)) throw DomainError("zero_tol must be nonnegative");
  if (!(opts.line_scale > 0.0)) throw DomainError("line_scale must be positive");
}

}  // namespace

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::stochastic_dominance: return "stochastic-dominance";
    case OrderKind::star_shaped: return "star-shaped";
    case OrderKind::convex_transform: return "convex-transform";
  }
  return "unknown";
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::less_than: return "LessThan";
    case Relation::greater_than: return "GreaterThan";
    case Relation::equivalent: return "Equivalent";
    case Relation::incomparable: return "Incomparable";
  }
  return "unknown";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "st" || text == "stochastic-dominance") return OrderKind::stochastic_dominance;
  if (text == "star" || text == "star-shaped") return OrderKind::star_shaped;
  if (text == "convex" || text == "convex-transform") return OrderKind::convex_transform;
  throw DomainError("unknown order kind '" + std::string(text) + "' (expected st, star or convex)");
}

Relation parse_relation(std::string_view text) {
  for (Relation r : {Relation::less_than, Relation::greater_than, Relation::equivalent, Relation::incomparable}) {
    if (to_string(r) == text) return r;
  }
  throw DomainError("unknown relation '" + std::string(text) + "'");
}

OrderVerdict decide_beta_order(OrderKind kind, const BetaParams& p, const BetaParams& q) {
  const bool p_below = p.a() >= q.a() && p.b() <= q.b();  // P <= Q in the transform orders
  const bool q_below = q.a() >= p.a() && q.b() <= p.b();
  Relation result = Relation::incomparable;
  if (p_below && q_below) {
    result = Relation::equivalent;
  } else if (p_below) {
    result = Relation::less_than;
  } else if (q_below) {
    result = Relation::greater_than;
  }
  if (kind == OrderKind::stochastic_dominance) {
    if (result == Relation::less_than) {
      result = Relation::greater_than;
    } else if (result == Relation::greater_than) {
      result = Relation::less_than;
    }
  }
  return {kind, result};
}

NumericCheckReport verify_st_numeric(const Law& f, const Law& g, const CheckOptions& opts) {
  validate_options(opts);
  const double lo = std::min(f.lo, g.lo);
  double hi = std::max(f.hi, g.hi);
  if (!std::isfinite(hi)) hi = f.hi;
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("verify_st_numeric requires a bounded grid");
  }
  const auto xs = chebyshev_grid(lo, hi, opts.grid);
  std::vector<double> diffs(xs.size());
  std::optional<double> violation;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    diffs[i] = f.cdf(xs[i]) - g.cdf(xs[i]);
    if (!violation && diffs[i] < -opts.zero_tol) violation = xs[i];
  }

  NumericCheckReport report;
  report.pattern_bound = SignPattern(Sign::positive);
  report.grid_size = xs.size();
  report.seed = opts.seed;
  report.consistent = !violation.has_value();
  if (violation) {
    report.witness = Witness{AffineMap{1.0, 0.0}, *violation, pattern_of_samples(diffs, opts.zero_tol)};
  }
  return report;
}

std::vector<double> sample_star_slopes(const Law& f, const Law& g, const CheckOptions& opts) {
  const std::size_t n_random = opts.lines / 2;
  const std::size_t n_structured = opts.lines - n_random;

  std::vector<double> slopes;
  slopes.reserve(opts.lines);
  UnitSampler rng(opts.seed);
  for (std::size_t i = 0; i < n_random; ++i) {
    double c = 0.0;
    while (c == 0.0) c = rng.uniform(0.0, 4.0);
    slopes.push_back(opts.line_scale * c);
  }

  const std::size_t levels = std::max<std::size_t>(2, (n_structured + 1) / 2);
  std::vector<double> structured;
  for (double t : logistic_levels(levels)) {
    const auto point = quantile_point(f, g, t);
    if (!point || !(point->x > 0.0) || !(point->y > 0.0)) continue;
    const double ratio = point->y / point->x;
    structured.push_back(ratio * (1.0 + kSecantShift));
    structured.push_back(ratio * (1.0 - kSecantShift));
  }
  for (std::size_t i = 0; i < structured.size() && i < n_structured; ++i) slopes.push_back(structured[i]);
  return slopes;
}

std::vector<AffineMap> sample_convex_lines(const Law& f, const Law& g, const CheckOptions& opts) {
  const std::size_t n_random = opts.lines / 2;
  const std::size_t n_structured = opts.lines - n_random;

  std::vector<AffineMap> lines;
  lines.reserve(opts.lines);
  UnitSampler rng(opts.seed);
  for (std::size_t i = 0; i < n_random; ++i) {
    const double c = rng.uniform(0.0, 4.0);
    const double d = rng.uniform(-2.0, 1.0);
    lines.push_back({opts.line_scale * c, opts.line_scale * d});
  }

  // Secants between pairs of quantile points at spans 1, 2, 4, ... of a
  // logit-spaced level set, refined until there are enough of them.
  std::vector<AffineMap> structured;
  for (std::size_t m = 17; structured.size() < n_structured && m <= 4097; m = 2 * m - 1) {
    structured.clear();
    std::vector<std::optional<QuantilePoint>> points;
    for (double t : logistic_levels(m)) points.push_back(quantile_point(f, g, t));
    for (std::size_t span = 1; span < m; span *= 2) {
      for (std::size_t i = 0; i + span < m; ++i) {
        const auto& p0 = points[i];
        const auto& p1 = points[i + span];
        if (!p0 || !p1 || !(p1->x > p0->x)) continue;
        const double c = (p1->y - p0->y) / (p1->x - p0->x);
        const double d = p0->y - c * p0->x;
        const double shift = kSecantShift * std::fabs(p1->y - p0->y);
        structured.push_back({c, d + shift});
        structured.push_back({c, d - shift});
      }
    }
  }
  for (std::size_t i = 0; i < structured.size() && i < n_structured; ++i) lines.push_back(structured[i]);
  return lines;
}

NumericCheckReport verify_star_numeric(const Law& f, const Law& g, std::span<const double> slopes,
                                       const CheckOptions& opts) {
  validate_options(opts);
  if (slopes.empty()) throw DomainError("verify_star_numeric requires at least one slope");
  if (f.lo != 0.0) throw DomainError("the star-shaped checker assumes a support starting at 0");

  const TransformSamples t = sample_transform(f, g, opts.grid);
  NumericCheckReport report;
  report.pattern_bound = star_bound();
  report.grid_size = t.xs.size();
  report.seed = opts.seed;

  for (double c : slopes) {
    const AffineMap line{c, 0.0};
    const LinePattern lp = line_pattern(t, line, opts.zero_tol, opts.line_scale, star_bound());
    ++report.lines_checked;
    if (lp.first_excess_x) {
      report.consistent = false;
      report.witness = Witness{line, *lp.first_excess_x, lp.pattern};
      return report;
    }
  }

  // x -> H(x) / x must be nondecreasing.
  std::optional<std::size_t> prev;
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    if (!t.valid[i]) continue;
    if (prev) {
      const double r_prev = t.h[*prev] / t.xs[*prev];
      const double r = t.h[i] / t.xs[i];
      if (r < r_prev - opts.zero_tol * (std::fabs(r) + std::fabs(r_prev))) {
        const AffineMap line{r_prev, 0.0};
        report.consistent = false;
        report.witness = Witness{
            line, t.xs[i], line_pattern(t, line, opts.zero_tol, opts.line_scale, star_bound()).pattern};
        return report;
      }
    }
    prev = i;
  }
  return report;
}

NumericCheckReport verify_star_numeric(const Law& f, const Law& g, const CheckOptions& opts) {
  const auto slopes = sample_star_slopes(f, g, opts);
  return verify_star_numeric(f, g, slopes, opts);
}

NumericCheckReport verify_convex_numeric(const Law& f, const Law& g, std::span<const AffineMap> lines,
                                         const CheckOptions& opts) {
  validate_options(opts);
  if (lines.empty()) throw DomainError("verify_convex_numeric requires at least one line");

  const TransformSamples t = sample_transform(f, g, opts.grid);
  NumericCheckReport report;
  report.pattern_bound = convex_bound();
  report.grid_size = t.xs.size();
  report.seed = opts.seed;

  for (const AffineMap& line : lines) {
    const LinePattern lp = line_pattern(t, line, opts.zero_tol, opts.line_scale, convex_bound());
    ++report.lines_checked;
    if (lp.first_excess_x) {
      report.consistent = false;
      report.witness = Witness{line, *lp.first_excess_x, lp.pattern};
      return report;
    }
  }

  // Divided-difference slopes of H must be nondecreasing.
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    if (t.valid[i]) idx.push_back(i);
  }
  for (std::size_t k = 2; k < idx.size(); ++k) {
    const std::size_t i0 = idx[k - 2];
    const std::size_t i1 = idx[k - 1];
    const std::size_t i2 = idx[k];
    const double s01 = (t.h[i1] - t.h[i0]) / (t.xs[i1] - t.xs[i0]);
    const double s12 = (t.h[i2] - t.h[i1]) / (t.xs[i2] - t.xs[i1]);
    if (s12 < s01 - opts.zero_tol * (std::fabs(s01) + std::fabs(s12))) {
      const double c = (t.h[i2] - t.h[i0]) / (t.xs[i2] - t.xs[i0]);
      const AffineMap chord{c, t.h[i0] - c * t.xs[i0]};
      report.consistent = false;
      report.witness = Witness{
          chord, t.xs[i1], line_pattern(t, chord, opts.zero_tol, opts.line_scale, convex_bound()).pattern};
      return report;
    }
  }
  return report;
}

NumericCheckReport verify_convex_numeric(const Law& f, const Law& g, const CheckOptions& opts) {
  const auto lines = sample_convex_lines(f, g, opts);
  return verify_convex_numeric(f, g, lines, opts);
}

bool mirror_check(const BetaParams& p, const BetaParams& q) {
  const bool direct = decide_beta_order(OrderKind::convex_transform, p, q).result == Relation::less_than;
  const bool mirrored =
      decide_beta_order(OrderKind::convex_transform, q.reflected(), p.reflected()).result == Relation::less_than;
  return direct == mirrored;
}

NumericCheckReport beta_vs_gamma_check(double a, double b, double theta, const CheckOptions& opts) {
  const Law f = beta_law(BetaParams(a, b));
  const Law g = gamma_law(GammaParams(a, theta));
  CheckOptions scaled = opts;
  scaled.line_scale = opts.line_scale * theta;
  NumericCheckReport star = verify_star_numeric(f, g, scaled);
  if (!star.consistent) return star;
  return verify_convex_numeric(f, g, scaled);
}

}  // namespace betaorder
