#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betaorder/distributions.hpp"
#include "betaorder/sign_pattern.hpp"

namespace betaorder {

enum class OrderKind { stochastic_dominance, star_shaped, convex_transform };

enum class Relation { less_than, greater_than, equivalent, incomparable };

std::string to_string(OrderKind kind);
std::string to_string(Relation relation);  // "LessThan", "GreaterThan", ...
// Accepts "st", "star", "convex" and the long names produced by to_string.
OrderKind parse_order_kind(std::string_view text);
Relation parse_relation(std::string_view text);

// Always states P relative to Q.
struct OrderVerdict {
  OrderKind relation;
  Relation result;

  friend bool operator==(const OrderVerdict&, const OrderVerdict&) = default;
};

struct AffineMap {
  double c = 1.0;  // slope
  double d = 0.0;  // intercept

  double operator()(double x) const noexcept { return c * x + d; }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

struct Witness {
  AffineMap line;
  double x = 0.0;
  SignPattern pattern;
};

struct NumericCheckReport {
  bool consistent = true;
  std::optional<Witness> witness;  // present iff !consistent
  SignPattern pattern_bound;
  std::size_t grid_size = 0;
  std::size_t lines_checked = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct CheckOptions {
  GridPolicy grid{};
  double zero_tol = 1e-9;
  // Total number of sampled lines (or slopes); half random, half structured.
  std::size_t lines = 200;
  std::uint64_t seed = kDefaultSeed;
  // Random lines are drawn in unit coordinates and multiplied by this factor,
  // so that the target law's scale does not change which lines are drawn.
  double line_scale = 1.0;
};

/// Closed-form verdict for Beta(a, b) = P against Beta(a', b') = Q.
///
/// Star-shaped and convex transform order: P <= Q iff a >= a' and b <= b'.
/// Stochastic dominance runs the other way: Q <=st P under the same condition,
/// reported as GreaterThan.
OrderVerdict decide_beta_order(OrderKind kind, const BetaParams& p, const BetaParams& q);

/// Numerical checkers. Each returns consistent=true when no violation is found
/// on the grid, which is evidence rather than proof; a witness is a disproof
/// up to floating point.
NumericCheckReport verify_st_numeric(const Law& f, const Law& g, const CheckOptions& opts = {});

NumericCheckReport verify_star_numeric(const Law& f, const Law& g, std::span<const double> slopes,
                                       const CheckOptions& opts = {});
NumericCheckReport verify_star_numeric(const Law& f, const Law& g, const CheckOptions& opts = {});

NumericCheckReport verify_convex_numeric(const Law& f, const Law& g, std::span<const AffineMap> lines,
                                         const CheckOptions& opts = {});
NumericCheckReport verify_convex_numeric(const Law& f, const Law& g, const CheckOptions& opts = {});

// Slopes through the origin: half uniform on (0, 4), half through quantile
// pairs (F^-1(u), G^-1(u)) perturbed up and down.
std::vector<double> sample_star_slopes(const Law& f, const Law& g, const CheckOptions& opts);
// Lines: half with c uniform on (0, 4), d uniform on (-2, 1); half secants
// through pairs of quantile points (F^-1(u), G^-1(u)), shifted up and down.
std::vector<AffineMap> sample_convex_lines(const Law& f, const Law& g, const CheckOptions& opts);

// Convex-order verdict for (a,b) vs (a',b') agrees with the verdict for the
// mirrored pair (b',a') vs (b,a).
bool mirror_check(const BetaParams& p, const BetaParams& q);

// Beta(a, b) <=* Gamma(a, theta) and Beta(a, b) <=c Gamma(a, theta), checked
// numerically. Reports the first failing check, else the convex report.
NumericCheckReport beta_vs_gamma_check(double a, double b, double theta, const CheckOptions& opts = {});

}  // namespace betaorder
