#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betaorder {

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1 };

constexpr Sign negate(Sign s) noexcept { return static_cast<Sign>(-static_cast<int>(s)); }

// Sign of x, with |x| <= zero_tol mapped to Sign::zero.
constexpr Sign sign_of(double x, double zero_tol = 0.0) noexcept {
  if (x > zero_tol) return Sign::positive;
  if (x < -zero_tol) return Sign::negative;
  return Sign::zero;
}

constexpr char to_char(Sign s) noexcept {
  return s == Sign::positive ? '+' : (s == Sign::negative ? '-' : '0');
}

/// An element of the monoid generated by two idempotents `+` and `-`.
///
/// Every element has a unique reduced form: an alternating word such as
/// `+-+`. Such a word is determined by its first sign and its length, which
/// is how it is stored; the empty word is the unit.
class SignPattern {
 public:
  SignPattern() = default;

  // Single-letter pattern; Sign::zero yields the unit.
  explicit SignPattern(Sign s) : first_(s), length_(s == Sign::zero ? 0 : 1) {}

  static SignPattern alternating(Sign first, std::size_t length);

  // Reduces an arbitrary sequence of signs, dropping zeros and merging repeats.
  static SignPattern reduce(std::span<const Sign> word);

  // Parses "+-+", "-+", "0" or "" (the unit). Whitespace is not accepted.
  static SignPattern parse(std::string_view text);

  bool empty() const noexcept { return length_ == 0; }
  std::size_t size() const noexcept { return length_; }

  // Requires !empty().
  Sign front() const noexcept { return first_; }
  Sign back() const noexcept { return length_ % 2 == 1 ? first_ : negate(first_); }
  Sign operator[](std::size_t i) const noexcept { return i % 2 == 0 ? first_ : negate(first_); }

  std::vector<Sign> word() const;
  std::string to_string() const;

  friend bool operator==(const SignPattern& lhs, const SignPattern& rhs) noexcept {
    return lhs.length_ == rhs.length_ && (lhs.length_ == 0 || lhs.first_ == rhs.first_);
  }

 private:
  SignPattern(Sign first, std::size_t length) : first_(first), length_(length) {}

  Sign first_ = Sign::zero;
  std::size_t length_ = 0;
};

// Monoid product: lhs followed by rhs, with a shared boundary sign merged.
SignPattern concat(const SignPattern& lhs, const SignPattern& rhs);

inline SignPattern operator*(const SignPattern& lhs, const SignPattern& rhs) {
  return concat(lhs, rhs);
}

SignPattern reverse(const SignPattern& p);
SignPattern flip(const SignPattern& p);

/// Partial order: p <= q iff q = pi * p * pi' for some pi, pi'.
///
/// For alternating words this holds iff p is empty, or len(p) <= len(q) when
/// the leading signs agree, or len(p) <= len(q) - 1 when they differ.
bool leq(const SignPattern& p, const SignPattern& q) noexcept;

// Product of sign(v_i) over the sequence, |v_i| <= zero_tol counting as unit.
SignPattern pattern_of_samples(std::span<const double> values, double zero_tol = 0.0);

struct GridPolicy {
  std::size_t points = 2049;
  // Fraction of (hi - lo) kept clear at each end of the interval.
  double margin = 1e-8;
};

// Chebyshev-Lobatto nodes on [lo + m, hi - m], m = margin * (hi - lo), ascending.
// Grids with points = 2^k + 1 are nested.
std::vector<double> chebyshev_grid(double lo, double hi, const GridPolicy& grid = {});

struct SampledPattern {
  SignPattern pattern;
  std::size_t evaluated = 0;
  // Grid points where f threw or returned a non-finite value; they count as zero.
  std::vector<double> failures;
};

SampledPattern pattern_of_function(const std::function<double(double)>& f, double lo, double hi,
                                   const GridPolicy& grid = {}, double zero_tol = 1e-9);

// pattern(f) <= first_sign(f) * pattern(f'), on sampled values.
bool check_derivative_bound(std::span<const std::pair<double, double>> f_samples,
                            std::span<const std::pair<double, double>> df_samples,
                            double zero_tol = 0.0);

}  // namespace betaorder
