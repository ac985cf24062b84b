#include "betaorder/sign_pattern.hpp"

#include <cmath>
#include <numbers>

#include "betaorder/errors.hpp"

namespace betaorder {

SignPattern SignPattern::alternating(Sign first, std::size_t length) {
  if (length == 0) return {};
  if (first == Sign::zero) throw DomainError("alternating pattern cannot start with zero");
  return SignPattern(first, length);
}

SignPattern SignPattern::reduce(std::span<const Sign> word) {
  SignPattern out;
  for (Sign s : word) out = concat(out, SignPattern(s));
  return out;
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<Sign> word;
  word.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '+': word.push_back(Sign::positive); break;
      case '-': word.push_back(Sign::negative); break;
      case '0': break;
      default: throw DomainError("invalid sign character in pattern: '" + std::string(text) + "'");
    }
  }
  return reduce(word);
}

std::vector<Sign> SignPattern::word() const {
  std::vector<Sign> out(length_);
  for (std::size_t i = 0; i < length_; ++i) out[i] = (*this)[i];
  return out;
}

std::string SignPattern::to_string() const {
  if (length_ == 0) return "0";
  std::string out(length_, ' ');
  for (std::size_t i = 0; i < length_; ++i) out[i] = to_char((*this)[i]);
  return out;
}

SignPattern concat(const SignPattern& lhs, const SignPattern& rhs) {
  if (lhs.empty()) return rhs;
  if (rhs.empty()) return lhs;
  const std::size_t merged = lhs.back() == rhs.front() ? 1 : 0;
  return SignPattern::alternating(lhs.front(), lhs.size() + rhs.size() - merged);
}

SignPattern reverse(const SignPattern& p) {
  if (p.empty()) return p;
  return SignPattern::alternating(p.back(), p.size());
}

SignPattern flip(const SignPattern& p) {
  if (p.empty()) return p;
  return SignPattern::alternating(negate(p.front()), p.size());
}

bool leq(const SignPattern& p, const SignPattern& q) noexcept {
  if (p.empty()) return true;
  if (q.empty()) return false;
  if (p.front() == q.front()) return p.size() <= q.size();
  return p.size() + 1 <= q.size();
}

SignPattern pattern_of_samples(std::span<const double> values, double zero_tol) {
  SignPattern out;
  for (double v : values) {
    const Sign s = sign_of(v, zero_tol);
    if (s == Sign::zero) continue;
    if (out.empty() || out.back() != s) out = concat(out, SignPattern(s));
  }
  return out;
}

std::vector<double> chebyshev_grid(double lo, double hi, const GridPolicy& grid) {
  if (!(lo < hi)) throw DomainError("chebyshev_grid requires lo < hi");
  if (grid.points < 2) throw DomainError("chebyshev_grid requires at least two points");
  if (!(grid.margin >= 0.0) || grid.margin >= 0.5) throw DomainError("grid margin must lie in [0, 0.5)");

  const double width = hi - lo;
  const double inner_lo = lo + grid.margin * width;
  const double inner_hi = hi - grid.margin * width;
  const double half = 0.5 * (inner_hi - inner_lo);
  const std::size_t last = grid.points - 1;

  std::vector<double> xs(grid.points);
  for (std::size_t k = 0; k <= last; ++k) {
    // 1 - cos(theta) computed as 2 sin^2(theta/2) keeps the clustered ends accurate.
    const double theta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(last);
    const double s = std::sin(0.5 * theta);
    xs[k] = inner_lo + half * 2.0 * s * s;
  }
  xs.front() = inner_lo;
  xs.back() = inner_hi;
  return xs;
}

SampledPattern pattern_of_function(const std::function<double(double)>& f, double lo, double hi,
                                   const GridPolicy& grid, double zero_tol) {
  const auto xs = chebyshev_grid(lo, hi, grid);
  std::vector<double> values(xs.size(), 0.0);
  SampledPattern out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      const double v = f(xs[i]);
      if (std::isfinite(v)) {
        values[i] = v;
      } else {
        out.failures.push_back(xs[i]);
      }
    } catch (const std::exception&) {
      out.failures.push_back(xs[i]);
    }
  }
  out.evaluated = xs.size();
  out.pattern = pattern_of_samples(values, zero_tol);
  return out;
}

bool check_derivative_bound(std::span<const std::pair<double, double>> f_samples,
                            std::span<const std::pair<double, double>> df_samples,
                            double zero_tol) {
  std::vector<double> fv;
  fv.reserve(f_samples.size());
  for (const auto& [x, y] : f_samples) fv.push_back(y);
  std::vector<double> dfv;
  dfv.reserve(df_samples.size());
  for (const auto& [x, y] : df_samples) dfv.push_back(y);

  const SignPattern pf = pattern_of_samples(fv, zero_tol);
  if (pf.empty()) return true;
  const SignPattern bound = concat(SignPattern(pf.front()), pattern_of_samples(dfv, zero_tol));
  return leq(pf, bound);
}

}  // namespace betaorder
