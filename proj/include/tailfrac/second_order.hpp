#ifndef TAILFRAC_SECOND_ORDER_HPP
#define TAILFRAC_SECOND_ORDER_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tailfrac/distributions.hpp"

namespace tailfrac {

/// Two-term tail expansion 1 - F(x) ~ c x^-a + d x^-b together with the
/// point from which the underlying series converges.
///
/// Invariants: c > 0, d != 0, b > a > 0. When x_valid > 0,
/// cdf(fam, x_valid) == p_valid.
///
/// The same expansion is often written A x^-alpha (1 + B x^-beta); the
/// accessors below give that view (A = c, B = d/c, beta = b - a).
struct SecondOrder {
  double c = 0.0;
  double a = 0.0;
  double d = 0.0;
  double b = 0.0;
  /// Smallest x where the series for the tail converges (0: everywhere).
  double x_valid = 0.0;
  /// CDF level above which the expansion is used. For Frechet this is the
  /// level F(1) where the approximation becomes good, not a convergence
  /// boundary.
  double p_valid = 0.0;

  double leading_A() const noexcept { return c; }
  double relative_B() const noexcept { return d / c; }
  double second_order_beta() const noexcept { return b - a; }
};

SecondOrder expansion(const Family& fam);

/// c x^-a + d x^-b. Below x_valid the value can be negative (for the GPD it
/// equals 1 - alpha at x = alpha*sigma).
double approx_tail(const SecondOrder& so, double x);

/// p_valid of expansion(fam).
double validity_percentile(const Family& fam);

/// CDF level of the whole sample above which the expansion is valid, when
/// `below` of `total` observations fall under the threshold:
/// N/n + ((n - N)/n)(1 - 2^-alpha).
double adjusted_percentile(std::size_t below, std::size_t total, double alpha);

struct Table1Row {
  double nu = 0.0;
  /// One-sided P(T > sqrt(nu)) = I_{1/2}(nu/2, 1/2) / 2.
  double prob = 0.0;
  /// Both tails, P(|T| > sqrt(nu)).
  double two_sided() const noexcept { return 2.0 * prob; }
};

inline constexpr std::string_view kTable1Note =
    "prob is one-sided; counting both tails doubles every proportion";

/// The degrees of freedom 1..10.
std::vector<double> table1_default_nu();

std::vector<Table1Row> table1(std::span<const double> nu_values);

}  // namespace tailfrac

#endif  // TAILFRAC_SECOND_ORDER_HPP
