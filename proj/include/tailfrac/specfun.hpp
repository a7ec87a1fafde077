#ifndef TAILFRAC_SPECFUN_HPP
#define TAILFRAC_SPECFUN_HPP

namespace tailfrac::specfun {

/// Arguments (a, b) of the beta function. Both must be strictly positive;
/// the constructor throws DomainError otherwise.
class BetaArgs {
 public:
  BetaArgs(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  /// (b, a), used by the reflection I_x(a,b) = 1 - I_{1-x}(b,a).
  BetaArgs swapped() const noexcept { return BetaArgs(b_, a_, Unchecked{}); }

 private:
  struct Unchecked {};
  BetaArgs(double a, double b, Unchecked) noexcept : a_(a), b_(b) {}

  double a_;
  double b_;
};

/// ln Gamma(x) for x > 0 (Lanczos approximation, ~1e-15 relative).
double ln_gamma(double x);

/// ln B(a, b).
double ln_beta(BetaArgs args);

/// Regularized incomplete beta I_x(a, b) for x in [0, 1].
///
/// Evaluated by the Lentz continued fraction, switching to the reflected
/// form when x > (a+1)/(a+b+2). Throws NumericError if the fraction has not
/// converged to 1e-14 after 300 iterations.
double reg_inc_beta(double x, BetaArgs args);

/// Same as reg_inc_beta(x, args) but with 1 - x supplied by the caller, so
/// that values of x close to 1 keep full precision in the complement.
double reg_inc_beta(double x, double one_minus_x, BetaArgs args);

/// Inverse of reg_inc_beta in x: returns x in [0, 1] with I_x(a,b) = p.
/// Safeguarded Newton iteration inside a shrinking bisection bracket.
double reg_inc_beta_inv(double p, BetaArgs args);

}  // namespace tailfrac::specfun

#endif  // TAILFRAC_SPECFUN_HPP
