#include "tailfrac/second_order.hpp"

#include <cmath>
#include <sstream>

#include "tailfrac/errors.hpp"
#include "tailfrac/specfun.hpp"

namespace tailfrac {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// One-sided P(T > sqrt(nu)); at t = sqrt(nu) the beta argument is exactly 1/2.
double student_tail_at_sqrt_nu(double nu) {
  return 0.5 * specfun::reg_inc_beta(0.5, 0.5, specfun::BetaArgs(0.5 * nu, 0.5));
}

}  // namespace

SecondOrder expansion(const Family& fam) {
  return std::visit(
      Overloaded{
          // Binomial series of (1 + alpha*sigma/x)^-alpha, valid for
          // x > alpha*sigma where the tail equals 2^-alpha.
          [](const Gpd& g) {
            const double alpha = g.alpha();
            const double sigma = g.sigma();
            SecondOrder so;
            so.c = std::pow(alpha * sigma, alpha);
            so.a = alpha;
            so.d = -std::pow(alpha, alpha + 2.0) * std::pow(sigma, alpha + 1.0);
            so.b = alpha + 1.0;
            so.x_valid = alpha * sigma;
            so.p_valid = 1.0 - std::exp2(-alpha);
            return so;
          },
          // Series of (1 + lambda x^-tau)^-alpha, valid for x^tau > lambda.
          [](const Burr& b) {
            const double alpha = b.alpha();
            const double lambda = b.lambda();
            SecondOrder so;
            so.c = std::pow(lambda, alpha);
            so.a = alpha * b.tau();
            so.d = -alpha * std::pow(lambda, alpha + 1.0);
            so.b = (alpha + 1.0) * b.tau();
            so.x_valid = std::pow(lambda, 1.0 / b.tau());
            so.p_valid = 1.0 - std::exp2(-alpha);
            return so;
          },
          // 1 - exp(-u) = u - u^2/2 + ..., u = x^-alpha; converges for all x.
          [](const Frechet& f) {
            SecondOrder so;
            so.c = 1.0;
            so.a = f.alpha();
            so.d = -0.5;
            so.b = 2.0 * f.alpha();
            so.x_valid = 0.0;
            so.p_valid = std::exp(-1.0);
            return so;
          },
          // Termwise integration of the density expanded in nu/t^2.
          [](const StudentT& t) {
            const double nu = t.nu();
            const double beta = std::exp(specfun::ln_beta(specfun::BetaArgs(0.5 * nu, 0.5)));
            SecondOrder so;
            so.c = std::pow(nu, 0.5 * nu - 1.0) / beta;
            so.a = nu;
            so.d = -0.5 * std::pow(nu, 0.5 * nu + 1.0) * (nu + 1.0) /
                   ((nu + 2.0) * beta);
            so.b = nu + 2.0;
            so.x_valid = std::sqrt(nu);
            so.p_valid = 1.0 - student_tail_at_sqrt_nu(nu);
            return so;
          },
      },
      fam);
}

double approx_tail(const SecondOrder& so, double x) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << "approx_tail requires x > 0 (got " << x << ")";
    throw DomainError(msg.str());
  }
  return so.c * std::pow(x, -so.a) + so.d * std::pow(x, -so.b);
}

double validity_percentile(const Family& fam) { return expansion(fam).p_valid; }

double adjusted_percentile(std::size_t below, std::size_t total, double alpha) {
  if (below >= total) {
    std::ostringstream msg;
    msg << "adjusted_percentile: no excesses (N=" << below << ", n=" << total
        << ")";
    throw DomainError(msg.str());
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("adjusted_percentile: alpha must be finite and positive");
  }
  const double n = static_cast<double>(total);
  const double lower = static_cast<double>(below) / n;
  const double upper = static_cast<double>(total - below) / n;
  return lower + upper * (1.0 - std::exp2(-alpha));
}

std::vector<double> table1_default_nu() {
  return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
}

std::vector<Table1Row> table1(std::span<const double> nu_values) {
  std::vector<Table1Row> rows;
  rows.reserve(nu_values.size());
  for (double nu : nu_values) {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
      std::ostringstream msg;
      msg << "table1: degrees of freedom must be positive (got " << nu << ")";
      throw DomainError(msg.str());
    }
    rows.push_back({nu, student_tail_at_sqrt_nu(nu)});
  }
  return rows;
}

}  // namespace tailfrac
