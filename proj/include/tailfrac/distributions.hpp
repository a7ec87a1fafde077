#ifndef TAILFRAC_DISTRIBUTIONS_HPP
#define TAILFRAC_DISTRIBUTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace tailfrac {

/// Generalized Pareto excess distribution, tail (1 + x/(alpha*sigma))^-alpha
/// on x >= 0. The shape is xi = 1/alpha.
class Gpd {
 public:
  Gpd(double sigma, double alpha);
  double sigma() const noexcept { return sigma_; }
  double alpha() const noexcept { return alpha_; }
  double xi() const noexcept { return 1.0 / alpha_; }

 private:
  double sigma_;
  double alpha_;
};

/// Burr distribution, tail lambda^alpha / (lambda + x^tau)^alpha on x > 0.
class Burr {
 public:
  Burr(double lambda, double tau, double alpha);
  double lambda() const noexcept { return lambda_; }
  double tau() const noexcept { return tau_; }
  double alpha() const noexcept { return alpha_; }

 private:
  double lambda_;
  double tau_;
  double alpha_;
};

/// Standard (unit scale) Frechet, F(x) = exp(-x^-alpha) on x > 0.
class Frechet {
 public:
  explicit Frechet(double alpha);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Student t with nu degrees of freedom. cdf/tail are the usual two-sided
/// functions on the whole line.
class StudentT {
 public:
  explicit StudentT(double nu);
  double nu() const noexcept { return nu_; }

 private:
  double nu_;
};

using Family = std::variant<Gpd, Burr, Frechet, StudentT>;

/// Short lowercase identifier: "gpd", "burr", "frechet" or "student_t".
std::string family_name(const Family& fam);

/// Human readable name with parameters, e.g. "gpd(sigma=0.5, alpha=2)".
std::string describe(const Family& fam);

/// Lower endpoint of the support (-inf for StudentT).
double support_lower(const Family& fam) noexcept;

double cdf(const Family& fam, double x);

/// P(X > x). Computed directly, never as 1 - cdf.
double tail(const Family& fam, double x);

/// Inverse cdf for p in [0, 1).
double quantile(const Family& fam, double p);

struct Seed {
  std::uint64_t value = 0;
};

/// Stateless uniform stream: the index-th draw of stream `stream` under
/// `seed`, in the open interval (0, 1). Identical on every platform.
double uniform01(Seed seed, std::uint64_t stream, std::uint64_t index) noexcept;

/// n draws quantile(fam, U_i), U_i = uniform01(seed, stream, i).
/// Parallelised with OpenMP for large n; results are identical to
/// sample_serial for every thread count.
std::vector<double> sample(const Family& fam, std::size_t n, Seed seed,
                           std::uint64_t stream = 0);

/// Single-threaded reference for sample().
std::vector<double> sample_serial(const Family& fam, std::size_t n, Seed seed,
                                  std::uint64_t stream = 0);

}  // namespace tailfrac

#endif  // TAILFRAC_DISTRIBUTIONS_HPP
