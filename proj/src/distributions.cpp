#include "tailfrac/distributions.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>

#include "tailfrac/errors.hpp"
#include "tailfrac/specfun.hpp"

namespace tailfrac {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::ptrdiff_t kParallelMin = 1 << 14;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(const char* what, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << what << " must be finite and positive (got " << v << ")";
    throw DomainError(msg.str());
  }
}

void require_not_nan(double x) {
  if (std::isnan(x)) throw DomainError("distribution evaluated at NaN");
}

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// P(|T| > |x|) / 2 together with its complement, via y = nu / (nu + x^2).
struct HalfTail {
  double half;       // P(T > |x|)
  double remainder;  // P(T <= |x|)
};

HalfTail student_half_tail(double nu, double x) {
  const double x2 = x * x;
  double y = 1.0;
  double one_minus_y = 0.0;
  if (!std::isfinite(x2)) {
    y = 0.0;
    one_minus_y = 1.0;
  } else if (x2 > 0.0) {
    y = nu / (nu + x2);
    one_minus_y = x2 / (nu + x2);
  }
  const specfun::BetaArgs args(0.5 * nu, 0.5);
  const double half = 0.5 * specfun::reg_inc_beta(y, one_minus_y, args);
  // 1 - half with the small-|x| case done through the complement integral.
  double remainder;
  if (half < 0.25) {
    remainder = 1.0 - half;
  } else {
    remainder =
        0.5 + 0.5 * specfun::reg_inc_beta(one_minus_y, y, args.swapped());
  }
  return {half, remainder};
}

// Inverse of P(T > t) = q for q in (0, 0.5], t >= 0.
double student_upper_quantile(double nu, double q) {
  if (q >= 0.5) return 0.0;
  const double two_q = 2.0 * q;
  const double y =
      specfun::reg_inc_beta_inv(two_q, specfun::BetaArgs(0.5 * nu, 0.5));
  if (y <= 0.5) {
    if (y == 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(nu * (1.0 - y) / y);
  }
  const double z =
      specfun::reg_inc_beta_inv(1.0 - two_q, specfun::BetaArgs(0.5, 0.5 * nu));
  return std::sqrt(nu * z / (1.0 - z));
}

}  // namespace

Gpd::Gpd(double sigma, double alpha) : sigma_(sigma), alpha_(alpha) {
  require_positive("gpd sigma", sigma);
  require_positive("gpd alpha", alpha);
}

Burr::Burr(double lambda, double tau, double alpha)
    : lambda_(lambda), tau_(tau), alpha_(alpha) {
  require_positive("burr lambda", lambda);
  require_positive("burr tau", tau);
  require_positive("burr alpha", alpha);
}

Frechet::Frechet(double alpha) : alpha_(alpha) {
  require_positive("frechet alpha", alpha);
}

StudentT::StudentT(double nu) : nu_(nu) { require_positive("student_t nu", nu); }

std::string family_name(const Family& fam) {
  return std::visit(Overloaded{
                        [](const Gpd&) { return std::string("gpd"); },
                        [](const Burr&) { return std::string("burr"); },
                        [](const Frechet&) { return std::string("frechet"); },
                        [](const StudentT&) { return std::string("student_t"); },
                    },
                    fam);
}

std::string describe(const Family& fam) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const Gpd& g) {
                   out << "gpd(sigma=" << g.sigma() << ", alpha=" << g.alpha()
                       << ")";
                 },
                 [&](const Burr& b) {
                   out << "burr(lambda=" << b.lambda() << ", tau=" << b.tau()
                       << ", alpha=" << b.alpha() << ")";
                 },
                 [&](const Frechet& f) {
                   out << "frechet(alpha=" << f.alpha() << ")";
                 },
                 [&](const StudentT& t) { out << "student_t(nu=" << t.nu() << ")"; },
             },
             fam);
  return out.str();
}

double support_lower(const Family& fam) noexcept {
  if (std::holds_alternative<StudentT>(fam)) {
    return -std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

double cdf(const Family& fam, double x) {
  require_not_nan(x);
  return std::visit(
      Overloaded{
          [x](const Gpd& g) {
            if (x <= 0.0) return 0.0;
            return -std::expm1(-g.alpha() *
                               std::log1p(x / (g.alpha() * g.sigma())));
          },
          [x](const Burr& b) {
            if (x <= 0.0) return 0.0;
            return -std::expm1(-b.alpha() *
                               std::log1p(std::pow(x, b.tau()) / b.lambda()));
          },
          [x](const Frechet& f) {
            if (x <= 0.0) return 0.0;
            return std::exp(-std::pow(x, -f.alpha()));
          },
          [x](const StudentT& t) {
            const HalfTail ht = student_half_tail(t.nu(), x);
            return x < 0.0 ? ht.half : ht.remainder;
          },
      },
      fam);
}

double tail(const Family& fam, double x) {
  require_not_nan(x);
  return std::visit(
      Overloaded{
          [x](const Gpd& g) {
            if (x <= 0.0) return 1.0;
            return std::exp(-g.alpha() *
                            std::log1p(x / (g.alpha() * g.sigma())));
          },
          [x](const Burr& b) {
            if (x <= 0.0) return 1.0;
            return std::exp(-b.alpha() *
                            std::log1p(std::pow(x, b.tau()) / b.lambda()));
          },
          [x](const Frechet& f) {
            if (x <= 0.0) return 1.0;
            return -std::expm1(-std::pow(x, -f.alpha()));
          },
          [x](const StudentT& t) {
            const HalfTail ht = student_half_tail(t.nu(), x);
            return x < 0.0 ? ht.remainder : ht.half;
          },
      },
      fam);
}

double quantile(const Family& fam, double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    std::ostringstream msg;
    msg << "quantile level must lie in [0, 1) (got " << p << ")";
    throw DomainError(msg.str());
  }
  return std::visit(
      Overloaded{
          [p](const Gpd& g) {
            return g.alpha() * g.sigma() *
                   std::expm1(-std::log1p(-p) / g.alpha());
          },
          [p](const Burr& b) {
            return std::pow(
                b.lambda() * std::expm1(-std::log1p(-p) / b.alpha()),
                1.0 / b.tau());
          },
          [p](const Frechet& f) {
            if (p == 0.0) return 0.0;
            return std::pow(-std::log(p), -1.0 / f.alpha());
          },
          [p](const StudentT& t) {
            if (p == 0.0) return -std::numeric_limits<double>::infinity();
            if (p < 0.5) return -student_upper_quantile(t.nu(), p);
            return student_upper_quantile(t.nu(), 1.0 - p);
          },
      },
      fam);
}

double uniform01(Seed seed, std::uint64_t stream, std::uint64_t index) noexcept {
  const std::uint64_t key = mix64(seed.value ^ mix64(stream + kGolden));
  std::uint64_t v = mix64(key + (index + 1) * kGolden);
  std::uint64_t bits = v >> 11;
  while (bits == 0) {
    v = mix64(v + kGolden);
    bits = v >> 11;
  }
  return static_cast<double>(bits) * 0x1.0p-53;
}

std::vector<double> sample_serial(const Family& fam, std::size_t n, Seed seed,
                                  std::uint64_t stream) {
  if (n == 0) throw DomainError("sample size must be at least 1");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = quantile(fam, uniform01(seed, stream, i));
  }
  return out;
}

std::vector<double> sample(const Family& fam, std::size_t n, Seed seed,
                           std::uint64_t stream) {
  if (n == 0) throw DomainError("sample size must be at least 1");
  std::vector<double> out(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(static) if (count >= kParallelMin)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = quantile(fam, uniform01(seed, stream, static_cast<std::uint64_t>(i)));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace tailfrac
