#include "tailfrac/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>

#include "tailfrac/errors.hpp"
#include "tailfrac/second_order.hpp"

namespace tailfrac {

namespace {

constexpr std::ptrdiff_t kParallelMin = 1 << 14;

void require_draws(std::size_t n) {
  if (n == 0) throw DomainError("number of draws must be at least 1");
}

std::size_t count_exceeding(const Family& fam, double x0, std::size_t n,
                            Seed seed, std::uint64_t stream) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (quantile(fam, uniform01(seed, stream, i)) > x0) ++count;
  }
  return count;
}

}  // namespace

double mc_exceedance_serial(const Family& fam, double x0, std::size_t n,
                            Seed seed) {
  require_draws(n);
  if (std::isnan(x0)) throw DomainError("x0 is NaN");
  return static_cast<double>(count_exceeding(fam, x0, n, seed, 0)) /
         static_cast<double>(n);
}

double mc_exceedance(const Family& fam, double x0, std::size_t n, Seed seed) {
  require_draws(n);
  if (std::isnan(x0)) throw DomainError("x0 is NaN");
  const auto total = static_cast<std::ptrdiff_t>(n);
  std::ptrdiff_t count = 0;
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(static) reduction(+ : count) if (total >= kParallelMin)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    try {
      if (quantile(fam, uniform01(seed, 0, static_cast<std::uint64_t>(i))) > x0) {
        ++count;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return static_cast<double>(count) / static_cast<double>(n);
}

std::vector<double> mc_exceedance_replicates_serial(const Family& fam, double x0,
                                                    std::size_t n, Seed seed,
                                                    std::size_t replicates) {
  require_draws(n);
  std::vector<double> out(replicates);
  for (std::size_t r = 0; r < replicates; ++r) {
    out[r] = static_cast<double>(count_exceeding(fam, x0, n, seed, r)) /
             static_cast<double>(n);
  }
  return out;
}

std::vector<double> mc_exceedance_replicates(const Family& fam, double x0,
                                             std::size_t n, Seed seed,
                                             std::size_t replicates) {
  require_draws(n);
  std::vector<double> out(replicates);
  const auto reps = static_cast<std::ptrdiff_t>(replicates);
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t r = 0; r < reps; ++r) {
    try {
      const auto stream = static_cast<std::uint64_t>(r);
      out[r] = static_cast<double>(count_exceeding(fam, x0, n, seed, stream)) /
               static_cast<double>(n);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::size_t top_count(std::size_t n, double top_fraction) {
  if (!(top_fraction > 0.0 && top_fraction <= 1.0)) {
    std::ostringstream msg;
    msg << "top fraction must lie in (0, 1] (got " << top_fraction << ")";
    throw DomainError(msg.str());
  }
  // The small offset keeps products such as 0.29 * 100 from flooring to 28.
  return static_cast<std::size_t>(
      std::floor(top_fraction * static_cast<double>(n) + 1e-9));
}

std::vector<TailRow> figure_data(const Family& fam, std::size_t n,
                                 double top_fraction, Seed seed) {
  if (n < 4) throw DomainError("figure_data needs at least 4 draws");
  const std::size_t m = top_count(n, top_fraction);
  if (m < 1) throw DomainError("figure_data: top fraction selects no draws");

  std::vector<double> draws = sample(fam, n, seed);
  std::sort(draws.begin(), draws.end());
  const SecondOrder so = expansion(fam);

  std::vector<TailRow> rows(m);
  const std::size_t first = n - m;
  for (std::size_t j = 0; j < m; ++j) {
    const double x = draws[first + j];
    if (!(x > 0.0)) {
      std::ostringstream msg;
      msg << "figure_data: order statistic " << first + j + 1 << " is " << x
          << "; the expansion needs positive values (reduce the top fraction)";
      throw DomainError(msg.str());
    }
    rows[j] = {x, static_cast<double>(j) / static_cast<double>(m),
               tail(fam, x), approx_tail(so, x)};
  }
  return rows;
}

std::vector<TailRow> curve_data(const Family& fam, double x_min, double x_max,
                                std::size_t points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    std::ostringstream msg;
    msg << "curve_data: need finite x_min < x_max (got " << x_min << ", "
        << x_max << ")";
    throw DomainError(msg.str());
  }
  if (points < 2) throw DomainError("curve_data: need at least 2 points");
  if (!(x_max > 0.0)) throw DomainError("curve_data: x_max must be positive");

  const SecondOrder so = expansion(fam);
  std::vector<TailRow> rows(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    double x;
    if (x_min > 0.0) {
      if (i == 0) {
        x = x_min;
      } else if (i + 1 == points) {
        x = x_max;
      } else {
        const double t = static_cast<double>(i) / last;
        x = std::exp(std::log(x_min) + t * (std::log(x_max) - std::log(x_min)));
      }
    } else {
      x = x_max * static_cast<double>(i + 1) / static_cast<double>(points);
    }
    rows[i] = {x, cdf(fam, x), tail(fam, x), approx_tail(so, x)};
  }
  return rows;
}

}  // namespace tailfrac
