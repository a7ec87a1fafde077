#ifndef TAILFRAC_SIMULATION_HPP
#define TAILFRAC_SIMULATION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tailfrac/distributions.hpp"

namespace tailfrac {

/// One point of an exact-versus-approximate tail comparison.
struct TailRow {
  double x = 0.0;
  /// Empirical DF level (j-1)/m for sample rows; cdf(fam, x) for grid rows.
  double ecdf = 0.0;
  double exact_tail = 0.0;
  double approx_tail = 0.0;
};

/// Fraction of n draws (stream 0 of `seed`) strictly greater than x0.
/// OpenMP reduction; equal to mc_exceedance_serial for every thread count.
double mc_exceedance(const Family& fam, double x0, std::size_t n, Seed seed);
double mc_exceedance_serial(const Family& fam, double x0, std::size_t n, Seed seed);

/// mc_exceedance repeated on streams 0..replicates-1, replicates run in
/// parallel. Element r depends only on (fam, x0, n, seed, r).
std::vector<double> mc_exceedance_replicates(const Family& fam, double x0,
                                             std::size_t n, Seed seed,
                                             std::size_t replicates);
std::vector<double> mc_exceedance_replicates_serial(const Family& fam, double x0,
                                                    std::size_t n, Seed seed,
                                                    std::size_t replicates);

/// floor(top_fraction * n), the number of order statistics kept by
/// figure_data.
std::size_t top_count(std::size_t n, double top_fraction);

/// Draws n values, keeps the largest m = top_count(n, top_fraction) in
/// ascending order and pairs each x_(j) with (j-1)/m, its exact tail and the
/// two-term approximation.
std::vector<TailRow> figure_data(const Family& fam, std::size_t n,
                                 double top_fraction, Seed seed);

/// Tails on a grid of `points` values. For x_min > 0 the grid is
/// logarithmic from x_min to x_max, both endpoints included exactly.
/// For x_min <= 0 the expansion is undefined at the lower end, so the grid
/// is linear, x_max * i / points for i = 1..points.
std::vector<TailRow> curve_data(const Family& fam, double x_min, double x_max,
                                std::size_t points);

}  // namespace tailfrac

#endif  // TAILFRAC_SIMULATION_HPP
