#ifndef TAILFRAC_ESTIMATION_HPP
#define TAILFRAC_ESTIMATION_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tailfrac {

/// Nondecreasing sequence of finite reals.
class SortedSample {
 public:
  /// Takes ownership of already sorted values; throws DomainError if they
  /// are not nondecreasing or contain a non-finite value.
  explicit SortedSample(std::vector<double> ascending);

  /// Sorts `values` first.
  static SortedSample from_unsorted(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

 private:
  std::vector<double> values_;
};

/// Hill estimate of the tail index from the k largest order statistics:
/// the reciprocal of the mean of ln(X_(n-i+1) / X_(n-k)), i = 1..k.
double hill(const SortedSample& sample, std::size_t k);

/// 2^-alpha: share of the excesses above the point where the expansion is
/// valid.
double usable_fraction(double alpha);

/// -log2(p), the inverse of usable_fraction.
double alpha_for_fraction(double p);

/// alpha_for_fraction together with the natural-log value -ln(p). The two
/// are easily confused (for p = 0.1 they are 3.32 and 2.30); only the base-2
/// value satisfies usable_fraction(alpha) = p.
struct FractionIndex {
  double p = 0.0;
  double alpha = 0.0;
  double natural_log_alpha = 0.0;
  std::string note;
};

FractionIndex fraction_index(double p);

/// mu + alpha*sigma.
double threshold_lower_bound(double mu, double sigma, double alpha);

enum class ScaleMethod { Mean, Median };

const char* to_string(ScaleMethod m) noexcept;

struct FractionReport {
  double alpha_hat = 0.0;
  std::size_t k_used = 0;
  std::size_t n = 0;
  std::size_t below = 0;  // N: observations <= mu
  double mu = 0.0;
  double sigma_hat = 0.0;
  ScaleMethod sigma_method = ScaleMethod::Mean;
  double usable_fraction = 0.0;
  double adjusted_percentile = 0.0;
  double threshold_lower_bound = 0.0;
};

/// GPD scale from excesses given the index: moment estimate
/// mean * (alpha-1)/alpha when alpha > 1, otherwise the median inversion
/// median / (alpha (2^(1/alpha) - 1)).
std::pair<double, ScaleMethod> estimate_scale(std::span<const double> sorted_excesses,
                                              double alpha);

/// ceil(0.05 * excesses), clamped to [1, excesses - 1].
std::size_t default_k(std::size_t excess_count);

/// Threshold pipeline: split at mu (values equal to mu count as below),
/// run Hill on the excesses, estimate the scale and assemble the report.
/// Without k, default_k is used.
FractionReport analyze(std::span<const double> data, double mu,
                       std::optional<std::size_t> k = std::nullopt);

/// Reads one finite decimal number per line. Blank lines are skipped; any
/// other line that is not a number raises DataError naming the line.
std::vector<double> read_data(std::istream& in);

/// read_data from a file; DataError if the file cannot be opened.
std::vector<double> read_data_file(const std::string& path);

}  // namespace tailfrac

#endif  // TAILFRAC_ESTIMATION_HPP
