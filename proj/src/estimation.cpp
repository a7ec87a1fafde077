#include "tailfrac/estimation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "tailfrac/errors.hpp"
#include "tailfrac/second_order.hpp"

namespace tailfrac {

namespace {

void require_positive(const char* what, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << what << " must be finite and positive (got " << v << ")";
    throw DomainError(msg.str());
  }
}

double median_of_sorted(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

}  // namespace

SortedSample::SortedSample(std::vector<double> ascending)
    : values_(std::move(ascending)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("sorted sample contains a non-finite value");
    }
    if (i > 0 && values_[i] < values_[i - 1]) {
      std::ostringstream msg;
      msg << "sample is not in ascending order at index " << i;
      throw DomainError(msg.str());
    }
  }
}

SortedSample SortedSample::from_unsorted(std::vector<double> values) {
  if (std::any_of(values.begin(), values.end(),
                  [](double v) { return std::isnan(v); })) {
    throw DomainError("sample contains NaN");
  }
  std::sort(values.begin(), values.end());
  return SortedSample(std::move(values));
}

double hill(const SortedSample& sample, std::size_t k) {
  const std::size_t n = sample.size();
  if (k < 1 || k >= n) {
    std::ostringstream msg;
    msg << "hill: k must satisfy 1 <= k < n (k=" << k << ", n=" << n << ")";
    throw DomainError(msg.str());
  }
  const double base = sample[n - k - 1];
  if (!(base > 0.0)) {
    std::ostringstream msg;
    msg << "hill: order statistic X_(n-k) must be positive (got " << base
        << ")";
    throw DomainError(msg.str());
  }
  double sum = 0.0;
  for (std::size_t i = n - k; i < n; ++i) sum += std::log(sample[i] / base);
  const double mean_log_excess = sum / static_cast<double>(k);
  if (!(mean_log_excess > 0.0)) {
    throw DegenerateDataError(
        "hill: top order statistics are all tied with X_(n-k)");
  }
  return 1.0 / mean_log_excess;
}

double usable_fraction(double alpha) {
  require_positive("usable_fraction alpha", alpha);
  return std::exp2(-alpha);
}

double alpha_for_fraction(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    std::ostringstream msg;
    msg << "alpha_for_fraction: p must lie in (0, 1) (got " << p << ")";
    throw DomainError(msg.str());
  }
  return -std::log2(p);
}

FractionIndex fraction_index(double p) {
  FractionIndex out;
  out.p = p;
  out.alpha = alpha_for_fraction(p);
  out.natural_log_alpha = -std::log(p);
  std::ostringstream note;
  note.precision(4);
  note << "usable fraction 2^-alpha = " << p << " needs alpha = " << out.alpha
       << "; the natural-log value " << out.natural_log_alpha
       << " (-ln p) does not satisfy it";
  out.note = note.str();
  return out;
}

double threshold_lower_bound(double mu, double sigma, double alpha) {
  if (!std::isfinite(mu)) throw DomainError("threshold mu must be finite");
  require_positive("threshold_lower_bound sigma", sigma);
  require_positive("threshold_lower_bound alpha", alpha);
  return mu + alpha * sigma;
}

const char* to_string(ScaleMethod m) noexcept {
  return m == ScaleMethod::Mean ? "mean" : "median";
}

std::pair<double, ScaleMethod> estimate_scale(std::span<const double> sorted_excesses,
                                              double alpha) {
  require_positive("estimate_scale alpha", alpha);
  if (sorted_excesses.empty()) throw DomainError("estimate_scale: no excesses");
  if (alpha > 1.0) {
    const double mean =
        std::accumulate(sorted_excesses.begin(), sorted_excesses.end(), 0.0) /
        static_cast<double>(sorted_excesses.size());
    return {mean * (alpha - 1.0) / alpha, ScaleMethod::Mean};
  }
  const double median = median_of_sorted(sorted_excesses);
  return {median / (alpha * std::expm1(std::log(2.0) / alpha)),
          ScaleMethod::Median};
}

std::size_t default_k(std::size_t excess_count) {
  if (excess_count < 2) {
    std::ostringstream msg;
    msg << "at least 2 excesses are needed to choose k (got " << excess_count
        << ")";
    throw DomainError(msg.str());
  }
  auto k = static_cast<std::size_t>(
      std::ceil(0.05 * static_cast<double>(excess_count)));
  return std::clamp<std::size_t>(k, 1, excess_count - 1);
}

FractionReport analyze(std::span<const double> data, double mu,
                       std::optional<std::size_t> k) {
  if (!std::isfinite(mu)) throw DomainError("threshold mu must be finite");
  std::vector<double> excesses;
  std::size_t below = 0;
  for (double z : data) {
    if (!std::isfinite(z)) throw DomainError("data contains a non-finite value");
    if (z > mu) {
      excesses.push_back(z - mu);
    } else {
      ++below;
    }
  }
  const std::size_t m = excesses.size();
  const std::size_t k_used = k ? *k : (m >= 2 ? default_k(m) : 1);
  if (k_used < 1 || m < k_used + 1) {
    std::ostringstream msg;
    msg << "too few excesses above mu=" << mu << ": " << m
        << " observations exceed it, " << below << " do not; k=" << k_used
        << " needs at least " << k_used + 1;
    throw DomainError(msg.str());
  }

  const SortedSample sorted = SortedSample::from_unsorted(std::move(excesses));
  FractionReport r;
  r.alpha_hat = hill(sorted, k_used);
  r.k_used = k_used;
  r.n = data.size();
  r.below = below;
  r.mu = mu;
  const auto [sigma, method] = estimate_scale(sorted.values(), r.alpha_hat);
  r.sigma_hat = sigma;
  r.sigma_method = method;
  r.usable_fraction = usable_fraction(r.alpha_hat);
  r.adjusted_percentile = adjusted_percentile(below, r.n, r.alpha_hat);
  r.threshold_lower_bound = threshold_lower_bound(mu, sigma, r.alpha_hat);
  return r;
}

std::vector<double> read_data(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty()) continue;
    std::string_view digits = s;
    if (digits.front() == '+') digits.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        !std::isfinite(v)) {
      std::ostringstream msg;
      msg << "line " << line_no << ": not a finite number: '" << s << "'";
      throw DataError(msg.str());
    }
    out.push_back(v);
  }
  if (in.bad()) throw DataError("read error while reading data");
  return out;
}

std::vector<double> read_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file: " + path);
  try {
    return read_data(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace tailfrac
