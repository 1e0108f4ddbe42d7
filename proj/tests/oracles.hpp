#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the slicing implementation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace tslice::oracle {

// Enumerates every order-preserving split of n items into k non-empty parts.
inline void for_each_split(std::size_t n, std::size_t k,
                           const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t slots) {
    if (slots == 1) {
      parts.push_back(remaining);
      visit(parts);
      parts.pop_back();
      return;
    }
    for (std::size_t c = 1; c + (slots - 1) <= remaining; ++c) {
      parts.push_back(c);
      rec(remaining - c, slots - 1);
      parts.pop_back();
    }
  };
  if (k >= 1 && n >= k) rec(n, k);
}

inline double max_quota_deviation(const std::vector<std::size_t>& parts, std::size_t n) {
  const double quota = static_cast<double>(n) / static_cast<double>(parts.size());
  double worst = 0.0;
  for (const auto p : parts) worst = std::max(worst, std::abs(static_cast<double>(p) - quota));
  return worst;
}

// Smallest achievable max |part - n/k| over all order-preserving splits.
inline double best_max_deviation(std::size_t n, std::size_t k) {
  double best = std::numeric_limits<double>::infinity();
  for_each_split(n, k, [&](const std::vector<std::size_t>& parts) {
    best = std::min(best, max_quota_deviation(parts, n));
  });
  return best;
}

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Fraction operator+(const Fraction& o) const {
    const std::uint64_t l = std::lcm(den, o.den);
    Fraction r{num * (l / den) + o.num * (l / o.den), l};
    const std::uint64_t g = std::gcd(r.num, r.den);
    if (g > 1) {
      r.num /= g;
      r.den /= g;
    }
    return r;
  }
};

// s_i = floor((T' - 1) * sum_{j<=i} p(j)) with T' = number of bins, summing
// p(j) = counts[j] / total as exact fractions.
inline std::vector<std::uint64_t> equalize_levels(const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (const auto c : counts) total += c;
  const std::uint64_t top = counts.size() - 1;
  std::vector<std::uint64_t> levels;
  Fraction cdf{0, 1};
  for (const auto c : counts) {
    cdf = cdf + Fraction{c, total};
    levels.push_back(top * cdf.num / cdf.den);
  }
  return levels;
}

inline double population_variance(const std::vector<std::size_t>& counts) {
  double mean = 0.0;
  for (const auto c : counts) mean += static_cast<double>(c);
  mean /= static_cast<double>(counts.size());
  double acc = 0.0;
  for (const auto c : counts) acc += (static_cast<double>(c) - mean) * (static_cast<double>(c) - mean);
  return acc / static_cast<double>(counts.size());
}

// Minimum count variance over all splits of the bins into k contiguous,
// non-empty runs of bins (cuts only at bin edges).
inline double best_bin_aligned_variance(const std::vector<std::uint64_t>& bin_counts, std::size_t k) {
  double best = std::numeric_limits<double>::infinity();
  for_each_split(bin_counts.size(), k, [&](const std::vector<std::size_t>& runs) {
    std::vector<std::size_t> slice_counts;
    std::size_t bin = 0;
    for (const auto run : runs) {
      std::size_t sum = 0;
      for (std::size_t i = 0; i < run; ++i) sum += bin_counts[bin++];
      slice_counts.push_back(sum);
    }
    best = std::min(best, population_variance(slice_counts));
  });
  return best;
}

// Counts events per slice by scanning boundaries linearly.
inline std::vector<std::size_t> count_by_scan(const std::vector<double>& times,
                                              const std::vector<double>& boundaries) {
  const std::size_t k = boundaries.size() - 1;
  std::vector<std::size_t> counts(k, 0);
  for (const double t : times) {
    std::size_t l = 0;
    while (l + 1 < k && t >= boundaries[l + 1]) ++l;
    ++counts[l];
  }
  return counts;
}

// Edge-list text whose histogram at bin width 1 over [0, B+1] equals
// `bin_counts`: bin 0 events sit at t = 0, the last bin's at t = B + 1
// (the closed end), inner bins at their centres.
inline std::string stream_for_bins(const std::vector<std::uint64_t>& bin_counts) {
  std::string text;
  const std::size_t last = bin_counts.size() - 1;
  for (std::size_t b = 0; b < bin_counts.size(); ++b) {
    double t = static_cast<double>(b) + 0.5;
    if (b == 0) t = 0.0;
    if (b == last && last > 0) t = static_cast<double>(last + 1);
    for (std::uint64_t i = 0; i < bin_counts[b]; ++i) {
      text += "n" + std::to_string(i % 5) + ",n" + std::to_string((i + 1) % 5) + "," +
              std::to_string(t) + "\n";
    }
  }
  return text;
}

}  // namespace tslice::oracle
