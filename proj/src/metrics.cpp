#include "tslice/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "tslice/error.hpp"

namespace tslice {

double count_variance(const std::vector<std::size_t>& counts) {
  if (counts.empty()) return 0.0;
  double sum = 0.0;
  for (const auto c : counts) sum += static_cast<double>(c);
  const double mean = sum / static_cast<double>(counts.size());
  double acc = 0.0;
  for (const auto c : counts) {
    const double d = static_cast<double>(c) - mean;
    acc += d * d;
  }
  return acc / static_cast<double>(counts.size());
}

void require_matching_extent(const DynamicGraph& g, const Timeslicing& s) {
  const double tolerance = 1e-12 * std::max(1.0, std::abs(g.extent()));
  if (std::abs(s.extent() - g.extent()) > tolerance) {
    throw Error(ErrorCode::ExtentMismatch,
                "extent mismatch: timeslicing ends at " + format_number(s.extent()) +
                    " but the graph extent is " + format_number(g.extent()));
  }
}

ComplexityReport complexity_report(const DynamicGraph& g, const Timeslicing& s) {
  require_matching_extent(g, s);
  ComplexityReport report;
  report.method = s.method();
  report.counts.reserve(s.k());
  report.durations.reserve(s.k());
  for (std::size_t l = 0; l < s.k(); ++l) {
    const Interval interval = s.interval(l);
    report.counts.push_back(project_slice(g, interval).event_count);
    report.durations.push_back(interval.length());
  }
  report.mean = static_cast<double>(g.event_count()) / static_cast<double>(s.k());
  report.variance = count_variance(report.counts);
  const auto [lo, hi] = std::minmax_element(report.counts.begin(), report.counts.end());
  report.max_min_ratio = *lo == 0 ? std::numeric_limits<double>::infinity()
                                  : static_cast<double>(*hi) / static_cast<double>(*lo);
  return report;
}

std::vector<ComplexityReport> compare_methods(const DynamicGraph& g, std::size_t k,
                                              double bin_width) {
  std::vector<ComplexityReport> reports;
  for (const Method m : {Method::Uniform, Method::EqualEvents, Method::HistEq}) {
    reports.push_back(complexity_report(g, make_slicing(g, m, k, bin_width)));
  }
  return reports;
}

void write_report_table(std::ostream& out, const std::vector<ComplexityReport>& reports) {
  char line[256];
  std::snprintf(line, sizeof line, "%-13s %4s %8s %12s %14s %10s %8s %8s\n", "method", "k",
                "events", "mean", "variance", "max/min", "min", "max");
  out << line;
  for (const auto& r : reports) {
    std::size_t total = 0;
    for (const auto c : r.counts) total += c;
    const auto [lo, hi] = std::minmax_element(r.counts.begin(), r.counts.end());
    char ratio[32];
    if (std::isinf(r.max_min_ratio)) {
      std::snprintf(ratio, sizeof ratio, "inf");
    } else {
      std::snprintf(ratio, sizeof ratio, "%.3f", r.max_min_ratio);
    }
    std::snprintf(line, sizeof line, "%-13s %4zu %8zu %12.3f %14.3f %10s %8zu %8zu\n",
                  std::string(method_name(r.method)).c_str(), r.counts.size(), total, r.mean,
                  r.variance, ratio, r.counts.empty() ? 0 : *lo, r.counts.empty() ? 0 : *hi);
    out << line;
  }
}

}  // namespace tslice
