#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "tslice/event_model.hpp"
#include "tslice/slicing.hpp"

namespace tslice {

// Visual complexity of a timeslicing, measured as events per slice.
struct ComplexityReport {
  Method method = Method::Uniform;
  std::vector<std::size_t> counts;
  double mean = 0.0;
  double variance = 0.0;        // population variance
  double max_min_ratio = 0.0;   // +inf when some slice is empty
  std::vector<double> durations;
};

// Throws ExtentMismatch unless s ends at the graph extent (1e-12 relative).
void require_matching_extent(const DynamicGraph& g, const Timeslicing& s);

ComplexityReport complexity_report(const DynamicGraph& g, const Timeslicing& s);

// Population variance of a count vector.
double count_variance(const std::vector<std::size_t>& counts);

// Runs Uniform, EqualEvents and HistEq with the same k and bin width, in
// that order.
std::vector<ComplexityReport> compare_methods(const DynamicGraph& g, std::size_t k,
                                              double bin_width);

void write_report_table(std::ostream& out, const std::vector<ComplexityReport>& reports);

}  // namespace tslice
