#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tslice/event_model.hpp"

namespace tslice {

enum class Method { Uniform, EqualEvents, HistEq };

std::string_view method_name(Method method) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

// [lo, hi) or, for the last slice of a timeslicing, [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool closed = false;

  bool contains(double t) const noexcept { return t >= lo && (t < hi || (closed && t == hi)); }
  double length() const noexcept { return hi - lo; }
};

// Ordered boundaries 0 = t_0 < t_1 < ... < t_k = T. Interior boundaries
// belong to the slice on their right; the last slice is closed at T.
class Timeslicing {
 public:
  // Validates the boundary invariants; throws Error(InvalidArgument).
  Timeslicing(Method method, std::vector<double> boundaries,
              std::optional<double> resolution_used);

  Method method() const noexcept { return method_; }
  std::size_t k() const noexcept { return boundaries_.size() - 1; }
  std::span<const double> boundaries() const noexcept { return boundaries_; }
  double extent() const noexcept { return boundaries_.back(); }

  // Histogram bin width for HistEq; empty for the event-sequence method and
  // for uniform slicing.
  std::optional<double> resolution_used() const noexcept { return resolution_; }

  // l is zero-based.
  Interval interval(std::size_t l) const;
  std::size_t slice_of(double t) const noexcept;

  std::vector<std::size_t> event_counts(const DynamicGraph& g) const;

 private:
  Method method_;
  std::vector<double> boundaries_;
  std::optional<double> resolution_;
};

Timeslicing uniform_slicing(const DynamicGraph& g, std::size_t k);

// Per-slice event counts produced by quota error diffusion: every slice
// targets n/k plus the carried error and takes the nearest integer
// (halfway rounds up). Exact integer arithmetic.
std::vector<std::size_t> equal_event_counts(std::size_t n, std::size_t k);

Timeslicing equal_event_partition(const DynamicGraph& g, std::size_t k);

struct EventHistogram {
  double bin_width = 1.0;
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> cumulative;
  std::uint64_t total = 0;
  // Set when the bin width is below the source graph's native resolution.
  bool finer_than_resolution = false;

  std::size_t bins() const noexcept { return counts.size(); }
  // p(i) and P(i).
  double pdf(std::size_t i) const { return static_cast<double>(counts.at(i)) / total; }
  double cdf(std::size_t i) const { return static_cast<double>(cumulative.at(i)) / total; }

  static EventHistogram from_counts(std::vector<std::uint64_t> counts, double bin_width = 1.0);
};

// Bins of width w tile [0, T]: bin i is [i*w, (i+1)*w), the last bin is
// closed at T. The bin count is max(1, ceil(T / w)).
EventHistogram build_histogram(const DynamicGraph& g, double bin_width);

// Bin index under the histogram's tiling; consistent with the bin-end
// boundaries used by histeq_slicing.
std::size_t histogram_bin(double t, double bin_width, std::size_t bins) noexcept;

struct EqualizedHistogram {
  std::vector<std::uint64_t> levels;  // s_0 .. s_B, each in [0, B]
};

// s_i = floor(B * P(i)) over the B+1 bins.
EqualizedHistogram equalize(const EventHistogram& h);

Timeslicing histeq_slicing(const DynamicGraph& g, std::size_t k, double bin_width);

// Dispatches to one of the three methods. bin_width is required for HistEq.
Timeslicing make_slicing(const DynamicGraph& g, Method method, std::size_t k,
                         std::optional<double> bin_width = std::nullopt);

struct AggregatedEdge {
  NodeIndex a = 0;  // a <= b
  NodeIndex b = 0;
  std::vector<double> times;
  double median = 0.0;

  std::size_t count() const noexcept { return times.size(); }
};

// Static projection of one interval; events of the same unordered node pair
// collapse into one aggregated edge. Edges are ordered by (a, b).
struct SliceGraph {
  std::vector<NodeIndex> nodes;
  std::vector<AggregatedEdge> edges;
  std::size_t event_count = 0;
};

SliceGraph project_slice(const DynamicGraph& g, const Interval& interval, bool all_nodes = false);

}  // namespace tslice
