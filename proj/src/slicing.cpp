#include "tslice/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "tslice/error.hpp"

namespace tslice {
namespace {

__extension__ typedef unsigned __int128 Wide;

void require_k(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "number of slices must be at least 1");
}

// Makes preferred candidate indices strictly increasing while keeping them
// inside [0, candidate_count). Cuts collapsing onto one candidate move right;
// cuts running past the last candidate are pulled back.
std::vector<std::size_t> spread_cuts(std::vector<std::size_t> preferred,
                                     std::size_t candidate_count) {
  const std::size_t m = preferred.size();
  for (std::size_t i = 1; i < m; ++i) preferred[i] = std::max(preferred[i], preferred[i - 1] + 1);
  for (std::size_t i = m; i-- > 0;) {
    preferred[i] = std::min(preferred[i], candidate_count - (m - i));
  }
  return preferred;
}

}  // namespace

std::string_view method_name(Method method) noexcept {
  switch (method) {
    case Method::Uniform: return "uniform";
    case Method::EqualEvents: return "equal-events";
    case Method::HistEq: return "hist-eq";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  if (name == "uniform") return Method::Uniform;
  if (name == "equal-events") return Method::EqualEvents;
  if (name == "hist-eq") return Method::HistEq;
  return std::nullopt;
}

Timeslicing::Timeslicing(Method method, std::vector<double> boundaries,
                         std::optional<double> resolution_used)
    : method_(method), boundaries_(std::move(boundaries)), resolution_(resolution_used) {
  if (boundaries_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "a timeslicing needs at least two boundaries");
  }
  if (boundaries_.front() != 0.0) {
    throw Error(ErrorCode::InvalidArgument, "first boundary must be 0");
  }
  // A zero extent admits only the single slice [0, 0].
  const bool degenerate = boundaries_.size() == 2 && boundaries_.back() == 0.0;
  for (std::size_t i = 1; i < boundaries_.size() && !degenerate; ++i) {
    if (!(boundaries_[i] > boundaries_[i - 1]) || !std::isfinite(boundaries_[i])) {
      throw Error(ErrorCode::InvalidArgument, "boundaries must be finite and strictly increasing");
    }
  }
}

Interval Timeslicing::interval(std::size_t l) const {
  if (l >= k()) throw Error(ErrorCode::InvalidArgument, "slice index out of range");
  return {boundaries_[l], boundaries_[l + 1], l + 1 == k()};
}

std::size_t Timeslicing::slice_of(double t) const noexcept {
  // Interior boundaries only: an event on t_l belongs to slice l (0-based),
  // and t = T stays in the last slice.
  const auto first = boundaries_.begin() + 1;
  const auto last = boundaries_.end() - 1;
  return static_cast<std::size_t>(std::upper_bound(first, last, t) - first);
}

std::vector<std::size_t> Timeslicing::event_counts(const DynamicGraph& g) const {
  std::vector<std::size_t> counts(k(), 0);
  for (const auto& e : g.events()) ++counts[slice_of(e.time)];
  return counts;
}

Timeslicing uniform_slicing(const DynamicGraph& g, std::size_t k) {
  require_k(k);
  const double extent = g.extent();
  if (extent == 0.0 && k > 1) {
    throw Error(ErrorCode::DegenerateExtent,
                "degenerate extent: T = 0 admits only a single slice");
  }
  std::vector<double> boundaries(k + 1);
  for (std::size_t l = 0; l < k; ++l) {
    boundaries[l] = static_cast<double>(l) * extent / static_cast<double>(k);
  }
  boundaries[k] = extent;
  return Timeslicing(Method::Uniform, std::move(boundaries), std::nullopt);
}

std::vector<std::size_t> equal_event_counts(std::size_t n, std::size_t k) {
  require_k(k);
  if (n < k) {
    throw Error(ErrorCode::InsufficientEvents,
                "insufficient events: " + std::to_string(n) + " events for " +
                    std::to_string(k) + " slices");
  }
  // Quantities in units of 1/k: the quota n/k is n units.
  const auto kk = static_cast<std::int64_t>(k);
  std::int64_t carry = 0;
  std::size_t assigned = 0;
  std::vector<std::size_t> counts(k);
  for (std::size_t l = 0; l + 1 < k; ++l) {
    const std::int64_t target = static_cast<std::int64_t>(n) + carry;
    // Nearest integer to target/k, halfway rounding up.
    const std::int64_t c = (2 * target + kk) / (2 * kk);
    carry = target - c * kk;
    counts[l] = static_cast<std::size_t>(c);
    assigned += counts[l];
  }
  counts[k - 1] = n - assigned;
  return counts;
}

Timeslicing equal_event_partition(const DynamicGraph& g, std::size_t k) {
  const auto counts = equal_event_counts(g.event_count(), k);
  const auto events = g.events();
  if (k == 1) return Timeslicing(Method::EqualEvents, {0.0, g.extent()}, std::nullopt);
  if (g.distinct_timestamps() < k) {
    throw Error(ErrorCode::InsufficientEvents,
                "insufficient events: only " + std::to_string(g.distinct_timestamps()) +
                    " distinct timestamps for " + std::to_string(k) + " slices");
  }

  // Candidate cut positions: event indices i where t[i-1] < t[i].
  std::vector<std::size_t> gaps;
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i - 1].time < events[i].time) gaps.push_back(i);
  }

  // A cut inside a run of equal timestamps moves to the gap after the run.
  std::vector<std::size_t> preferred;
  std::size_t cut = 0;
  for (std::size_t l = 0; l + 1 < k; ++l) {
    cut += counts[l];
    preferred.push_back(
        static_cast<std::size_t>(std::lower_bound(gaps.begin(), gaps.end(), cut) - gaps.begin()));
  }
  const auto chosen = spread_cuts(std::move(preferred), gaps.size());

  std::vector<double> boundaries{0.0};
  for (const std::size_t c : chosen) {
    const double before = events[gaps[c] - 1].time;
    const double after = events[gaps[c]].time;
    double mid = before + (after - before) / 2.0;
    if (!(mid > before)) mid = after;
    boundaries.push_back(mid);
  }
  boundaries.push_back(g.extent());
  return Timeslicing(Method::EqualEvents, std::move(boundaries), std::nullopt);
}

EventHistogram EventHistogram::from_counts(std::vector<std::uint64_t> counts, double bin_width) {
  if (!(bin_width > 0.0)) throw Error(ErrorCode::InvalidArgument, "bin width must be positive");
  EventHistogram h;
  h.bin_width = bin_width;
  h.counts = std::move(counts);
  h.cumulative.resize(h.counts.size());
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    running += h.counts[i];
    h.cumulative[i] = running;
  }
  h.total = running;
  return h;
}

std::size_t histogram_bin(double t, double bin_width, std::size_t bins) noexcept {
  const double raw = std::floor(t / bin_width);
  std::size_t b = raw <= 0.0 ? 0 : static_cast<std::size_t>(raw);
  // Agree with the boundary values (b + 1) * w that slicing emits.
  while (b > 0 && static_cast<double>(b) * bin_width > t) --b;
  while (static_cast<double>(b + 1) * bin_width <= t && b + 1 < bins) ++b;
  return std::min(b, bins - 1);
}

EventHistogram build_histogram(const DynamicGraph& g, double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw Error(ErrorCode::InvalidArgument, "bin width must be positive");
  }
  const double extent = g.extent();
  std::size_t bins = 1;
  if (extent > 0.0) {
    const double raw = std::ceil(extent / bin_width);
    bins = std::max<std::size_t>(1, static_cast<std::size_t>(raw));
    while (bins > 1 && static_cast<double>(bins - 1) * bin_width >= extent) --bins;
    while (static_cast<double>(bins) * bin_width < extent) ++bins;
  }
  std::vector<std::uint64_t> counts(bins, 0);
  for (const auto& e : g.events()) ++counts[histogram_bin(e.time, bin_width, bins)];
  auto h = EventHistogram::from_counts(std::move(counts), bin_width);
  h.finer_than_resolution = g.resolution() && bin_width < *g.resolution() * (1.0 - 1e-9);
  return h;
}

EqualizedHistogram equalize(const EventHistogram& h) {
  if (h.total == 0 || h.counts.empty()) {
    throw Error(ErrorCode::NoEvents, "no events: cannot equalize an empty histogram");
  }
  const std::uint64_t top = h.counts.size() - 1;
  EqualizedHistogram eq;
  eq.levels.reserve(h.counts.size());
  for (const std::uint64_t cum : h.cumulative) {
    const auto level = static_cast<Wide>(top) * cum / h.total;
    eq.levels.push_back(static_cast<std::uint64_t>(level));
  }
  return eq;
}

Timeslicing histeq_slicing(const DynamicGraph& g, std::size_t k, double bin_width) {
  require_k(k);
  const EventHistogram h = build_histogram(g, bin_width);
  if (k == 1) return Timeslicing(Method::HistEq, {0.0, g.extent()}, bin_width);

  const std::size_t last = h.bins() - 1;
  // Interior cut candidates: ends of occupied bins other than the last one
  // (whose end is T itself).
  std::vector<std::size_t> occupied;
  for (std::size_t b = 0; b < last; ++b) {
    if (h.counts[b] > 0) occupied.push_back(b);
  }
  if (occupied.size() + 1 < k) {
    throw Error(ErrorCode::ResolutionTooCoarse,
                "resolution too coarse for " + std::to_string(k) +
                    " slices: at most " + std::to_string(occupied.size() + 1) +
                    " slices are feasible at bin width " + format_number(bin_width));
  }

  // Cut l lands at the end of the earliest bin whose CDF reaches l/k, which is
  // uniform sampling of the equalized axis.
  std::vector<std::size_t> preferred;
  for (std::size_t l = 1; l < k; ++l) {
    const auto threshold = static_cast<Wide>(l) * h.total;
    std::size_t b = 0;
    while (static_cast<Wide>(h.cumulative[b]) * k < threshold) ++b;
    preferred.push_back(static_cast<std::size_t>(
        std::lower_bound(occupied.begin(), occupied.end(), b) - occupied.begin()));
  }
  const auto chosen = spread_cuts(std::move(preferred), occupied.size());

  std::vector<double> boundaries{0.0};
  for (const std::size_t c : chosen) {
    boundaries.push_back(static_cast<double>(occupied[c] + 1) * bin_width);
  }
  boundaries.push_back(g.extent());
  return Timeslicing(Method::HistEq, std::move(boundaries), bin_width);
}

Timeslicing make_slicing(const DynamicGraph& g, Method method, std::size_t k,
                         std::optional<double> bin_width) {
  switch (method) {
    case Method::Uniform: return uniform_slicing(g, k);
    case Method::EqualEvents: return equal_event_partition(g, k);
    case Method::HistEq:
      if (!bin_width) throw Error(ErrorCode::InvalidArgument, "hist-eq requires a bin width");
      return histeq_slicing(g, k, *bin_width);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown slicing method");
}

SliceGraph project_slice(const DynamicGraph& g, const Interval& interval, bool all_nodes) {
  if (interval.hi < interval.lo) {
    throw Error(ErrorCode::InvalidArgument, "inverted interval");
  }
  const auto events = g.events();
  const auto by_time = [](const TemporalEdge& e, double t) { return e.time < t; };
  const auto first = std::lower_bound(events.begin(), events.end(), interval.lo, by_time);
  auto last = std::lower_bound(first, events.end(), interval.hi, by_time);
  if (interval.closed) {
    while (last != events.end() && last->time == interval.hi) ++last;
  }

  std::map<std::pair<NodeIndex, NodeIndex>, std::vector<double>> pairs;
  std::vector<bool> present(g.node_count(), all_nodes);
  for (auto it = first; it != last; ++it) {
    const auto key = std::minmax(it->source, it->target);
    pairs[{key.first, key.second}].push_back(it->time);
    present[it->source] = true;
    present[it->target] = true;
  }

  SliceGraph slice;
  slice.event_count = static_cast<std::size_t>(last - first);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (present[v]) slice.nodes.push_back(v);
  }
  for (auto& [key, times] : pairs) {
    AggregatedEdge edge;
    edge.a = key.first;
    edge.b = key.second;
    const std::size_t n = times.size();
    edge.median = n % 2 == 1 ? times[n / 2] : (times[n / 2 - 1] + times[n / 2]) / 2.0;
    edge.times = std::move(times);
    slice.edges.push_back(std::move(edge));
  }
  return slice;
}

}  // namespace tslice
