#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tslice {

// Dense index of an interned node label.
using NodeIndex = std::uint32_t;

// One time-stamped edge event. Timestamps are in stream units (seconds for
// RFC 3339 input) and lie in [0, extent] once the graph is built.
struct TemporalEdge {
  NodeIndex source = 0;
  NodeIndex target = 0;
  double time = 0.0;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

class GraphBuilder;

// Event-based dynamic graph: node set, events ordered by time (stable with
// respect to input order), extent T and the native temporal resolution.
// Immutable once built.
class DynamicGraph {
 public:
  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t event_count() const noexcept { return events_.size(); }

  const std::string& label(NodeIndex node) const { return labels_.at(node); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<NodeIndex> find(std::string_view label) const;

  std::span<const TemporalEdge> events() const noexcept { return events_; }

  // Largest normalized timestamp.
  double extent() const noexcept { return extent_; }

  // Raw timestamp of the earliest event; kept for display only.
  double origin() const noexcept { return origin_; }

  // Minimum positive gap between consecutive distinct timestamps, or empty
  // when every event shares a single timestamp.
  std::optional<double> resolution() const noexcept { return resolution_; }

  std::size_t distinct_timestamps() const noexcept { return distinct_; }

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<TemporalEdge> events_;
  double extent_ = 0.0;
  double origin_ = 0.0;
  std::optional<double> resolution_;
  std::size_t distinct_ = 0;
};

// Accumulates raw events and produces a normalized DynamicGraph.
class GraphBuilder {
 public:
  NodeIndex intern(std::string_view label);
  void add(std::string_view source, std::string_view target, double raw_time);

  std::size_t size() const noexcept { return raw_.size(); }

  // Shifts the earliest event to t = 0 and sorts stably by time.
  // Throws Error(EmptyInput) when no event was added.
  DynamicGraph build() &&;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<TemporalEdge> raw_;
};

// Parses the edge-list wire format: `source,target,timestamp` per line,
// `#` comments and blank lines skipped. Timestamps are decimal numbers or
// RFC 3339 datetimes (converted to seconds since the Unix epoch).
DynamicGraph ingest_stream(std::istream& in);
DynamicGraph ingest_string(std::string_view text);
DynamicGraph ingest_file(const std::string& path);

// Returns the native resolution or throws Error(ResolutionUndefined).
double native_resolution(const DynamicGraph& g);

// Parses one timestamp field. Returns empty on failure.
std::optional<double> parse_timestamp(std::string_view field);

// Shortest round-trip decimal representation; used wherever timestamps are
// written back out.
std::string format_number(double value);

// Canonical edge list: normalized numeric timestamps, full precision.
void write_edge_list(std::ostream& out, const DynamicGraph& g);

}  // namespace tslice
