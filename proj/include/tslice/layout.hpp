#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tslice/event_model.hpp"

namespace tslice {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// One node placement shared by every panel. Positions lie in the unit square.
struct Embedding {
  std::map<std::string, Point> positions;
  std::uint64_t seed = 0;
  std::uint32_t iterations = 0;

  const Point& at(const std::string& label) const { return positions.at(label); }
};

struct LayoutOptions {
  std::uint64_t seed = 0;
  std::uint32_t iterations = 500;
  double margin = 0.05;
};

// Fruchterman-Reingold on the aggregated union graph, pair weight = total
// event count. Nodes are processed in label order, so the result does not
// depend on event order.
Embedding layout_aggregate(const DynamicGraph& g, const LayoutOptions& options = {});

}  // namespace tslice
