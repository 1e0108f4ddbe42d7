#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tslice/event_model.hpp"
#include "tslice/layout.hpp"
#include "tslice/slicing.hpp"

namespace tslice {

// Bar + line glyph: the bar shows the slice duration relative to T, the line
// the event frequency inside the slice.
struct Glyph {
  double duration_fraction = 1.0;
  std::vector<std::size_t> freq_series;
};

struct PanelNode {
  std::string label;
  Point position;  // embedding coordinates, unit square
};

struct StyledEdge {
  std::string source;
  std::string target;
  Point from;
  Point to;
  std::size_t count = 0;
  double median = 0.0;
  double color_u = 0.0;  // 0 = slice start (teal), 1 = slice end (brown)
  double width = 1.0;
};

struct PanelSpec {
  std::size_t index = 1;  // 1-based
  Interval interval;
  SliceGraph slice;
  Glyph glyph;
  std::vector<PanelNode> nodes;
  std::vector<StyledEdge> edges;
};

enum class WidthLaw { Log2, Linear };

struct PanelOptions {
  // Glyph bin width in stream units; defaults to a twentieth of each slice.
  std::optional<double> glyph_bin_width;
  bool all_nodes = false;
  WidthLaw width_law = WidthLaw::Log2;
  double linear_width_scale = 0.5;
};

// 1 + log2(count), or 1 + scale * (count - 1) for the linear law.
double edge_width(std::size_t count, WidthLaw law, double linear_scale = 0.5);

// Relative position of `t` inside the interval, clamped to [0, 1].
double color_parameter(double t, const Interval& interval);

std::vector<PanelSpec> build_panels(const DynamicGraph& g, const Timeslicing& s,
                                    const Embedding& e, const PanelOptions& options = {});

struct Rgb {
  int r = 0;
  int g = 0;
  int b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kTeal{0, 128, 128};
inline constexpr Rgb kBrown{139, 69, 19};

// Linear RGB interpolation, components rounded to the nearest integer.
Rgb interpolate(const Rgb& from, const Rgb& to, double u);

struct RenderOptions {
  std::size_t columns = 0;  // 0: ceil(sqrt(panels))
  std::size_t rows = 0;     // 0: enough rows for every panel
  double width = 1200.0;
  double height = 900.0;
  Rgb start_color = kTeal;
  Rgb end_color = kBrown;
  bool global_y_scale = true;
};

// Panel geometry inside one grid cell, in pixels relative to the cell.
struct PanelGeometry {
  double cell_width = 0.0;
  double cell_height = 0.0;
  double glyph_x = 0.0;
  double glyph_y = 0.0;
  double glyph_width = 0.0;
  double glyph_height = 0.0;
  double graph_x = 0.0;
  double graph_y = 0.0;
  double graph_width = 0.0;
  double graph_height = 0.0;
};

PanelGeometry panel_geometry(double cell_width, double cell_height);

// SVG 1.1 small-multiples document.
std::string render_svg(const std::vector<PanelSpec>& panels, const RenderOptions& options = {});

}  // namespace tslice
