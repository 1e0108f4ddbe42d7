#include "tslice/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tslice/error.hpp"

namespace tslice {
namespace {

constexpr std::size_t kDefaultGlyphBins = 20;
constexpr std::size_t kMaxGlyphBins = 4096;

std::string px(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string css_rgb(const Rgb& c) {
  return "rgb(" + std::to_string(c.r) + "," + std::to_string(c.g) + "," + std::to_string(c.b) + ")";
}

Glyph make_glyph(const DynamicGraph& g, const Interval& interval,
                 std::optional<double> glyph_bin_width) {
  Glyph glyph;
  const double extent = g.extent();
  glyph.duration_fraction = extent > 0.0 ? interval.length() / extent : 1.0;

  const double length = interval.length();
  std::size_t bins = 1;
  double width = length;
  if (length > 0.0) {
    width = glyph_bin_width.value_or(length / static_cast<double>(kDefaultGlyphBins));
    if (!(width > 0.0)) throw Error(ErrorCode::InvalidArgument, "glyph bin width must be positive");
    bins = static_cast<std::size_t>(std::ceil(length / width));
    bins = std::clamp<std::size_t>(bins, 1, kMaxGlyphBins);
    width = length / static_cast<double>(bins);
  }
  glyph.freq_series.assign(bins, 0);
  for (const auto& e : g.events()) {
    if (!interval.contains(e.time)) continue;
    std::size_t b = 0;
    if (length > 0.0) {
      b = static_cast<std::size_t>(std::max(0.0, std::floor((e.time - interval.lo) / width)));
      b = std::min(b, bins - 1);
    }
    ++glyph.freq_series[b];
  }
  return glyph;
}

}  // namespace

double edge_width(std::size_t count, WidthLaw law, double linear_scale) {
  if (count == 0) return 1.0;
  if (law == WidthLaw::Linear) return 1.0 + linear_scale * static_cast<double>(count - 1);
  return 1.0 + std::log2(static_cast<double>(count));
}

double color_parameter(double t, const Interval& interval) {
  const double length = interval.length();
  if (!(length > 0.0)) return 0.0;
  return std::clamp((t - interval.lo) / length, 0.0, 1.0);
}

std::vector<PanelSpec> build_panels(const DynamicGraph& g, const Timeslicing& s,
                                    const Embedding& e, const PanelOptions& options) {
  const double tolerance = 1e-12 * std::max(1.0, g.extent());
  if (std::abs(s.extent() - g.extent()) > tolerance) {
    throw Error(ErrorCode::InvalidArgument, "timeslicing was not computed on this graph");
  }
  for (const auto& label : g.labels()) {
    if (!e.positions.count(label)) {
      throw Error(ErrorCode::InvalidArgument, "embedding has no position for node '" + label + "'");
    }
  }

  std::vector<PanelSpec> panels;
  panels.reserve(s.k());
  for (std::size_t l = 0; l < s.k(); ++l) {
    PanelSpec panel;
    panel.index = l + 1;
    panel.interval = s.interval(l);
    panel.slice = project_slice(g, panel.interval, options.all_nodes);
    panel.glyph = make_glyph(g, panel.interval, options.glyph_bin_width);
    for (const NodeIndex v : panel.slice.nodes) {
      panel.nodes.push_back({g.label(v), e.at(g.label(v))});
    }
    for (const auto& edge : panel.slice.edges) {
      StyledEdge styled;
      styled.source = g.label(edge.a);
      styled.target = g.label(edge.b);
      styled.from = e.at(styled.source);
      styled.to = e.at(styled.target);
      styled.count = edge.count();
      styled.median = edge.median;
      styled.color_u = color_parameter(edge.median, panel.interval);
      styled.width = edge_width(edge.count(), options.width_law, options.linear_width_scale);
      panel.edges.push_back(std::move(styled));
    }
    panels.push_back(std::move(panel));
  }
  return panels;
}

Rgb interpolate(const Rgb& from, const Rgb& to, double u) {
  u = std::clamp(u, 0.0, 1.0);
  const auto mix = [u](int a, int b) {
    return static_cast<int>(std::lround(a + (b - a) * u));
  };
  return {mix(from.r, to.r), mix(from.g, to.g), mix(from.b, to.b)};
}

PanelGeometry panel_geometry(double cell_width, double cell_height) {
  PanelGeometry geo;
  geo.cell_width = cell_width;
  geo.cell_height = cell_height;
  const double pad = std::min(cell_width, cell_height) * 0.04;
  geo.glyph_x = pad;
  geo.glyph_y = pad;
  geo.glyph_width = cell_width * 0.35;
  geo.glyph_height = cell_height * 0.14;
  geo.graph_x = pad;
  geo.graph_y = geo.glyph_y + geo.glyph_height + pad;
  geo.graph_width = cell_width - 2.0 * pad;
  geo.graph_height = cell_height - geo.graph_y - pad;
  return geo;
}

std::string render_svg(const std::vector<PanelSpec>& panels, const RenderOptions& options) {
  if (!(options.width > 0.0) || !(options.height > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "canvas size must be positive");
  }
  const std::size_t count = panels.size();
  std::size_t columns = options.columns;
  if (columns == 0) {
    columns = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count)))));
  }
  std::size_t rows = options.rows;
  if (rows == 0) rows = std::max<std::size_t>(1, (count + columns - 1) / columns);
  if (columns * rows < count) {
    throw Error(ErrorCode::InvalidArgument,
                "grid " + std::to_string(columns) + "x" + std::to_string(rows) +
                    " cannot hold " + std::to_string(count) + " panels");
  }

  const PanelGeometry geo = panel_geometry(options.width / static_cast<double>(columns),
                                           options.height / static_cast<double>(rows));
  std::size_t global_peak = 1;
  for (const auto& p : panels) {
    for (const auto f : p.glyph.freq_series) global_peak = std::max(global_peak, f);
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(options.width)
      << "\" height=\"" << px(options.height) << "\" viewBox=\"0 0 " << px(options.width) << ' '
      << px(options.height) << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << px(options.width) << "\" height=\""
      << px(options.height) << "\" fill=\"white\"/>\n";

  const auto node_xy = [&](const Point& p) {
    return Point{geo.graph_x + p.x * geo.graph_width, geo.graph_y + p.y * geo.graph_height};
  };
  const double node_radius = std::max(2.0, std::min(geo.cell_width, geo.cell_height) * 0.02);

  for (std::size_t i = 0; i < count; ++i) {
    const PanelSpec& panel = panels[i];
    const double ox = static_cast<double>(i % columns) * geo.cell_width;
    const double oy = static_cast<double>(i / columns) * geo.cell_height;
    svg << "<g class=\"panel\" id=\"panel-" << panel.index << "\" transform=\"translate("
        << px(ox) << ',' << px(oy) << ")\">\n";
    svg << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << px(geo.cell_width)
        << "\" height=\"" << px(geo.cell_height) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    svg << "<text class=\"title\" x=\"" << px(geo.cell_width - geo.glyph_x) << "\" y=\""
        << px(geo.glyph_y + 10.0) << "\" text-anchor=\"end\" font-size=\"11\">" << panel.index
        << "</text>\n";

    // Glyph: duration bar on top, frequency line underneath.
    const double bar_height = std::max(2.0, geo.glyph_height * 0.2);
    svg << "<rect class=\"glyph-box\" x=\"" << px(geo.glyph_x) << "\" y=\"" << px(geo.glyph_y)
        << "\" width=\"" << px(geo.glyph_width) << "\" height=\"" << px(bar_height)
        << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    svg << "<rect class=\"glyph-bar\" x=\"" << px(geo.glyph_x) << "\" y=\"" << px(geo.glyph_y)
        << "\" width=\"" << px(panel.glyph.duration_fraction * geo.glyph_width) << "\" height=\""
        << px(bar_height) << "\" fill=\"#555555\"/>\n";

    const auto& series = panel.glyph.freq_series;
    std::size_t peak = 1;
    if (options.global_y_scale) {
      peak = global_peak;
    } else {
      for (const auto f : series) peak = std::max(peak, f);
    }
    const double line_top = geo.glyph_y + bar_height + 2.0;
    const double line_height = geo.glyph_height - bar_height - 2.0;
    svg << "<polyline class=\"glyph-line\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\" "
           "points=\"";
    for (std::size_t b = 0; b < series.size(); ++b) {
      const double x = series.size() == 1
                           ? geo.glyph_x + geo.glyph_width / 2.0
                           : geo.glyph_x + geo.glyph_width * static_cast<double>(b) /
                                               static_cast<double>(series.size() - 1);
      const double y = line_top + line_height * (1.0 - static_cast<double>(series[b]) /
                                                           static_cast<double>(peak));
      svg << (b ? " " : "") << px(x) << ',' << px(y);
    }
    svg << "\"/>\n";

    for (const auto& edge : panel.edges) {
      const Rgb color = interpolate(options.start_color, options.end_color, edge.color_u);
      const Point a = node_xy(edge.from);
      const Point b = node_xy(edge.to);
      const std::string title = escape_xml(edge.source) + " - " + escape_xml(edge.target) + ": " +
                                std::to_string(edge.count) + (edge.count == 1 ? " event" : " events");
      if (edge.source == edge.target) {
        svg << "<circle class=\"edge loop\" cx=\"" << px(a.x) << "\" cy=\""
            << px(a.y - 2.0 * node_radius) << "\" r=\"" << px(2.0 * node_radius)
            << "\" fill=\"none\" stroke=\"" << css_rgb(color) << "\" stroke-width=\""
            << px(edge.width) << "\"><title>" << title << "</title></circle>\n";
      } else {
        svg << "<line class=\"edge\" x1=\"" << px(a.x) << "\" y1=\"" << px(a.y) << "\" x2=\""
            << px(b.x) << "\" y2=\"" << px(b.y) << "\" stroke=\"" << css_rgb(color)
            << "\" stroke-width=\"" << px(edge.width) << "\" stroke-linecap=\"round\"><title>"
            << title << "</title></line>\n";
      }
    }
    for (const auto& node : panel.nodes) {
      const Point p = node_xy(node.position);
      svg << "<circle class=\"node\" cx=\"" << px(p.x) << "\" cy=\"" << px(p.y) << "\" r=\""
          << px(node_radius) << "\" fill=\"#333333\"/>\n";
      svg << "<text class=\"label\" x=\"" << px(p.x + node_radius + 1.0) << "\" y=\""
          << px(p.y - node_radius - 1.0) << "\" font-size=\"10\">" << escape_xml(node.label)
          << "</text>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tslice
