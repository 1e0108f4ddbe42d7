#include "tslice/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tslice/documents.hpp"
#include "tslice/error.hpp"
#include "tslice/layout.hpp"
#include "tslice/metrics.hpp"
#include "tslice/render.hpp"
#include "tslice/slicing.hpp"
#include "tslice/synth.hpp"

namespace tslice {
namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage error\n"
    "  2  invalid argument\n"
    "  3  i/o error\n"
    "  4  malformed input\n"
    "  5  empty input\n"
    "  6  resolution undefined (pass --bin-width)\n"
    "  7  degenerate extent\n"
    "  8  insufficient events\n"
    "  9  resolution too coarse for the requested slices\n"
    " 10  extent mismatch\n"
    " 11  no events\n";

struct RunConfig {
  std::string input = "-";
  std::string method = "hist-eq";
  std::size_t slices = 12;
  std::string bin_width = "auto";
  std::uint64_t seed = 0;
  std::uint32_t iterations = 500;
  std::string grid;
  std::string canvas = "1200x900";
  bool all_nodes = false;
  std::string out;
  std::string format = "table";
  std::string width_law = "log2";
  std::string glyph_scale = "global";
  std::string start_color = "0,128,128";
  std::string end_color = "139,69,19";
  std::string glyph_bin_width;
  std::string slicing;

  // synth
  std::string preset;
  std::uint32_t nodes = 12;
  double extent = 1.0;
  double background_rate = 0.0;
  std::vector<std::string> bursts;
  double quantum = 0.0;
};

double parse_double(std::string_view text, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::pair<double, double> parse_pair(const std::string& text, char sep, const char* what) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("invalid ") + what + " '" + text + "', expected A" + sep + "B");
  }
  return {parse_double(std::string_view(text).substr(0, pos), what),
          parse_double(std::string_view(text).substr(pos + 1), what)};
}

Rgb parse_color(const std::string& text) {
  if (text.size() == 7 && text[0] == '#') {
    const auto hex = [&](std::size_t at) {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + at, text.data() + at + 2, v, 16);
      if (ec != std::errc() || ptr != text.data() + at + 2) {
        throw Error(ErrorCode::InvalidArgument, "invalid color '" + text + "'");
      }
      return v;
    };
    return {hex(1), hex(3), hex(5)};
  }
  Rgb c;
  if (std::sscanf(text.c_str(), "%d,%d,%d", &c.r, &c.g, &c.b) != 3 || c.r < 0 || c.r > 255 ||
      c.g < 0 || c.g > 255 || c.b < 0 || c.b > 255) {
    throw Error(ErrorCode::InvalidArgument, "invalid color '" + text + "', expected #rrggbb or r,g,b");
  }
  return c;
}

DynamicGraph load_input(const std::string& path) {
  if (path == "-") return ingest_stream(std::cin);
  return ingest_file(path);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  file << text;
  if (!file) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

Timeslicing load_slicing(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  const auto doc = nlohmann::json::parse(file, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::MalformedInput, "'" + path + "' is not valid JSON");
  return timeslicing_from_document(doc);
}

std::optional<double> bin_width_for(const DynamicGraph& g, const RunConfig& cfg, Method method,
                                    std::ostream& err) {
  if (method != Method::HistEq) return std::nullopt;
  if (cfg.bin_width == "auto") return auto_bin_width(g);
  const double width = parse_double(cfg.bin_width, "bin width");
  if (g.resolution() && width < *g.resolution()) {
    err << "warning: bin width " << format_number(width)
        << " is finer than the native resolution " << format_number(*g.resolution()) << "\n";
  }
  return width;
}

Method method_of(const RunConfig& cfg) {
  const auto method = parse_method(cfg.method);
  if (!method) throw Error(ErrorCode::InvalidArgument, "unknown method '" + cfg.method + "'");
  return *method;
}

std::string cmd_slice(const RunConfig& cfg, std::ostream& err) {
  const DynamicGraph g = load_input(cfg.input);
  const Method method = method_of(cfg);
  const Timeslicing s = make_slicing(g, method, cfg.slices, bin_width_for(g, cfg, method, err));
  return timeslicing_document(g, s).dump(2) + "\n";
}

std::string cmd_metrics(const RunConfig& cfg, std::ostream& err) {
  const DynamicGraph g = load_input(cfg.input);
  std::vector<ComplexityReport> reports;
  if (!cfg.slicing.empty()) {
    reports.push_back(complexity_report(g, load_slicing(cfg.slicing)));
  } else {
    reports = compare_methods(g, cfg.slices, *bin_width_for(g, cfg, Method::HistEq, err));
  }
  if (cfg.format == "json") return report_document(reports).dump(2) + "\n";
  std::ostringstream table;
  write_report_table(table, reports);
  return table.str();
}

std::string cmd_layout(const RunConfig& cfg) {
  const DynamicGraph g = load_input(cfg.input);
  LayoutOptions options;
  options.seed = cfg.seed;
  options.iterations = cfg.iterations;
  return embedding_document(layout_aggregate(g, options)).dump(2) + "\n";
}

Timeslicing slicing_for(const DynamicGraph& g, const RunConfig& cfg, std::ostream& err) {
  if (!cfg.slicing.empty()) {
    Timeslicing s = load_slicing(cfg.slicing);
    require_matching_extent(g, s);
    return s;
  }
  const Method method = method_of(cfg);
  return make_slicing(g, method, cfg.slices, bin_width_for(g, cfg, method, err));
}

std::string cmd_render(const RunConfig& cfg, std::ostream& err) {
  const DynamicGraph g = load_input(cfg.input);
  const Timeslicing s = slicing_for(g, cfg, err);

  LayoutOptions layout;
  layout.seed = cfg.seed;
  layout.iterations = cfg.iterations;
  const Embedding embedding = layout_aggregate(g, layout);

  PanelOptions panel;
  panel.all_nodes = cfg.all_nodes;
  if (cfg.width_law == "linear") {
    panel.width_law = WidthLaw::Linear;
  } else if (cfg.width_law != "log2") {
    throw Error(ErrorCode::InvalidArgument, "unknown width law '" + cfg.width_law + "'");
  }
  if (!cfg.glyph_bin_width.empty()) {
    panel.glyph_bin_width = parse_double(cfg.glyph_bin_width, "glyph bin width");
  }
  const auto panels = build_panels(g, s, embedding, panel);

  RenderOptions render;
  const auto [w, h] = parse_pair(cfg.canvas, 'x', "canvas");
  render.width = w;
  render.height = h;
  if (!cfg.grid.empty()) {
    const auto [cols, rows] = parse_pair(cfg.grid, 'x', "grid");
    if (cols < 1 || rows < 1 || cols != std::floor(cols) || rows != std::floor(rows)) {
      throw Error(ErrorCode::InvalidArgument, "grid must be COLUMNSxROWS with positive integers");
    }
    render.columns = static_cast<std::size_t>(cols);
    render.rows = static_cast<std::size_t>(rows);
  }
  if (cfg.glyph_scale == "panel") {
    render.global_y_scale = false;
  } else if (cfg.glyph_scale != "global") {
    throw Error(ErrorCode::InvalidArgument, "unknown glyph scale '" + cfg.glyph_scale + "'");
  }
  render.start_color = parse_color(cfg.start_color);
  render.end_color = parse_color(cfg.end_color);
  return render_svg(panels, render);
}

std::string cmd_synth(const RunConfig& cfg) {
  SynthSpec spec;
  if (cfg.preset == "rugby") {
    spec = rugby_preset(cfg.seed);
  } else if (!cfg.preset.empty()) {
    throw Error(ErrorCode::InvalidArgument, "unknown preset '" + cfg.preset + "'");
  } else {
    spec.node_count = cfg.nodes;
    spec.extent = cfg.extent;
    spec.background_rate = cfg.background_rate;
    spec.quantum = cfg.quantum;
    spec.seed = cfg.seed;
    for (const auto& text : cfg.bursts) {
      const auto first = text.find(':');
      const auto second = first == std::string::npos ? first : text.find(':', first + 1);
      if (second == std::string::npos) {
        throw Error(ErrorCode::InvalidArgument,
                    "invalid burst '" + text + "', expected START:END:COUNT");
      }
      const double count = parse_double(std::string_view(text).substr(second + 1), "burst count");
      if (count < 0 || count != std::floor(count)) {
        throw Error(ErrorCode::InvalidArgument, "burst count must be a non-negative integer");
      }
      spec.bursts.push_back({parse_double(std::string_view(text).substr(0, first), "burst start"),
                             parse_double(std::string_view(text).substr(first + 1, second - first - 1),
                                          "burst end"),
                             static_cast<std::uint64_t>(count)});
    }
  }
  std::ostringstream text;
  write_edge_list(text, synth_stream(spec));
  return text.str();
}

}  // namespace

double auto_bin_width(const DynamicGraph& g) {
  return std::max(native_resolution(g), g.extent() / 10000.0);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Uniform and complexity-balancing timeslicing of event-based dynamic graphs",
               "tslice"};
  app.footer(kExitCodes);
  app.set_config("--config", "", "Read options from a TOML/INI file (flags take precedence)");
  app.require_subcommand(1);

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Edge list (source,target,timestamp); '-' for stdin")
        ->capture_default_str();
  };
  const auto add_slicing = [&](CLI::App* sub, bool with_method) {
    if (with_method) {
      sub->add_option("--method", cfg.method, "uniform | equal-events | hist-eq")
          ->capture_default_str()
          ->check(CLI::IsMember({"uniform", "equal-events", "hist-eq"}));
    }
    sub->add_option("--slices,-k", cfg.slices, "Number of slices")->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--bin-width", cfg.bin_width,
                    "Histogram bin width for hist-eq, or 'auto' (native resolution, at least T/10000)")
        ->capture_default_str();
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out,-o", cfg.out, "Output path (default stdout)");
  };
  const auto add_layout = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Layout seed")->capture_default_str();
    sub->add_option("--iterations", cfg.iterations, "Layout iterations")->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  auto* slice = app.add_subcommand("slice", "Compute a timeslicing and print it as JSON");
  add_input(slice);
  add_slicing(slice, true);
  add_out(slice);

  auto* metrics = app.add_subcommand("metrics", "Compare per-slice complexity of all methods");
  add_input(metrics);
  add_slicing(metrics, false);
  metrics->add_option("--slicing", cfg.slicing,
                      "Report on a saved timeslicing document instead of comparing methods");
  metrics->add_option("--format", cfg.format, "table | json")->capture_default_str()
      ->check(CLI::IsMember({"table", "json"}));
  add_out(metrics);

  auto* render = app.add_subcommand("render", "Render small-multiples SVG panels");
  add_input(render);
  add_slicing(render, true);
  render->add_option("--slicing", cfg.slicing, "Use a saved timeslicing document");
  add_layout(render);
  render->add_option("--grid", cfg.grid, "Panel grid COLUMNSxROWS (default near-square)");
  render->add_option("--canvas", cfg.canvas, "Canvas size WIDTHxHEIGHT in px")->capture_default_str();
  render->add_flag("--all-nodes", cfg.all_nodes, "Draw every node in every panel");
  render->add_option("--width-law", cfg.width_law, "Edge width law: log2 | linear")
      ->capture_default_str();
  render->add_option("--glyph-scale", cfg.glyph_scale, "Glyph line y-scale: global | panel")
      ->capture_default_str();
  render->add_option("--glyph-bin-width", cfg.glyph_bin_width,
                     "Glyph bin width in stream units (default slice/20)");
  render->add_option("--start-color", cfg.start_color, "Color at slice start")->capture_default_str();
  render->add_option("--end-color", cfg.end_color, "Color at slice end")->capture_default_str();
  add_out(render);

  auto* synth = app.add_subcommand("synth", "Generate a synthetic bursty edge list");
  synth->add_option("--preset", cfg.preset, "Named preset: rugby");
  synth->add_option("--nodes", cfg.nodes, "Node count")->capture_default_str();
  synth->add_option("--extent", cfg.extent, "Background time extent")->capture_default_str();
  synth->add_option("--background-rate", cfg.background_rate, "Background events per time unit")
      ->capture_default_str();
  synth->add_option("--burst", cfg.bursts, "Burst START:END:COUNT (repeatable)");
  synth->add_option("--quantum", cfg.quantum, "Snap timestamps to multiples of this value")
      ->capture_default_str();
  synth->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  add_out(synth);

  auto* layout = app.add_subcommand("layout", "Compute the shared node embedding as JSON");
  add_input(layout);
  add_layout(layout);
  add_out(layout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return kUsageExit;
  }

  try {
    std::string result;
    if (*slice) {
      result = cmd_slice(cfg, err);
    } else if (*metrics) {
      result = cmd_metrics(cfg, err);
    } else if (*render) {
      result = cmd_render(cfg, err);
    } else if (*synth) {
      result = cmd_synth(cfg);
    } else {
      result = cmd_layout(cfg);
    }
    write_output(cfg.out, result, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  }
  return 0;
}

}  // namespace tslice
