#include "tslice/layout.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "rng.hpp"
#include "tslice/error.hpp"

namespace tslice {
namespace {

struct WeightedPair {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 0.0;
};

}  // namespace

Embedding layout_aggregate(const DynamicGraph& g, const LayoutOptions& options) {
  if (g.node_count() == 0) throw Error(ErrorCode::EmptyInput, "empty input: no nodes to lay out");
  if (options.iterations == 0) throw Error(ErrorCode::InvalidArgument, "iterations must be positive");
  if (options.margin < 0.0 || options.margin >= 0.5) {
    throw Error(ErrorCode::InvalidArgument, "margin must lie in [0, 0.5)");
  }

  // Rank nodes by label.
  const std::size_t n = g.node_count();
  std::vector<NodeIndex> by_label(n);
  std::iota(by_label.begin(), by_label.end(), NodeIndex{0});
  std::sort(by_label.begin(), by_label.end(),
            [&](NodeIndex a, NodeIndex b) { return g.label(a) < g.label(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[by_label[r]] = r;

  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;
  for (const auto& e : g.events()) {
    const auto [u, v] = std::minmax(rank[e.source], rank[e.target]);
    if (u != v) ++counts[{u, v}];
  }
  std::vector<WeightedPair> pairs;
  pairs.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    pairs.push_back({key.first, key.second, 1.0 + std::log(static_cast<double>(count))});
  }

  detail::Rng rng(options.seed);
  std::vector<Point> pos(n);
  for (auto& p : pos) {
    p.x = rng.unit();
    p.y = rng.unit();
  }

  const double ideal = std::sqrt(1.0 / static_cast<double>(n));
  const double start_temperature = 0.1;
  const double gravity = 0.1;
  std::vector<Point> disp(n);
  for (std::uint32_t it = 0; it < options.iterations; ++it) {
    std::fill(disp.begin(), disp.end(), Point{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double dx = pos[i].x - pos[j].x;
        double dy = pos[i].y - pos[j].y;
        double d = std::hypot(dx, dy);
        if (d < 1e-9) {
          // Coincident nodes: separate along a rank-dependent direction.
          const double angle = static_cast<double>(i * 7 + j * 13);
          dx = std::cos(angle) * 1e-9;
          dy = std::sin(angle) * 1e-9;
          d = 1e-9;
        }
        const double force = ideal * ideal / d;
        disp[i].x += dx / d * force;
        disp[i].y += dy / d * force;
        disp[j].x -= dx / d * force;
        disp[j].y -= dy / d * force;
      }
    }
    for (const auto& p : pairs) {
      const double dx = pos[p.u].x - pos[p.v].x;
      const double dy = pos[p.u].y - pos[p.v].y;
      const double d = std::hypot(dx, dy);
      if (d < 1e-12) continue;
      const double force = p.weight * d * d / ideal;
      disp[p.u].x -= dx / d * force;
      disp[p.u].y -= dy / d * force;
      disp[p.v].x += dx / d * force;
      disp[p.v].y += dy / d * force;
    }
    const double temperature =
        start_temperature * (1.0 - static_cast<double>(it) / options.iterations);
    for (std::size_t i = 0; i < n; ++i) {
      disp[i].x += (0.5 - pos[i].x) * gravity;
      disp[i].y += (0.5 - pos[i].y) * gravity;
      const double len = std::hypot(disp[i].x, disp[i].y);
      if (len < 1e-12) continue;
      const double step = std::min(len, temperature);
      pos[i].x += disp[i].x / len * step;
      pos[i].y += disp[i].y / len * step;
    }
  }

  // Uniform scale into the unit square with a margin, centred.
  double min_x = pos[0].x, max_x = pos[0].x, min_y = pos[0].y, max_y = pos[0].y;
  for (const auto& p : pos) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double usable = 1.0 - 2.0 * options.margin;
  Embedding embedding;
  embedding.seed = options.seed;
  embedding.iterations = options.iterations;
  for (std::size_t r = 0; r < n; ++r) {
    Point p{0.5, 0.5};
    if (span > 0.0) {
      const double scale = usable / span;
      p.x = 0.5 + (pos[r].x - (min_x + max_x) / 2.0) * scale;
      p.y = 0.5 + (pos[r].y - (min_y + max_y) / 2.0) * scale;
    }
    embedding.positions.emplace(g.label(by_label[r]), p);
  }
  return embedding;
}

}  // namespace tslice
