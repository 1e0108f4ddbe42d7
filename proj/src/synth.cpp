#include "tslice/synth.hpp"

#include <cmath>
#include <string>

#include "rng.hpp"
#include "tslice/error.hpp"

namespace tslice {
namespace {

constexpr double kDay = 86400.0;

}  // namespace

DynamicGraph synth_stream(const SynthSpec& spec) {
  if (spec.node_count < 2) throw Error(ErrorCode::InvalidArgument, "need at least two nodes");
  if (!spec.labels.empty() && spec.labels.size() != spec.node_count) {
    throw Error(ErrorCode::InvalidArgument, "label count differs from node count");
  }
  if (spec.background_rate < 0.0 || !(spec.extent >= 0.0) || spec.quantum < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "rates, extent and quantum must be non-negative");
  }
  for (const auto& b : spec.bursts) {
    if (!(b.end > b.start)) throw Error(ErrorCode::InvalidArgument, "burst window must be non-empty");
  }

  const auto background =
      static_cast<std::uint64_t>(std::llround(spec.background_rate * spec.extent));
  std::uint64_t total = background;
  for (const auto& b : spec.bursts) total += b.count;
  if (total == 0) throw Error(ErrorCode::NoEvents, "no events: parameters imply zero events");

  const auto label = [&](std::uint64_t i) {
    return spec.labels.empty() ? "n" + std::to_string(i) : spec.labels[i];
  };

  detail::Rng rng(spec.seed);
  GraphBuilder builder;
  const auto emit = [&](double lo, double hi) {
    double t = lo + (hi - lo) * rng.unit();
    if (spec.quantum > 0.0) t = std::max(lo, std::floor(t / spec.quantum) * spec.quantum);
    const std::uint64_t i = rng.below(spec.node_count);
    std::uint64_t j = rng.below(spec.node_count - 1);
    if (j >= i) ++j;
    builder.add(label(i), label(j), t);
  };
  for (std::uint64_t n = 0; n < background; ++n) emit(0.0, spec.extent);
  for (const auto& b : spec.bursts) {
    for (std::uint64_t n = 0; n < b.count; ++n) emit(b.start, b.end);
  }
  return std::move(builder).build();
}

SynthSpec rugby_preset(std::uint64_t seed) {
  SynthSpec spec;
  spec.node_count = 12;
  spec.labels = {"mu", "gl", "ul", "os", "le", "sc", "co", "ed", "ca", "dr", "tr", "ze"};
  spec.extent = 418.0 * kDay;
  spec.background_rate = 1200.0 / spec.extent;
  spec.quantum = 1.0;
  spec.seed = seed;

  // Anchor the first and last hour so the stream spans the full 418 days.
  spec.bursts.push_back({0.0, 3600.0, 3});
  spec.bursts.push_back({spec.extent - 3600.0, spec.extent, 3});
  // First season: weekly match days.
  for (int day = 4; day <= 270; day += 7) {
    spec.bursts.push_back({day * kDay, (day + 1) * kDay, 30});
  }
  // Season final, then the summer break with background traffic only.
  spec.bursts.push_back({272 * kDay, 272 * kDay + 6 * 3600.0, 80});
  // Second season start: denser weekly bursts.
  for (int day = 361; day <= 417; day += 7) {
    spec.bursts.push_back({day * kDay, (day + 1) * kDay, 70});
  }
  return spec;
}

}  // namespace tslice
