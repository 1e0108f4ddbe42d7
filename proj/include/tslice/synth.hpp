#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tslice/event_model.hpp"

namespace tslice {

// Rectangular burst: `count` events uniformly placed in [start, end).
struct Burst {
  double start = 0.0;
  double end = 0.0;
  std::uint64_t count = 0;
};

struct SynthSpec {
  std::uint32_t node_count = 12;
  double extent = 1.0;            // background events fall in [0, extent)
  double background_rate = 0.0;   // events per time unit
  std::vector<Burst> bursts;
  double quantum = 0.0;           // > 0 snaps timestamps down to multiples
  std::uint64_t seed = 0;
  std::vector<std::string> labels;  // optional; defaults to n0, n1, ...
};

// Deterministic pseudo-random event stream: round(rate * extent) background
// events plus every burst's events, endpoints drawn uniformly among distinct
// node pairs. Timestamps keep their raw values in origin() + t.
DynamicGraph synth_stream(const SynthSpec& spec);

// 12 teams over 418 days at one-second precision with match-day bursts, a
// season-final burst, a quiet summer and a busy season start.
SynthSpec rugby_preset(std::uint64_t seed = 0);

}  // namespace tslice
