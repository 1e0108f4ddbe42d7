#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "test_util.hpp"
#include "tslice/metrics.hpp"
#include "tslice/synth.hpp"

using namespace tslice;
using namespace tslice::testing;

TEST_CASE("complexity report on a uniform stream") {
  const auto g = ingest_file(data_path("uniform12.csv"));
  const auto r = complexity_report(g, uniform_slicing(g, 4));
  CHECK(r.counts == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(r.mean == 3.0);
  CHECK(r.variance == 0.0);
  CHECK(r.max_min_ratio == 1.0);
  REQUIRE(r.durations.size() == 4);
  CHECK(r.durations[0] == doctest::Approx(11.0 / 4));
}

TEST_CASE("population variance") {
  CHECK(count_variance({12, 4}) == 16.0);
  CHECK(count_variance({3, 3, 3}) == 0.0);
  CHECK(count_variance({1, 2, 3, 4}) == doctest::Approx(oracle::population_variance({1, 2, 3, 4})));
}

TEST_CASE("bursty fixture: hist-eq balances what uniform does not") {
  const auto g = ingest_file(data_path("bursty.csv"));
  const auto uniform = complexity_report(g, uniform_slicing(g, 2));
  const auto histeq = complexity_report(g, histeq_slicing(g, 2, 1.0));
  CHECK(uniform.counts == std::vector<std::size_t>{12, 4});
  CHECK(uniform.variance == 16.0);
  CHECK(uniform.max_min_ratio == 3.0);
  CHECK(histeq.counts == std::vector<std::size_t>{8, 8});
  CHECK(histeq.variance == 0.0);
}

TEST_CASE("empty slices give an infinite max/min ratio") {
  const auto g = graph_at({0, 0.1, 0.2, 10});
  const auto r = complexity_report(g, uniform_slicing(g, 4));
  CHECK(r.counts == std::vector<std::size_t>{3, 0, 0, 1});
  CHECK(std::isinf(r.max_min_ratio));
}

TEST_CASE("extent mismatch is rejected") {
  const auto g = graph_at({0, 1, 2});
  const auto other = graph_at({0, 5});
  CHECK(code_of([&] { complexity_report(g, uniform_slicing(other, 2)); }) ==
        ErrorCode::ExtentMismatch);
}

TEST_CASE("compare methods") {
  SUBCASE("uniform stream: every method reports zero variance") {
    const auto reports = compare_methods(ingest_file(data_path("uniform12.csv")), 4, 1.0);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].method == Method::Uniform);
    CHECK(reports[1].method == Method::EqualEvents);
    CHECK(reports[2].method == Method::HistEq);
    for (const auto& r : reports) CHECK(r.variance == 0.0);
  }
  SUBCASE("17-event stream") {
    const auto reports = compare_methods(ingest_file(data_path("events17.csv")), 3, 1.0);
    CHECK(reports[1].counts == std::vector<std::size_t>{6, 5, 6});
  }
  SUBCASE("two bursts") {
    const auto g = ingest_file(data_path("two_burst.csv"));
    const auto reports = compare_methods(g, 4, 1.0);
    CHECK(reports[2].variance < reports[0].variance);
    // A strictly better bin-aligned split than uniform exists.
    const auto h = build_histogram(g, 1.0);
    CHECK(oracle::best_bin_aligned_variance(h.counts, 4) < reports[0].variance);
  }
  SUBCASE("errors propagate") {
    CHECK(code_of([] { compare_methods(graph_at({0, 1}), 3, 1.0); }) ==
          ErrorCode::InsufficientEvents);
  }
}

TEST_CASE("property: equal-events variance never exceeds uniform variance") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 300; ++round) {
    std::vector<double> times;
    const std::size_t n = 4 + rng() % 300;
    for (std::size_t i = 0; i < n; ++i) times.push_back(static_cast<double>(i * 3 + rng() % 3));
    const auto g = graph_at(times);
    const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 16);
    const auto u = complexity_report(g, uniform_slicing(g, k));
    const auto e = complexity_report(g, equal_event_partition(g, k));
    CHECK(e.variance <= u.variance + 1e-12);
  }
}

TEST_CASE("report table") {
  std::ostringstream out;
  write_report_table(out, compare_methods(ingest_file(data_path("bursty.csv")), 2, 1.0));
  const std::string text = out.str();
  CHECK(text.find("method") == 0);
  CHECK(text.find("uniform") != std::string::npos);
  CHECK(text.find("16.000") != std::string::npos);
  CHECK(text.find("hist-eq") != std::string::npos);
}

TEST_CASE("synthetic streams") {
  SUBCASE("a single burst") {
    SynthSpec spec;
    spec.node_count = 4;
    spec.extent = 10.0;
    spec.bursts = {{5.0, 6.0, 10}};
    spec.seed = 42;
    const auto g = synth_stream(spec);
    CHECK(g.event_count() == 10);
    for (const auto& e : g.events()) {
      const double raw = e.time + g.origin();
      CHECK(raw >= 5.0);
      CHECK(raw < 6.0);
      CHECK(e.source != e.target);
    }
  }
  SUBCASE("same seed, same stream; different seed, different stream") {
    SynthSpec spec;
    spec.extent = 100.0;
    spec.background_rate = 2.0;
    spec.bursts = {{20.0, 25.0, 50}};
    spec.seed = 7;
    const auto a = synth_stream(spec);
    const auto b = synth_stream(spec);
    CHECK(a.event_count() == 250);
    REQUIRE(a.event_count() == b.event_count());
    for (std::size_t i = 0; i < a.event_count(); ++i) CHECK(a.events()[i] == b.events()[i]);
    spec.seed = 8;
    const auto c = synth_stream(spec);
    CHECK(times_of(c) != times_of(a));
  }
  SUBCASE("rugby-shaped preset") {
    const auto g = synth_stream(rugby_preset(0));
    CHECK(g.node_count() == 12);
    CHECK(g.event_count() > 3000);
    CHECK(g.extent() / 86400.0 == doctest::Approx(418.0).epsilon(0.001));
    CHECK(g.extent() < 418.0 * 86400.0);
    CHECK(native_resolution(g) >= 1.0);
    for (const auto& e : g.events()) CHECK(e.time == std::floor(e.time));
  }
  SUBCASE("invalid specs") {
    SynthSpec spec;
    CHECK(code_of([&] { synth_stream(spec); }) == ErrorCode::NoEvents);
    spec.bursts = {{3.0, 3.0, 5}};
    CHECK(code_of([&] { synth_stream(spec); }) == ErrorCode::InvalidArgument);
    spec.bursts = {{3.0, 4.0, 5}};
    spec.background_rate = -1.0;
    CHECK(code_of([&] { synth_stream(spec); }) == ErrorCode::InvalidArgument);
    spec.background_rate = 0.0;
    spec.node_count = 1;
    CHECK(code_of([&] { synth_stream(spec); }) == ErrorCode::InvalidArgument);
  }
}
