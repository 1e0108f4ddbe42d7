#include <doctest.h>

#include <random>
#include <sstream>

#include "test_util.hpp"
#include "tslice/error.hpp"
#include "tslice/event_model.hpp"

using namespace tslice;

using namespace tslice::testing;

TEST_CASE("ingest shifts the earliest event to zero") {
  const auto g = ingest_string("a,b,5\nb,c,7\na,c,5\n");
  CHECK(g.node_count() == 3);
  CHECK(g.extent() == 2.0);
  CHECK(g.origin() == 5.0);
  CHECK(times_of(g) == std::vector<double>{0, 0, 2});
  // Equal timestamps keep input order.
  CHECK(g.label(g.events()[0].target) == "b");
  CHECK(g.label(g.events()[1].target) == "c");
}

TEST_CASE("single record gives a zero extent") {
  const auto g = ingest_string("x,y,100");
  CHECK(g.event_count() == 1);
  CHECK(g.extent() == 0.0);
  CHECK(g.events()[0].time == 0.0);
  CHECK_FALSE(g.resolution().has_value());
}

TEST_CASE("comments, blank lines and whitespace are ignored") {
  const auto g = ingest_string("# header\n\n  a , b , 1.5 \r\n# c,d,3\nb,a,-2\n");
  CHECK(g.event_count() == 2);
  CHECK(g.extent() == 3.5);
  CHECK(g.origin() == -2.0);
  CHECK(g.node_count() == 2);
}

TEST_CASE("self loops are events") {
  const auto g = ingest_string("a,a,0\na,b,1\n");
  CHECK(g.event_count() == 2);
  CHECK(g.node_count() == 2);
}

TEST_CASE("RFC 3339 timestamps convert to seconds") {
  CHECK(parse_timestamp("1970-01-01T00:00:00Z") == 0.0);
  CHECK(parse_timestamp("1970-01-02T00:00:01Z") == 86401.0);
  CHECK(parse_timestamp("2014-09-01T00:00:00Z") == 1409529600.0);
  CHECK(parse_timestamp("2014-09-01T02:00:00+02:00") == 1409529600.0);
  CHECK(parse_timestamp("2014-08-31t19:00:00-05:00") == 1409529600.0);
  CHECK(parse_timestamp("2014-09-01 00:00:00.25Z") == 1409529600.25);
  CHECK_FALSE(parse_timestamp("2014-02-30T00:00:00Z").has_value());
  CHECK_FALSE(parse_timestamp("2014-09-01T00:00:00").has_value());
  CHECK_FALSE(parse_timestamp("2014-09-01T24:00:00Z").has_value());
  CHECK_FALSE(parse_timestamp("yesterday").has_value());
  CHECK_FALSE(parse_timestamp("nan").has_value());
  CHECK_FALSE(parse_timestamp("inf").has_value());

  const auto g = ingest_string("a,b,2014-09-01T00:00:00Z\nb,c,2014-09-02T00:00:00Z\n");
  CHECK(g.extent() == 86400.0);
}

TEST_CASE("ingest errors") {
  SUBCASE("empty stream") {
    CHECK(code_of([] { ingest_string(""); }) == ErrorCode::EmptyInput);
    CHECK(code_of([] { ingest_string("# only a comment\n\n"); }) == ErrorCode::EmptyInput);
  }
  SUBCASE("non-numeric timestamp reports the line") {
    try {
      ingest_string("a,b,1\n# c\nb,c,soon\n");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedInput);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("wrong field count") {
    CHECK(code_of([] { ingest_string("a,b\n"); }) == ErrorCode::MalformedInput);
    CHECK(code_of([] { ingest_string("a,b,1,2\n"); }) == ErrorCode::MalformedInput);
  }
  SUBCASE("empty label") {
    CHECK(code_of([] { ingest_string(",b,1\n"); }) == ErrorCode::MalformedInput);
  }
  SUBCASE("missing file") {
    CHECK(code_of([] { ingest_file("/nonexistent/edges.csv"); }) == ErrorCode::Io);
  }
}

TEST_CASE("native resolution") {
  CHECK(native_resolution(ingest_string("a,b,0\na,b,0\na,b,2\na,b,5\n")) == 2.0);
  CHECK(native_resolution(ingest_string("a,b,0\na,b,1\na,b,2\na,b,3\n")) == 1.0);
  CHECK(code_of([] { native_resolution(ingest_string("a,b,0\na,b,0\na,b,0\n")); }) ==
        ErrorCode::ResolutionUndefined);
  CHECK(code_of([] { native_resolution(ingest_string("a,b,4\n")); }) ==
        ErrorCode::ResolutionUndefined);
}

TEST_CASE("node interning is a bijection") {
  const auto g = ingest_string("x,y,0\ny,z,1\nz,x,2\n");
  for (NodeIndex i = 0; i < g.node_count(); ++i) CHECK(g.find(g.label(i)) == i);
  CHECK_FALSE(g.find("w").has_value());
}

TEST_CASE("property: canonical form re-ingests identically, 0 <= t <= T") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::ostringstream text;
    const int n = 1 + static_cast<int>(rng() % 60);
    const double offset = static_cast<double>(rng() % 1000) - 500.0;
    for (int i = 0; i < n; ++i) {
      // Coarse values force ties; fractional ones exercise full precision.
      const double t = (rng() % 2 ? static_cast<double>(rng() % 20)
                                  : std::ldexp(static_cast<double>(rng() % 100000), -7)) +
                       offset;
      text << "v" << rng() % 6 << ",v" << rng() % 6 << ',' << format_number(t) << '\n';
    }
    const auto g = ingest_string(text.str());
    for (const auto& e : g.events()) {
      CHECK(e.time >= 0.0);
      CHECK(e.time <= g.extent());
    }
    for (std::size_t i = 1; i < g.event_count(); ++i) {
      CHECK(g.events()[i - 1].time <= g.events()[i].time);
    }

    std::ostringstream canonical;
    write_edge_list(canonical, g);
    const auto again = ingest_string(canonical.str());
    REQUIRE(again.event_count() == g.event_count());
    for (std::size_t i = 0; i < g.event_count(); ++i) {
      const auto& a = g.events()[i];
      const auto& b = again.events()[i];
      CHECK(a.time == b.time);
      CHECK(g.label(a.source) == again.label(b.source));
      CHECK(g.label(a.target) == again.label(b.target));
    }
    CHECK(again.extent() == g.extent());
    CHECK(again.resolution() == g.resolution());
  }
}
