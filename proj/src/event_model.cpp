#include "tslice/event_model.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "tslice/error.hpp"

namespace tslice {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads exactly `width` digits starting at `pos`.
std::optional<int> fixed_digits(std::string_view s, std::size_t pos, std::size_t width) {
  if (pos + width > s.size()) return std::nullopt;
  int value = 0;
  for (std::size_t i = pos; i < pos + width; ++i) {
    if (!is_digit(s[i])) return std::nullopt;
    value = value * 10 + (s[i] - '0');
  }
  return value;
}

std::optional<double> parse_rfc3339(std::string_view s) {
  // YYYY-MM-DDTHH:MM:SS[.frac](Z|+HH:MM|-HH:MM)
  if (s.size() < 20) return std::nullopt;
  const auto year = fixed_digits(s, 0, 4);
  const auto month = fixed_digits(s, 5, 2);
  const auto day = fixed_digits(s, 8, 2);
  const auto hour = fixed_digits(s, 11, 2);
  const auto minute = fixed_digits(s, 14, 2);
  const auto second = fixed_digits(s, 17, 2);
  if (!year || !month || !day || !hour || !minute || !second) return std::nullopt;
  if (s[4] != '-' || s[7] != '-' || s[13] != ':' || s[16] != ':') return std::nullopt;
  if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') return std::nullopt;
  if (*hour > 23 || *minute > 59 || *second > 60) return std::nullopt;

  const std::chrono::year_month_day ymd{std::chrono::year{*year},
                                        std::chrono::month{static_cast<unsigned>(*month)},
                                        std::chrono::day{static_cast<unsigned>(*day)}};
  if (!ymd.ok()) return std::nullopt;

  std::size_t pos = 19;
  double fraction = 0.0;
  if (pos < s.size() && s[pos] == '.') {
    const std::size_t start = pos;
    ++pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    if (pos == start + 1) return std::nullopt;
    // "0.xxx" parsed as a plain decimal.
    std::string frac = "0";
    frac.append(s.substr(start, pos - start));
    fraction = std::strtod(frac.c_str(), nullptr);
  }
  if (pos >= s.size()) return std::nullopt;

  int offset_seconds = 0;
  if (s[pos] == 'Z' || s[pos] == 'z') {
    ++pos;
  } else if (s[pos] == '+' || s[pos] == '-') {
    const int sign = s[pos] == '-' ? -1 : 1;
    const auto oh = fixed_digits(s, pos + 1, 2);
    const auto om = fixed_digits(s, pos + 4, 2);
    if (!oh || !om || pos + 3 >= s.size() || s[pos + 3] != ':') return std::nullopt;
    if (*oh > 23 || *om > 59) return std::nullopt;
    offset_seconds = sign * (*oh * 3600 + *om * 60);
    pos += 6;
  } else {
    return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;

  const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
  const double whole = static_cast<double>(days) * 86400.0 + *hour * 3600.0 + *minute * 60.0 +
                       *second - offset_seconds;
  return whole + fraction;
}

}  // namespace

std::optional<NodeIndex> DynamicGraph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex GraphBuilder::intern(std::string_view label) {
  if (label.empty()) throw Error(ErrorCode::InvalidArgument, "node label must be non-empty");
  const auto [it, inserted] =
      index_.try_emplace(std::string(label), static_cast<NodeIndex>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

void GraphBuilder::add(std::string_view source, std::string_view target, double raw_time) {
  if (!std::isfinite(raw_time)) throw Error(ErrorCode::InvalidArgument, "timestamp must be finite");
  const NodeIndex s = intern(source);
  const NodeIndex t = intern(target);
  raw_.push_back({s, t, raw_time});
}

DynamicGraph GraphBuilder::build() && {
  if (raw_.empty()) throw Error(ErrorCode::EmptyInput, "empty input: no edge events");
  std::stable_sort(raw_.begin(), raw_.end(),
                   [](const TemporalEdge& a, const TemporalEdge& b) { return a.time < b.time; });
  const double origin = raw_.front().time;
  for (auto& e : raw_) e.time -= origin;

  DynamicGraph g;
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  g.events_ = std::move(raw_);
  g.origin_ = origin;
  g.extent_ = g.events_.back().time;
  g.distinct_ = 1;
  for (std::size_t i = 1; i < g.events_.size(); ++i) {
    const double gap = g.events_[i].time - g.events_[i - 1].time;
    if (gap > 0.0) {
      ++g.distinct_;
      if (!g.resolution_ || gap < *g.resolution_) g.resolution_ = gap;
    }
  }
  return g;
}

std::optional<double> parse_timestamp(std::string_view field) {
  field = trim(field);
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  // from_chars rejects a leading '+', which is harmless to accept.
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc() && ptr == end) {
    if (!std::isfinite(value)) return std::nullopt;
    return value;
  }
  return parse_rfc3339(field);
}

DynamicGraph ingest_stream(std::istream& in) {
  GraphBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view record = trim(line);
    if (record.empty() || record.front() == '#') continue;

    const auto c1 = record.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : record.find(',', c1 + 1);
    if (c2 == std::string_view::npos || record.find(',', c2 + 1) != std::string_view::npos) {
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(line_no) + ": expected source,target,timestamp");
    }
    const auto source = trim(record.substr(0, c1));
    const auto target = trim(record.substr(c1 + 1, c2 - c1 - 1));
    if (source.empty() || target.empty()) {
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(line_no) + ": empty node label");
    }
    const auto time = parse_timestamp(record.substr(c2 + 1));
    if (!time) {
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(line_no) + ": invalid timestamp '" +
                      std::string(trim(record.substr(c2 + 1))) + "'");
    }
    builder.add(source, target, *time);
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read error");
  return std::move(builder).build();
}

DynamicGraph ingest_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ingest_stream(in);
}

DynamicGraph ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return ingest_stream(in);
}

double native_resolution(const DynamicGraph& g) {
  if (!g.resolution()) {
    throw Error(ErrorCode::ResolutionUndefined,
                "resolution undefined: all events share one timestamp; supply a bin width");
  }
  return *g.resolution();
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

void write_edge_list(std::ostream& out, const DynamicGraph& g) {
  for (const auto& e : g.events()) {
    out << g.label(e.source) << ',' << g.label(e.target) << ',' << format_number(e.time) << '\n';
  }
}

}  // namespace tslice
