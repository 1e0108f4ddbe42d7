#include "tslice/documents.hpp"

#include <cmath>

#include "tslice/error.hpp"

namespace tslice {

using nlohmann::json;

json timeslicing_document(const DynamicGraph& g, const Timeslicing& s) {
  json doc;
  doc["method"] = std::string(method_name(s.method()));
  doc["k"] = s.k();
  if (s.resolution_used()) {
    doc["resolution"] = *s.resolution_used();
  } else if (s.method() == Method::EqualEvents) {
    doc["resolution"] = "event-sequence";
  } else {
    doc["resolution"] = nullptr;
  }
  doc["extent"] = g.extent();
  doc["origin"] = g.origin();
  doc["boundaries"] = std::vector<double>(s.boundaries().begin(), s.boundaries().end());
  doc["counts"] = s.event_counts(g);
  return doc;
}

Timeslicing timeslicing_from_document(const json& doc) {
  try {
    const auto method = parse_method(doc.at("method").get<std::string>());
    if (!method) throw Error(ErrorCode::MalformedInput, "unknown method in timeslicing document");
    std::optional<double> resolution;
    if (doc.contains("resolution") && doc["resolution"].is_number()) {
      resolution = doc["resolution"].get<double>();
    }
    auto boundaries = doc.at("boundaries").get<std::vector<double>>();
    if (doc.contains("k") && doc["k"].get<std::size_t>() + 1 != boundaries.size()) {
      throw Error(ErrorCode::MalformedInput, "k disagrees with the boundary count");
    }
    return Timeslicing(*method, std::move(boundaries), resolution);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::MalformedInput, std::string("timeslicing document: ") + ex.what());
  }
}

json report_document(const std::vector<ComplexityReport>& reports) {
  json doc = json::array();
  for (const auto& r : reports) {
    json row;
    row["method"] = std::string(method_name(r.method));
    row["k"] = r.counts.size();
    row["counts"] = r.counts;
    row["mean"] = r.mean;
    row["variance"] = r.variance;
    // JSON has no infinity.
    if (std::isinf(r.max_min_ratio)) {
      row["max_min_ratio"] = "inf";
    } else {
      row["max_min_ratio"] = r.max_min_ratio;
    }
    row["durations"] = r.durations;
    doc.push_back(std::move(row));
  }
  return doc;
}

json embedding_document(const Embedding& e) {
  json doc;
  doc["seed"] = e.seed;
  doc["iterations"] = e.iterations;
  json positions = json::object();
  for (const auto& [label, p] : e.positions) positions[label] = {p.x, p.y};
  doc["positions"] = std::move(positions);
  return doc;
}

Embedding embedding_from_document(const json& doc) {
  try {
    Embedding e;
    e.seed = doc.value("seed", std::uint64_t{0});
    e.iterations = doc.value("iterations", std::uint32_t{0});
    for (const auto& [label, xy] : doc.at("positions").items()) {
      const Point p{xy.at(0).get<double>(), xy.at(1).get<double>()};
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw Error(ErrorCode::MalformedInput, "non-finite position for '" + label + "'");
      }
      e.positions.emplace(label, p);
    }
    return e;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::MalformedInput, std::string("embedding document: ") + ex.what());
  }
}

}  // namespace tslice
