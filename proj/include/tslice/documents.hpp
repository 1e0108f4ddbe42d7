#pragma once

#include <vector>

#include <json.hpp>

#include "tslice/event_model.hpp"
#include "tslice/layout.hpp"
#include "tslice/metrics.hpp"
#include "tslice/slicing.hpp"

namespace tslice {

// Structured documents shared by the CLI subcommands. Numbers are written
// with shortest round-trip precision.

// {"method", "k", "resolution", "extent", "origin", "boundaries", "counts"}
nlohmann::json timeslicing_document(const DynamicGraph& g, const Timeslicing& s);
Timeslicing timeslicing_from_document(const nlohmann::json& doc);

nlohmann::json report_document(const std::vector<ComplexityReport>& reports);

nlohmann::json embedding_document(const Embedding& e);
Embedding embedding_from_document(const nlohmann::json& doc);

}  // namespace tslice
