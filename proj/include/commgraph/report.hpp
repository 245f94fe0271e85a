#pragma once

#include <string>

#include <json.hpp>

#include "commgraph/classifiers.hpp"

namespace commgraph {

inline constexpr const char* kReportSchema = "commgraph.report/1";

std::string to_string(VertexScope s);  // "all" / "noncentral"

// {"schema": "commgraph.report/1", "group": ..., "order": ..., "center_size": ...,
//  "scope": ..., "graph": {"vertices", "edges"}, "verdicts": [...],
//  "predicates": {...}, "frobenius": {...}, "timings_ms": {...}}
// Verdict entries follow verdict_to_json; witness labels are the group
// elements. Certificates refer to graph vertices, listed under
// "graph.vertex_elements" when certificates are included.
nlohmann::json report_to_json(const ClassReport& r, const Group& g,
                              bool include_certificates = false);

// Human-readable multi-line summary.
std::string report_to_text(const ClassReport& r);

std::string report_csv_header();
std::string report_to_csv(const ClassReport& r);

}  // namespace commgraph
