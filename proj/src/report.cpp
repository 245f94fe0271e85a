#include "commgraph/report.hpp"

#include <sstream>

namespace commgraph {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string verdict_cell(const ClassReport& r, GraphClass c) {
  const ClassVerdict* v = r.verdict(c);
  if (!v) return "";
  return v->member ? "true" : "false";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(VertexScope s) { return s == VertexScope::All ? "all" : "noncentral"; }

nlohmann::json report_to_json(const ClassReport& r, const Group& g, bool include_certificates) {
  using nlohmann::json;
  json out;
  out["schema"] = kReportSchema;
  out["group"] = r.identity;
  out["order"] = r.order;
  out["center_size"] = r.center_size;
  out["scope"] = to_string(r.scope);
  out["graph"] = {{"vertices", r.graph_vertices}, {"edges", r.graph_edges}};
  if (include_certificates) out["graph"]["vertex_elements"] = r.vertex_elements;

  auto label = [&](Vertex v) { return g.label(r.vertex_elements.at(v)); };
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v, label, include_certificates));
  out["verdicts"] = std::move(verdicts);

  json preds;
  preds["abelian"] = r.abelian;
  if (r.generalized_dihedral_odd) {
    const auto& d = *r.generalized_dihedral_odd;
    json j{{"holds", d.holds}};
    if (d.holds) {
      j["abelian_part_order"] = d.abelian_part->size();
    } else {
      j["reason"] = d.reason;
    }
    preds["generalized_dihedral_odd"] = std::move(j);
  }
  auto centralizer_json = [&](const CentralizerTest& t) {
    json j{{"holds", t.holds}};
    if (t.counterexample) j["counterexample"] = g.label(*t.counterexample);
    return j;
  };
  if (r.ac) preds["ac_group"] = centralizer_json(*r.ac);
  if (r.ca) preds["ca_group"] = centralizer_json(*r.ca);
  out["predicates"] = std::move(preds);

  if (r.frobenius) {
    out["frobenius"] = {{"holds", true},
                        {"complement_order", r.frobenius->complement.size()},
                        {"kernel_order", r.frobenius->kernel.size()}};
  } else if (r.frobenius_failure) {
    out["frobenius"] = {{"holds", false}, {"reason", *r.frobenius_failure}};
  }

  json timings = json::object();
  for (const auto& t : r.timings) timings[t.stage] = t.milliseconds;
  out["timings_ms"] = std::move(timings);
  return out;
}

std::string report_to_text(const ClassReport& r) {
  std::ostringstream out;
  out << "group        " << r.identity << '\n';
  out << "order        " << r.order << '\n';
  out << "center       " << r.center_size << '\n';
  out << "graph        " << r.graph_vertices << " vertices, " << r.graph_edges << " edges ("
      << to_string(r.scope) << ")\n";
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    const auto& v = r.verdicts[i];
    std::string name = to_string(v.graph_class);
    name.resize(13, ' ');
    out << name << (v.member ? "yes" : "no");
    if (v.witness) {
      out << "  " << to_string(v.witness->pattern) << ':';
      for (const auto& l : r.witness_labels[i]) out << ' ' << l;
    }
    out << '\n';
  }
  out << "abelian      " << yes_no(r.abelian) << '\n';
  if (r.generalized_dihedral_odd) {
    out << "D(A), odd A  " << yes_no(r.generalized_dihedral_odd->holds) << '\n';
  }
  if (r.ac) out << "AC-group     " << yes_no(r.ac->holds) << '\n';
  if (r.ca) out << "CA-group     " << yes_no(r.ca->holds) << '\n';
  if (r.frobenius) {
    out << "Frobenius    kernel " << r.frobenius->kernel.size() << ", complement "
        << r.frobenius->complement.size() << '\n';
  } else if (r.frobenius_failure) {
    out << "Frobenius    no (" << *r.frobenius_failure << ")\n";
  }
  return out.str();
}

std::string report_csv_header() {
  return "group,order,center,scope,vertices,edges,split,threshold,2k2free,cograph,chordal,"
         "abelian,gd_odd,ac,ca";
}

std::string report_to_csv(const ClassReport& r) {
  std::ostringstream out;
  out << csv_quote(r.identity) << ',' << r.order << ',' << r.center_size << ',' << to_string(r.scope)
      << ',' << r.graph_vertices << ',' << r.graph_edges;
  for (GraphClass c : kAllClasses) out << ',' << verdict_cell(r, c);
  out << ',' << (r.abelian ? "true" : "false");
  auto opt = [](const auto& o) -> std::string {
    if (!o) return "";
    return o->holds ? "true" : "false";
  };
  out << ',' << opt(r.generalized_dihedral_odd) << ',' << opt(r.ac) << ',' << opt(r.ca);
  return out.str();
}

}  // namespace commgraph
