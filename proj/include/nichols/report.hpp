#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nichols/verdict.hpp"

namespace nichols {

using Json = nlohmann::ordered_json;

inline constexpr const char* verdict_schema = "nichols-verdict/1";
inline constexpr const char* table_schema = "nichols-table/1";
inline constexpr const char* diagram_schema = "nichols-diagram/1";

inline Json q_matrix_json(const QMatrix& Q) {
  Json rows = Json::array();
  for (const auto& row : Q) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(z.reduced().to_string());
    rows.push_back(r);
  }
  return rows;
}

inline Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline Json subrack_json(const Subrack& T) {
  Json out = Json::array();
  for (std::size_t i = 0; i < T.size(); ++i)
    out.push_back({{"index", i}, {"element", to_cycle_string(T.elements[i])}, {"transporter", to_cycle_string(T.transporters[i])}});
  return out;
}

inline Json witness_json(const Witness& w) {
  Json j;
  j["origin"] = w.origin;
  j["subrack"] = subrack_json(w.subspace.subrack);
  std::vector<std::size_t> used;
  Json vertices = Json::array();
  for (const auto& v : w.subspace.vertices) {
    if (std::find(used.begin(), used.end(), v.member) == used.end()) used.push_back(v.member);
    vertices.push_back({{"member", v.member}, {"vector", vector_json(w.subspace.bases[v.member][v.index])}});
  }
  std::sort(used.begin(), used.end());
  j["subrack_indices"] = used;
  j["vertices"] = vertices;
  j["Q"] = q_matrix_json(w.Q);
  j["trigger"] = w.finding.vertices;
  j["names"] = w.finding.names;
  if (w.finding.cartan) {
    Json c = Json::array();
    for (const auto& row : w.finding.cartan->A) c.push_back(row);
    j["cartan"] = c;
  } else {
    j["cartan"] = nullptr;
  }
  j["dot"] = w.diagram.to_dot();
  return j;
}

inline Json verdict_json(const Verdict& v) {
  Json j;
  j["schema"] = verdict_schema;
  j["k"] = v.k;
  j["n"] = v.n;
  j["rep"] = v.rep;
  j["degree"] = v.degree;
  j["q_pipi"] = v.q_pipi.reduced().to_string();
  j["outcome"] = to_string(v.outcome);
  j["rule"] = v.rule;
  j["detail"] = v.detail;
  j["witness"] = v.witness ? witness_json(*v.witness) : Json(nullptr);
  if (v.negativity)
    j["negativity"] = {{"reduced", v.negativity->reduced},
                       {"pairs_checked", v.negativity->pairs_checked},
                       {"pairs_covered", v.negativity->pairs_covered.get_str()}};
  else
    j["negativity"] = nullptr;
  j["notes"] = v.notes;
  return j;
}

inline std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "schema: " << verdict_schema << "\n";
  os << "class: (" << v.k << "^" << v.n << ")\n";
  os << "rep: " << v.rep << "\n";
  os << "degree: " << v.degree << "\n";
  os << "q_pipi: " << v.q_pipi.reduced().to_string() << "\n";
  os << "outcome: " << to_string(v.outcome) << "\n";
  os << "rule: " << v.rule << "\n";
  os << "detail: " << v.detail << "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    os << "witness subrack (" << w.origin << "):\n";
    for (std::size_t i = 0; i < w.subspace.subrack.size(); ++i)
      os << "  t" << i << " = " << to_cycle_string(w.subspace.subrack.elements[i])
         << "  g" << i << " = " << to_cycle_string(w.subspace.subrack.transporters[i]) << "\n";
    os << "witness vertices: " << w.subspace.size() << "\n";
    os << "Q:\n" << q_matrix_string(w.Q);
    if (w.finding.cartan) os << "cartan matrix:\n" << int_matrix_string(w.finding.cartan->A);
    if (!w.finding.names.empty()) {
      os << "diagram:";
      for (const auto& s : w.finding.names) os << " " << s;
      os << "\n";
    }
  }
  if (v.negativity)
    os << "negativity: " << v.negativity->pairs_checked << " pairs diagonalized, " << v.negativity->pairs_covered.get_str()
       << " ordered commuting pairs covered" << (v.negativity->reduced ? " (symmetry reduced)" : "") << "\n";
  for (const auto& note : v.notes) os << "note: " << note << "\n";
  return os.str();
}

inline std::string diagram_dot(const DynkinDiagram& G) { return std::string("// schema: ") + diagram_schema + "\n" + G.to_dot(); }

struct TableRow {
  IrrepLabel label;
  Verdict verdict;
  std::optional<Outcome> oracle;

  bool agrees() const { return !oracle || (verdict.outcome == Outcome::Undecided && label.catalog_gap) || *oracle == verdict.outcome; }
};

inline std::vector<TableRow> classify_all(int k, int n, const DecideConfig& cfg) {
  std::vector<TableRow> rows;
  for (const auto& lab : enumerate_irreps(k, n)) rows.push_back({lab, decide(lab, cfg), closed_form_oracle(lab)});
  return rows;
}

inline Json table_json(int k, int n, const std::vector<TableRow>& rows) {
  Json j;
  j["schema"] = table_schema;
  j["k"] = k;
  j["n"] = n;
  Json rs = Json::array();
  for (const auto& r : rows) {
    Json x;
    x["rep"] = r.label.spec();
    x["degree"] = r.label.dim;
    x["q_pipi"] = r.verdict.q_pipi.reduced().to_string();
    x["outcome"] = to_string(r.verdict.outcome);
    x["rule"] = r.verdict.rule;
    x["closed_form"] = r.oracle ? Json(to_string(*r.oracle)) : Json(nullptr);
    x["agrees"] = r.agrees();
    x["witness_names"] = r.verdict.witness ? Json(r.verdict.witness->finding.names) : Json::array();
    x["witness_vertices"] = r.verdict.witness ? r.verdict.witness->subspace.size() : 0;
    rs.push_back(x);
  }
  j["rows"] = rs;
  return j;
}

inline std::string table_text(int k, int n, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "schema: " << table_schema << "\n";
  os << "class (" << k << "^" << n << "): " << rows.size() << " irreps\n";
  for (const auto& r : rows) {
    os << r.label.spec() << " | deg " << r.label.dim << " | q " << r.verdict.q_pipi.reduced().to_string() << " | "
       << to_string(r.verdict.outcome) << " | " << r.verdict.rule;
    if (r.verdict.witness && !r.verdict.witness->finding.names.empty()) {
      os << " |";
      for (const auto& s : r.verdict.witness->finding.names) os << " " << s;
    }
    if (!r.label.catalog_gap) os << (r.agrees() ? "" : " | DISAGREES WITH CLOSED FORM");
    os << "\n";
  }
  return os.str();
}

}  // namespace nichols
