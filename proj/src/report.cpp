// Copyright 2026 The Fluctuverse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fluctuverse/report.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "fluctuverse/planck_law.hpp"
#include "fluctuverse/scale_bridge.hpp"

namespace fluctuverse {
namespace {

using Json = nlohmann::ordered_json;

std::string value_or_dash(const std::optional<Quantity>& q) {
  return q ? format_sig5(q->value()) : "-";
}

std::string unit_of(const std::optional<Quantity>& q) {
  return q ? q->dim().to_unit_string() : "";
}

std::string deviation_text(const RelationResult& r) {
  if (!r.deviation_decades) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *r.deviation_decades);
  return buf;
}

std::string tol_text(double tol) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", tol);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Json quantity_json(const std::optional<Quantity>& q) {
  if (!q) return nullptr;
  return Json{{"value", q->value()}, {"unit", q->dim().to_unit_string()}};
}

Json relation_json(const Relation& rel, const RelationResult& r) {
  Json j;
  j["id"] = r.id;
  j["desc"] = rel.description;
  j["expr"] = rel.expression_source();
  j["comparator"] = std::string(to_symbol(r.comparator));
  j["lhs"] = quantity_json(r.lhs_value);
  j["rhs"] = quantity_json(r.rhs_value);
  j["deviation_decades"] = r.deviation_decades ? Json(*r.deviation_decades) : Json(nullptr);
  j["tol"] = r.tolerance_decades;
  j["dim_consistent"] = r.dim_consistent;
  j["passed"] = r.passed;
  j["ref"] = rel.ref;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json rows_json(const std::vector<ReportRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    arr.push_back({{"label", row.label}, {"value", row.value}, {"unit", row.unit}, {"anchor", row.anchor}});
  }
  return arr;
}

Json epoch_json(const EpochState& s) {
  return {{"t_s", s.t.value()},
          {"N", s.particle_count},
          {"M_g", s.mass.value()},
          {"R_cm", s.radius.value()},
          {"H_per_s", s.hubble.value()},
          {"l_cm", s.uncertainty.value()},
          {"hbar_check_erg_s", s.hbar_check.value()},
          {"lambda_bound_per_s2", s.lambda_bound.value()}};
}

void text_rows(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "| quantity | value | unit | anchor |\n|---|---|---|---|\n";
  for (const auto& row : rows) {
    os << "| " << row.label << " | " << format_sig5(row.value) << " | " << row.unit << " | " << row.anchor
       << " |\n";
  }
}

std::size_t passed_count(std::span<const RelationResult> results) {
  std::size_t n = 0;
  for (const auto& r : results) n += r.passed ? 1 : 0;
  return n;
}

}  // namespace

void render_verify(std::ostream& os, std::span<const Relation> corpus,
                   std::span<const RelationResult> results, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["schema_version"] = kJsonSchemaVersion;
      j["relations"] = Json::array();
      for (std::size_t i = 0; i < results.size(); ++i) j["relations"].push_back(relation_json(corpus[i], results[i]));
      j["passed"] = passed_count(results);
      j["total"] = results.size();
      os << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::kCsv:
      os << "id,lhs,lhs_unit,rhs,rhs_unit,deviation_decades,tol,status,ref\n";
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        os << r.id << ',' << value_or_dash(r.lhs_value) << ',' << unit_of(r.lhs_value) << ','
           << value_or_dash(r.rhs_value) << ',' << unit_of(r.rhs_value) << ',' << deviation_text(r) << ','
           << tol_text(r.tolerance_decades) << ',' << (r.passed ? "PASS" : "FAIL") << ','
           << csv_escape(corpus[i].ref) << '\n';
      }
      return;
    case OutputFormat::kText: {
      char line[512];
      std::snprintf(line, sizeof line, "%-28s %-22s %-22s %9s %8s  %-6s %s\n", "id", "lhs", "rhs", "dev(dec)",
                    "tol", "status", "ref");
      os << line;
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        const std::string lhs = value_or_dash(r.lhs_value) + " " + unit_of(r.lhs_value);
        const std::string rhs = value_or_dash(r.rhs_value) + " " + unit_of(r.rhs_value);
        std::snprintf(line, sizeof line, "%-28s %-22s %-22s %9s %8s  %-6s %s\n", r.id.c_str(), lhs.c_str(),
                      rhs.c_str(), deviation_text(r).c_str(), tol_text(r.tolerance_decades).c_str(),
                      r.passed ? "PASS" : "FAIL", corpus[i].ref.c_str());
        os << line;
        if (!r.note.empty()) os << "    note: " << r.note << '\n';
      }
      os << passed_count(results) << "/" << results.size() << " relations passed\n";
      return;
    }
  }
}

void render_epochs(std::ostream& os, std::span<const EpochState> series, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    Json arr = Json::array();
    for (const auto& s : series) arr.push_back(epoch_json(s));
    os << arr.dump(2) << '\n';
    return;
  }
  write_epochs_csv(os, series);
}

void render_report(std::ostream& os, const ConstantsRegistry& reg, std::span<const Relation> corpus,
                   std::span<const RelationResult> results, const EpochState& epoch, OutputFormat format) {
  const auto scales = scale_bridge_rows(reg);
  const auto planck = planck_law_rows(reg);

  if (format == OutputFormat::kJson) {
    Json j;
    j["schema_version"] = kJsonSchemaVersion;
    j["constants"] = Json::array();
    for (const auto& e : reg.entries()) {
      j["constants"].push_back({{"name", e.name},
                                {"value", e.quantity.value()},
                                {"unit", e.quantity.dim().to_unit_string()},
                                {"provenance", e.provenance}});
    }
    j["relations"] = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) j["relations"].push_back(relation_json(corpus[i], results[i]));
    j["scales"] = rows_json(scales);
    j["planck_law"] = rows_json(planck);
    j["epoch"] = epoch_json(epoch);
    os << j.dump(2) << '\n';
    return;
  }

  if (format == OutputFormat::kCsv) {
    os << "section,label,value,unit,anchor\n";
    for (const auto& e : reg.entries()) {
      os << "constants," << e.name << ',' << format_sig5(e.quantity.value()) << ','
         << e.quantity.dim().to_unit_string() << ',' << csv_escape(e.provenance) << '\n';
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      os << "relations," << results[i].id << ',' << deviation_text(results[i]) << ",decades,"
         << csv_escape(corpus[i].ref) << '\n';
    }
    for (const auto& r : scales) {
      os << "scales," << csv_escape(r.label) << ',' << format_sig5(r.value) << ',' << r.unit << ',' << r.anchor << '\n';
    }
    for (const auto& r : planck) {
      os << "planck_law," << csv_escape(r.label) << ',' << format_sig5(r.value) << ',' << r.unit << ','
         << r.anchor << '\n';
    }
    os << "epoch,t," << format_sig5(epoch.t.value()) << ",s,\n";
    os << "epoch,N," << format_sig5(epoch.particle_count) << ",,\n";
    return;
  }

  os << "# Fluctuverse verification report\n\n## Constants\n\n";
  os << "| name | value | unit | provenance |\n|---|---|---|---|\n";
  for (const auto& e : reg.entries()) {
    os << "| " << e.name << " | " << format_sig5(e.quantity.value()) << " | " << e.quantity.dim().to_unit_string()
       << " | " << e.provenance << " |\n";
  }

  os << "\n## Relations\n";
  std::vector<std::string> anchors;
  for (const auto& rel : corpus) {
    if (std::find(anchors.begin(), anchors.end(), rel.ref) == anchors.end()) anchors.push_back(rel.ref);
  }
  for (const auto& anchor : anchors) {
    os << "\n### " << (anchor.empty() ? "(no anchor)" : anchor) << "\n\n";
    os << "| id | relation | lhs | rhs | deviation | tol | verdict |\n|---|---|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (corpus[i].ref != anchor) continue;
      const auto& r = results[i];
      os << "| " << r.id << " | `" << corpus[i].expression_source() << "` | " << value_or_dash(r.lhs_value) << ' '
         << unit_of(r.lhs_value) << " | " << value_or_dash(r.rhs_value) << ' ' << unit_of(r.rhs_value) << " | "
         << deviation_text(r) << " | " << tol_text(r.tolerance_decades) << " | " << (r.passed ? "PASS" : "FAIL")
         << " |\n";
    }
  }
  os << "\n" << passed_count(results) << "/" << results.size() << " relations passed\n";

  os << "\n## Scale bridge\n\n";
  text_rows(os, scales);
  os << "\n## Planck law\n\n";
  text_rows(os, planck);

  os << "\n## Present epoch\n\n";
  const std::vector<ReportRow> epoch_rows = {
      {"t", epoch.t.value(), "s", ""},
      {"N", epoch.particle_count, "", ""},
      {"M", epoch.mass.value(), "g", ""},
      {"R", epoch.radius.value(), "cm", ""},
      {"H", epoch.hubble.value(), "s^-1", ""},
      {"l = R/sqrt(N)", epoch.uncertainty.value(), "cm", ""},
      {"hbar_check", epoch.hbar_check.value(), "g*cm^2/s", ""},
      {"lambda_bound", epoch.lambda_bound.value(), "s^-2", ""},
  };
  text_rows(os, epoch_rows);
}

}  // namespace fluctuverse
