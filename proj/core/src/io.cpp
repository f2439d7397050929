#include "abcgg/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "abcgg/certificate.hpp"
#include "json.hpp"

namespace abcgg {
namespace {

using json = nlohmann::ordered_json;

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return edges;
}

json entry_json(const CatalogEntry& e) {
  json rec;
  rec["n"] = e.graph.order();
  rec["edges"] = edges_json(e.graph);
  rec["cert"] = to_hex(e.cert);
  if (e.family)
    rec["family"] = e.family->descriptor();
  else
    rec["family"] = nullptr;
  if (e.abcgg)
    rec["abcgg"] = *e.abcgg;
  else
    rec["abcgg"] = nullptr;
  return rec;
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  return format_double(v);
}

// Quotes a field when it contains a separator, per RFC 4180.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_catalog_jsonl(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["type"] = "catalog";
  meta["count"] = entries.size();
  out << meta.dump() << "\n";
  for (const auto& e : entries) out << entry_json(e).dump() << "\n";
}

std::string index_report_table(const Graph& g, const IndexReport& r,
                               const std::string& source) {
  std::ostringstream out;
  out << "graph: " << (source.empty() ? "(edges)" : source) << "  n=" << g.order()
      << "  m=" << g.edge_count() << "\n";
  out << "abcgg total = " << format_double(r.total) << "\n";
  out << "edge        n_u  n_v  eq   contribution\n";
  for (const auto& t : r.per_edge) {
    char line[96];
    std::snprintf(line, sizeof line, "(%2d,%2d)    %4d %4d %3d   %s\n",
                  t.split.edge.first, t.split.edge.second, t.split.n_u,
                  t.split.n_v, t.split.eq, format_double(t.contribution).c_str());
    out << line;
  }
  return out.str();
}

std::string index_report_json(const Graph& g, const IndexReport& r,
                              const std::string& source) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["source"] = source.empty() ? json(nullptr) : json(source);
  doc["n"] = g.order();
  doc["m"] = g.edge_count();
  doc["total"] = r.total;
  json rows = json::array();
  for (const auto& t : r.per_edge) {
    json row;
    row["u"] = t.split.edge.first;
    row["v"] = t.split.edge.second;
    row["n_u"] = t.split.n_u;
    row["n_v"] = t.split.n_v;
    row["eq"] = t.split.eq;
    row["contribution"] = t.contribution;
    rows.push_back(std::move(row));
  }
  doc["per_edge"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string index_report_csv(const Graph& g, const IndexReport& r) {
  std::ostringstream out;
  out << "# schema_version=" << kSchemaVersion << "\n";
  out << "# n=" << g.order() << " m=" << g.edge_count()
      << " total=" << format_double(r.total) << "\n";
  out << "u,v,n_u,n_v,eq,contribution\n";
  for (const auto& t : r.per_edge)
    out << t.split.edge.first << "," << t.split.edge.second << "," << t.split.n_u
        << "," << t.split.n_v << "," << t.split.eq << ","
        << format_double(t.contribution) << "\n";
  return out.str();
}

std::string extremal_result_json(const ExtremalResult& r) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["class"] = to_string(r.graph_class);
  doc["n"] = r.n;
  doc["objective"] = to_string(r.objective);
  doc["optimum"] = r.optimum;
  json opts = json::array();
  for (const auto& e : r.optimizers) {
    json o;
    o["cert"] = to_hex(e.cert);
    o["family"] = e.family ? json(e.family->descriptor()) : json(nullptr);
    o["edges"] = edges_json(e.graph);
    o["abcgg"] = e.abcgg ? json(*e.abcgg) : json(nullptr);
    opts.push_back(std::move(o));
  }
  doc["optimizers"] = std::move(opts);
  doc["formula_value"] = r.formula_value ? json(*r.formula_value) : json(nullptr);
  doc["abs_gap"] = r.abs_gap;
  doc["verdict"] = r.verdict;
  return doc.dump(2) + "\n";
}

std::string extremal_result_csv(const ExtremalResult& r) {
  std::ostringstream out;
  out << "# schema_version=" << kSchemaVersion << "\n";
  out << "class,n,objective,optimum,optimizer_cert,optimizer_family,ties\n";
  const CatalogEntry* first = r.optimizers.empty() ? nullptr : &r.optimizers.front();
  out << to_string(r.graph_class) << "," << r.n << "," << to_string(r.objective)
      << "," << format_double(r.optimum) << ","
      << (first ? to_hex(first->cert) : "") << ","
      << csv_field(first && first->family ? first->family->descriptor() : "") << ","
      << r.optimizers.size() << "\n";
  return out.str();
}

std::string claim_report_csv(const ClaimReport& r) {
  std::ostringstream out;
  out << "# schema_version=" << kSchemaVersion << "\n";
  out << "# finite-range evidence over " << r.range << ", not a proof\n";
  out << "claim,n,class,optimum,optimizer_cert,formula_value,abs_gap,pass,printed_gap\n";
  for (const auto& row : r.rows)
    out << row.claim << "," << row.n << "," << csv_field(row.graph_class) << ","
        << format_double(row.optimum) << "," << row.optimizer_cert << ","
        << format_double(row.formula_value) << "," << format_double(row.abs_gap)
        << "," << (row.pass ? "true" : "false") << "," << csv_number(row.printed_gap)
        << "\n";
  return out.str();
}

std::string claim_report_json(const ClaimReport& r) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["claim"] = r.claim;
  doc["range"] = r.range;
  doc["scope"] = "finite-range evidence, not a proof";
  doc["tolerance"] = r.tolerance;
  doc["pass"] = r.all_pass();
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr;
    jr["claim"] = row.claim;
    jr["n"] = row.n;
    jr["class"] = row.graph_class;
    jr["optimum"] = row.optimum;
    jr["optimizer_cert"] = row.optimizer_cert;
    jr["formula_value"] = row.formula_value;
    jr["abs_gap"] = row.abs_gap;
    jr["pass"] = row.pass;
    jr["detail"] = row.detail;
    if (!std::isnan(row.printed_gap)) jr["printed_gap"] = row.printed_gap;
    rows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace abcgg
