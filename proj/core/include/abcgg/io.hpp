#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "abcgg/enumerate.hpp"
#include "abcgg/index.hpp"
#include "abcgg/verify.hpp"

namespace abcgg {

// Version stamp carried by every emitted file: JSON objects get a
// "schema_version" field, line-oriented formats a leading comment.
inline constexpr int kSchemaVersion = 1;

// Shortest representation with at least 12 significant digits.
std::string format_double(double v);

// Catalog stream: a meta record first, then one record per entry:
// {"n":..,"edges":[[u,v],..],"cert":"<hex>","family":"b1:3,4"|null,
//  "abcgg":<number>|null}
void write_catalog_jsonl(std::ostream& out, const std::vector<CatalogEntry>& entries);

std::string index_report_table(const Graph& g, const IndexReport& r,
                               const std::string& source);
std::string index_report_json(const Graph& g, const IndexReport& r,
                              const std::string& source);
std::string index_report_csv(const Graph& g, const IndexReport& r);

std::string extremal_result_json(const ExtremalResult& r);
std::string extremal_result_csv(const ExtremalResult& r);

// Columns: claim,n,class,optimum,optimizer_cert,formula_value,abs_gap,
// pass,printed_gap (printed_gap empty where not applicable).
std::string claim_report_csv(const ClaimReport& r);
std::string claim_report_json(const ClaimReport& r);

}  // namespace abcgg
