#pragma once

#include <string>
#include <utility>

#include "gtm/analysis.hpp"
#include "gtm/complexity.hpp"

namespace gtm {

struct TableMeta {
  int m = 2;
  int k = 1;
  std::string generator = "morphism";
  bool oracle_checked = false;
};

// CSV with header "n,value,provenance", one row per table entry, ascending n.
std::string table_to_csv(const ComplexityTable& table);

// JSON object with "meta" and a "rows" array of {n, value, provenance}.
std::string table_to_json(const ComplexityTable& table, const TableMeta& meta);

// Whitespace-aligned listing for terminals.
std::string table_to_plain(const ComplexityTable& table);

ComplexityTable table_from_csv(const std::string& text, int k);
std::pair<ComplexityTable, TableMeta> table_from_json(const std::string& text);

std::string periodicity_report_to_json(const PeriodicityReport& rep, int m,
                                       int k);
std::string periodicity_report_to_plain(const PeriodicityReport& rep, int m,
                                        int k);
PeriodicityReport periodicity_report_from_json(const std::string& text);

}  // namespace gtm
