#include "gtm/table_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gtm {

namespace {

Provenance provenance_from_name(const std::string& name) {
  if (name == "oracle") return Provenance::oracle;
  if (name == "closed_form") return Provenance::closed_form;
  throw std::invalid_argument("unknown provenance label: " + name);
}

}  // namespace

std::string table_to_csv(const ComplexityTable& table) {
  std::string out = "n,value,provenance\n";
  for (const auto& [n, row] : table.rows) {
    out += std::to_string(n);
    out.push_back(',');
    out += std::to_string(row.value);
    out.push_back(',');
    out += provenance_name(row.provenance);
    out.push_back('\n');
  }
  return out;
}

std::string table_to_json(const ComplexityTable& table, const TableMeta& meta) {
  nlohmann::json j;
  j["meta"] = {{"m", meta.m},
               {"k", meta.k},
               {"generator", meta.generator},
               {"oracle_checked", meta.oracle_checked}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, row] : table.rows) {
    rows.push_back({{"n", n},
                    {"value", row.value},
                    {"provenance", provenance_name(row.provenance)}});
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string table_to_plain(const ComplexityTable& table) {
  std::string out;
  for (const auto& [n, row] : table.rows) {
    out += std::to_string(n);
    out.push_back('\t');
    out += std::to_string(row.value);
    out.push_back('\t');
    out += provenance_name(row.provenance);
    out.push_back('\n');
  }
  return out;
}

ComplexityTable table_from_csv(const std::string& text, int k) {
  ComplexityTable table;
  table.k = k;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "n,value,provenance") {
    throw std::invalid_argument("missing CSV header: n,value,provenance");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw std::invalid_argument("malformed CSV row: " + line);
    }
    const std::int64_t n = std::stoll(line.substr(0, c1));
    ComplexityRow row;
    row.value = std::stoll(line.substr(c1 + 1, c2 - c1 - 1));
    row.provenance = provenance_from_name(line.substr(c2 + 1));
    table.rows[n] = row;
  }
  return table;
}

std::pair<ComplexityTable, TableMeta> table_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  TableMeta meta;
  meta.m = j.at("meta").at("m").get<int>();
  meta.k = j.at("meta").at("k").get<int>();
  meta.generator = j.at("meta").at("generator").get<std::string>();
  meta.oracle_checked = j.at("meta").at("oracle_checked").get<bool>();
  ComplexityTable table;
  table.k = meta.k;
  for (const auto& row : j.at("rows")) {
    table.rows[row.at("n").get<std::int64_t>()] = ComplexityRow{
        row.at("value").get<std::int64_t>(),
        provenance_from_name(row.at("provenance").get<std::string>())};
  }
  return {std::move(table), meta};
}

namespace {

nlohmann::json periodicity_report_to_json_obj(const PeriodicityReport& rep,
                                              int m, int k) {
  nlohmann::json j;
  j["m"] = m;
  j["k"] = k;
  j["period"] = rep.period;
  j["offset"] = rep.offset;
  j["window"] = {{"lo", rep.window_lo}, {"hi", rep.window_hi}};
  j["consistent"] = rep.consistent;
  if (rep.violated_at) {
    j["violated_at"] = *rep.violated_at;
  } else {
    j["violated_at"] = nullptr;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, row] : rep.values.rows) {
    rows.push_back({{"n", n},
                    {"value", row.value},
                    {"provenance", provenance_name(row.provenance)}});
  }
  j["values"] = std::move(rows);
  return j;
}

}  // namespace

std::string periodicity_report_to_json(const PeriodicityReport& rep, int m,
                                       int k) {
  return periodicity_report_to_json_obj(rep, m, k).dump(2) + "\n";
}

std::string periodicity_report_to_plain(const PeriodicityReport& rep, int m,
                                        int k) {
  std::string out;
  out += "m=" + std::to_string(m) + " k=" + std::to_string(k) + "\n";
  out += "candidate period: " + std::to_string(rep.period) + "\n";
  out += "compared n in [" + std::to_string(rep.offset) + ", " +
         std::to_string(rep.window_hi) + "]\n";
  out += std::string("consistent: ") + (rep.consistent ? "yes" : "no") + "\n";
  if (rep.violated_at) {
    out += "first violation at n=" + std::to_string(*rep.violated_at) + "\n";
  }
  return out;
}

PeriodicityReport periodicity_report_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  PeriodicityReport rep;
  rep.period = j.at("period").get<std::int64_t>();
  rep.offset = j.at("offset").get<std::int64_t>();
  rep.window_lo = j.at("window").at("lo").get<std::int64_t>();
  rep.window_hi = j.at("window").at("hi").get<std::int64_t>();
  rep.consistent = j.at("consistent").get<bool>();
  if (!j.at("violated_at").is_null()) {
    rep.violated_at = j.at("violated_at").get<std::int64_t>();
  }
  rep.values.k = j.at("k").get<int>();
  for (const auto& row : j.at("values")) {
    rep.values.rows[row.at("n").get<std::int64_t>()] = ComplexityRow{
        row.at("value").get<std::int64_t>(),
        provenance_from_name(row.at("provenance").get<std::string>())};
  }
  return rep;
}

}  // namespace gtm
