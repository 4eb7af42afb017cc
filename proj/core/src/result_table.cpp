#include "movsig/result_table.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace movsig {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.16e", value);
  return buffer;
}

void ResultTable::write_csv(std::ostream& out) const {
  out << "# config=" << (config_json.empty() ? "{}" : config_json) << "\n";
  out << "# seed=" << seed << "\n";
  out << "# tool=" << tool << "\n";
  if (!timestamp.empty()) out << "# generated=" << timestamp << "\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) out << ",";
    out << columns[c];
  }
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != columns.size())
      throw std::logic_error("result table row width does not match header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ",";
      out << format_double(row[c]);
    }
    out << "\n";
  }
}

void ResultTable::write_json(std::ostream& out) const {
  nlohmann::json doc;
  doc["tool"] = tool;
  doc["seed"] = seed;
  if (!timestamp.empty()) doc["generated"] = timestamp;
  doc["config"] = config_json.empty() ? nlohmann::json::object()
                                      : nlohmann::json::parse(config_json);
  doc["columns"] = columns;
  doc["rows"] = rows;
  out << doc.dump(2) << "\n";
}

}  // namespace movsig
