#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace movsig {

/// Rectangular numeric table with the provenance needed to regenerate it:
/// the fully resolved configuration (canonical one-line JSON), the seed and
/// the tool version travel with the data in every serialization.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string config_json;  // canonical JSON, one line
  std::uint64_t seed = 0;
  std::string tool;
  std::string timestamp;  // RFC 3339; empty = omitted (reproducible output)

  /// '#'-prefixed metadata lines, then a header row, then data rows.
  /// Doubles are printed with 17 significant digits so they round-trip.
  void write_csv(std::ostream& out) const;

  void write_json(std::ostream& out) const;
};

/// Round-trip formatting used for all CSV numbers: %.16e.
std::string format_double(double value);

}  // namespace movsig
