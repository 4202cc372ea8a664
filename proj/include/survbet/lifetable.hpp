#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "survbet/models.hpp"

namespace survbet {

/// Discrete life table: one-year death probabilities qx by integer age.
/// Ages are strictly increasing; qx in [0,1] (qx = 1 closes a table at its
/// terminal age and is legal here, though fits skip such rows).
struct LifeTable {
  struct Row {
    int age;
    double qx;
  };

  std::vector<Row> rows;
  /// Free-form provenance ("source", "year", generating parameters, ...),
  /// emitted in order.
  std::vector<std::pair<std::string, std::string>> metadata;
};

/// Throws ParseError / DomainError when the table violates its invariants.
void validate_lifetable(const LifeTable& table);

/// Parses the fixed CSV dialect:
///   - optional `# key: value` metadata lines before the header,
///   - required `age,qx` header,
///   - comma separator, `.` decimals, `\n` or `\r\n` endings.
/// Duplicate or decreasing ages, out-of-range qx and malformed rows raise
/// ParseError with 1-based line and column.
LifeTable parse_lifetable(std::string_view text);

/// Canonical emission: metadata, header, rows sorted by age, qx with 10
/// significant digits, `\n` endings. parse(emit(t)) reproduces t at the
/// canonical precision, and emit(parse(s)) is a fixed point of emit.
std::string emit_lifetable(const LifeTable& table);

/// qx = 1 - Phi(x+1)/Phi(x) for x = age_from..age_to, computed in
/// log-space. A law with finite support closes the table with qx = 1 at the
/// last age that is still alive. Metadata records the generating law.
/// Throws DomainError if Phi(age_from) = 0 (empty support).
LifeTable synthetic_lifetable(const DistributionSpec& spec, int age_from,
                              int age_to);

}  // namespace survbet
