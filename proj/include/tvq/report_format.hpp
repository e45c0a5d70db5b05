#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tvq/reference.hpp"
#include "tvq/statesum.hpp"

namespace tvq {

/// Fixed-point with `digits` decimals, rounding half away from zero. Values that
/// round to zero print without a sign.
std::string format_decimal(double v, int digits);

/// Canonical polynomial, or "n/a" outside Q(q).
std::string format_poly(const Invariant& inv);

/// {manifold, r, invariants: {name: {poly: [[num, den]...], value_re, value_im}},
///  checks: {...}, colorings: {adm0, adm1, admE}}. Coefficients are strings,
/// lowest power of q first; poly is null outside Q(q).
nlohmann::json report_json(const std::string& manifold, const InvariantReport& report,
                           const RowComparison* reference = nullptr);

/// One line per r: r, TV_0, TV_1, TV_2 (polynomial and decimal) and TV*.
struct TableRow {
  int r = 0;
  std::vector<std::string> cells;
};

std::vector<std::string> table_header();
TableRow table_row(const InvariantReport& report, int digits, const RowComparison* reference);
/// Column-aligned block with a title line. Same input gives the same bytes.
std::string render_table(const std::string& title, const std::vector<TableRow>& rows);

std::string csv_header();
std::string csv_row(const std::string& manifold, const InvariantReport& report, int digits,
                    const RowComparison* reference);

}  // namespace tvq
