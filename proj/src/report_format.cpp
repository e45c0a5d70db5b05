#include "tvq/report_format.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace tvq {

namespace {

std::string reference_cell(const RowComparison* ref) {
  if (!ref) return "";
  if (!ref->passed()) return "MISMATCH";
  return ref->flagged() ? "flag" : "ok";
}

nlohmann::json coefficient_pairs(const Invariant& inv) {
  if (!inv.poly) return nullptr;
  auto arr = nlohmann::json::array();
  for (const auto& c : inv.poly->coeffs) arr.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return arr;
}

}  // namespace

std::string format_decimal(double v, int digits) {
  const double scale = std::pow(10.0, digits);
  double scaled = std::round(v * scale);  // half away from zero
  if (scaled == 0.0) scaled = 0.0;        // drops the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, scaled / scale);
  std::string s = buf;
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_poly(const Invariant& inv) { return inv.poly ? inv.poly->to_string() : "n/a"; }

nlohmann::json report_json(const std::string& manifold, const InvariantReport& report, const RowComparison* reference) {
  nlohmann::json j;
  j["manifold"] = manifold;
  j["r"] = report.r;
  j["evaluation"] = report.mirror ? "-q" : "q";
  auto& invs = j["invariants"];
  invs = nlohmann::json::object();
  for (const auto& [name, inv] : report.named()) {
    invs[name] = {{"poly", coefficient_pairs(*inv)},
                  {"text", format_poly(*inv)},
                  {"value_re", inv->value.real()},
                  {"value_im", inv->value.imag()}};
  }
  auto& checks = j["checks"];
  checks["sum_of_summands"] = report.checks.sum_of_summands;
  checks["star_split"] = report.checks.star_split;
  checks["rational"] = report.checks.rational;
  checks["real"] = report.checks.real;
  if (reference) {
    auto& ref = checks["reference"];
    ref["passed"] = reference->passed();
    ref["tvstar"] = reference->tvstar_match;
    for (const auto& s : reference->summands) {
      ref[s.name] = {{"status", to_string(s.status)}, {"printed", s.expected_poly}, {"computed", s.computed_poly}};
    }
  }
  j["colorings"] = {{"adm0", report.sums.count0}, {"adm1", report.sums.count1}, {"admE", report.sums.countE}};
  return j;
}

std::vector<std::string> table_header() { return {"r", "TV_0", "", "TV_1", "", "TV_2", "", "TV*", "ref"}; }

TableRow table_row(const InvariantReport& report, int digits, const RowComparison* reference) {
  TableRow row;
  row.r = report.r;
  row.cells.push_back(std::to_string(report.r));
  for (const Invariant* inv : {&report.tv0, &report.tv1, &report.tv2}) {
    row.cells.push_back(format_poly(*inv));
    row.cells.push_back("=" + format_decimal(inv->value.real(), digits));
  }
  row.cells.push_back(format_decimal(report.tvstar.value.real(), digits));
  row.cells.push_back(reference_cell(reference));
  return row;
}

std::string render_table(const std::string& title, const std::vector<TableRow>& rows) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back(table_header());
  for (const auto& r : rows) grid.push_back(r.cells);
  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size() && c < width.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  out << title << "\n";
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      std::string cell = line[c];
      // Polynomial cells sit directly against their decimal.
      const bool tight = c + 1 < line.size() && (c == 1 || c == 3 || c == 5);
      if (c + 1 < line.size()) cell.resize(width[c], ' ');
      text += cell;
      if (c + 1 < line.size()) text += tight ? " " : "   ";
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  }
  return out.str();
}

std::string csv_header() {
  return "manifold,r,TV_0,TV_0_value,TV_1,TV_1_value,TV_2,TV_2_value,TV*,TV*_value,adm0,adm1,admE,reference";
}

std::string csv_row(const std::string& manifold, const InvariantReport& report, int digits,
                    const RowComparison* reference) {
  std::ostringstream out;
  out << '"' << manifold << "\"," << report.r;
  for (const Invariant* inv : {&report.tv0, &report.tv1, &report.tv2, &report.tvstar}) {
    out << "," << format_poly(*inv) << "," << format_decimal(inv->value.real(), digits);
  }
  out << "," << report.sums.count0 << "," << report.sums.count1 << "," << report.sums.countE << ","
      << reference_cell(reference);
  return out.str();
}

}  // namespace tvq
