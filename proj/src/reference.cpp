#include "tvq/reference.hpp"

#include <algorithm>
#include <cmath>

#include "tvq/catalog.hpp"
#include "tvq/constructions.hpp"

namespace tvq {

namespace {

// Three summands as printed, then TV*. Polynomials keep their printed form,
// including the two r = 7 entries that are not real.
constexpr std::array<ReferenceRow, 80> kRows{{
    {1, "S3", 1, 0, 3, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {1, "S3", 1, 0, 4, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.250},
    {1, "S3", 1, 0, 5, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.138},
    {1, "S3", 1, 0, 6, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.083},
    {1, "S3", 1, 0, 7, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.054},
    {2, "RP3", 2, 1, 3, {{{"1", 1.000}, {"-1", -1.000}, {"0", 0.000}}}, 0.000},
    {2, "RP3", 2, 1, 4, {{{"2", 2.000}, {"q^3-q", -1.414}, {"0", 0.000}}}, 0.146},
    {2, "RP3", 2, 1, 5, {{{"-q^3+q^2+2", 2.618}, {"q^3-q^2-2", -2.618}, {"0", 0.000}}}, 0.000},
    {2, "RP3", 2, 1, 6, {{{"4", 4.000}, {"2q^3-4q", -3.464}, {"0", 0.000}}}, 0.045},
    {2, "RP3", 2, 1, 7, {{{"-2q^5+q^4-q^3+2q^2+3", 5.049}, {"2q^5-q^4+q^3-2q^2-3", -5.049}, {"0", 0.000}}}, 0.000},
    {3, "L(3,1)", 3, 1, 3, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {3, "L(3,1)", 3, 1, 4, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.250},
    {3, "L(3,1)", 3, 1, 5, {{{"-q^3+q^2+2", 2.618}, {"0", 0.000}, {"0", 0.000}}}, 0.362},
    {3, "L(3,1)", 3, 1, 6, {{{"3", 3.000}, {"0", 0.000}, {"0", 0.000}}}, 0.250},
    {3, "L(3,1)", 3, 1, 7, {{{"-q^5+2q^2+2", 3.247}, {"0", 0.000}, {"0", 0.000}}}, 0.175},
    {4, "L(4,1)", 4, 1, 3, {{{"1", 1.000}, {"0", 0.000}, {"1", 1.000}}}, 1.000},
    {4, "L(4,1)", 4, 1, 4, {{{"2", 2.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {4, "L(4,1)", 4, 1, 5, {{{"1", 1.000}, {"0", 0.000}, {"1", 1.000}}}, 0.276},
    {4, "L(4,1)", 4, 1, 6, {{{"4", 4.000}, {"0", 0.000}, {"0", 0.000}}}, 0.333},
    {4, "L(4,1)", 4, 1, 7, {{{"-q^5+2q^2+2", 3.247}, {"0", 0.000}, {"-q^5+2q^2+2", 3.247}}}, 0.349},
    {5, "L(5,1)", 5, 1, 3, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {5, "L(5,1)", 5, 1, 4, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.250},
    {5, "L(5,1)", 5, 1, 5, {{{"-q^3+q^2+3", 3.618}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {5, "L(5,1)", 5, 1, 6, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.083},
    {5, "L(5,1)", 5, 1, 7, {{{"-2q^5+q^4-q^3+2q^2+3", 5.049}, {"0", 0.000}, {"0", 0.000}}}, 0.272},
    {6, "L(5,2)", 5, 2, 3, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {6, "L(5,2)", 5, 2, 4, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.250},
    {6, "L(5,2)", 5, 2, 5, {{{"0", 0.000}, {"0", 0.000}, {"0", 0.000}}}, 0.000},
    {6, "L(5,2)", 5, 2, 6, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.083},
    {6, "L(5,2)", 5, 2, 7, {{{"-2q^5+q^4-q^3+2q^2+3", 5.049}, {"0", 0.000}, {"0", 0.000}}}, 0.272},
    {7, "L(6,1)", 6, 1, 3, {{{"1", 1.000}, {"-1", -1.000}, {"0", 0.000}}}, 0.000},
    {7, "L(6,1)", 6, 1, 4, {{{"2", 2.000}, {"-q^3+q", 1.414}, {"0", 0.000}}}, 0.853},
    {7, "L(6,1)", 6, 1, 5, {{{"1", 1.000}, {"-1", -1.000}, {"0", 0.000}}}, 0.000},
    {7, "L(6,1)", 6, 1, 6, {{{"6", 6.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {7, "L(6,1)", 6, 1, 7, {{{"1", 1.000}, {"-1", -1.000}, {"0", 0.000}}}, 0.000},
    {8, "L(7,2)", 7, 2, 3, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {8, "L(7,2)", 7, 2, 4, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.250},
    {8, "L(7,2)", 7, 2, 5, {{{"-q^3+q^2+2", 2.618}, {"0", 0.000}, {"0", 0.000}}}, 0.362},
    {8, "L(7,2)", 7, 2, 6, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.083},
    {8, "L(7,2)", 7, 2, 7, {{{"0", 0.000}, {"0", 0.000}, {"0", 0.000}}}, 0.000},
    {9, "L(8,3)", 8, 3, 3, {{{"1", 1.000}, {"0", 0.000}, {"1", 1.000}}}, 1.000},
    {9, "L(8,3)", 8, 3, 4, {{{"2", 2.000}, {"0", 0.000}, {"2", 2.000}}}, 1.000},
    {9, "L(8,3)", 8, 3, 5, {{{"-q^3+q^2+2", 2.618}, {"0", 0.000}, {"-q^3+q^2+2", 2.618}}}, 0.724},
    {9, "L(8,3)", 8, 3, 6, {{{"4", 4.000}, {"0", 0.000}, {"0", 0.000}}}, 0.333},
    {9, "L(8,3)", 8, 3, 7, {{{"1", 1.000}, {"0", 0.000}, {"1", 1.000}}}, 0.108},
    {10, "L(9,2)", 9, 2, 3, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {10, "L(9,2)", 9, 2, 4, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.250},
    {10, "L(9,2)", 9, 2, 5, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.138},
    {10, "L(9,2)", 9, 2, 6, {{{"3", 3.000}, {"0", 0.000}, {"0", 0.000}}}, 0.250},
    {10, "L(9,2)", 9, 2, 7, {{{"-2q^5+q^4-q^3+2q^2+3", 5.049}, {"0", 0.000}, {"0", 0.000}}}, 0.272},
    {11, "L(10,3)", 10, 3, 3, {{{"1", 1.000}, {"-1", -1.000}, {"0", 0.000}}}, 0.000},
    {11, "L(10,3)", 10, 3, 4, {{{"2", 2.000}, {"-q^3+q", 1.414}, {"0", 0.000}}}, 0.853},
    {11, "L(10,3)", 10, 3, 5, {{{"0", 0.000}, {"0", 0.000}, {"0", 0.000}}}, 0.000},
    {11, "L(10,3)", 10, 3, 6, {{{"4", 4.000}, {"-2q^3+4q", 3.464}, {"0", 0.000}}}, 0.622},
    {11, "L(10,3)", 10, 3, 7, {{{"-q^5+q^2+2", 3.247}, {"q^5-q^2-2", -3.247}, {"0", 0.000}}}, 0.000},
    {12, "L(11,4)", 11, 4, 3, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {12, "L(11,4)", 11, 4, 4, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.250},
    {12, "L(11,4)", 11, 4, 5, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.138},
    {12, "L(11,4)", 11, 4, 6, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.083},
    {12, "L(11,4)", 11, 4, 7, {{{"-q^5+q^2+2", 3.247}, {"0", 0.000}, {"0", 0.000}}}, 0.175},
    {13, "L(12,5)", 12, 5, 3, {{{"1", 1.000}, {"0", 0.000}, {"1", 1.000}}}, 1.000},
    {13, "L(12,5)", 12, 5, 4, {{{"2", 2.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {13, "L(12,5)", 12, 5, 5, {{{"-q^3+q^2+2", 2.618}, {"0", 0.000}, {"-q^3+q^2+2", 2.618}}}, 0.724},
    {13, "L(12,5)", 12, 5, 6, {{{"6", 6.000}, {"0", 0.000}, {"6", 6.000}}}, 1.000},
    {13, "L(12,5)", 12, 5, 7, {{{"-2q^5+q^4-q^3+2q^2+3", 5.049}, {"0", 0.000}, {"-2q^5+q^4-q^3+2q^2+3", 5.049}}}, 0.543},
    {14, "L(13,5)", 13, 5, 3, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {14, "L(13,5)", 13, 5, 4, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.250},
    {14, "L(13,5)", 13, 5, 5, {{{"-q^3+q^2+2", 2.618}, {"0", 0.000}, {"0", 0.000}}}, 0.362},
    {14, "L(13,5)", 13, 5, 6, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.083},
    {14, "L(13,5)", 13, 5, 7, {{{"1", 1.000}, {"0", 0.000}, {"0", 0.000}}}, 0.054},
    {15, "S3/Q8", 0, 0, 3, {{{"1", 1.000}, {"0", 0.000}, {"3", 3.000}}}, 2.000},
    {15, "S3/Q8", 0, 0, 4, {{{"4", 4.000}, {"0", 0.000}, {"6", 6.000}}}, 2.500},
    {15, "S3/Q8", 0, 0, 5, {{{"-q^3+q^2+4", 4.618}, {"0", 0.000}, {"-q^3+3q^2+12", 13.854}}}, 2.553},
    {15, "S3/Q8", 0, 0, 6, {{{"10", 10.000}, {"0", 0.000}, {"18", 18.000}}}, 2.333},
    {15, "S3/Q8", 0, 0, 7, {{{"-2q^5+2q^2+7", 9.494}, {"0", 0.000}, {"-6q^5+6q^2+21", 28.482}}}, 2.043},
    {16, "S3/Q12", 0, 0, 3, {{{"1", 1.000}, {"0", 0.000}, {"1", 1.000}}}, 1.000},
    {16, "S3/Q12", 0, 0, 4, {{{"2", 2.000}, {"0", 0.000}, {"0", 0.000}}}, 0.500},
    {16, "S3/Q12", 0, 0, 5, {{{"-q^3+q^2+4", 4.618}, {"0", 0.000}, {"-q^3+q^2+4", 4.618}}}, 1.276},
    {16, "S3/Q12", 0, 0, 6, {{{"10", 10.000}, {"0", 0.000}, {"6", 6.000}}}, 1.333},
    {16, "S3/Q12", 0, 0, 7, {{{"-2q^5+q^4-q^3+2q^2+5", 7.049}, {"0", 0.000}, {"-2q^5+q^4-q^3+2q^2+5", 7.049}}}, 0.758},
}};

}  // namespace

std::span<const ReferenceRow> reference_rows() { return kRows; }

const ReferenceRow* find_reference(int p, int q, int r) {
  for (const auto& row : kRows) {
    if (row.r != r || row.p != p || p == 0) continue;
    if (p == 1 || canonical_lens_q(p, q) == canonical_lens_q(row.p, row.q)) return &row;
  }
  return nullptr;
}

const ReferenceRow* find_reference(std::string_view manifold, int r) {
  const std::string key = normalize_manifold_name(manifold);
  for (const auto& row : kRows) {
    if (row.r == r && normalize_manifold_name(row.manifold) == key) return &row;
  }
  return nullptr;
}

const char* to_string(MatchStatus s) {
  switch (s) {
    case MatchStatus::Match:
      return "match";
    case MatchStatus::PrintedPolynomialInconsistent:
      return "printed polynomial inconsistent";
    case MatchStatus::Mismatch:
      return "mismatch";
  }
  return "?";
}

bool RowComparison::passed() const {
  return tvstar_match && std::none_of(summands.begin(), summands.end(), [](const SummandComparison& s) {
           return s.status == MatchStatus::Mismatch;
         });
}

bool RowComparison::flagged() const {
  return std::any_of(summands.begin(), summands.end(), [](const SummandComparison& s) {
    return s.status == MatchStatus::PrintedPolynomialInconsistent;
  });
}

RowComparison compare_with_reference(const InvariantReport& report, const ReferenceRow& row) {
  RowComparison out;
  out.row = &row;
  const std::array<const Invariant*, 3> computed{&report.tv0, &report.tv1, &report.tv2};
  const std::array<const char*, 3> names{"TV_0", "TV_1", "TV_2"};
  for (int k = 0; k < 3; ++k) {
    SummandComparison& s = out.summands[k];
    const Invariant& inv = *computed[k];
    const QPolynomial expected = QPolynomial::parse(row.tv[k].poly, row.r);
    const auto ref_value = expected.evaluate();
    s.name = names[k];
    s.expected_poly = std::string(row.tv[k].poly);
    s.computed_poly = inv.poly ? inv.poly->to_string() : inv.exact.to_string();
    s.expected_value = row.tv[k].value;
    s.computed_value = inv.value.real();
    s.poly_match = inv.poly && *inv.poly == expected;
    s.value_match = std::abs(inv.value.real() - row.tv[k].value) <= kDecimalTolerance && std::abs(inv.value.imag()) < 1e-9;
    s.reference_real = std::abs(ref_value.imag()) < 1e-9;
    if (s.poly_match && s.value_match) {
      s.status = MatchStatus::Match;
    } else if (!s.poly_match && s.value_match && !s.reference_real) {
      s.status = MatchStatus::PrintedPolynomialInconsistent;
    } else {
      s.status = MatchStatus::Mismatch;
    }
  }
  out.tvstar_computed = report.tvstar.value.real();
  out.tvstar_match = std::abs(out.tvstar_computed - row.tvstar) <= kDecimalTolerance;
  return out;
}

}  // namespace tvq
