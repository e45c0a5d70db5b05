#pragma once

// Published values of TV_0, TV_1, TV_2 and TV* for r = 3..7, and comparison of
// computed reports against them.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tvq/statesum.hpp"

namespace tvq {

struct ReferenceSummand {
  std::string_view poly;  // as printed
  double value;           // printed 3-digit decimal
};

struct ReferenceRow {
  int table;
  std::string_view manifold;
  /// Lens space parameters; p = 1 for S^3, p = 0 for the quaternionic quotients.
  int p;
  int q;
  int r;
  std::array<ReferenceSummand, 3> tv;  // TV_0, TV_1, TV_2
  double tvstar;
};

std::span<const ReferenceRow> reference_rows();

/// Row for L(p,q) (p = 1: S^3) at r, matched up to lens-space homeomorphism.
const ReferenceRow* find_reference(int p, int q, int r);
/// Row by manifold name, compared after normalize_manifold_name.
const ReferenceRow* find_reference(std::string_view manifold, int r);

enum class MatchStatus {
  Match,
  /// The printed polynomial is not real at q = e^{i pi/r}, so it cannot be the
  /// value of a real invariant, but the printed decimal matches.
  PrintedPolynomialInconsistent,
  Mismatch,
};

const char* to_string(MatchStatus s);

struct SummandComparison {
  std::string name;
  MatchStatus status = MatchStatus::Mismatch;
  bool poly_match = false;
  bool value_match = false;
  bool reference_real = false;
  std::string expected_poly;
  std::string computed_poly;
  double expected_value = 0.0;
  double computed_value = 0.0;
};

struct RowComparison {
  const ReferenceRow* row = nullptr;
  std::array<SummandComparison, 3> summands;
  bool tvstar_match = false;
  double tvstar_computed = 0.0;

  /// No Mismatch anywhere and TV* within tolerance.
  bool passed() const;
  /// Some summand carries PrintedPolynomialInconsistent.
  bool flagged() const;
};

/// Decimal tolerance for three printed digits.
inline constexpr double kDecimalTolerance = 1e-3 + 1e-9;

RowComparison compare_with_reference(const InvariantReport& report, const ReferenceRow& row);

}  // namespace tvq
