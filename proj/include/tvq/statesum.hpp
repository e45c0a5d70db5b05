#pragma once

// Admissible-coloring enumeration, class sums and the normalized summand
// invariants of a closed triangulated 3-manifold.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvq/cyclotomic.hpp"
#include "tvq/quantum.hpp"
#include "tvq/triangulation.hpp"

namespace tvq {

/// Evaluation point: u = zeta^2 (standard) or u = -zeta^2 (mirror).
struct QSpec {
  int r = 0;
  bool mirror = false;
  FieldElement u;
  /// Whether u has multiplicative order 2r.
  bool primitive = false;

  static QSpec standard(int r);
  static QSpec mirrored(int r);
};

/// Shared, lazily built tables for (r, mirror). Thread-safe.
const QuantumTables& quantum_tables(const QSpec& spec);

enum class ColoringClass { Adm0, Adm1, AdmE };

const char* to_string(ColoringClass c);

/// Backtracking enumeration of admissible colorings. Edges are assigned in
/// order of descending face incidence (ties by index); a face is checked as
/// soon as its last edge is colored.
class ColoringEnumerator {
 public:
  ColoringEnumerator(const Triangulation& tri, int r);

  const std::vector<int>& order() const { return order_; }
  int colors() const { return r_ - 1; }

  /// Calls visit(std::span<const int>) once per admissible coloring, indexed by edge.
  template <class Visit>
  void for_each(Visit&& visit) const {
    std::vector<int> coloring(order_.size(), 0);
    descend(0, coloring, visit);
  }

  /// Same, restricted to colorings where the first edge in order() has color c.
  template <class Visit>
  void for_each_with_first(int c, Visit&& visit) const {
    std::vector<int> coloring(order_.size(), 0);
    coloring[order_[0]] = c;
    if (faces_ok(0, coloring)) descend(1, coloring, visit);
  }

 private:
  bool faces_ok(std::size_t pos, const std::vector<int>& coloring) const {
    for (int f : checks_[pos]) {
      const auto& e = face_edges_[f];
      if (!admissible(r_, coloring[e[0]], coloring[e[1]], coloring[e[2]])) return false;
    }
    return true;
  }

  template <class Visit>
  void descend(std::size_t pos, std::vector<int>& coloring, Visit& visit) const {
    if (pos == order_.size()) {
      visit(std::span<const int>(coloring));
      return;
    }
    const int e = order_[pos];
    for (int c = 0; c < r_ - 1; ++c) {
      coloring[e] = c;
      if (faces_ok(pos, coloring)) descend(pos + 1, coloring, visit);
    }
  }

  int r_;
  std::vector<int> order_;
  std::vector<std::vector<int>> checks_;  // faces completed at each position
  std::vector<std::array<int, 3>> face_edges_;
};

/// Visits every admissible coloring of tri at level r.
template <class Visit>
void enumerate_colorings(const Triangulation& tri, int r, Visit&& visit) {
  ColoringEnumerator(tri, r).for_each(visit);
}

/// Adm0 if every color is even, AdmE if v - t + f is even, Adm1 otherwise.
ColoringClass classify(const Triangulation& tri, std::span<const int> coloring);

/// prod w^2(edges) * prod Delta^2(faces) * prod i^{-S} [6j](tetrahedra).
FieldElement coloring_weight(const Triangulation& tri, std::span<const int> coloring, const QuantumTables& tables);

struct ClassSums {
  FieldElement sum0;  // Adm0
  FieldElement sum1;  // Adm1
  FieldElement sumE;  // Adm0 and AdmE together
  std::uint64_t count0 = 0;
  std::uint64_t count1 = 0;
  std::uint64_t countE = 0;  // AdmE only, excluding Adm0

  std::uint64_t total() const { return count0 + count1 + countE; }
  friend bool operator==(const ClassSums&, const ClassSums&) = default;
};

/// Class sums with the enumeration split on the first edge's color across
/// `workers` OpenMP threads; partial sums are combined in color order.
ClassSums class_sums(const Triangulation& tri, const QuantumTables& tables, int workers);

/// Single-threaded reference for class_sums.
ClassSums class_sums_serial(const Triangulation& tri, const QuantumTables& tables);

struct Invariant {
  FieldElement exact;
  /// Canonical polynomial in q; empty when exact is outside Q(q).
  std::optional<QPolynomial> poly;
  std::complex<double> value;

  friend bool operator==(const Invariant& a, const Invariant& b) { return a.exact == b.exact; }
};

struct ReportChecks {
  bool sum_of_summands = false;  // TV = TV_0 + TV_1 + TV_2
  bool star_split = false;       // TV* = TV*_e + TV*_1
  bool rational = false;         // class sums lie in Q(q)
  bool real = false;             // every invariant fixed by complex conjugation

  friend bool operator==(const ReportChecks&, const ReportChecks&) = default;
};

struct InvariantReport {
  int r = 0;
  bool mirror = false;
  int vertices = 0;
  ClassSums sums;
  Invariant tv0, tv1, tv2, tv, tvstar, tvstar0, tvstar1, tvstarE;
  ReportChecks checks;
  double elapsed_ms = 0.0;
  int workers = 1;

  /// The named quantities in a fixed order: TV_0, TV_1, TV_2, TV, TV*, TV*_0, TV*_1, TV*_e.
  std::vector<std::pair<std::string, const Invariant*>> named() const;
  /// Same r, evaluation point and exact invariants. Class sums may differ.
  bool same_invariants(const InvariantReport& o) const;
  /// same_invariants plus identical class sums, counts and checks (timing and
  /// worker count aside).
  bool identical(const InvariantReport& o) const;
};

InvariantReport normalize(const ClassSums& sums, const Triangulation& tri, const QuantumTables& tables);

/// Enumerates, sums and normalizes at the given evaluation point.
InvariantReport compute_report(const Triangulation& tri, const QSpec& spec, int workers);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // both sides, when the check fails
};

struct IdentityReport {
  int r = 0;
  InvariantReport at_q;
  InvariantReport at_minus_q;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
};

/// Computes reports at q and -q and checks, exactly:
/// TV = TV_0+TV_1+TV_2 at both points, TV_N(q) = (-1)^N TV_N(-q),
/// TV_0+TV_2 = (TV(q)+TV(-q))/2 and TV_1 = (TV(q)-TV(-q))/2.
IdentityReport verify_identities(const Triangulation& tri, int r, int workers);

}  // namespace tvq
