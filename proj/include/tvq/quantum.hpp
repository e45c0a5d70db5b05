#pragma once

// Quantum integers, theta and edge weights, and the bracketed 6j sum at a root
// of unity. Only squared theta weights and squared edge weights are ever
// formed, so every value stays inside the cyclotomic field.

#include <array>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "tvq/cyclotomic.hpp"

namespace tvq {

/// Six edge colors of a tetrahedron, (i,j,k) on one face and
/// (i,l), (j,m), (k,n) on opposite edges. Faces: (i,j,k), (i,m,n), (j,l,n), (k,l,m).
struct TetColors {
  std::array<int, 6> c{};

  int i() const { return c[0]; }
  int j() const { return c[1]; }
  int k() const { return c[2]; }
  int l() const { return c[3]; }
  int m() const { return c[4]; }
  int n() const { return c[5]; }

  /// The four face triples in the order listed above.
  std::array<std::array<int, 3>, 4> faces() const {
    return {{{c[0], c[1], c[2]}, {c[0], c[4], c[5]}, {c[1], c[3], c[5]}, {c[2], c[3], c[4]}}};
  }

  friend bool operator==(const TetColors&, const TetColors&) = default;
};

/// The 24 images of t under the symmetry group of the tetrahedron.
std::array<TetColors, 24> tetrahedral_images(const TetColors& t);

/// i+j+k even, at most 2r-4, and |i-j| <= k <= i+j.
bool admissible(int r, int i, int j, int k);

/// All four faces of t admissible.
bool admissible(int r, const TetColors& t);

/// Sum of the six colors mod 4. A tetrahedron contributes sqrt(-1)^{-S}.
int tet_sign_exponent(const TetColors& t);

/// Precomputed quantum data for one evaluation point u in Q(zeta_{4r}).
///
/// Construction fills quantum integers, factorials, squared edge weights and
/// squared theta weights for every admissible triple. bracket6j results are
/// memoized lazily under a shared mutex; concurrent callers are safe and see
/// identical values.
class QuantumTables {
 public:
  /// u must satisfy u^2 of multiplicative order r (u = q or u = -q).
  QuantumTables(const CycloField& field, FieldElement u);

  QuantumTables(const QuantumTables&) = delete;
  QuantumTables& operator=(const QuantumTables&) = delete;

  const CycloField& field() const { return *field_; }
  int r() const { return field_->r(); }
  const FieldElement& u() const { return u_; }

  /// [n]_u = (u^n - u^{-n}) / (u - u^{-1}); [0]_u = 0.
  FieldElement q_int(int n) const;
  /// [n]_u! = [n][n-1]...[1], [0]! = 1. Zero for n >= r.
  const FieldElement& q_fact(int n) const;

  /// Squared theta weight of an admissible triple:
  /// [(i+j-k)/2]! [(i+k-j)/2]! [(j+k-i)/2]! / [(i+j+k)/2 + 1]!.
  const FieldElement& delta_sq(int i, int j, int k) const;

  /// Squared edge weight (-1)^i [i+1]_u.
  const FieldElement& weight_sq(int i) const;

  /// The alternating sum over z of the 6j bracket. Numerator terms containing
  /// [m] with r | m are dropped before any division. Throws
  /// DenominatorVanished if a denominator vanishes against a live numerator.
  const FieldElement& bracket6j(const TetColors& t) const;

  /// sqrt(-1)^{-s} for s in 0..3.
  const FieldElement& i_power_neg(int s) const { return i_neg_[s & 3]; }

  /// omega^2 = 2r / m(u) and omega_0^2 = r / m(u), m(u) = -(u - u^{-1})^2.
  const FieldElement& omega_sq() const { return omega_sq_; }
  const FieldElement& omega0_sq() const { return omega0_sq_; }

  /// m(u) = -(u - u^{-1})^2, the algebraic |u - u^{-1}|^2.
  const FieldElement& modulus_sq() const { return m_; }

 private:
  FieldElement compute_bracket(const TetColors& t) const;
  std::size_t triple_index(int i, int j, int k) const;

  const CycloField* field_;
  FieldElement u_;
  FieldElement u_inv_;
  FieldElement diff_inv_;  // 1 / (u - u^{-1})
  std::vector<FieldElement> fact_;
  std::vector<FieldElement> weight_sq_;
  std::vector<FieldElement> delta_sq_;  // dense over (r-1)^3; unset for non-admissible
  std::array<FieldElement, 4> i_neg_;
  FieldElement m_;
  FieldElement omega_sq_;
  FieldElement omega0_sq_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, FieldElement> bracket_memo_;
};

/// Closed-form identities satisfied by the edge weights at a given u.
struct WeightIdentityReport {
  /// sum_{t} weight_sq(2t)^2 == -r / (u - u^{-1})^2.
  bool even_fourth_powers = false;
  /// For every even j: weight_sq(j)^{-1} sum_{k,l even, (j,k,l) adm} w_k^2 w_l^2
  /// equals the j = 0 value (which is omega_0^2).
  bool even_loop = false;
  /// For every j: weight_sq(j)^{-1} sum_{(j,k,l) adm} w_k^2 w_l^2 == omega^2.
  bool full_loop = false;

  bool all() const { return even_fourth_powers && even_loop && full_loop; }
};

WeightIdentityReport check_weight_identities(const QuantumTables& tables);

}  // namespace tvq
