#include "tvq/quantum.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tvq/error.hpp"

namespace tvq {

namespace {

// Edge slots of TetColors as vertex pairs of the tetrahedron:
// i=01, j=02, k=12, l=23, m=13, n=03. Opposite pairs (i,l), (j,m), (k,n).
constexpr std::array<std::array<int, 2>, 6> kSlotVertices{{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {0, 3}}};

int slot_of(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int s = 0; s < 6; ++s) {
    if (kSlotVertices[s][0] == a && kSlotVertices[s][1] == b) return s;
  }
  return -1;
}

std::array<std::array<int, 6>, 24> make_symmetries() {
  std::array<std::array<int, 6>, 24> out{};
  std::array<int, 4> perm{0, 1, 2, 3};
  int idx = 0;
  do {
    for (int s = 0; s < 6; ++s) {
      out[idx][s] = slot_of(perm[kSlotVertices[s][0]], perm[kSlotVertices[s][1]]);
    }
    ++idx;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

const std::array<std::array<int, 6>, 24>& symmetries() {
  static const auto table = make_symmetries();
  return table;
}

std::uint64_t pack(const std::array<int, 6>& c) {
  std::uint64_t key = 0;
  for (int v : c) key = (key << 8) | static_cast<std::uint64_t>(v);
  return key;
}

}  // namespace

std::array<TetColors, 24> tetrahedral_images(const TetColors& t) {
  std::array<TetColors, 24> out{};
  const auto& sym = symmetries();
  for (int g = 0; g < 24; ++g) {
    for (int s = 0; s < 6; ++s) out[g].c[sym[g][s]] = t.c[s];
  }
  return out;
}

bool admissible(int r, int i, int j, int k) {
  const int sum = i + j + k;
  return sum % 2 == 0 && sum <= 2 * r - 4 && std::abs(i - j) <= k && k <= i + j;
}

bool admissible(int r, const TetColors& t) {
  for (const auto& f : t.faces()) {
    if (!admissible(r, f[0], f[1], f[2])) return false;
  }
  return true;
}

int tet_sign_exponent(const TetColors& t) {
  int s = 0;
  for (int v : t.c) s += v;
  return s % 4;
}

QuantumTables::QuantumTables(const CycloField& field, FieldElement u) : field_(&field), u_(std::move(u)) {
  const int r = field.r();
  u_inv_ = u_.inverse();
  const FieldElement diff = u_ - u_inv_;
  diff_inv_ = diff.inverse();

  // Factorials up to the largest argument a bracket numerator can reach.
  const int max_fact = 2 * r + 2;
  fact_.reserve(max_fact + 1);
  fact_.push_back(field.one());
  for (int n = 1; n <= max_fact; ++n) fact_.push_back(fact_.back() * q_int(n));

  weight_sq_.reserve(r - 1);
  for (int i = 0; i <= r - 2; ++i) {
    FieldElement w = q_int(i + 1);
    weight_sq_.push_back(i % 2 == 0 ? w : -w);
  }

  // Inverse factorials below r are nonzero; theta denominators never exceed r-1.
  std::vector<FieldElement> inv_fact;
  inv_fact.reserve(r);
  for (int n = 0; n < r; ++n) inv_fact.push_back(fact_[n].inverse());

  const int colors = r - 1;
  delta_sq_.assign(static_cast<std::size_t>(colors) * colors * colors, FieldElement{});
  for (int i = 0; i < colors; ++i) {
    for (int j = 0; j < colors; ++j) {
      for (int k = 0; k < colors; ++k) {
        if (!admissible(r, i, j, k)) continue;
        const int top = (i + j + k) / 2 + 1;
        if (top >= r || fact_[top].is_zero()) {
          throw DenominatorVanished("theta denominator vanished for (" + std::to_string(i) + "," + std::to_string(j) +
                                    "," + std::to_string(k) + ")");
        }
        delta_sq_[triple_index(i, j, k)] =
            fact_[(i + j - k) / 2] * fact_[(i + k - j) / 2] * fact_[(j + k - i) / 2] * inv_fact[top];
      }
    }
  }

  const FieldElement i_unit = field.i_unit();
  i_neg_[0] = field.one();
  i_neg_[1] = i_unit.pow(-1);
  i_neg_[2] = i_unit.pow(-2);
  i_neg_[3] = i_unit.pow(-3);

  m_ = -(diff * diff);
  const FieldElement m_inv = m_.inverse();
  omega_sq_ = m_inv.scaled(2 * r);
  omega0_sq_ = m_inv.scaled(r);
}

std::size_t QuantumTables::triple_index(int i, int j, int k) const {
  const std::size_t colors = static_cast<std::size_t>(r() - 1);
  return (static_cast<std::size_t>(i) * colors + static_cast<std::size_t>(j)) * colors + static_cast<std::size_t>(k);
}

FieldElement QuantumTables::q_int(int n) const {
  if (n == 0) return field_->zero();
  return (u_.pow(n) - u_inv_.pow(n)) * diff_inv_;
}

const FieldElement& QuantumTables::q_fact(int n) const {
  if (n < 0 || n >= static_cast<int>(fact_.size())) {
    throw InvalidArgument("quantum factorial argument out of range: " + std::to_string(n));
  }
  return fact_[n];
}

const FieldElement& QuantumTables::delta_sq(int i, int j, int k) const {
  const int colors = r() - 1;
  if (i < 0 || j < 0 || k < 0 || i >= colors || j >= colors || k >= colors || !admissible(r(), i, j, k)) {
    throw InvalidArgument("delta_sq of a non-admissible triple");
  }
  return delta_sq_[triple_index(i, j, k)];
}

const FieldElement& QuantumTables::weight_sq(int i) const {
  if (i < 0 || i > r() - 2) throw InvalidArgument("color out of range: " + std::to_string(i));
  return weight_sq_[i];
}

const FieldElement& QuantumTables::bracket6j(const TetColors& t) const {
  // Memo key: lexicographically smallest image under the tetrahedral group.
  std::array<int, 6> canon = t.c;
  for (const auto& img : tetrahedral_images(t)) canon = std::min(canon, img.c);
  const std::uint64_t key = pack(canon);
  {
    std::shared_lock lock(memo_mutex_);
    auto it = bracket_memo_.find(key);
    if (it != bracket_memo_.end()) return it->second;
  }
  TetColors rep;
  rep.c = canon;
  FieldElement value = compute_bracket(rep);
  std::unique_lock lock(memo_mutex_);
  auto [it, inserted] = bracket_memo_.try_emplace(key, std::move(value));
  return it->second;
}

FieldElement QuantumTables::compute_bracket(const TetColors& t) const {
  if (!admissible(r(), t)) throw InvalidArgument("bracket6j of a non-admissible tetrahedron");
  const std::array<int, 4> face_half{(t.i() + t.j() + t.k()) / 2, (t.i() + t.m() + t.n()) / 2,
                                     (t.j() + t.l() + t.n()) / 2, (t.k() + t.l() + t.m()) / 2};
  const std::array<int, 3> quad_half{(t.i() + t.j() + t.l() + t.m()) / 2, (t.i() + t.k() + t.l() + t.n()) / 2,
                                     (t.j() + t.k() + t.m() + t.n()) / 2};
  const int z_lo = *std::max_element(face_half.begin(), face_half.end());
  const int z_hi = *std::min_element(quad_half.begin(), quad_half.end());

  FieldElement sum = field_->zero();
  for (int z = z_lo; z <= z_hi; ++z) {
    const FieldElement& numer = fact_[z + 1];
    if (numer.is_zero()) continue;
    FieldElement denom = field_->one();
    for (int a : face_half) denom *= fact_[z - a];
    for (int b : quad_half) denom *= fact_[b - z];
    if (denom.is_zero()) {
      std::string colors;
      for (int v : t.c) colors += std::to_string(v) + " ";
      throw DenominatorVanished("bracket denominator vanished at z=" + std::to_string(z) + " for colors " + colors);
    }
    FieldElement term = numer * denom.inverse();
    if (z % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

WeightIdentityReport check_weight_identities(const QuantumTables& tables) {
  const CycloField& f = tables.field();
  const int r = tables.r();
  const FieldElement diff = tables.u() - tables.u().inverse();
  WeightIdentityReport out;

  FieldElement fourth = f.zero();
  for (int t = 0; 2 * t <= r - 2; ++t) {
    const FieldElement& w = tables.weight_sq(2 * t);
    fourth += w * w;
  }
  out.even_fourth_powers = fourth == (diff * diff).inverse().scaled(-r);

  auto loop_sum = [&](int j, bool even_only) {
    FieldElement acc = f.zero();
    for (int k = 0; k <= r - 2; ++k) {
      for (int l = 0; l <= r - 2; ++l) {
        if (even_only && (k % 2 != 0 || l % 2 != 0)) continue;
        if (!admissible(r, j, k, l)) continue;
        acc += tables.weight_sq(k) * tables.weight_sq(l);
      }
    }
    return tables.weight_sq(j).inverse() * acc;
  };

  const FieldElement base = loop_sum(0, true);
  out.even_loop = base == tables.omega0_sq();
  for (int j = 2; j <= r - 2 && out.even_loop; j += 2) out.even_loop = loop_sum(j, true) == base;

  out.full_loop = true;
  for (int j = 0; j <= r - 2 && out.full_loop; ++j) out.full_loop = loop_sum(j, false) == tables.omega_sq();
  return out;
}

}  // namespace tvq
