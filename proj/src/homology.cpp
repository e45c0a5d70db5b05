#include "tvq/homology.hpp"

#include <utility>

namespace tvq {

std::string AbelianGroup::to_string() const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (rank == 1) add("Z");
  if (rank > 1) add("Z^" + std::to_string(rank));
  for (const auto& d : torsion) add("Z/" + d.get_str());
  return out.empty() ? "0" : out;
}

std::vector<mpz_class> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<mpz_class> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    auto find_pivot = [&]() -> std::pair<std::size_t, std::size_t> {
      std::pair<std::size_t, std::size_t> best{rows, cols};
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          if (best.first == rows || abs(m[i][j]) < abs(m[best.first][best.second])) best = {i, j};
        }
      }
      return best;
    };

    bool done = false;
    while (!done) {
      auto [pi, pj] = find_pivot();
      if (pi == rows) return diag;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const mpz_class q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const mpz_class q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and retry.
      done = true;
      for (std::size_t i = t + 1; i < rows && done; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            done = false;
            break;
          }
        }
      }
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

AbelianGroup homology_h1(const Triangulation& tri) {
  const int nv = tri.num_vertices();
  const int ne = tri.num_edges();
  const int nf = tri.num_faces();

  IntMatrix d1(nv, std::vector<mpz_class>(ne, 0));
  for (int e = 0; e < ne; ++e) {
    const auto ends = tri.edge_endpoints(e);
    d1[ends[1]][e] += 1;
    d1[ends[0]][e] -= 1;
  }
  IntMatrix d2(ne, std::vector<mpz_class>(nf, 0));
  for (int f = 0; f < nf; ++f) {
    const auto& es = tri.face_edges(f);
    const auto& sg = tri.face_edge_signs(f);
    for (int k = 0; k < 3; ++k) d2[es[k]][f] += sg[k];
  }

  const auto inv1 = smith_invariants(std::move(d1));
  const auto inv2 = smith_invariants(std::move(d2));
  AbelianGroup out;
  out.rank = ne - static_cast<int>(inv1.size()) - static_cast<int>(inv2.size());
  for (const auto& d : inv2) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace tvq
