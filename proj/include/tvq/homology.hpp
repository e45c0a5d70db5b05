#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tvq/triangulation.hpp"

namespace tvq {

/// Z^rank plus the cyclic torsion factors Z/d (each d > 1, d_i | d_{i+1}).
struct AbelianGroup {
  int rank = 0;
  std::vector<mpz_class> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z/3", "Z^2 + Z/2 + Z/4".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Nonzero invariant factors of m (absolute values, each dividing the next).
std::vector<mpz_class> smith_invariants(IntMatrix m);

/// First homology of the quotient cell complex.
AbelianGroup homology_h1(const Triangulation& tri);

}  // namespace tvq
