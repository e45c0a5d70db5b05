#pragma once

// Standard triangulations used as builtin fixtures and in tests.

#include <vector>

#include "tvq/triangulation.hpp"

namespace tvq {

/// S^3 as two tetrahedra glued along their boundaries by the identity.
GluingSpec doubled_tetrahedron();

/// S^3 as the boundary of the 4-simplex (5 tetrahedra, 5 vertices).
GluingSpec boundary_of_4simplex();

/// L(p,q) as p tetrahedra arranged around a common axis (2 vertices).
/// Requires p >= 2 and gcd(p,q) = 1.
GluingSpec bipyramid_lens_space(int p, int q);

/// A one-vertex layered triangulation of L(p,q): a layered solid torus with
/// the fewest layers whose boundary fold yields L(p,q). Requires p >= 2 and
/// gcd(p,q) = 1.
GluingSpec layered_lens_space(int p, int q);

/// Smallest of q, -q, q^{-1}, -q^{-1} mod p; L(p,q) and L(p,q') are
/// homeomorphic iff the canonical values agree.
int canonical_lens_q(int p, int q);

/// Tetrahedra of b are renumbered after those of a.
GluingSpec disjoint_union(const GluingSpec& a, const GluingSpec& b);

/// Tetrahedron t becomes tet_map[t] and its vertex v becomes vertex_maps[t][v].
GluingSpec relabel(const GluingSpec& spec, const std::vector<int>& tet_map, const std::vector<Perm4>& vertex_maps);

}  // namespace tvq
