#include "tvq/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>

#include "tvq/error.hpp"

namespace tvq {

namespace {

using Vec2 = std::array<long long, 2>;

Vec2 norm(Vec2 v) {
  if (v[0] > 0 || (v[0] == 0 && v[1] > 0)) return v;
  return {-v[0], -v[1]};
}

Vec2 add(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
Vec2 sub(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }

std::array<int, 2> others(int x) {
  std::array<int, 2> out{};
  int n = 0;
  for (int k = 0; k < 3; ++k) {
    if (k != x) out[n++] = k;
  }
  return out;
}

// Boundary edge slopes of a layered solid torus, tracked as (longitude,
// meridian) intersection vectors with positive first coordinate.
using Slopes = std::array<Vec2, 3>;

Vec2 layered_slope(const Slopes& s, int x) {
  const auto [y, z] = others(x);
  const Vec2 plus = norm(add(s[y], s[z]));
  const Vec2 minus = norm(sub(s[y], s[z]));
  return s[x] == plus ? minus : plus;
}

// (p, q) of the lens space obtained by folding the boundary along edge e.
std::pair<long long, long long> fold_parameters(const Slopes& s, int e) {
  const auto [y, z] = others(e);
  const Vec2 mu = s[e] == norm(add(s[y], s[z])) ? sub(s[y], s[z]) : add(s[y], s[z]);
  return {std::llabs(mu[0]), std::llabs(mu[1])};
}

struct TetEdge {
  int t, a, b;
};

// Layered solid torus with two boundary faces and three boundary edge classes.
struct Layered {
  GluingSpec spec{1};
  std::array<std::pair<int, int>, 2> boundary{{{0, 1}, {0, 2}}};
  std::array<std::vector<TetEdge>, 3> edges;

  Layered() {
    // One tetrahedron with face 3 folded onto face 0: slopes (1,0), (2,1), (3,1).
    spec.glue(0, 3, 0, {1, 2, 3, 0});
    edges[0] = {{0, 0, 1}, {0, 1, 2}, {0, 2, 3}};
    edges[1] = {{0, 0, 2}, {0, 1, 3}};
    edges[2] = {{0, 0, 3}};
  }

  int class_of(int t, int a, int b) const {
    if (a > b) std::swap(a, b);
    for (int k = 0; k < 3; ++k) {
      for (const auto& e : edges[k]) {
        if (e.t == t && e.a == a && e.b == b) return k;
      }
    }
    throw std::logic_error("edge not on the boundary");
  }

  // Vertices (a, b) of the edge of class x on face f of t, and the third vertex c.
  std::array<int, 3> face_edge(int t, int f, int x) const {
    std::array<int, 3> vs{};
    int n = 0;
    for (int v = 0; v < 4; ++v) {
      if (v != f) vs[n++] = v;
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (class_of(t, vs[i], vs[j]) == x) return {vs[i], vs[j], vs[3 - i - j]};
      }
    }
    throw std::logic_error("boundary face lacks the edge class");
  }

  void add_edge(int k, int t, int a, int b) {
    for (const auto& e : edges[k]) {
      if (e.t == t && e.a == a && e.b == b) return;
    }
    edges[k].push_back({t, a, b});
  }

  // Layers a new tetrahedron across boundary edge x.
  void layer(int x) {
    const auto [t1, f1] = boundary[0];
    const auto [t2, f2] = boundary[1];
    const int nt = spec.add_tetrahedron();
    const auto [a1, b1, c1] = face_edge(t1, f1, x);
    const auto [a2, b2, c2] = face_edge(t2, f2, x);
    const Perm4 p3{a1, b1, c1, f1};
    spec.glue(nt, 3, t1, p3);
    Perm4 p2{};
    bool ok = false;
    for (const auto& [aa, bb] : {std::pair{a2, b2}, std::pair{b2, a2}}) {
      p2 = {aa, bb, f2, c2};
      spec.glue(nt, 2, t2, p2);
      if (!has_reversed_edge(spec)) {
        ok = true;
        break;
      }
      spec.unglue(nt, 2);
    }
    if (!ok) throw std::logic_error("no orientation-consistent layering");

    for (const auto& [face, perm, target] : {std::tuple{3, p3, t1}, std::tuple{2, p2, t2}}) {
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          if (a == face || b == face) continue;
          const int k = class_of(target, perm[a], perm[b]);
          if (k != x) add_edge(k, nt, a, b);
        }
      }
    }
    edges[x] = {{nt, 2, 3}};
    boundary = {{{nt, 0}, {nt, 1}}};
  }

  // Glues the two boundary faces, mapping class e to itself and swapping the
  // other two. Returns true once the result is a valid closed triangulation.
  bool fold(int e) {
    const auto [t1, f1] = boundary[0];
    const auto [t2, f2] = boundary[1];
    std::array<int, 3> vs1{}, vs2{};
    for (int v = 0, n1 = 0, n2 = 0; v < 4; ++v) {
      if (v != f1) vs1[n1++] = v;
      if (v != f2) vs2[n2++] = v;
    }
    std::array<int, 3> image = vs2;
    do {
      Perm4 perm{};
      for (int i = 0; i < 3; ++i) perm[vs1[i]] = image[i];
      perm[f1] = f2;
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        for (int j = i + 1; j < 3 && ok; ++j) {
          const int k1 = class_of(t1, vs1[i], vs1[j]);
          const int k2 = class_of(t2, perm[vs1[i]], perm[vs1[j]]);
          if ((k1 == e) != (k2 == e) || (k1 != e && k1 == k2)) ok = false;
        }
      }
      if (!ok) continue;
      spec.glue(t1, f1, t2, perm);
      if (!has_reversed_edge(spec)) {
        try {
          Triangulation::build(spec);
          return true;
        } catch (const ValidationError&) {
        }
      }
      spec.unglue(t1, f1);
    } while (std::next_permutation(image.begin(), image.end()));
    return false;
  }
};

void check_lens_parameters(int p, int q) {
  if (p < 2) throw InvalidArgument("lens space needs p >= 2");
  if (std::gcd(p, ((q % p) + p) % p) != 1) {
    throw InvalidArgument("lens space needs gcd(p,q) = 1, got L(" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
}

}  // namespace

int canonical_lens_q(int p, int q) {
  if (p < 2) return 0;
  q = ((q % p) + p) % p;
  int best = std::min(q, p - q);
  for (int i = 1; i < p; ++i) {
    if ((static_cast<long long>(q) * i) % p == 1) best = std::min({best, i, p - i});
  }
  return best;
}

GluingSpec doubled_tetrahedron() {
  GluingSpec spec(2);
  for (int f = 0; f < 4; ++f) spec.glue(0, f, 1, {0, 1, 2, 3});
  return spec;
}

GluingSpec boundary_of_4simplex() {
  // Tetrahedron x spans {0..4} minus x, vertices in increasing order.
  std::array<std::array<int, 4>, 5> verts{};
  for (int x = 0; x < 5; ++x) {
    int n = 0;
    for (int v = 0; v < 5; ++v) {
      if (v != x) verts[x][n++] = v;
    }
  }
  auto local = [&](int tet, int global) {
    return static_cast<int>(std::find(verts[tet].begin(), verts[tet].end(), global) - verts[tet].begin());
  };
  GluingSpec spec(5);
  for (int x = 0; x < 5; ++x) {
    for (int g = x + 1; g < 5; ++g) {
      Perm4 perm{};
      for (int v = 0; v < 4; ++v) {
        const int global = verts[x][v];
        perm[v] = global == g ? local(g, x) : local(g, global);
      }
      spec.glue(x, local(x, g), g, perm);
    }
  }
  return spec;
}

GluingSpec bipyramid_lens_space(int p, int q) {
  check_lens_parameters(p, q);
  q = ((q % p) + p) % p;
  // Tetrahedron i has vertices (N, S, v_i, v_{i+1}).
  GluingSpec spec(p);
  for (int i = 0; i < p; ++i) spec.glue(i, 2, (i + 1) % p, {0, 1, 3, 2});
  for (int i = 0; i < p; ++i) spec.glue(i, 1, (i + q) % p, {1, 0, 2, 3});
  return spec;
}

GluingSpec layered_lens_space(int p, int q) {
  check_lens_parameters(p, q);
  const int target = canonical_lens_q(p, q);

  struct Node {
    std::vector<int> layers;
    Slopes slopes;
  };
  std::deque<Node> queue;
  queue.push_back({{}, Slopes{Vec2{1, 0}, Vec2{2, 1}, Vec2{3, 1}}});
  constexpr std::size_t kMaxLayers = 12;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (int e = 0; e < 3; ++e) {
      const auto [pp, qq] = fold_parameters(node.slopes, e);
      if (pp != p || canonical_lens_q(p, static_cast<int>(qq % p)) != target) continue;
      Layered lst;
      for (int x : node.layers) lst.layer(x);
      if (lst.fold(e)) return lst.spec;
    }
    if (node.layers.size() >= kMaxLayers) continue;
    for (int x = 0; x < 3; ++x) {
      const Vec2 next = layered_slope(node.slopes, x);
      if (next[0] == 0) continue;
      Node child = node;
      child.layers.push_back(x);
      child.slopes[x] = next;
      queue.push_back(std::move(child));
    }
  }
  throw InvalidArgument("no layered triangulation found for L(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

GluingSpec disjoint_union(const GluingSpec& a, const GluingSpec& b) {
  GluingSpec out(a.tetrahedra() + b.tetrahedra());
  const int off = a.tetrahedra();
  for (const auto& [src, shift] : {std::pair{&a, 0}, std::pair{&b, off}}) {
    for (int t = 0; t < src->tetrahedra(); ++t) {
      for (int f = 0; f < 4; ++f) {
        const auto& g = src->at(t, f);
        if (g && !out.at(t + shift, f)) out.glue(t + shift, f, g->target + shift, g->perm);
      }
    }
  }
  return out;
}

GluingSpec relabel(const GluingSpec& spec, const std::vector<int>& tet_map, const std::vector<Perm4>& vertex_maps) {
  const int n = spec.tetrahedra();
  if (static_cast<int>(tet_map.size()) != n || static_cast<int>(vertex_maps.size()) != n) {
    throw InvalidArgument("relabel maps have the wrong size");
  }
  GluingSpec out(n);
  for (int t = 0; t < n; ++t) {
    const Perm4& rho = vertex_maps[t];
    for (int f = 0; f < 4; ++f) {
      const auto& g = spec.at(t, f);
      if (!g || out.at(tet_map[t], rho[f])) continue;
      const Perm4& rho2 = vertex_maps[g->target];
      Perm4 perm{};
      for (int v = 0; v < 4; ++v) perm[rho[v]] = rho2[g->perm[v]];
      out.glue(tet_map[t], rho[f], tet_map[g->target], perm);
    }
  }
  return out;
}

}  // namespace tvq
