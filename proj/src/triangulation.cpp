#include "tvq/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tvq/error.hpp"

namespace tvq {

namespace {

// Union-find; the parity variant tracks orientation relative to the root.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::pair<int, int> find(int x) {
    int par = 0;
    int root = x;
    while (parent_[root] != root) {
      par ^= parity_[root];
      root = parent_[root];
    }
    // Path compression with parity fix-up.
    int cur = x;
    int cur_par = par;
    while (parent_[cur] != root) {
      const int next = parent_[cur];
      const int next_par = cur_par ^ parity_[cur];
      parent_[cur] = root;
      parity_[cur] = cur_par;
      cur = next;
      cur_par = next_par;
    }
    return {root, par};
  }

  int root(int x) { return find(x).first; }

  // Joins x and y with parity(x) ^ parity(y) == rel. Returns false on a contradiction.
  bool unite(int x, int y, int rel = 0) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == rel;
    parent_[ry] = rx;
    parity_[ry] = px ^ py ^ rel;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

constexpr std::array<std::array<int, 2>, 6> kSlotVertices{{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {0, 3}}};

int slot_of(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int s = 0; s < 6; ++s) {
    if (kSlotVertices[s][0] == a && kSlotVertices[s][1] == b) return s;
  }
  return -1;
}

// Unites tetrahedron edges across every gluing of spec. Returns false if some
// edge is identified with itself reversed.
bool unite_edges(const GluingSpec& spec, UnionFind& uf) {
  bool ok = true;
  for (int t = 0; t < spec.tetrahedra(); ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = spec.at(t, f);
      if (!g) continue;
      for (int s = 0; s < 6; ++s) {
        const int a = kSlotVertices[s][0];
        const int b = kSlotVertices[s][1];
        if (a == f || b == f) continue;
        const int pa = g->perm[a];
        const int pb = g->perm[b];
        const int rel = pa > pb ? 1 : 0;
        if (!uf.unite(6 * t + s, 6 * g->target + slot_of(pa, pb), rel)) ok = false;
      }
    }
  }
  return ok;
}

std::string perm_text(const Perm4& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace

Perm4 inverse(const Perm4& p) {
  Perm4 out{};
  for (int v = 0; v < 4; ++v) out[p[v]] = v;
  return out;
}

bool is_permutation(const Perm4& p) {
  std::array<bool, 4> seen{};
  for (int v : p) {
    if (v < 0 || v > 3 || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

GluingSpec::GluingSpec(int tetrahedra) {
  if (tetrahedra < 0) throw InvalidArgument("negative tetrahedron count");
  faces_.resize(tetrahedra);
}

int GluingSpec::add_tetrahedron() {
  faces_.emplace_back();
  return tetrahedra() - 1;
}

void GluingSpec::glue(int tet, int face, int target, const Perm4& perm) {
  if (tet < 0 || tet >= tetrahedra() || target < 0 || target >= tetrahedra()) {
    throw InvalidArgument("tetrahedron index out of range");
  }
  if (face < 0 || face > 3) throw InvalidArgument("face index out of range");
  if (!is_permutation(perm)) throw InvalidArgument("not a permutation of 0123: " + perm_text(perm));
  const int image = perm[face];
  if (tet == target && image == face) {
    throw InvolutionError("face " + std::to_string(face) + " of tetrahedron " + std::to_string(tet) +
                          " glued to itself");
  }
  if (faces_[tet][face] || faces_[target][image]) {
    throw InvolutionError("face already glued: tetrahedron " + std::to_string(tet) + " face " +
                          std::to_string(face) + " -> tetrahedron " + std::to_string(target) + " face " +
                          std::to_string(image));
  }
  faces_[tet][face] = FaceGluing{target, perm};
  faces_[target][image] = FaceGluing{tet, inverse(perm)};
}

void GluingSpec::unglue(int tet, int face) {
  auto& g = faces_.at(tet).at(face);
  if (!g) return;
  faces_[g->target][g->perm[face]].reset();
  g.reset();
}

int GluingSpec::glued_face_count() const {
  int n = 0;
  for (const auto& t : faces_) {
    for (const auto& g : t) n += g ? 1 : 0;
  }
  return n;
}

std::string GluingSpec::serialize() const {
  std::ostringstream out;
  out << "tetrahedra " << tetrahedra() << "\n";
  for (int t = 0; t < tetrahedra(); ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = faces_[t][f];
      if (g) out << "glue " << t << " " << f << " " << g->target << " " << perm_text(g->perm) << "\n";
    }
  }
  return out.str();
}

GluingSpec GluingSpec::parse(std::string_view text) {
  struct Token {
    std::string_view text;
    int column;
  };
  struct Record {
    int tet, face, target;
    Perm4 perm;
    int line;
  };

  auto parse_index = [](const Token& tok, int line, const char* what) {
    int v = 0;
    if (tok.text.empty() || tok.text.size() > 9) throw ParseError(line, tok.column, std::string("bad ") + what);
    for (char c : tok.text) {
      if (c < '0' || c > '9') throw ParseError(line, tok.column, std::string("expected decimal ") + what);
      v = v * 10 + (c - '0');
    }
    return v;
  };

  std::optional<int> count;
  std::vector<Record> records;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Token> toks;
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (toks[0].text == "tetrahedra") {
      if (count) throw ParseError(line_no, toks[0].column, "duplicate tetrahedra header");
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected 'tetrahedra N'");
      const int n = parse_index(toks[1], line_no, "tetrahedron count");
      if (n < 1) throw ParseError(line_no, toks[1].column, "tetrahedron count must be at least 1");
      count = n;
    } else if (toks[0].text == "glue") {
      if (!count) throw ParseError(line_no, toks[0].column, "glue before tetrahedra header");
      if (toks.size() != 5) throw ParseError(line_no, toks[0].column, "expected 'glue A f B p0p1p2p3'");
      Record rec{};
      rec.line = line_no;
      rec.tet = parse_index(toks[1], line_no, "tetrahedron index");
      if (rec.tet >= *count) throw ParseError(line_no, toks[1].column, "tetrahedron index out of range");
      rec.face = parse_index(toks[2], line_no, "face index");
      if (rec.face > 3) throw ParseError(line_no, toks[2].column, "face index out of range");
      rec.target = parse_index(toks[3], line_no, "tetrahedron index");
      if (rec.target >= *count) throw ParseError(line_no, toks[3].column, "tetrahedron index out of range");
      const Token& ptok = toks[4];
      if (ptok.text.size() != 4) throw ParseError(line_no, ptok.column, "permutation must have 4 digits");
      for (int v = 0; v < 4; ++v) {
        const char c = ptok.text[v];
        if (c < '0' || c > '3') throw ParseError(line_no, ptok.column + v, "permutation digit out of range");
        rec.perm[v] = c - '0';
      }
      if (!is_permutation(rec.perm)) throw ParseError(line_no, ptok.column, "not a permutation of 0123");
      records.push_back(rec);
    } else {
      throw ParseError(line_no, toks[0].column, "unknown keyword '" + std::string(toks[0].text) + "'");
    }
    if (end == text.size()) break;
  }
  if (!count) throw ParseError(line_no, 1, "missing tetrahedra header");

  GluingSpec spec(*count);
  std::vector<std::array<int, 4>> line_of(*count, {0, 0, 0, 0});
  for (const auto& rec : records) {
    if (spec.faces_[rec.tet][rec.face]) {
      throw ParseError(rec.line, 1, "duplicate record for tetrahedron " + std::to_string(rec.tet) + " face " +
                                        std::to_string(rec.face));
    }
    spec.faces_[rec.tet][rec.face] = FaceGluing{rec.target, rec.perm};
    line_of[rec.tet][rec.face] = rec.line;
  }
  for (int t = 0; t < *count; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = spec.faces_[t][f];
      if (!g) continue;
      const int image = g->perm[f];
      const std::string where = "line " + std::to_string(line_of[t][f]) + ": ";
      if (g->target == t && image == f) {
        throw InvolutionError(where + "face " + std::to_string(f) + " of tetrahedron " + std::to_string(t) +
                              " glued to itself");
      }
      const auto& back = spec.faces_[g->target][image];
      if (!back) {
        throw InvolutionError(where + "missing partner record for tetrahedron " + std::to_string(g->target) +
                              " face " + std::to_string(image));
      }
      if (back->target != t || back->perm != inverse(g->perm)) {
        throw InvolutionError(where + "partner record for tetrahedron " + std::to_string(g->target) + " face " +
                              std::to_string(image) + " disagrees");
      }
    }
  }
  return spec;
}

bool has_reversed_edge(const GluingSpec& spec) {
  UnionFind uf(6 * spec.tetrahedra());
  return !unite_edges(spec, uf);
}

Triangulation Triangulation::build(const GluingSpec& spec) {
  const int d = spec.tetrahedra();
  if (d < 1) throw NotClosed("no tetrahedra");
  for (int t = 0; t < d; ++t) {
    for (int f = 0; f < 4; ++f) {
      if (!spec.at(t, f)) {
        throw NotClosed("face " + std::to_string(f) + " of tetrahedron " + std::to_string(t) + " is unpaired");
      }
    }
  }

  UnionFind verts(4 * d);
  UnionFind edges(6 * d);
  UnionFind faces(4 * d);
  for (int t = 0; t < d; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = *spec.at(t, f);
      faces.unite(4 * t + f, 4 * g.target + g.perm[f]);
      for (int v = 0; v < 4; ++v) {
        if (v != f) verts.unite(4 * t + v, 4 * g.target + g.perm[v]);
      }
    }
  }
  if (!unite_edges(spec, edges)) throw BadEdge("an edge is identified with itself in reverse");

  Triangulation tri;
  tri.spec_ = spec;

  auto number = [](UnionFind& uf, int n) {
    std::vector<int> id(n, -1);
    std::vector<int> out(n);
    int next = 0;
    for (int x = 0; x < n; ++x) {
      const int r = uf.root(x);
      if (id[r] < 0) id[r] = next++;
      out[x] = id[r];
    }
    return std::pair{out, next};
  };
  auto [vid, nv] = number(verts, 4 * d);
  auto [eid, ne] = number(edges, 6 * d);
  auto [fid, nf] = number(faces, 4 * d);
  tri.num_vertices_ = nv;

  // Every quotient face has exactly two sides. Distinct gluings make this
  // automatic, but a defective spec could still break it.
  std::vector<int> sides(nf, 0);
  for (int x = 0; x < 4 * d; ++x) ++sides[fid[x]];
  for (int f = 0; f < nf; ++f) {
    if (sides[f] != 2) throw NotClosed("a face class has " + std::to_string(sides[f]) + " sides");
  }

  tri.tet_edges_.resize(d);
  tri.tet_edge_signs_.resize(d);
  tri.tet_vertices_.resize(d);
  tri.tet_faces_.resize(d);
  tri.edge_ends_.assign(ne, {-1, -1});
  tri.edge_tets_.assign(ne, {});
  tri.edge_faces_.assign(ne, {});
  tri.edge_degree_.assign(ne, 0);
  tri.face_edges_.assign(nf, {});
  tri.face_edge_signs_.assign(nf, {});
  std::vector<bool> face_done(nf, false);

  for (int t = 0; t < d; ++t) {
    for (int v = 0; v < 4; ++v) tri.tet_vertices_[t][v] = vid[4 * t + v];
    for (int f = 0; f < 4; ++f) tri.tet_faces_[t][f] = fid[4 * t + f];
    for (int s = 0; s < 6; ++s) {
      const int e = eid[6 * t + s];
      const int sign = edges.find(6 * t + s).second == 0 ? 1 : -1;
      tri.tet_edges_[t][s] = e;
      tri.tet_edge_signs_[t][s] = sign;
      ++tri.edge_degree_[e];
      if (tri.edge_ends_[e][0] < 0) {
        const int a = tri.tet_vertices_[t][kSlotVertices[s][0]];
        const int b = tri.tet_vertices_[t][kSlotVertices[s][1]];
        tri.edge_ends_[e] = sign > 0 ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
      }
      auto& tets = tri.edge_tets_[e];
      if (std::find(tets.begin(), tets.end(), t) == tets.end()) tets.push_back(t);
    }
    for (int f = 0; f < 4; ++f) {
      const int q = fid[4 * t + f];
      if (face_done[q]) continue;
      face_done[q] = true;
      std::array<int, 3> vs{};
      int n = 0;
      for (int v = 0; v < 4; ++v) {
        if (v != f) vs[n++] = v;
      }
      // Boundary of [v0,v1,v2] = [v1,v2] - [v0,v2] + [v0,v1].
      const std::array<std::array<int, 2>, 3> sides_of{{{vs[1], vs[2]}, {vs[0], vs[2]}, {vs[0], vs[1]}}};
      const std::array<int, 3> coeff{1, -1, 1};
      for (int k = 0; k < 3; ++k) {
        const int s = slot_of(sides_of[k][0], sides_of[k][1]);
        tri.face_edges_[q][k] = tri.tet_edges_[t][s];
        tri.face_edge_signs_[q][k] = coeff[k] * tri.tet_edge_signs_[t][s];
        auto& fl = tri.edge_faces_[tri.tet_edges_[t][s]];
        if (std::find(fl.begin(), fl.end(), q) == fl.end()) fl.push_back(q);
      }
    }
  }
  for (auto& v : tri.edge_tets_) std::sort(v.begin(), v.end());
  for (auto& v : tri.edge_faces_) std::sort(v.begin(), v.end());

  // Vertex links: corner triangles F, link edges 3F/2, link vertices = edge ends.
  std::vector<int> corners(nv, 0);
  std::vector<int> ends(nv, 0);
  for (int x = 0; x < 4 * d; ++x) ++corners[vid[x]];
  for (const auto& ee : tri.edge_ends_) {
    ++ends[ee[0]];
    ++ends[ee[1]];
  }
  for (int v = 0; v < nv; ++v) {
    const int chi = ends[v] - 3 * corners[v] / 2 + corners[v];
    if (chi != 2) {
      throw NotManifold("link of vertex " + std::to_string(v) + " has Euler characteristic " + std::to_string(chi));
    }
  }
  if (tri.euler_characteristic() != 0) {
    throw NotManifold("Euler characteristic " + std::to_string(tri.euler_characteristic()) + " is not zero");
  }
  return tri;
}

OddCounts counts_for_coloring(const Triangulation& tri, std::span<const int> coloring) {
  if (static_cast<int>(coloring.size()) != tri.num_edges()) throw InvalidArgument("coloring size mismatch");
  OddCounts out;
  for (int c : coloring) out.f += c & 1;
  for (int t = 0; t < tri.num_tetrahedra(); ++t) {
    for (int e : tri.tet_edges(t)) {
      if (coloring[e] & 1) {
        ++out.v;
        break;
      }
    }
  }
  for (int f = 0; f < tri.num_faces(); ++f) {
    for (int e : tri.face_edges(f)) {
      if (coloring[e] & 1) {
        ++out.t;
        break;
      }
    }
  }
  return out;
}

}  // namespace tvq
