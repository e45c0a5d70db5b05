#pragma once

// Closed generalized triangulations presented by face gluings.
//
// Face f of a tetrahedron is the face opposite vertex f. A gluing of face f of
// tetrahedron A to tetrahedron B is a permutation p of {0,1,2,3}: vertex v of A
// goes to vertex p[v] of B, and face f lands on face p[f] of B.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tvq {

using Perm4 = std::array<int, 4>;

Perm4 inverse(const Perm4& p);
bool is_permutation(const Perm4& p);

struct FaceGluing {
  int target = 0;
  Perm4 perm{0, 1, 2, 3};

  friend bool operator==(const FaceGluing&, const FaceGluing&) = default;
};

/// Tetrahedra plus (possibly partial) face gluings. glue() always records both
/// directions, so a spec built through the API is involutive by construction.
class GluingSpec {
 public:
  explicit GluingSpec(int tetrahedra = 0);

  int tetrahedra() const { return static_cast<int>(faces_.size()); }
  int add_tetrahedron();

  /// Glues face `face` of `tet` to `target` via `perm` and records the partner.
  /// Throws InvolutionError if either side is already glued or the face would
  /// be glued to itself.
  void glue(int tet, int face, int target, const Perm4& perm);
  void unglue(int tet, int face);

  const std::optional<FaceGluing>& at(int tet, int face) const { return faces_.at(tet).at(face); }
  /// Number of glued (tet, face) pairs; twice the number of glued face pairs.
  int glued_face_count() const;

  /// Text form: a `tetrahedra N` header and one `glue A f B pppp` line per glued face.
  std::string serialize() const;

  /// Parses the text form. Throws ParseError (with line/column) on malformed
  /// input and InvolutionError when a record's partner is missing or disagrees.
  static GluingSpec parse(std::string_view text);

  friend bool operator==(const GluingSpec&, const GluingSpec&) = default;

 private:
  std::vector<std::array<std::optional<FaceGluing>, 4>> faces_;
};

/// True if the gluings identify some tetrahedron edge with itself reversed.
/// Works on partial specs.
bool has_reversed_edge(const GluingSpec& spec);

/// Quotient cell structure of a validated closed 3-manifold triangulation.
class Triangulation {
 public:
  /// Builds quotient cells and validates closedness, edge orientation and
  /// spherical vertex links. Throws NotClosed, BadEdge or NotManifold.
  static Triangulation build(const GluingSpec& spec);

  const GluingSpec& spec() const { return spec_; }

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edge_tets_.size()); }
  int num_faces() const { return static_cast<int>(face_edges_.size()); }
  int num_tetrahedra() const { return static_cast<int>(tet_edges_.size()); }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_faces() - num_tetrahedra(); }

  /// Quotient edges of tetrahedron t in TetColors slot order (i,j,k,l,m,n).
  const std::array<int, 6>& tet_edges(int t) const { return tet_edges_.at(t); }
  /// +1 if the tet edge in slot s (oriented low vertex -> high vertex) agrees
  /// with the orientation of its quotient edge, -1 otherwise.
  const std::array<int, 6>& tet_edge_signs(int t) const { return tet_edge_signs_.at(t); }
  /// Quotient vertex of each tetrahedron corner.
  const std::array<int, 4>& tet_vertices(int t) const { return tet_vertices_.at(t); }

  /// Three quotient edges of face f.
  const std::array<int, 3>& face_edges(int f) const { return face_edges_.at(f); }
  /// Signs of those edges in the boundary of f (for the chain complex).
  const std::array<int, 3>& face_edge_signs(int f) const { return face_edge_signs_.at(f); }
  /// Quotient face of (tet, face).
  int face_of(int tet, int face) const { return tet_faces_.at(tet).at(face); }

  /// Tail and head quotient vertices of edge e.
  std::array<int, 2> edge_endpoints(int e) const { return edge_ends_.at(e); }
  /// Distinct tetrahedra / quotient faces containing edge e.
  std::span<const int> tets_of_edge(int e) const { return edge_tets_.at(e); }
  std::span<const int> faces_of_edge(int e) const { return edge_faces_.at(e); }
  /// Number of tetrahedron edges identified to e.
  int edge_degree(int e) const { return edge_degree_.at(e); }

 private:
  GluingSpec spec_;
  int num_vertices_ = 0;
  std::vector<std::array<int, 6>> tet_edges_;
  std::vector<std::array<int, 6>> tet_edge_signs_;
  std::vector<std::array<int, 4>> tet_vertices_;
  std::vector<std::array<int, 4>> tet_faces_;
  std::vector<std::array<int, 3>> face_edges_;
  std::vector<std::array<int, 3>> face_edge_signs_;
  std::vector<std::array<int, 2>> edge_ends_;
  std::vector<std::vector<int>> edge_tets_;
  std::vector<std::vector<int>> edge_faces_;
  std::vector<int> edge_degree_;
};

/// Cells touched by odd colors: v tetrahedra, t faces and f edges.
struct OddCounts {
  int v = 0;
  int t = 0;
  int f = 0;

  friend bool operator==(const OddCounts&, const OddCounts&) = default;
};

OddCounts counts_for_coloring(const Triangulation& tri, std::span<const int> coloring);

}  // namespace tvq
