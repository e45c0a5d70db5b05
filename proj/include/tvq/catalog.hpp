#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tvq/triangulation.hpp"

namespace tvq {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  /// Lens space parameters, or p = 1 for S^3.
  int p = 1;
  int q = 0;
  std::string construction;
  /// Fixture in the triangulation text format (same bytes as data/<file>).
  std::string_view text;
  std::string file;
  /// Expected first homology, as AbelianGroup::to_string prints it.
  std::string h1;

  GluingSpec spec() const { return GluingSpec::parse(text); }
};

/// Builtin manifolds in alphabetical order of name.
const std::vector<CatalogEntry>& catalog();

/// Lowercase with everything but letters and digits removed: "L(3,1)" -> "l31".
std::string normalize_manifold_name(std::string_view name);

/// Matches names and aliases after normalization. Throws NotInCatalog.
const CatalogEntry& catalog_lookup(std::string_view name);

/// Manifolds that appear in the reference tables but have no builtin fixture.
const std::vector<std::string>& fixture_required();

}  // namespace tvq
