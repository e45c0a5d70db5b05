#include "tvq/catalog.hpp"

#include <cctype>

#include "tvq/error.hpp"

namespace tvq {

namespace {

constexpr std::string_view kL103Text = R"tri(# L(10,3): layered solid torus, boundary folded
tetrahedra 3
glue 0 0 0 3012
glue 0 1 1 0312
glue 0 2 1 3021
glue 0 3 0 1230
glue 1 0 2 3012
glue 1 1 2 1230
glue 1 2 0 1320
glue 1 3 0 0231
glue 2 0 2 1302
glue 2 1 2 2031
glue 2 2 1 3012
glue 2 3 1 1230
)tri";
constexpr std::string_view kL114Text = R"tri(# L(11,4): layered solid torus, boundary folded
tetrahedra 3
glue 0 0 0 3012
glue 0 1 1 2301
glue 0 2 1 0123
glue 0 3 0 1230
glue 1 0 2 3021
glue 1 1 2 1203
glue 1 2 0 0123
glue 1 3 0 2301
glue 2 0 2 1302
glue 2 1 2 2031
glue 2 2 1 2013
glue 2 3 1 1320
)tri";
constexpr std::string_view kL125Text = R"tri(# L(12,5): layered solid torus, boundary folded
tetrahedra 3
glue 0 0 0 3012
glue 0 1 1 2301
glue 0 2 1 0123
glue 0 3 0 1230
glue 1 0 2 3012
glue 1 1 2 1230
glue 1 2 0 0123
glue 1 3 0 2301
glue 2 0 2 1230
glue 2 1 2 3012
glue 2 2 1 3012
glue 2 3 1 1230
)tri";
constexpr std::string_view kL135Text = R"tri(# L(13,5): layered solid torus, boundary folded
tetrahedra 3
glue 0 0 0 3012
glue 0 1 1 2301
glue 0 2 1 0123
glue 0 3 0 1230
glue 1 0 2 3021
glue 1 1 2 1203
glue 1 2 0 0123
glue 1 3 0 2301
glue 2 0 2 1230
glue 2 1 2 3012
glue 2 2 1 2013
glue 2 3 1 1320
)tri";
constexpr std::string_view kL31Text = R"tri(# L(3,1): layered solid torus, boundary folded
tetrahedra 2
glue 0 0 0 3012
glue 0 1 1 0321
glue 0 2 1 0321
glue 0 3 0 1230
glue 1 0 1 1302
glue 1 1 1 2031
glue 1 2 0 0321
glue 1 3 0 0321
)tri";
constexpr std::string_view kL41Text = R"tri(# L(4,1): layered solid torus, boundary folded
tetrahedra 1
glue 0 0 0 3012
glue 0 1 0 1230
glue 0 2 0 3012
glue 0 3 0 1230
)tri";
constexpr std::string_view kL51Text = R"tri(# L(5,1): layered solid torus, boundary folded
tetrahedra 2
glue 0 0 0 3012
glue 0 1 1 0312
glue 0 2 1 3021
glue 0 3 0 1230
glue 1 0 1 1230
glue 1 1 1 3012
glue 1 2 0 1320
glue 1 3 0 0231
)tri";
constexpr std::string_view kL52Text = R"tri(# L(5,2): layered solid torus, boundary folded
tetrahedra 1
glue 0 0 0 3012
glue 0 1 0 3201
glue 0 2 0 2310
glue 0 3 0 1230
)tri";
constexpr std::string_view kL61Text = R"tri(# L(6,1): layered solid torus, boundary folded
tetrahedra 3
glue 0 0 0 3012
glue 0 1 1 0312
glue 0 2 1 3021
glue 0 3 0 1230
glue 1 0 2 3021
glue 1 1 2 1203
glue 1 2 0 1320
glue 1 3 0 0231
glue 2 0 2 1302
glue 2 1 2 2031
glue 2 2 1 2013
glue 2 3 1 1320
)tri";
constexpr std::string_view kL72Text = R"tri(# L(7,2): layered solid torus, boundary folded
tetrahedra 2
glue 0 0 0 3012
glue 0 1 1 2301
glue 0 2 1 0123
glue 0 3 0 1230
glue 1 0 1 1302
glue 1 1 1 2031
glue 1 2 0 0123
glue 1 3 0 2301
)tri";
constexpr std::string_view kL83Text = R"tri(# L(8,3): layered solid torus, boundary folded
tetrahedra 2
glue 0 0 0 3012
glue 0 1 1 2301
glue 0 2 1 0123
glue 0 3 0 1230
glue 1 0 1 1230
glue 1 1 1 3012
glue 1 2 0 0123
glue 1 3 0 2301
)tri";
constexpr std::string_view kL92Text = R"tri(# L(9,2): layered solid torus, boundary folded
tetrahedra 3
glue 0 0 0 3012
glue 0 1 1 2301
glue 0 2 1 0123
glue 0 3 0 1230
glue 1 0 2 3012
glue 1 1 2 1230
glue 1 2 0 0123
glue 1 3 0 2301
glue 2 0 2 1302
glue 2 1 2 2031
glue 2 2 1 3012
glue 2 3 1 1230
)tri";
constexpr std::string_view kRp3Text = R"tri(# RP3 = L(2,1): layered solid torus, boundary folded
tetrahedra 2
glue 0 0 0 3012
glue 0 1 1 0312
glue 0 2 1 3021
glue 0 3 0 1230
glue 1 0 1 1023
glue 1 1 1 1023
glue 1 2 0 1320
glue 1 3 0 0231
)tri";
constexpr std::string_view kS3Text = R"tri(# S3: two tetrahedra glued along their boundaries
tetrahedra 2
glue 0 0 1 0123
glue 0 1 1 0123
glue 0 2 1 0123
glue 0 3 1 0123
glue 1 0 0 0123
glue 1 1 0 0123
glue 1 2 0 0123
glue 1 3 0 0123
)tri";
constexpr std::string_view kS3SimplexText = R"tri(# S3: boundary of the 4-simplex
tetrahedra 5
glue 0 0 1 0123
glue 0 1 2 1023
glue 0 2 3 1203
glue 0 3 4 1230
glue 1 0 0 0123
glue 1 1 2 0123
glue 1 2 3 0213
glue 1 3 4 0231
glue 2 0 0 1023
glue 2 1 1 0123
glue 2 2 3 0123
glue 2 3 4 0132
glue 3 0 0 2013
glue 3 1 1 0213
glue 3 2 2 0123
glue 3 3 4 0123
glue 4 0 0 3012
glue 4 1 1 0312
glue 4 2 2 0132
glue 4 3 3 0123
)tri";

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"L(10,3)", {}, 10, 3, "layered", kL103Text, "l10_3.tri", "Z/10"});
  out.push_back({"L(11,4)", {"L(11,3)"}, 11, 4, "layered", kL114Text, "l11_4.tri", "Z/11"});
  out.push_back({"L(12,5)", {}, 12, 5, "layered", kL125Text, "l12_5.tri", "Z/12"});
  out.push_back({"L(13,5)", {}, 13, 5, "layered", kL135Text, "l13_5.tri", "Z/13"});
  out.push_back({"L(3,1)", {}, 3, 1, "layered", kL31Text, "l3_1.tri", "Z/3"});
  out.push_back({"L(4,1)", {}, 4, 1, "layered", kL41Text, "l4_1.tri", "Z/4"});
  out.push_back({"L(5,1)", {}, 5, 1, "layered", kL51Text, "l5_1.tri", "Z/5"});
  out.push_back({"L(5,2)", {}, 5, 2, "layered", kL52Text, "l5_2.tri", "Z/5"});
  out.push_back({"L(6,1)", {}, 6, 1, "layered", kL61Text, "l6_1.tri", "Z/6"});
  out.push_back({"L(7,2)", {}, 7, 2, "layered", kL72Text, "l7_2.tri", "Z/7"});
  out.push_back({"L(8,3)", {}, 8, 3, "layered", kL83Text, "l8_3.tri", "Z/8"});
  out.push_back({"L(9,2)", {}, 9, 2, "layered", kL92Text, "l9_2.tri", "Z/9"});
  out.push_back({"RP3", {"L(2,1)"}, 2, 1, "layered", kRp3Text, "rp3.tri", "Z/2"});
  out.push_back({"S3", {"S^3"}, 1, 0, "doubled tetrahedron", kS3Text, "s3.tri", "0"});
  out.push_back({"S3-simplex", {}, 1, 0, "boundary of the 4-simplex", kS3SimplexText, "s3-simplex.tri", "0"});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

std::string normalize_manifold_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) out += static_cast<char>(std::tolower(u));
  }
  return out;
}

const CatalogEntry& catalog_lookup(std::string_view name) {
  const std::string key = normalize_manifold_name(name);
  for (const auto& e : catalog()) {
    if (normalize_manifold_name(e.name) == key) return e;
    for (const auto& a : e.aliases) {
      if (normalize_manifold_name(a) == key) return e;
    }
  }
  throw NotInCatalog(std::string(name));
}

const std::vector<std::string>& fixture_required() {
  static const std::vector<std::string> names{"S3/Q8", "S3/Q12"};
  return names;
}

}  // namespace tvq
