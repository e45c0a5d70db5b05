#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "tvq/catalog.hpp"
#include "tvq/constructions.hpp"
#include "tvq/statesum.hpp"

using namespace tvq;

namespace {

Triangulation fixture(const char* name) { return Triangulation::build(catalog_lookup(name).spec()); }

FieldElement qpoly(const char* text, int r) {
  return CycloField::get(r).from_q_polynomial(QPolynomial::parse(text, r));
}

std::vector<Triangulation> small_fixtures() {
  std::vector<Triangulation> out;
  for (const auto& e : catalog()) {
    auto t = Triangulation::build(e.spec());
    if (t.num_edges() <= 7) out.push_back(std::move(t));
  }
  for (int p = 2; p <= 5; ++p) out.push_back(Triangulation::build(bipyramid_lens_space(p, 1)));
  out.push_back(Triangulation::build(bipyramid_lens_space(5, 2)));
  return out;
}

}  // namespace

TEST_CASE("evaluation points") {
  const auto s = QSpec::standard(5);
  CHECK(s.u == CycloField::get(5).q_std());
  CHECK(s.primitive);
  CHECK_FALSE(s.mirror);
  const auto m = QSpec::mirrored(5);
  CHECK(m.u == -CycloField::get(5).q_std());
  CHECK(m.mirror);
  // -q has order r for odd r.
  CHECK_FALSE(m.primitive);
  CHECK(QSpec::mirrored(4).primitive);
  CHECK(&quantum_tables(s) == &quantum_tables(QSpec::standard(5)));
  CHECK(&quantum_tables(s) != &quantum_tables(m));
}

TEST_CASE("enumeration on the doubled tetrahedron at r = 3") {
  const auto t = fixture("S3");
  std::uint64_t visited = 0;
  bool saw_zero = false;
  enumerate_colorings(t, 3, [&](std::span<const int> c) {
    ++visited;
    if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) saw_zero = true;
    for (int f = 0; f < t.num_faces(); ++f) {
      const auto& e = t.face_edges(f);
      CHECK(admissible(3, c[e[0]], c[e[1]], c[e[2]]));
    }
  });
  CHECK(saw_zero);
  CHECK(visited == oracle::brute_force_count(t, 3));
}

TEST_CASE("enumeration order") {
  const auto t = fixture("L(5,2)");
  ColoringEnumerator en(t, 5);
  CHECK(en.colors() == 4);
  const auto& order = en.order();
  CHECK(std::set<int>(order.begin(), order.end()).size() == static_cast<std::size_t>(t.num_edges()));
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto a = t.faces_of_edge(order[k - 1]).size(), b = t.faces_of_edge(order[k]).size();
    CHECK((a > b || (a == b && order[k - 1] < order[k])));
  }
  // Splitting on the first edge covers every coloring exactly once.
  std::uint64_t whole = 0, split = 0;
  en.for_each([&](std::span<const int>) { ++whole; });
  for (int c = 0; c < en.colors(); ++c) en.for_each_with_first(c, [&](std::span<const int>) { ++split; });
  CHECK(whole == split);
}

TEST_CASE("pruned enumeration matches brute force") {
  for (const auto& t : small_fixtures()) {
    for (int r = 3; r <= 5; ++r) {
      std::uint64_t visited = 0;
      enumerate_colorings(t, r, [&](std::span<const int>) { ++visited; });
      CHECK(visited == oracle::brute_force_count(t, r));
      for (const auto& spec : {QSpec::standard(r), QSpec::mirrored(r)}) {
        const auto& tabs = quantum_tables(spec);
        const auto brute = oracle::brute_force_sums(t, tabs);
        const auto serial = class_sums_serial(t, tabs);
        CHECK(serial == brute);
        CHECK(serial.total() == visited);
        CHECK(class_sums(t, tabs, 4) == brute);
      }
    }
  }
}

TEST_CASE("classification") {
  const auto t = fixture("RP3");
  std::vector<int> zero(t.num_edges(), 0);
  CHECK(classify(t, zero) == ColoringClass::Adm0);
  CHECK(std::string(to_string(ColoringClass::Adm1)) == "Adm1");

  // RP3 at r = 4 has a coloring in Adm1.
  bool found = false;
  enumerate_colorings(t, 4, [&](std::span<const int> c) {
    const auto cls = classify(t, c);
    const auto o = counts_for_coloring(t, c);
    const bool even = std::all_of(c.begin(), c.end(), [](int x) { return x % 2 == 0; });
    if (even) {
      CHECK(cls == ColoringClass::Adm0);
    } else if ((o.v - o.t + o.f) % 2 == 0) {
      CHECK(cls == ColoringClass::AdmE);
    } else {
      CHECK(cls == ColoringClass::Adm1);
      found = true;
    }
  });
  CHECK(found);
}

TEST_CASE("coloring weights") {
  for (const auto& e : catalog()) {
    const auto t = Triangulation::build(e.spec());
    for (int r = 3; r <= 7; ++r) {
      std::vector<int> zero(t.num_edges(), 0);
      CHECK(coloring_weight(t, zero, quantum_tables(QSpec::standard(r))).is_one());
    }
  }
}

TEST_CASE("coloring weights agree with the floating point formula") {
  for (const auto& t : small_fixtures()) {
    for (int r = 3; r <= 7; ++r) {
      const auto& tabs = quantum_tables(QSpec::standard(r));
      oracle::Numeric num{r};
      enumerate_colorings(t, r, [&](std::span<const int> c) {
        const auto exact = coloring_weight(t, c, tabs).evaluate();
        const auto lit = num.weight(t, c);
        CHECK(std::abs(exact - lit) <= 1e-9 * std::max(1.0, std::abs(lit)));
      });
    }
  }
}

TEST_CASE("class sums") {
  for (int r = 3; r <= 7; ++r) {
    const auto& tabs = quantum_tables(QSpec::standard(r));
    const auto l31 = class_sums(fixture("L(3,1)"), tabs, 2);
    CHECK(l31.count1 == 0);
    CHECK(l31.sum1.is_zero());
    CHECK(l31.count0 >= 1);

    if (r > 5) continue;  // the union has the square of the coloring count
    const auto s3 = class_sums(fixture("S3"), tabs, 2);
    const auto uu = class_sums(Triangulation::build(disjoint_union(doubled_tetrahedron(), doubled_tetrahedron())), tabs, 2);
    CHECK(uu.sum0 == s3.sum0 * s3.sum0);
    CHECK(uu.count0 == s3.count0 * s3.count0);
    CHECK(uu.total() == s3.total() * s3.total());
  }
}

TEST_CASE("normalization examples") {
  const auto s3_3 = compute_report(fixture("S3"), QSpec::standard(3), 1);
  CHECK(s3_3.tv0.exact.is_one());
  CHECK(s3_3.tvstar.value.real() == doctest::Approx(0.5));

  const auto s3_4 = compute_report(fixture("S3"), QSpec::standard(4), 1);
  CHECK(s3_4.tvstar.value.real() == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(s3_4.vertices == 4);

  const auto l41 = compute_report(fixture("L(4,1)"), QSpec::standard(5), 2);
  CHECK(l41.tv0.exact.is_one());
  CHECK(l41.tv2.exact.is_one());
  CHECK(std::abs(l41.tvstar.value.real() - 0.276) < 5e-4);

  const auto rp3 = compute_report(fixture("RP3"), QSpec::standard(4), 2);
  CHECK(rp3.tv1.exact == qpoly("q^3-q", 4));
  REQUIRE(rp3.tv1.poly);
  CHECK(rp3.tv1.poly->to_string() == "q^3-q");
  CHECK(rp3.tv1.value.real() == doctest::Approx(-1.414).epsilon(1e-3));
}

TEST_CASE("report structure") {
  for (const char* name : {"S3", "RP3", "L(5,2)"}) {
    for (int r = 3; r <= 7; ++r) {
      const auto t = fixture(name);
      const auto rep = compute_report(t, QSpec::standard(r), 2);
      CHECK(rep.checks.sum_of_summands);
      CHECK(rep.checks.star_split);
      CHECK(rep.checks.rational);
      CHECK(rep.checks.real);
      CHECK(rep.tv.exact == rep.tv0.exact + rep.tv1.exact + rep.tv2.exact);
      const auto& tabs = quantum_tables(QSpec::standard(r));
      CHECK(rep.tvstar.exact * tabs.omega_sq() == rep.tv.exact);
      CHECK(rep.tvstar.exact == rep.tvstarE.exact + rep.tvstar1.exact);
      CHECK(to_q_polynomial(rep.sums.sum0));
      CHECK(to_q_polynomial(rep.sums.sum1));
      CHECK(to_q_polynomial(rep.sums.sumE));
      for (const auto& [label, inv] : rep.named()) {
        CHECK(conj_auto(inv->exact) == inv->exact);
        CHECK(std::abs(inv->value.imag()) < 1e-9);
      }
      CHECK(rep.named().size() == 8);
    }
  }
}

TEST_CASE("identities") {
  for (int r = 3; r <= 7; ++r) {
    const auto s3 = verify_identities(fixture("S3"), r, 2);
    CHECK(s3.all_passed());
    CHECK(s3.at_q.tv1.exact.is_zero());
    CHECK(s3.at_minus_q.tv1.exact.is_zero());
    CHECK(s3.checks.size() == 7);
  }
  const auto rp3 = verify_identities(fixture("RP3"), 4, 2);
  CHECK(rp3.all_passed());
  CHECK(rp3.at_q.tv1.exact == qpoly("q^3-q", 4));
  CHECK(rp3.at_minus_q.tv1.exact == -qpoly("q^3-q", 4));
}

TEST_CASE("worker count does not change results") {
  for (const char* name : {"L(7,2)", "S3-simplex"}) {
    const auto t = fixture(name);
    for (int r = 3; r <= 6; ++r) {
      const auto one = compute_report(t, QSpec::standard(r), 1);
      const auto many = compute_report(t, QSpec::standard(r), 8);
      CHECK(one.identical(many));
      CHECK(class_sums_serial(t, quantum_tables(QSpec::standard(r))) == many.sums);
    }
  }
}

TEST_CASE("relabeling leaves invariants unchanged") {
  const auto spec = catalog_lookup("L(5,2)").spec();
  std::vector<int> tets(spec.tetrahedra());
  for (int k = 0; k < spec.tetrahedra(); ++k) tets[k] = spec.tetrahedra() - 1 - k;
  std::vector<Perm4> verts(spec.tetrahedra(), Perm4{2, 0, 3, 1});
  const auto a = Triangulation::build(spec);
  const auto b = Triangulation::build(relabel(spec, tets, verts));
  for (int r = 3; r <= 7; ++r) {
    const auto ra = compute_report(a, QSpec::standard(r), 2);
    const auto rb = compute_report(b, QSpec::standard(r), 2);
    CHECK(ra.same_invariants(rb));
    CHECK(ra.sums == rb.sums);
  }
}

TEST_CASE("different triangulations of the same manifold") {
  for (int r = 3; r <= 7; ++r) {
    const auto a = compute_report(fixture("S3"), QSpec::standard(r), 2);
    const auto b = compute_report(fixture("S3-simplex"), QSpec::standard(r), 2);
    CHECK(a.same_invariants(b));
    const auto c = compute_report(fixture("L(7,2)"), QSpec::standard(r), 2);
    const auto d = compute_report(Triangulation::build(bipyramid_lens_space(7, 2)), QSpec::standard(r), 2);
    CHECK(c.same_invariants(d));
  }
}
