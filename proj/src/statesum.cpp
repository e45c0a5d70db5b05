#include "tvq/statesum.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "tvq/error.hpp"

namespace tvq {

namespace {

int zeta_order(int exponent, int order) { return order / std::gcd(((exponent % order) + order) % order, order); }

ClassSums zero_sums(const CycloField& f) {
  ClassSums s;
  s.sum0 = f.zero();
  s.sum1 = f.zero();
  s.sumE = f.zero();
  return s;
}

void accumulate(ClassSums& acc, const ClassSums& part) {
  acc.sum0 += part.sum0;
  acc.sum1 += part.sum1;
  acc.sumE += part.sumE;
  acc.count0 += part.count0;
  acc.count1 += part.count1;
  acc.countE += part.countE;
}

struct SumVisitor {
  const Triangulation& tri;
  const QuantumTables& tables;
  ClassSums& out;

  void operator()(std::span<const int> coloring) const {
    const ColoringClass cls = classify(tri, coloring);
    const FieldElement w = coloring_weight(tri, coloring, tables);
    switch (cls) {
      case ColoringClass::Adm0:
        ++out.count0;
        out.sum0 += w;
        out.sumE += w;
        break;
      case ColoringClass::AdmE:
        ++out.countE;
        out.sumE += w;
        break;
      case ColoringClass::Adm1:
        ++out.count1;
        out.sum1 += w;
        break;
    }
  }
};

Invariant make_invariant(FieldElement x) {
  Invariant inv;
  inv.poly = to_q_polynomial(x);
  inv.value = x.evaluate();
  inv.exact = std::move(x);
  return inv;
}

std::string describe(const FieldElement& x) {
  if (auto p = to_q_polynomial(x)) return p->to_string();
  return x.to_string();
}

}  // namespace

QSpec QSpec::standard(int r) {
  const CycloField& f = CycloField::get(r);
  QSpec s;
  s.r = r;
  s.mirror = false;
  s.u = f.q_std();
  s.primitive = zeta_order(2, f.order()) == 2 * r;
  return s;
}

QSpec QSpec::mirrored(int r) {
  const CycloField& f = CycloField::get(r);
  QSpec s;
  s.r = r;
  s.mirror = true;
  s.u = -f.q_std();
  // -zeta^2 = zeta^{2 + 2r}.
  s.primitive = zeta_order(2 + 2 * r, f.order()) == 2 * r;
  return s;
}

const QuantumTables& quantum_tables(const QSpec& spec) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::unique_ptr<QuantumTables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{spec.r, spec.mirror}];
  if (!slot) slot = std::make_unique<QuantumTables>(CycloField::get(spec.r), spec.u);
  return *slot;
}

const char* to_string(ColoringClass c) {
  switch (c) {
    case ColoringClass::Adm0:
      return "Adm0";
    case ColoringClass::Adm1:
      return "Adm1";
    case ColoringClass::AdmE:
      return "AdmE";
  }
  return "?";
}

ColoringEnumerator::ColoringEnumerator(const Triangulation& tri, int r) : r_(r) {
  if (r < 3) throw InvalidArgument("r must be at least 3");
  const int ne = tri.num_edges();
  const int nf = tri.num_faces();
  face_edges_.reserve(nf);
  std::vector<int> incidence(ne, 0);
  for (int f = 0; f < nf; ++f) {
    face_edges_.push_back(tri.face_edges(f));
    for (int e : tri.face_edges(f)) ++incidence[e];
  }
  order_.resize(ne);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return incidence[a] > incidence[b]; });

  std::vector<int> position(ne);
  for (int p = 0; p < ne; ++p) position[order_[p]] = p;
  checks_.assign(ne, {});
  for (int f = 0; f < nf; ++f) {
    int last = 0;
    for (int e : face_edges_[f]) last = std::max(last, position[e]);
    checks_[last].push_back(f);
  }
}

ColoringClass classify(const Triangulation& tri, std::span<const int> coloring) {
  const OddCounts c = counts_for_coloring(tri, coloring);
  if (c.f == 0) return ColoringClass::Adm0;
  return (c.v - c.t + c.f) % 2 == 0 ? ColoringClass::AdmE : ColoringClass::Adm1;
}

FieldElement coloring_weight(const Triangulation& tri, std::span<const int> coloring, const QuantumTables& tables) {
  FieldElement w = tables.field().one();
  int sign_exponent = 0;
  for (int t = 0; t < tri.num_tetrahedra(); ++t) {
    TetColors tc;
    const auto& edges = tri.tet_edges(t);
    for (int s = 0; s < 6; ++s) tc.c[s] = coloring[edges[s]];
    const FieldElement& b = tables.bracket6j(tc);
    if (b.is_zero()) return tables.field().zero();
    w *= b;
    sign_exponent += tet_sign_exponent(tc);
  }
  for (int e = 0; e < tri.num_edges(); ++e) w *= tables.weight_sq(coloring[e]);
  for (int f = 0; f < tri.num_faces(); ++f) {
    const auto& e = tri.face_edges(f);
    w *= tables.delta_sq(coloring[e[0]], coloring[e[1]], coloring[e[2]]);
  }
  if (sign_exponent % 4 != 0) w *= tables.i_power_neg(sign_exponent % 4);
  return w;
}

ClassSums class_sums_serial(const Triangulation& tri, const QuantumTables& tables) {
  ClassSums out = zero_sums(tables.field());
  ColoringEnumerator(tri, tables.r()).for_each(SumVisitor{tri, tables, out});
  return out;
}

ClassSums class_sums(const Triangulation& tri, const QuantumTables& tables, int workers) {
  const ColoringEnumerator en(tri, tables.r());
  const int colors = en.colors();
  std::vector<ClassSums> parts(colors, zero_sums(tables.field()));
  std::vector<std::exception_ptr> errors(colors);

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers))
  for (int c = 0; c < colors; ++c) {
    try {
      en.for_each_with_first(c, SumVisitor{tri, tables, parts[c]});
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ClassSums out = zero_sums(tables.field());
  for (const auto& p : parts) accumulate(out, p);
  return out;
}

std::vector<std::pair<std::string, const Invariant*>> InvariantReport::named() const {
  return {{"TV_0", &tv0},  {"TV_1", &tv1},      {"TV_2", &tv2},      {"TV", &tv},
          {"TV*", &tvstar}, {"TV*_0", &tvstar0}, {"TV*_1", &tvstar1}, {"TV*_e", &tvstarE}};
}

bool InvariantReport::same_invariants(const InvariantReport& o) const {
  if (r != o.r || mirror != o.mirror) return false;
  const auto a = named();
  const auto b = o.named();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a[k].second->exact == b[k].second->exact) || a[k].second->poly != b[k].second->poly) return false;
  }
  return true;
}

bool InvariantReport::identical(const InvariantReport& o) const {
  return same_invariants(o) && vertices == o.vertices && sums == o.sums && checks == o.checks;
}

InvariantReport normalize(const ClassSums& sums, const Triangulation& tri, const QuantumTables& tables) {
  InvariantReport rep;
  rep.r = tables.r();
  rep.mirror = tables.u() != tables.field().q_std();
  rep.vertices = tri.num_vertices();
  rep.sums = sums;

  const int a = tri.num_vertices();
  const FieldElement& om = tables.omega_sq();
  const FieldElement& om0 = tables.omega0_sq();
  const FieldElement om_neg = om.pow(-a);
  const FieldElement om0_neg = om0.pow(-a);

  const FieldElement star0 = om0_neg * sums.sum0;
  const FieldElement star1 = om_neg * sums.sum1;
  const FieldElement starE = om_neg * sums.sumE;
  const FieldElement tv0 = om0 * star0;
  const FieldElement tv1 = om * star1;
  const FieldElement tv2 = om * starE - tv0;
  const FieldElement tv = tv0 + tv1 + tv2;
  const FieldElement star = tv * om.inverse();

  rep.tvstar0 = make_invariant(star0);
  rep.tvstar1 = make_invariant(star1);
  rep.tvstarE = make_invariant(starE);
  rep.tv0 = make_invariant(tv0);
  rep.tv1 = make_invariant(tv1);
  rep.tv2 = make_invariant(tv2);
  rep.tv = make_invariant(tv);
  rep.tvstar = make_invariant(star);

  rep.checks.sum_of_summands = rep.tv.exact == rep.tv0.exact + rep.tv1.exact + rep.tv2.exact;
  rep.checks.star_split = rep.tvstar.exact == rep.tvstarE.exact + rep.tvstar1.exact;
  rep.checks.rational = to_q_polynomial(sums.sum0) && to_q_polynomial(sums.sum1) && to_q_polynomial(sums.sumE);
  rep.checks.real = true;
  for (const auto& [name, inv] : rep.named()) {
    if (!(conj_auto(inv->exact) == inv->exact)) rep.checks.real = false;
  }
  return rep;
}

InvariantReport compute_report(const Triangulation& tri, const QSpec& spec, int workers) {
  const auto start = std::chrono::steady_clock::now();
  const QuantumTables& tables = quantum_tables(spec);
  const ClassSums sums = workers <= 1 ? class_sums_serial(tri, tables) : class_sums(tri, tables, workers);
  InvariantReport rep = normalize(sums, tri, tables);
  rep.workers = std::max(1, workers);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

IdentityReport verify_identities(const Triangulation& tri, int r, int workers) {
  IdentityReport out;
  out.r = r;
  out.at_q = compute_report(tri, QSpec::standard(r), workers);
  out.at_minus_q = compute_report(tri, QSpec::mirrored(r), workers);
  const InvariantReport& p = out.at_q;
  const InvariantReport& m = out.at_minus_q;

  auto check = [&](std::string name, const FieldElement& lhs, const FieldElement& rhs) {
    IdentityCheck c;
    c.name = std::move(name);
    c.passed = lhs == rhs;
    if (!c.passed) c.detail = describe(lhs) + " != " + describe(rhs);
    out.checks.push_back(std::move(c));
  };

  check("TV = TV_0 + TV_1 + TV_2 at q", p.tv.exact, p.tv0.exact + p.tv1.exact + p.tv2.exact);
  check("TV = TV_0 + TV_1 + TV_2 at -q", m.tv.exact, m.tv0.exact + m.tv1.exact + m.tv2.exact);
  check("TV_0(q) = TV_0(-q)", p.tv0.exact, m.tv0.exact);
  check("TV_1(q) = -TV_1(-q)", p.tv1.exact, -m.tv1.exact);
  check("TV_2(q) = TV_2(-q)", p.tv2.exact, m.tv2.exact);
  const mpq_class half(1, 2);
  check("TV_0 + TV_2 = (TV(q) + TV(-q))/2", p.tv0.exact + p.tv2.exact, (p.tv.exact + m.tv.exact).scaled(half));
  check("TV_1 = (TV(q) - TV(-q))/2", p.tv1.exact, (p.tv.exact - m.tv.exact).scaled(half));
  return out;
}

}  // namespace tvq
