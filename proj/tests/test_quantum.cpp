#include "doctest.h"

#include "oracles.hpp"
#include "tvq/error.hpp"
#include "tvq/quantum.hpp"
#include "tvq/statesum.hpp"

using namespace tvq;

namespace {

std::vector<TetColors> admissible_tets(int r) {
  std::vector<TetColors> out;
  const int n = r - 1;
  TetColors t;
  for (t.c[0] = 0; t.c[0] < n; ++t.c[0])
    for (t.c[1] = 0; t.c[1] < n; ++t.c[1])
      for (t.c[2] = 0; t.c[2] < n; ++t.c[2])
        for (t.c[3] = 0; t.c[3] < n; ++t.c[3])
          for (t.c[4] = 0; t.c[4] < n; ++t.c[4])
            for (t.c[5] = 0; t.c[5] < n; ++t.c[5])
              if (admissible(r, t)) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("admissible triples") {
  CHECK(admissible(3, 0, 0, 0));
  CHECK(admissible(3, 1, 1, 0));
  CHECK_FALSE(admissible(3, 1, 1, 2));  // sum exceeds 2r-4
  CHECK(admissible(4, 1, 1, 2));
  CHECK_FALSE(admissible(5, 1, 0, 0));  // odd sum
  CHECK_FALSE(admissible(7, 4, 0, 2));  // triangle inequality
  CHECK(admissible(7, 4, 4, 2));
  // Symmetric in its arguments.
  for (int r = 3; r <= 7; ++r)
    for (int i = 0; i < r - 1; ++i)
      for (int j = 0; j < r - 1; ++j)
        for (int k = 0; k < r - 1; ++k) {
          CHECK(admissible(r, i, j, k) == admissible(r, j, k, i));
          CHECK(admissible(r, i, j, k) == admissible(r, j, i, k));
          CHECK(admissible(r, i, j, k) == oracle::triple_ok(r, i, j, k));
        }
}

TEST_CASE("quantum integers and factorials") {
  for (int r = 3; r <= 7; ++r) {
    const auto& tabs = quantum_tables(QSpec::standard(r));
    const auto& f = tabs.field();
    const FieldElement q = f.q_std();
    CHECK(tabs.q_int(0).is_zero());
    CHECK(tabs.q_int(1).is_one());
    CHECK(tabs.q_int(2) == q + q.inverse());
    CHECK(tabs.q_int(r).is_zero());
    CHECK_FALSE(tabs.q_int(r - 1).is_zero());
    CHECK(tabs.q_fact(0).is_one());
    CHECK(tabs.q_fact(2) == tabs.q_int(2));
    CHECK(tabs.q_fact(r).is_zero());
    for (int n = 0; n < r; ++n) CHECK_FALSE(tabs.q_fact(n).is_zero());
    oracle::Numeric num{r};
    for (int n = 0; n <= 2 * r; ++n) CHECK(std::abs(tabs.q_int(n).evaluate() - num.qint(n)) < 1e-9);
  }
}

TEST_CASE("theta and edge weights") {
  const auto& t5 = quantum_tables(QSpec::standard(5));
  CHECK(t5.delta_sq(0, 0, 0).is_one());
  for (int i = 0; i <= 3; ++i) CHECK(t5.delta_sq(i, 0, i) == t5.q_int(i + 1).inverse());
  CHECK(t5.delta_sq(2, 2, 2) == (t5.q_int(4) * t5.q_int(3) * t5.q_int(2)).inverse());
  CHECK(t5.weight_sq(0).is_one());
  CHECK(t5.weight_sq(1) == -t5.q_int(2));
  CHECK(t5.weight_sq(2) == t5.q_int(3));

  for (int r = 3; r <= 7; ++r) {
    const auto& tabs = quantum_tables(QSpec::standard(r));
    oracle::Numeric num{r};
    for (int i = 0; i < r - 1; ++i) {
      const auto w = num.w(i);
      CHECK(std::abs(tabs.weight_sq(i).evaluate() - w * w) < 1e-9);
      for (int j = 0; j < r - 1; ++j)
        for (int k = 0; k < r - 1; ++k) {
          if (!admissible(r, i, j, k)) continue;
          const auto d = num.delta(i, j, k);
          CHECK(std::abs(tabs.delta_sq(i, j, k).evaluate() - d * d) < 1e-9);
          // Real at q: fixed by conjugation.
          CHECK(conj_auto(tabs.delta_sq(i, j, k)) == tabs.delta_sq(i, j, k));
          CHECK(tabs.delta_sq(i, j, k) == tabs.delta_sq(j, k, i));
        }
    }
  }
}

TEST_CASE("omega") {
  CHECK(quantum_tables(QSpec::standard(3)).omega_sq() == CycloField::get(3).from_integer(2));
  CHECK(quantum_tables(QSpec::standard(4)).omega_sq() == CycloField::get(4).from_integer(4));
  for (int r = 3; r <= 7; ++r) {
    for (const auto& spec : {QSpec::standard(r), QSpec::mirrored(r)}) {
      const auto& tabs = quantum_tables(spec);
      CHECK(tabs.omega_sq() == tabs.omega0_sq().scaled(2));
      const double m = tabs.modulus_sq().evaluate().real();
      CHECK(m > 0);
      CHECK(std::abs(tabs.modulus_sq().evaluate().imag()) < 1e-12);
    }
  }
}

TEST_CASE("sign exponent") {
  CHECK(tet_sign_exponent(TetColors{{0, 0, 0, 0, 0, 0}}) == 0);
  CHECK(tet_sign_exponent(TetColors{{1, 1, 0, 1, 1, 0}}) == 0);
  CHECK(tet_sign_exponent(TetColors{{2, 2, 2, 2, 2, 2}}) == 0);
  CHECK(tet_sign_exponent(TetColors{{1, 1, 2, 1, 1, 0}}) == 2);
  CHECK(tet_sign_exponent(TetColors{{1, 1, 2, 1, 1, 2}}) == 0);
  const auto& tabs = quantum_tables(QSpec::standard(5));
  const auto& f = tabs.field();
  for (int s = 0; s < 4; ++s) CHECK(tabs.i_power_neg(s) * f.i_unit().pow(s) == f.one());
}

TEST_CASE("bracket examples") {
  const auto& t5 = quantum_tables(QSpec::standard(5));
  CHECK(t5.bracket6j(TetColors{{0, 0, 0, 0, 0, 0}}).is_one());

  // r = 5, all colors 2: z runs over {3, 4} and the z = 4 term drops out.
  const FieldElement expect5 = -(t5.q_fact(4) * (t5.q_fact(1) * t5.q_fact(1) * t5.q_fact(1)).inverse());
  CHECK(t5.bracket6j(TetColors{{2, 2, 2, 2, 2, 2}}) == expect5);

  // r = 7, (4,4,2;4,4,2): z over {5, 6}, the z = 6 term drops out.
  const auto& t7 = quantum_tables(QSpec::standard(7));
  const TetColors c7{{4, 4, 2, 4, 4, 2}};
  CHECK(t7.bracket6j(c7) == -(t7.q_fact(6) * t7.q_fact(3).inverse()));

  CHECK(t5.bracket6j(TetColors{{2, 2, 2, 2, 2, 2}}) ==
        oracle::exact_bracket(t5.field(), t5.u(), TetColors{{2, 2, 2, 2, 2, 2}}));
  CHECK(t7.bracket6j(c7) == oracle::exact_bracket(t7.field(), t7.u(), c7));
  CHECK_THROWS_AS(t5.bracket6j(TetColors{{1, 0, 0, 0, 0, 0}}), InvalidArgument);
}

TEST_CASE("bracket agrees with direct exact summation" * doctest::timeout(120)) {
  for (int r = 3; r <= 5; ++r) {
    for (const auto& spec : {QSpec::standard(r), QSpec::mirrored(r)}) {
      const auto& tabs = quantum_tables(spec);
      for (const auto& t : admissible_tets(r)) {
        CAPTURE(r);
        CHECK(tabs.bracket6j(t) == oracle::exact_bracket(tabs.field(), tabs.u(), t));
      }
    }
  }
}

TEST_CASE("bracket symmetry and floating point agreement") {
  for (int r = 3; r <= 7; ++r) {
    const auto& tabs = quantum_tables(QSpec::standard(r));
    oracle::Numeric num{r};
    for (const auto& t : admissible_tets(r)) {
      const auto& b = tabs.bracket6j(t);
      const auto [i, j, k, l, m, n] = t.c;
      CHECK(tabs.bracket6j(TetColors{{j, i, k, m, l, n}}) == b);
      CHECK(tabs.bracket6j(TetColors{{l, m, k, i, j, n}}) == b);
      for (const auto& img : tetrahedral_images(t)) CHECK(admissible(r, img));
      CHECK(conj_auto(b) == b);
      CHECK(std::abs(b.evaluate().real() - num.bracket(i, j, k, l, m, n)) < 1e-9 * (1 + std::abs(b.evaluate())));
    }
  }
}

TEST_CASE("no denominator vanishes for admissible colors up to r = 7") {
  for (int r = 3; r <= 7; ++r) {
    for (const auto& spec : {QSpec::standard(r), QSpec::mirrored(r)}) {
      const auto& tabs = quantum_tables(spec);
      int count = 0;
      for (const auto& t : admissible_tets(r)) {
        CHECK_NOTHROW(tabs.bracket6j(t));
        ++count;
      }
      CHECK(count > 0);
    }
  }
}

TEST_CASE("sign flip at -q") {
  for (int r = 3; r <= 7; ++r) {
    const auto& a = quantum_tables(QSpec::standard(r));
    const auto& b = quantum_tables(QSpec::mirrored(r));
    CAPTURE(r);
    for (int n = 0; n <= 2 * r; ++n) {
      const FieldElement s = (n % 2 == 1) ? b.q_int(n) : -b.q_int(n);
      CHECK(a.q_int(n) == s);
    }
    for (int n = 0; n < r; ++n) {
      // [n]! picks up (-1)^{n(n-1)/2}.
      const bool neg = (n * (n - 1) / 2) % 2 == 1;
      CHECK(a.q_fact(n) == (neg ? -b.q_fact(n) : b.q_fact(n)));
    }
    for (int i = 0; i < r - 1; ++i) CHECK(a.weight_sq(i) == (i % 2 ? -b.weight_sq(i) : b.weight_sq(i)));
    for (int i = 0; i < r - 1; ++i)
      for (int j = 0; j < r - 1; ++j)
        for (int k = 0; k < r - 1; ++k) {
          if (!admissible(r, i, j, k)) continue;
          const bool even = i % 2 == 0 && j % 2 == 0 && k % 2 == 0;
          CHECK(a.delta_sq(i, j, k) == (even ? b.delta_sq(i, j, k) : -b.delta_sq(i, j, k)));
        }
  }
}

TEST_CASE("weight identities") {
  for (int r = 3; r <= 7; ++r) {
    for (const auto& spec : {QSpec::standard(r), QSpec::mirrored(r)}) {
      const auto rep = check_weight_identities(quantum_tables(spec));
      CAPTURE(r);
      CHECK(rep.even_fourth_powers);
      CHECK(rep.even_loop);
      CHECK(rep.full_loop);
    }
  }
  // The even loop constant is omega_0^2.
  for (int r = 3; r <= 7; ++r) {
    const auto& tabs = quantum_tables(QSpec::standard(r));
    FieldElement s = tabs.field().zero();
    for (int k = 0; k < r - 1; k += 2) s += tabs.weight_sq(k) * tabs.weight_sq(k);
    CHECK(s == tabs.omega0_sq());
  }
}

TEST_CASE("u and u^-1 give the same tables") {
  for (int r = 3; r <= 7; ++r) {
    const auto& f = CycloField::get(r);
    const QuantumTables a(f, f.q_std());
    const QuantumTables b(f, f.q_std().inverse());
    for (int n = 0; n <= 2 * r; ++n) CHECK(a.q_int(n) == b.q_int(n));
    for (int i = 0; i < r - 1; ++i) CHECK(a.weight_sq(i) == b.weight_sq(i));
    for (const auto& t : admissible_tets(r)) {
      if (t.c[0] > 2) continue;  // a sample is enough
      CHECK(a.bracket6j(t) == b.bracket6j(t));
      CHECK(a.delta_sq(t.i(), t.j(), t.k()) == b.delta_sq(t.i(), t.j(), t.k()));
    }
  }
}
