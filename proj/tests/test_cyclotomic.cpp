#include "doctest.h"

#include <random>

#include "tvq/cyclotomic.hpp"
#include "tvq/error.hpp"

using namespace tvq;

namespace {

FieldElement random_element(const CycloField& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  FieldElement x = f.zero();
  for (int k = 0; k < f.degree(); ++k) x += f.zeta_power(k).scaled(mpq_class(coef(rng), den(rng)));
  return x;
}

}  // namespace

TEST_CASE("field sizes") {
  CHECK(CycloField::get(3).order() == 12);
  CHECK(CycloField::get(3).degree() == 4);
  CHECK(CycloField::get(4).order() == 16);
  CHECK(CycloField::get(4).degree() == 8);
  CHECK(CycloField::get(7).order() == 28);
  CHECK(CycloField::get(7).degree() == 12);
  CHECK(CycloField::get(7).q_degree() == 6);
  CHECK(&field_new(5) == &CycloField::get(5));
  CHECK_THROWS_AS(CycloField::get(2), InvalidArgument);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<mpz_class>{1, 0, 0, 0, 1});
  CHECK(euler_totient(28) == 12);
  CHECK(euler_totient(14) == 6);
}

TEST_CASE("basic identities") {
  for (int r = 3; r <= 7; ++r) {
    const auto& f = CycloField::get(r);
    CAPTURE(r);
    CHECK(f.one().inverse().is_one());
    CHECK(f.zeta().pow(4 * r).is_one());
    CHECK_FALSE(f.zeta().pow(2 * r).is_one());
    CHECK(f.i_unit() * f.i_unit() == f.from_integer(-1));
    CHECK(f.q_std().pow(r) == f.from_integer(-1));
    // q^2 has order exactly r.
    for (int k = 1; k < r; ++k) CHECK_FALSE(f.q_std().pow(2 * k).is_one());
    CHECK(f.zeta_power(-1) * f.zeta() == f.one());
  }
}

TEST_CASE("(q - q^-1)^2 at r = 3") {
  const auto& f = CycloField::get(3);
  const FieldElement q = f.q_std();
  const FieldElement d = q - q.inverse();
  CHECK(d * d == f.from_integer(-3));
}

TEST_CASE("inverse of zero throws") { CHECK_THROWS_AS(CycloField::get(5).zero().inverse(), ZeroInverse); }

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(12345);
  for (int r = 3; r <= 7; ++r) {
    const auto& f = CycloField::get(r);
    for (int trial = 0; trial < 20; ++trial) {
      const FieldElement a = random_element(f, rng);
      const FieldElement b = random_element(f, rng);
      const FieldElement c = random_element(f, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(std::abs((a * b).evaluate() - a.evaluate() * b.evaluate()) < 1e-9 * (1 + std::abs(a.evaluate() * b.evaluate())));
      CHECK(conj_auto(conj_auto(a)) == a);
      CHECK(conj_auto(a * b) == conj_auto(a) * conj_auto(b));
      CHECK(std::abs(conj_auto(a).evaluate() - std::conj(a.evaluate())) < 1e-9 * (1 + std::abs(a.evaluate())));
    }
  }
}

TEST_CASE("canonical representation") {
  const auto& f = CycloField::get(5);
  const FieldElement a = f.zeta().scaled(mpq_class(2, 6));
  const FieldElement b = f.zeta().scaled(mpq_class(1, 3));
  CHECK(a == b);
  CHECK(a.denominator() == 3);
  CHECK(f.zero().is_zero());
  CHECK(f.from_rational(mpq_class(4, 2)) == f.from_integer(2));
}

TEST_CASE("to_q_polynomial") {
  const auto& f5 = CycloField::get(5);
  auto one = to_q_polynomial(f5.one());
  REQUIRE(one);
  CHECK(one->to_string() == "1");
  auto q3 = to_q_polynomial(f5.q_std().pow(3));
  REQUIRE(q3);
  CHECK(q3->to_string() == "q^3");
  CHECK_FALSE(to_q_polynomial(f5.zeta()));
  CHECK_FALSE(to_q_polynomial(CycloField::get(3).i_unit()));
  // i = q^{r/2} lies in Q(q) for even r.
  CHECK(to_q_polynomial(CycloField::get(4).i_unit()));
  auto zero = to_q_polynomial(f5.zero());
  REQUIRE(zero);
  CHECK(zero->to_string() == "0");

  std::mt19937 rng(7);
  for (int r = 3; r <= 7; ++r) {
    const auto& f = CycloField::get(r);
    for (int trial = 0; trial < 10; ++trial) {
      // Random polynomial in q round-trips through the field.
      QPolynomial p{r, std::vector<mpq_class>(f.q_degree())};
      std::uniform_int_distribution<int> coef(-5, 5);
      for (auto& c : p.coeffs) c = coef(rng);
      auto back = to_q_polynomial(f.from_q_polynomial(p));
      REQUIRE(back);
      CHECK(*back == p);
    }
  }
}

TEST_CASE("polynomial parsing and printing") {
  const auto p = QPolynomial::parse("-q^3+q^2+2", 5);
  CHECK(p.to_string() == "-q^3+q^2+2");
  CHECK(QPolynomial::parse("−2q^5+q^4−q^3+2q^2+3", 7).to_string() == "-2q^5+q^4-q^3+2q^2+3");
  CHECK(QPolynomial::parse("0", 4).is_zero());
  CHECK(QPolynomial::parse("q", 4).to_string() == "q");
  // q^2 = q - 1 at r = 3.
  CHECK(QPolynomial::parse("q^2", 3) == QPolynomial::parse("q-1", 3));
  QPolynomial frac{5, {mpq_class(3, 4), mpq_class(-1, 2), 0, 0}};
  CHECK(QPolynomial::parse(frac.to_string(), 5) == frac);
  CHECK_THROWS_AS(QPolynomial::parse("q^^2", 5), InvalidArgument);
  CHECK_THROWS_AS(QPolynomial::parse("", 5), InvalidArgument);
}

TEST_CASE("numeric evaluation") {
  CHECK(eval_numeric(QPolynomial::parse("-q^3+q^2+2", 5), 5).real() == doctest::Approx(2.618).epsilon(1e-4));
  CHECK(std::abs(eval_numeric(QPolynomial::parse("-q^3+q^2+2", 5), 5).imag()) < 1e-12);
  CHECK(eval_numeric(QPolynomial::parse("-2q^5+q^4-q^3+2q^2+3", 7), 7).real() ==
        doctest::Approx(5.049).epsilon(1e-4));
  // Phi_2r vanishes at q.
  for (int r = 3; r <= 7; ++r) {
    const auto& f = CycloField::get(r);
    std::complex<double> acc = 0.0;
    const std::complex<double> q = std::polar(1.0, std::acos(-1.0) / r);
    const auto& m = f.q_modulus();
    for (std::size_t k = 0; k < m.size(); ++k) acc += m[k].get_d() * std::pow(q, static_cast<int>(k));
    CHECK(std::abs(acc) < 1e-9);
  }
}

TEST_CASE("conjugation") {
  for (int r = 3; r <= 7; ++r) {
    const auto& f = CycloField::get(r);
    CHECK(conj_auto(f.one()) == f.one());
    CHECK(conj_auto(f.zeta()) * f.zeta() == f.one());
    const FieldElement s = f.q_std() + f.q_std().inverse();
    CHECK(conj_auto(s) == s);
    CHECK(conj_auto(f.i_unit()) == -f.i_unit());
  }
}
