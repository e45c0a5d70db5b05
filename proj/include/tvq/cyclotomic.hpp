#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta), zeta a primitive 4r-th root
// of unity. The field contains both q = zeta^2 and sqrt(-1) = zeta^r for every r.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tvq {

class CycloField;

/// An element of Q(zeta), reduced modulo the 4r-th cyclotomic polynomial.
///
/// Stored as integer numerators over one positive common denominator with
/// gcd(numerators, denominator) = 1, so equal values have equal
/// representations. Elements refer to their field by pointer; fields come from
/// CycloField::get and live for the whole program.
class FieldElement {
 public:
  FieldElement() = default;

  const CycloField& field() const { return *field_; }
  bool bound() const { return field_ != nullptr; }

  std::span<const mpz_class> numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  /// Coefficient of zeta^k in the canonical representation.
  mpq_class coeff(int k) const;

  bool is_zero() const;
  bool is_one() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  /// Multiplication by a rational scalar.
  FieldElement scaled(const mpq_class& s) const;

  /// Throws ZeroInverse on zero.
  FieldElement inverse() const;
  FieldElement pow(long long e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Value at zeta = exp(2 pi i / order) in double precision.
  std::complex<double> evaluate() const;

  /// Debug rendering as a polynomial in z = zeta.
  std::string to_string() const;

 private:
  friend class CycloField;
  friend FieldElement conj_auto(const FieldElement&);
  FieldElement(const CycloField* f, std::vector<mpz_class> num, mpz_class den);
  void normalize();

  const CycloField* field_ = nullptr;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

/// Polynomial in q with rational coefficients, reduced modulo the 2r-th
/// cyclotomic polynomial. This is the canonical printed form of invariants.
struct QPolynomial {
  int r = 0;
  /// coeffs[k] multiplies q^k; size is totient(2r).
  std::vector<mpq_class> coeffs;

  bool is_zero() const;
  /// Highest power first with explicit signs, e.g. "-q^3+q^2+2".
  std::string to_string() const;
  /// Value at q = exp(i pi / r).
  std::complex<double> evaluate() const;

  /// Parses sums of terms c*q^k (e.g. "-2q^5+q^4-q^3+2q^2+3"), reducing
  /// modulo the 2r-th cyclotomic polynomial. Accepts "−" (U+2212) for minus.
  static QPolynomial parse(std::string_view text, int r);

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
};

/// The field Q(zeta_{4r}). Immutable; obtain instances through get().
class CycloField {
 public:
  /// Cached per r; thread-safe. Throws InvalidArgument for r < 3.
  static const CycloField& get(int r);

  CycloField(const CycloField&) = delete;
  CycloField& operator=(const CycloField&) = delete;

  int r() const { return r_; }
  /// Multiplicative order of zeta (= 4r).
  int order() const { return 4 * r_; }
  /// Degree over Q (= totient(4r)).
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Degree of the q-subfield Q(zeta^2) (= totient(2r)).
  int q_degree() const { return static_cast<int>(q_modulus_.size()) - 1; }

  /// 4r-th cyclotomic polynomial, lowest coefficient first; monic.
  const std::vector<mpz_class>& modulus() const { return modulus_; }
  /// 2r-th cyclotomic polynomial, lowest coefficient first; monic.
  const std::vector<mpz_class>& q_modulus() const { return q_modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(long v) const;
  FieldElement from_rational(const mpq_class& v) const;
  /// zeta^k for any integer k.
  FieldElement zeta_power(long long k) const;
  FieldElement zeta() const { return zeta_power(1); }
  /// Standard evaluation point q = zeta^2.
  FieldElement q_std() const { return zeta_power(2); }
  /// sqrt(-1) = zeta^r.
  FieldElement i_unit() const { return zeta_power(r_); }

  FieldElement from_q_polynomial(const QPolynomial& p) const;

 private:
  explicit CycloField(int r);
  friend class FieldElement;
  friend FieldElement operator*(const FieldElement&, const FieldElement&);
  friend FieldElement conj_auto(const FieldElement&);
  friend std::optional<QPolynomial> to_q_polynomial(const FieldElement&);

  int r_;
  std::vector<mpz_class> modulus_;
  std::vector<mpz_class> q_modulus_;
  // powers_[k] = canonical coefficients of zeta^k, 0 <= k < order.
  std::vector<std::vector<mpz_class>> powers_;
};

/// The field for r; same as CycloField::get.
inline const CycloField& field_new(int r) { return CycloField::get(r); }

/// Integer coefficients of the n-th cyclotomic polynomial, lowest first.
std::vector<mpz_class> cyclotomic_polynomial(int n);
int euler_totient(int n);

/// Expresses x in the basis 1, q, ..., q^{totient(2r)-1} of Q(q), q = zeta^2.
/// Empty when x does not lie in that subfield.
std::optional<QPolynomial> to_q_polynomial(const FieldElement& x);

/// Complex conjugation, realized as the automorphism zeta -> zeta^{-1}.
FieldElement conj_auto(const FieldElement& x);

/// Numeric value of p at q = exp(i pi / r).
std::complex<double> eval_numeric(const QPolynomial& p, int r);

}  // namespace tvq
