#include "tvq/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "tvq/error.hpp"

namespace tvq {

namespace {

using IntPoly = std::vector<mpz_class>;
using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree_of(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

// Remainder of p modulo a monic integer polynomial.
void reduce_mod_monic(RatPoly& p, const IntPoly& monic) {
  const int d = static_cast<int>(monic.size()) - 1;
  for (int k = static_cast<int>(p.size()) - 1; k >= d; --k) {
    if (p[k] == 0) continue;
    const mpq_class c = p[k];
    for (int j = 0; j <= d; ++j) p[k - d + j] -= c * monic[j];
  }
  if (static_cast<int>(p.size()) > d) p.resize(d);
  p.resize(d, mpq_class(0));
}

// Quotient and remainder of a by b over Q; b nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  const int db = degree_of(b);
  RatPoly quot(std::max(0, degree_of(a) - db + 1), mpq_class(0));
  while (!a.empty() && degree_of(a) >= db) {
    const int shift = degree_of(a) - db;
    const mpq_class c = a.back() / b.back();
    quot[shift] = c;
    for (int j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  return {std::move(quot), std::move(a)};
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly out = a;
  if (!q.empty() && !b.empty()) {
    out.resize(std::max(out.size(), q.size() + b.size() - 1), mpq_class(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
  }
  trim(out);
  return out;
}

std::string rational_text(const mpq_class& v) { return v.get_str(); }

}  // namespace

int euler_totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic polynomial index must be positive");
  // x^n - 1 = prod_{d | n} Phi_d(x); divide out the proper divisors.
  RatPoly acc(n + 1, mpq_class(0));
  acc[0] = -1;
  acc[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    IntPoly phi_d = cyclotomic_polynomial(d);
    RatPoly divisor(phi_d.begin(), phi_d.end());
    auto [q, rem] = divmod(acc, divisor);
    assert(rem.empty());
    acc = std::move(q);
  }
  IntPoly out;
  out.reserve(acc.size());
  for (const auto& c : acc) {
    assert(c.get_den() == 1);
    out.emplace_back(c.get_num());
  }
  return out;
}

// ---------------------------------------------------------------------------
// CycloField

CycloField::CycloField(int r) : r_(r), modulus_(cyclotomic_polynomial(4 * r)), q_modulus_(cyclotomic_polynomial(2 * r)) {
  const int d = degree();
  const int n = order();
  powers_.assign(n, IntPoly(d, mpz_class(0)));
  powers_[0][0] = 1;
  for (int k = 1; k < n; ++k) {
    // zeta^k = zeta * zeta^{k-1}; shift, then fold the x^d term back.
    const IntPoly& prev = powers_[k - 1];
    IntPoly& cur = powers_[k];
    const mpz_class top = prev[d - 1];
    for (int j = d - 1; j >= 1; --j) cur[j] = prev[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < d; ++j) cur[j] -= top * modulus_[j];
    }
  }
}

const CycloField& CycloField::get(int r) {
  if (r < 3) throw InvalidArgument("r must be at least 3, got " + std::to_string(r));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, std::unique_ptr<CycloField>(new CycloField(r))).first;
  return *it->second;
}

FieldElement CycloField::zero() const { return FieldElement(this, IntPoly(degree(), mpz_class(0)), 1); }

FieldElement CycloField::one() const { return from_integer(1); }

FieldElement CycloField::from_integer(long v) const {
  IntPoly num(degree(), mpz_class(0));
  num[0] = v;
  return FieldElement(this, std::move(num), 1);
}

FieldElement CycloField::from_rational(const mpq_class& v) const {
  IntPoly num(degree(), mpz_class(0));
  num[0] = v.get_num();
  FieldElement out(this, std::move(num), v.get_den());
  out.normalize();
  return out;
}

FieldElement CycloField::zeta_power(long long k) const {
  const long long n = order();
  const long long idx = ((k % n) + n) % n;
  return FieldElement(this, powers_[idx], 1);
}

FieldElement CycloField::from_q_polynomial(const QPolynomial& p) const {
  if (p.r != r_) throw InvalidArgument("q-polynomial belongs to a different r");
  FieldElement acc = zero();
  for (size_t k = 0; k < p.coeffs.size(); ++k) {
    if (p.coeffs[k] == 0) continue;
    acc += zeta_power(2 * static_cast<long long>(k)).scaled(p.coeffs[k]);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const CycloField* f, std::vector<mpz_class> num, mpz_class den)
    : field_(f), num_(std::move(num)), den_(std::move(den)) {}

void FieldElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  bool all_zero = std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

mpq_class FieldElement::coeff(int k) const {
  mpq_class v(num_.at(k), den_);
  v.canonicalize();
  return v;
}

bool FieldElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (den_ != 1 || num_.empty() || num_[0] != 1) return false;
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  assert(field_ == o.field_);
  if (den_ == o.den_) {
    for (size_t k = 0; k < num_.size(); ++k) num_[k] += o.num_[k];
  } else {
    for (size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= o.den_;
      mpz_addmul(num_[k].get_mpz_t(), o.num_[k].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  assert(a.field_ == b.field_);
  const CycloField& f = *a.field_;
  const int d = f.degree();
  std::vector<mpz_class> prod(2 * d - 1, mpz_class(0));
  for (int i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  std::vector<mpz_class> num(prod.begin(), prod.begin() + d);
  for (int k = d; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& red = f.powers_[k];
    for (int j = 0; j < d; ++j) {
      if (red[j] != 0) mpz_addmul(num[j].get_mpz_t(), prod[k].get_mpz_t(), red[j].get_mpz_t());
    }
  }
  FieldElement out(&f, std::move(num), a.den_ * b.den_);
  out.normalize();
  return out;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  *this = *this * o;
  return *this;
}

FieldElement FieldElement::scaled(const mpq_class& s) const {
  FieldElement out = *this;
  for (auto& c : out.num_) c *= s.get_num();
  out.den_ *= s.get_den();
  out.normalize();
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ZeroInverse();
  const CycloField& f = *field_;
  // Extended Euclid on (modulus, x) over Q: track s with s * x = r (mod modulus).
  RatPoly r0(f.modulus_.begin(), f.modulus_.end());
  RatPoly r1;
  for (const auto& c : num_) r1.emplace_back(c);
  trim(r1);
  RatPoly s0;
  RatPoly s1{mpq_class(1)};
  while (degree_of(r1) > 0) {
    auto [quot, rem] = divmod(r0, r1);
    RatPoly s2 = sub_mul(s0, quot, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant c; inverse of the numerator polynomial is s1 / c.
  const mpq_class c = r1.at(0);
  mpz_class lcm_den = 1;
  for (auto& v : s1) {
    v /= c;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<mpz_class> num(f.degree(), mpz_class(0));
  for (size_t k = 0; k < s1.size(); ++k) num[k] = s1[k].get_num() * (lcm_den / s1[k].get_den());
  // (num / lcm_den) inverts the numerator; multiply back by our denominator.
  FieldElement out(&f, std::move(num), lcm_den);
  for (auto& v : out.num_) v *= den_;
  out.normalize();
  return out;
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

std::complex<double> FieldElement::evaluate() const {
  const int n = field_->order();
  std::complex<double> acc = 0.0;
  for (size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    mpq_class c(num_[k], den_);
    c.canonicalize();
    acc += c.get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
  }
  return acc;
}

std::string FieldElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << coeff(static_cast<int>(k)).get_str();
    if (k > 0) out << "*z^" << k;
  }
  if (first) out << "0";
  return out.str();
}

FieldElement conj_auto(const FieldElement& x) {
  const CycloField& f = x.field();
  const int n = f.order();
  const int d = f.degree();
  std::vector<mpz_class> num(d, mpz_class(0));
  for (int k = 0; k < d; ++k) {
    if (x.num_[k] == 0) continue;
    const auto& img = f.powers_[(n - k) % n];
    for (int j = 0; j < d; ++j) {
      if (img[j] != 0) mpz_addmul(num[j].get_mpz_t(), x.num_[k].get_mpz_t(), img[j].get_mpz_t());
    }
  }
  FieldElement out(&f, std::move(num), x.den_);
  out.normalize();
  return out;
}

std::optional<QPolynomial> to_q_polynomial(const FieldElement& x) {
  const CycloField& f = x.field();
  const int d = f.degree();
  const int m = f.q_degree();
  // Augmented system: column k is zeta^{2k}, last column is x.
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(m + 1));
  for (int row = 0; row < d; ++row) {
    for (int k = 0; k < m; ++k) a[row][k] = f.powers_[2 * k][row];
    a[row][m] = x.coeff(row);
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < d; ++col) {
    int sel = row;
    while (sel < d && a[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(a[sel], a[row]);
    const mpq_class inv = 1 / a[row][col];
    for (int c = col; c <= m; ++c) a[row][c] *= inv;
    for (int other = 0; other < d; ++other) {
      if (other == row || a[other][col] == 0) continue;
      const mpq_class factor = a[other][col];
      for (int c = col; c <= m; ++c) a[other][c] -= factor * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int rest = row; rest < d; ++rest) {
    if (a[rest][m] != 0) return std::nullopt;
  }
  QPolynomial p{f.r(), std::vector<mpq_class>(m, mpq_class(0))};
  for (size_t i = 0; i < pivot_col.size(); ++i) p.coeffs[pivot_col[i]] = a[i][m];
  return p;
}

// ---------------------------------------------------------------------------
// QPolynomial

bool QPolynomial::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const mpq_class& c) { return c == 0; });
}

std::string QPolynomial::to_string() const {
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const mpq_class& c = coeffs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const bool integral = mag.get_den() == 1;
    if (k == 0) {
      out += rational_text(mag);
    } else {
      if (mag != 1) out += integral ? rational_text(mag) : "(" + rational_text(mag) + ")";
      out += "q";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::complex<double> QPolynomial::evaluate() const { return eval_numeric(*this, r); }

std::complex<double> eval_numeric(const QPolynomial& p, int r) {
  std::complex<double> acc = 0.0;
  for (size_t k = 0; k < p.coeffs.size(); ++k) {
    if (p.coeffs[k] == 0) continue;
    acc += p.coeffs[k].get_d() * std::polar(1.0, std::numbers::pi * static_cast<double>(k) / r);
  }
  return acc;
}

QPolynomial QPolynomial::parse(std::string_view text, int r) {
  std::string s;
  for (size_t i = 0; i < text.size(); ++i) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
    } else if (!std::isspace(ch) && ch != '*') {
      s += static_cast<char>(ch);
    }
  }
  if (s.empty()) throw InvalidArgument("empty polynomial");

  auto fail = [&](size_t pos) {
    throw InvalidArgument("cannot parse polynomial '" + std::string(text) + "' at offset " + std::to_string(pos));
  };
  auto read_int = [&](size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail(pos);
    return mpz_class(s.substr(start, pos - start));
  };

  RatPoly acc;
  size_t pos = 0;
  while (pos < s.size()) {
    mpq_class sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      fail(pos);
    }
    mpq_class coef = 1;
    bool have_coef = false;
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      mpz_class nu = read_int(pos);
      mpz_class de = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        de = read_int(pos);
      }
      if (pos >= s.size() || s[pos] != ')') fail(pos);
      ++pos;
      coef = mpq_class(nu, de);
      have_coef = true;
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      mpz_class nu = read_int(pos);
      mpz_class de = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        de = read_int(pos);
      }
      coef = mpq_class(nu, de);
      have_coef = true;
    }
    coef.canonicalize();
    long power = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        power = read_int(pos).get_si();
      }
    } else if (!have_coef) {
      fail(pos);
    }
    if (static_cast<long>(acc.size()) <= power) acc.resize(power + 1, mpq_class(0));
    acc[power] += sign * coef;
  }
  const IntPoly phi = cyclotomic_polynomial(2 * r);
  if (acc.size() < phi.size() - 1) acc.resize(phi.size() - 1, mpq_class(0));
  reduce_mod_monic(acc, phi);
  return QPolynomial{r, std::move(acc)};
}

}  // namespace tvq
