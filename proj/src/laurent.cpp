#include "quflag/laurent.hpp"

#include <sstream>

namespace quflag {

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second == 1;
}

long LaurentPoly::min_exp() const {
  if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

const BigInt& LaurentPoly::leading() const {
  if (is_zero()) throw std::logic_error("leading of zero polynomial");
  return coeffs_.rbegin()->second;
}

const BigInt& LaurentPoly::trailing() const {
  if (is_zero()) throw std::logic_error("trailing of zero polynomial");
  return coeffs_.begin()->second;
}

BigInt LaurentPoly::coeff(long e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::set_term(long e, const BigInt& c) {
  if (c == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  if (is_zero() || o.is_zero()) return r;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) {
      long e = e1 + e2;
      auto it = r.coeffs_.find(e);
      if (it == r.coeffs_.end()) {
        BigInt p = c1 * c2;
        if (p != 0) r.coeffs_.emplace(e, std::move(p));
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.coeffs_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::mul_scalar(const BigInt& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::mul_monomial(long e) const {
  LaurentPoly r;
  for (const auto& [e0, v] : coeffs_) r.coeffs_.emplace(e0 + e, v);
  return r;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : coeffs_) {
    g = big_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::div_scalar_exact(const BigInt& c) const {
  if (c == 0) throw std::invalid_argument("division by zero scalar");
  LaurentPoly r;
  for (const auto& [e, v] : coeffs_) {
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    if (rem != 0) throw std::invalid_argument("inexact scalar division");
    r.coeffs_.emplace(e, q);
  }
  return r;
}

LaurentPoly LaurentPoly::primitive_part() const {
  if (is_zero()) return LaurentPoly();
  BigInt c = content();
  if (leading() < 0) c = -c;
  return div_scalar_exact(c).mul_monomial(-min_exp());
}

bool LaurentPoly::divides(const LaurentPoly& d, LaurentPoly* quot) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) {
    if (quot) *quot = LaurentPoly();
    return true;
  }
  // Work with polynomial parts; the q^k discrepancy goes into the quotient.
  LaurentPoly rem = *this;
  LaurentPoly q;
  const long dmax = d.max_exp();
  const BigInt& dl = d.leading();
  while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >=
                               d.max_exp() - d.min_exp()) {
    BigInt c = rem.leading();
    BigInt step;
    mpz_tdiv_q(step.get_mpz_t(), c.get_mpz_t(), dl.get_mpz_t());
    if (step * dl != c) return false;
    long e = rem.max_exp() - dmax;
    LaurentPoly t(step, e);
    q += t;
    rem -= t * d;
    if (!rem.is_zero() && rem.max_exp() >= e + dmax) return false;  // stuck
  }
  if (!rem.is_zero()) return false;
  if (quot) *quot = q;
  return true;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
  LaurentPoly q;
  if (!divides(d, &q)) throw std::invalid_argument("inexact poly division");
  return q;
}

// Primitive polynomial remainder sequence.
LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r0 = a.primitive_part();
  LaurentPoly r1 = b.primitive_part();
  if (r0.is_zero()) return r1;
  if (r1.is_zero()) return r0;
  if (r0.max_exp() < r1.max_exp()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    // Pseudo-remainder of r0 by r1.
    LaurentPoly rem = r0;
    long d1 = r1.max_exp();
    const BigInt& l1 = r1.leading();
    while (!rem.is_zero() && rem.max_exp() >= d1) {
      long e = rem.max_exp() - d1;
      BigInt c = rem.leading();
      rem = rem.mul_scalar(l1) - r1.mul_monomial(e).mul_scalar(c);
    }
    r0 = r1;
    r1 = rem.is_zero() ? LaurentPoly() : rem.primitive_part();
  }
  return r0.primitive_part();
}

LaurentPoly LaurentPoly::substitute_power(long k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: k = 0");
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e * k, c);
  return r;
}

BigRat LaurentPoly::eval_rational(const BigRat& x) const {
  BigRat acc = 0;
  if (is_zero()) return acc;
  if (x == 0) throw std::invalid_argument("eval at 0 of Laurent polynomial");
  for (const auto& [e, c] : coeffs_) {
    BigRat p = 1;
    long n = e >= 0 ? e : -e;
    BigRat base = e >= 0 ? x : BigRat(1) / x;
    for (long i = 0; i < n; ++i) p *= base;
    acc += BigRat(c) * p;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending exponents.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const long e = it->first;
    BigInt c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (e == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      if (e == 1)
        os << "q";
      else
        os << "q^" << e;
    }
  }
  return os.str();
}

LaurentPoly operator*(const BigInt& c, const LaurentPoly& p) {
  return p.mul_scalar(c);
}

}  // namespace quflag
