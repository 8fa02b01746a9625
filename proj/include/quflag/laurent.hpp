#pragma once

#include <map>
#include <string>
#include <vector>

#include "quflag/bigint.hpp"

namespace quflag {

// Integer Laurent polynomial in q. Canonical form: no zero coefficients
// stored, so structural equality is ring equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { set_term(0, BigInt(c)); }            // NOLINT
  LaurentPoly(const BigInt& c) { set_term(0, c); }           // NOLINT
  LaurentPoly(const BigInt& c, long exp) { set_term(exp, c); }

  static LaurentPoly q_power(long e) { return LaurentPoly(BigInt(1), e); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  long min_exp() const;  // requires nonzero
  long max_exp() const;  // requires nonzero
  const BigInt& leading() const;   // coefficient at max_exp
  const BigInt& trailing() const;  // coefficient at min_exp
  BigInt coeff(long e) const;
  size_t term_count() const { return coeffs_.size(); }
  const std::map<long, BigInt>& terms() const { return coeffs_; }

  void set_term(long e, const BigInt& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

  LaurentPoly mul_scalar(const BigInt& c) const;
  LaurentPoly mul_monomial(long e) const;  // * q^e

  // Content: gcd of coefficients (positive). Zero polynomial has content 0.
  BigInt content() const;
  // this / c, exact; throws if not exact.
  LaurentPoly div_scalar_exact(const BigInt& c) const;
  // Primitive part with positive leading coefficient, min_exp shifted to 0.
  LaurentPoly primitive_part() const;

  // Exact division; throws if the remainder is nonzero.
  LaurentPoly div_exact(const LaurentPoly& d) const;
  bool divides(const LaurentPoly& d, LaurentPoly* quot) const;  // d | this?

  // gcd of the polynomial parts (up to units q^k and sign): primitive,
  // positive leading coefficient, min_exp = 0. gcd(0,x) = primitive(x).
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  // Substitute q -> q^k (k != 0; negative allowed).
  LaurentPoly substitute_power(long k) const;

  // Evaluate at an integer point (for randomized identity spot checks).
  BigRat eval_rational(const BigRat& x) const;

  std::string to_string() const;

 private:
  std::map<long, BigInt> coeffs_;
};

LaurentPoly operator*(const BigInt& c, const LaurentPoly& p);

}  // namespace quflag
