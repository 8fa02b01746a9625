#pragma once

#include <vector>

#include "quflag/laurent.hpp"

namespace quflag {

// Element of Q(zeta_ell): rational-coefficient polynomial in zeta of degree
// < phi(ell), reduced modulo the ell-th cyclotomic polynomial.
class CycloNum {
 public:
  CycloNum() : ell_(1) {}
  CycloNum(long ell, long c);
  CycloNum(long ell, const BigRat& c);

  static long phi(long ell);
  static CycloNum zero(long ell) { return CycloNum(ell, 0); }
  static CycloNum one(long ell) { return CycloNum(ell, 1); }
  // zeta^e (e may be negative).
  static CycloNum zeta_power(long ell, long e);
  // Image of an integer Laurent polynomial under q -> zeta.
  static CycloNum from_laurent(long ell, const LaurentPoly& p);

  long ell() const { return ell_; }
  bool is_zero() const;
  bool is_rational() const;
  BigRat rational_part() const;  // requires is_rational()

  CycloNum operator-() const;
  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator/(const CycloNum& o) const;
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  CycloNum inverse() const;

  std::string to_string() const;

 private:
  void reduce(std::vector<BigRat>& v) const;
  long ell_;
  std::vector<BigRat> rep_;  // rep_[k] = coefficient of zeta^k, size phi(ell)
};

}  // namespace quflag
