#include "quflag/ratfunc.hpp"

namespace quflag {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  if (den.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Make den an ordinary polynomial with nonzero constant term.
  long shift = den_.min_exp();
  if (shift != 0) {
    den_ = den_.mul_monomial(-shift);
    num_ = num_.mul_monomial(-shift);
  }
  // Cancel the primitive-part gcd.
  LaurentPoly g = LaurentPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
    if (den_.min_exp() != 0) {
      num_ = num_.mul_monomial(-den_.min_exp());
      den_ = den_.mul_monomial(-den_.min_exp());
    }
  }
  // Cancel the content gcd.
  BigInt c = big_gcd(num_.content(), den_.content());
  if (c != 1) {
    num_ = num_.div_scalar_exact(c);
    den_ = den_.div_scalar_exact(c);
  }
  // Fix the denominator sign.
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  // Cross-cancel before multiplying to keep degrees down.
  RatFunc a(num_, o.den_);
  RatFunc b(o.num_, den_);
  RatFunc r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  BigInt c = big_gcd(r.num_.content(), r.den_.content());
  if (c != 1) {
    r.num_ = r.num_.div_scalar_exact(c);
    r.den_ = r.den_.div_scalar_exact(c);
  }
  if (!r.num_.is_zero() && r.den_.min_exp() != 0) {
    r.num_ = r.num_.mul_monomial(-r.den_.min_exp());
    r.den_ = r.den_.mul_monomial(-r.den_.min_exp());
  }
  if (r.den_.leading() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::invalid_argument("RatFunc division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::invalid_argument("RatFunc inverse of zero");
  return RatFunc(den_, num_);
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  bool n_paren = num_.term_count() > 1;
  bool d_paren = den_.term_count() > 1;
  std::string s;
  if (n_paren)
    s = "(" + n + ")";
  else
    s = n;
  s += "/";
  if (d_paren)
    s += "(" + d + ")";
  else
    s += d;
  return s;
}

}  // namespace quflag
