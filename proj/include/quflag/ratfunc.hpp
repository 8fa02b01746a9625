#pragma once

#include "quflag/laurent.hpp"

namespace quflag {

// Element of Q(q), stored as num/den with integer Laurent parts in the
// unique canonical form:
//   - den is an ordinary polynomial with nonzero constant term,
//   - gcd of the primitive parts of num and den is 1,
//   - gcd(content(num), content(den)) = 1,
//   - den has positive leading coefficient.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                      // NOLINT
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}        // NOLINT
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  static RatFunc q_power(long e) { return RatFunc(LaurentPoly::q_power(e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;

  std::string to_string() const;

 private:
  void canonicalize();
  LaurentPoly num_, den_;
};

}  // namespace quflag
