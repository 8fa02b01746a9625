#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace quflag {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// binom(x, n) for arbitrary integer x, n >= 0: x(x-1)...(x-n+1)/n!
inline BigInt int_binomial(long x, long n) {
  if (n < 0) throw std::invalid_argument("int_binomial: n < 0");
  BigInt num = 1;
  for (long k = 0; k < n; ++k) num *= BigInt(x - k);
  BigInt den = 1;
  for (long k = 2; k <= n; ++k) den *= k;
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Error used for contract violations that indicate an implementation bug
// (e.g. a negative valuation where lattice theory guarantees none).
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quflag
