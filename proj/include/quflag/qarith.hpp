#pragma once

#include "quflag/laurent.hpp"

namespace quflag {

enum class QKind { Balanced, Unbalanced };

// [m]_t = (t^m - t^-m)/(t - t^-1)  or  {m}_t = (t^m - 1)/(t - 1).
LaurentPoly q_integer(long m, QKind kind = QKind::Balanced);

// [n]_t! or {n}_t!, n >= 0.
LaurentPoly q_factorial(long n, QKind kind = QKind::Balanced);

// Gaussian binomial [n k] (balanced or unbalanced), 0 <= k <= n.
LaurentPoly q_binomial(long n, long k, QKind kind = QKind::Balanced);

// Balanced q-integer/factorial/binomial in the variable q^d.
LaurentPoly q_integer_d(long m, long d);
LaurentPoly q_factorial_d(long n, long d);
LaurentPoly q_binomial_d(long n, long k, long d);

// The ell-th cyclotomic polynomial, ell >= 1.
LaurentPoly cyclotomic_poly(long ell);

}  // namespace quflag
