#include "quflag/qarith.hpp"

#include <map>
#include <mutex>

namespace quflag {

LaurentPoly q_integer(long m, QKind kind) {
  LaurentPoly r;
  if (kind == QKind::Balanced) {
    // t^{m-1} + t^{m-3} + ... + t^{-m+1}, with [-m] = -[m], [0] = 0.
    if (m == 0) return r;
    long s = m > 0 ? 1 : -1;
    long am = m > 0 ? m : -m;
    for (long e = -am + 1; e <= am - 1; e += 2) r.set_term(e, BigInt(s));
    return r;
  }
  // {m}_t = 1 + t + ... + t^{m-1} for m >= 0; {-m}_t = -t^{-m}{m}_t.
  if (m >= 0) {
    for (long e = 0; e < m; ++e) r.set_term(e, BigInt(1));
    return r;
  }
  for (long e = m; e < 0; ++e) r.set_term(e, BigInt(-1));
  return r;
}

LaurentPoly q_factorial(long n, QKind kind) {
  if (n < 0) throw std::invalid_argument("q_factorial: n < 0");
  LaurentPoly r(1);
  for (long k = 1; k <= n; ++k) r *= q_integer(k, kind);
  return r;
}

LaurentPoly q_binomial(long n, long k, QKind kind) {
  if (k < 0 || k > n)
    throw std::invalid_argument("q_binomial: need 0 <= k <= n");
  LaurentPoly num = q_factorial(n, kind);
  LaurentPoly den = q_factorial(k, kind) * q_factorial(n - k, kind);
  return num.div_exact(den);
}

LaurentPoly q_integer_d(long m, long d) {
  return q_integer(m, QKind::Balanced).substitute_power(d);
}

LaurentPoly q_factorial_d(long n, long d) {
  return q_factorial(n, QKind::Balanced).substitute_power(d);
}

LaurentPoly q_binomial_d(long n, long k, long d) {
  return q_binomial(n, k, QKind::Balanced).substitute_power(d);
}

LaurentPoly cyclotomic_poly(long ell) {
  if (ell < 1) throw std::invalid_argument("cyclotomic_poly: ell < 1");
  static std::map<long, LaurentPoly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(ell);
  if (it != cache.end()) return it->second;
  // (q^ell - 1) / prod_{d | ell, d < ell} Phi_d
  LaurentPoly num = LaurentPoly::q_power(ell) - LaurentPoly(1);
  for (long d = 1; d < ell; ++d) {
    if (ell % d != 0) continue;
    auto jt = cache.find(d);
    LaurentPoly phi_d;
    if (jt != cache.end()) {
      phi_d = jt->second;
    } else {
      LaurentPoly nd = LaurentPoly::q_power(d) - LaurentPoly(1);
      for (long e = 1; e < d; ++e)
        if (d % e == 0) nd = nd.div_exact(cache.at(e));
      phi_d = nd;
      cache.emplace(d, phi_d);
    }
    num = num.div_exact(phi_d);
  }
  cache.emplace(ell, num);
  return num;
}

}  // namespace quflag
