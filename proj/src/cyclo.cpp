#include "quflag/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "quflag/qarith.hpp"

namespace quflag {

namespace {

// Monic integer coefficients of Phi_ell, index = exponent, size phi(ell)+1.
const std::vector<BigInt>& phi_coeffs(long ell) {
  static std::map<long, std::vector<BigInt>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(ell);
  if (it != cache.end()) return it->second;
  LaurentPoly p = cyclotomic_poly(ell);
  std::vector<BigInt> v(static_cast<size_t>(p.max_exp()) + 1, BigInt(0));
  for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e)] = c;
  return cache.emplace(ell, std::move(v)).first->second;
}

}  // namespace

long CycloNum::phi(long ell) {
  if (ell < 1) throw std::invalid_argument("CycloNum: ell < 1");
  long r = 0;
  for (long k = 0; k < ell; ++k)
    if (std::gcd(k, ell) == 1) ++r;
  return r;
}

CycloNum::CycloNum(long ell, long c) : CycloNum(ell, BigRat(c)) {}

CycloNum::CycloNum(long ell, const BigRat& c) : ell_(ell) {
  if (ell < 1) throw std::invalid_argument("CycloNum: ell < 1");
  rep_.assign(static_cast<size_t>(phi(ell)), BigRat(0));
  rep_[0] = c;
  rep_[0].canonicalize();
}

void CycloNum::reduce(std::vector<BigRat>& v) const {
  // Reduce a polynomial (arbitrary degree) mod Phi_ell in place; result
  // truncated to degree < phi(ell).
  const auto& f = phi_coeffs(ell_);
  const size_t d = f.size() - 1;  // = phi(ell)
  while (v.size() > d) {
    BigRat lead = v.back();
    size_t e = v.size() - 1;
    v.pop_back();
    if (lead == 0) continue;
    // subtract lead * x^(e-d) * Phi_ell  (Phi is monic)
    for (size_t k = 0; k < d; ++k) {
      v[e - d + k] -= lead * BigRat(f[k]);
      v[e - d + k].canonicalize();
    }
  }
  v.resize(d, BigRat(0));
}

CycloNum CycloNum::zeta_power(long ell, long e) {
  CycloNum r(ell, 0);
  long em = ((e % ell) + ell) % ell;
  std::vector<BigRat> v(static_cast<size_t>(em) + 1, BigRat(0));
  v[static_cast<size_t>(em)] = 1;
  r.reduce(v);
  r.rep_ = std::move(v);
  return r;
}

CycloNum CycloNum::from_laurent(long ell, const LaurentPoly& p) {
  CycloNum r(ell, 0);
  for (const auto& [e, c] : p.terms()) {
    CycloNum t = zeta_power(ell, e);
    for (auto& x : t.rep_) {
      x *= BigRat(c);
      x.canonicalize();
    }
    r += t;
  }
  return r;
}

bool CycloNum::is_zero() const {
  for (const auto& c : rep_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (size_t k = 1; k < rep_.size(); ++k)
    if (rep_[k] != 0) return false;
  return true;
}

BigRat CycloNum::rational_part() const {
  if (!is_rational()) throw std::logic_error("CycloNum: not rational");
  return rep_.empty() ? BigRat(0) : rep_[0];
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.rep_) c = -c;
  return r;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  if (ell_ != o.ell_) throw std::invalid_argument("CycloNum: ell mismatch");
  CycloNum r = *this;
  for (size_t k = 0; k < rep_.size(); ++k) {
    r.rep_[k] += o.rep_[k];
    r.rep_[k].canonicalize();
  }
  return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
  if (ell_ != o.ell_) throw std::invalid_argument("CycloNum: ell mismatch");
  CycloNum r = *this;
  for (size_t k = 0; k < rep_.size(); ++k) {
    r.rep_[k] -= o.rep_[k];
    r.rep_[k].canonicalize();
  }
  return r;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  if (ell_ != o.ell_) throw std::invalid_argument("CycloNum: ell mismatch");
  const size_t n = rep_.size();
  std::vector<BigRat> v(2 * n, BigRat(0));
  for (size_t i = 0; i < n; ++i) {
    if (rep_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (o.rep_[j] == 0) continue;
      v[i + j] += rep_[i] * o.rep_[j];
      v[i + j].canonicalize();
    }
  }
  reduce(v);
  CycloNum r(ell_, 0);
  r.rep_ = std::move(v);
  return r;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::invalid_argument("CycloNum inverse of zero");
  // Extended Euclid over Q[x] against Phi_ell.
  const auto& f = phi_coeffs(ell_);
  std::vector<BigRat> r0(f.size());
  for (size_t k = 0; k < f.size(); ++k) r0[k] = BigRat(f[k]);
  std::vector<BigRat> r1(rep_);
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<BigRat> s0{BigRat(0)}, s1{BigRat(1)};  // coeffs of this^-1 track
  auto deg = [](const std::vector<BigRat>& p) -> long {
    return static_cast<long>(p.size()) - 1;
  };
  auto trim = [](std::vector<BigRat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<BigRat> q(static_cast<size_t>(deg(r0) - deg(r1)) + 1,
                          BigRat(0));
    std::vector<BigRat> rem = r0;
    while (deg(rem) >= deg(r1) && !rem.empty()) {
      BigRat c = rem.back() / r1.back();
      c.canonicalize();
      long sh = deg(rem) - deg(r1);
      q[static_cast<size_t>(sh)] = c;
      for (size_t k = 0; k < r1.size(); ++k) {
        rem[static_cast<size_t>(sh) + k] -= c * r1[k];
        rem[static_cast<size_t>(sh) + k].canonicalize();
      }
      trim(rem);
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    std::vector<BigRat> s2(std::max(s0.size(), q.size() + s1.size() - 1),
                           BigRat(0));
    for (size_t k = 0; k < s0.size(); ++k) s2[k] = s0[k];
    for (size_t a = 0; a < q.size(); ++a) {
      if (q[a] == 0) continue;
      for (size_t b = 0; b < s1.size(); ++b) {
        s2[a + b] -= q[a] * s1[b];
        s2[a + b].canonicalize();
      }
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    trim(r1);
    if (r1.empty())
      throw std::logic_error("CycloNum inverse: zero divisor (not coprime)");
  }
  // r1 is a nonzero constant: this * s1 = r1 mod Phi, so inverse = s1/r1.
  BigRat c = r1[0];
  CycloNum inv(ell_, 0);
  std::vector<BigRat> v(s1.size(), BigRat(0));
  for (size_t k = 0; k < s1.size(); ++k) {
    v[k] = s1[k] / c;
    v[k].canonicalize();
  }
  inv.reduce(v);
  inv.rep_ = std::move(v);
  return inv;
}

CycloNum CycloNum::operator/(const CycloNum& o) const {
  return *this * o.inverse();
}

bool CycloNum::operator==(const CycloNum& o) const {
  return ell_ == o.ell_ && rep_ == o.rep_;
}

std::string CycloNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = rep_.size(); k-- > 0;) {
    if (rep_[k] == 0) continue;
    BigRat c = rep_[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (k == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      if (k == 1)
        os << "z";
      else
        os << "z^" << k;
    }
  }
  return os.str();
}

}  // namespace quflag
