#pragma once

#include "quflag/cyclo.hpp"
#include "quflag/ratfunc.hpp"

namespace quflag {

// Coefficient-field tag: ell = 0 is generic Q(q); ell >= 1 is Q(zeta_ell)
// (which is plain Q for ell in {1,2}).
struct FieldCtx {
  long ell = 0;
  bool generic() const { return ell == 0; }
  bool operator==(const FieldCtx& o) const { return ell == o.ell; }
  std::string to_string() const {
    return generic() ? "generic" : std::to_string(ell);
  }
};

template <class K>
struct FieldOps;

template <>
struct FieldOps<RatFunc> {
  static RatFunc zero(const FieldCtx&) { return RatFunc(0); }
  static RatFunc one(const FieldCtx&) { return RatFunc(1); }
  static RatFunc from_int(const FieldCtx&, const BigInt& c) {
    return RatFunc(LaurentPoly(c));
  }
  static RatFunc q_power(const FieldCtx&, long e) {
    return RatFunc::q_power(e);
  }
  static RatFunc from_laurent(const FieldCtx&, const LaurentPoly& p) {
    return RatFunc(p);
  }
  static std::string str(const RatFunc& x) { return x.to_string(); }
};

template <>
struct FieldOps<CycloNum> {
  static CycloNum zero(const FieldCtx& f) { return CycloNum::zero(f.ell); }
  static CycloNum one(const FieldCtx& f) { return CycloNum::one(f.ell); }
  static CycloNum from_int(const FieldCtx& f, const BigInt& c) {
    return CycloNum(f.ell, BigRat(c));
  }
  static CycloNum q_power(const FieldCtx& f, long e) {
    return CycloNum::zeta_power(f.ell, e);
  }
  static CycloNum from_laurent(const FieldCtx& f, const LaurentPoly& p) {
    return CycloNum::from_laurent(f.ell, p);
  }
  static std::string str(const CycloNum& x) { return x.to_string(); }
};

}  // namespace quflag
