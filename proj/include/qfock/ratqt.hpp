#pragma once

/**
 * @file ratqt.hpp
 * @brief Exact rational functions in q, t over Z.
 *
 * Canonical form: gcd(num, den) is a unit, den is a true polynomial
 * (minimal exponent 0 in each variable) with positive leading coefficient.
 * The numerator may be Laurent. Equality is structural.
 */

#include <optional>
#include <stdexcept>

#include "qfock/intpoly.hpp"

namespace qfock {

class RatQT {
 public:
  RatQT() : num_(), den_(IntPoly::one()) {}
  RatQT(const IntPoly& n) : num_(n), den_(IntPoly::one()) { normalize(); }
  RatQT(IntPoly n, IntPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RatQT: zero denominator");
    normalize();
  }

  static RatQT zero() { return RatQT(); }
  static RatQT one() { return RatQT(IntPoly::one()); }
  static RatQT integer(Int n) { return RatQT(IntPoly::constant(std::move(n))); }
  static RatQT fraction(Int n, Int d) {
    return RatQT(IntPoly::constant(std::move(n)), IntPoly::constant(std::move(d)));
  }
  /// q^e
  static RatQT q(int e = 1) { return RatQT(IntPoly::monomial(1, e, 0)); }
  /// t^e
  static RatQT t(int e = 1) { return RatQT(IntPoly::monomial(1, 0, e)); }
  /// c * q^qe * t^te
  static RatQT monomial(Int c, int qe, int te) {
    return RatQT(IntPoly::monomial(std::move(c), qe, te));
  }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend RatQT operator+(const RatQT& a, const RatQT& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) {
      RatQT r;
      r.num_ = a.num_ + b.num_;
      return r;
    }
    if (a.den_ == b.den_) return RatQT(a.num_ + b.num_, a.den_);
    IntPoly g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) return RatQT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    IntPoly db2 = divexact(b.den_, g), da2 = divexact(a.den_, g);
    return RatQT(a.num_ * db2 + b.num_ * da2, a.den_ * db2);
  }
  friend RatQT operator-(const RatQT& a, const RatQT& b) { return a + (-b); }
  RatQT operator-() const {
    RatQT r = *this;
    r.num_ = -r.num_;
    return r;
  }
  /// cross-cancelled product: the factors are canonical, so after dividing
  /// num(a) against den(b) and num(b) against den(a) the result is already
  /// in lowest terms
  friend RatQT operator*(const RatQT& a, const RatQT& b) {
    if (a.is_zero() || b.is_zero()) return RatQT();
    RatQT r;
    if (a.den_.is_one() && b.den_.is_one()) {
      r.num_ = a.num_ * b.num_;
      return r;
    }
    IntPoly na = a.num_, nb = b.num_, da = a.den_, db = b.den_;
    if (!db.is_one()) {
      IntPoly g = poly_gcd(na, db);
      if (!g.is_one()) {
        na = divexact(na, g);
        db = divexact(db, g);
      }
    }
    if (!da.is_one()) {
      IntPoly g = poly_gcd(nb, da);
      if (!g.is_one()) {
        nb = divexact(nb, g);
        da = divexact(da, g);
      }
    }
    r.num_ = na * nb;
    r.den_ = da * db;
    r.fix_den_unit();
    return r;
  }
  friend RatQT operator/(const RatQT& a, const RatQT& b) {
    if (b.is_zero()) throw std::domain_error("RatQT: division by zero");
    if (a.is_zero()) return RatQT();
    return a * b.inverse();
  }
  RatQT& operator+=(const RatQT& o) { return *this = *this + o; }
  RatQT& operator-=(const RatQT& o) { return *this = *this - o; }
  RatQT& operator*=(const RatQT& o) { return *this = *this * o; }
  RatQT& operator/=(const RatQT& o) { return *this = *this / o; }

  /// num and den of a canonical value are coprime, so inversion only needs
  /// the unit normalization
  RatQT inverse() const {
    if (is_zero()) throw std::domain_error("RatQT: inverse of zero");
    RatQT r;
    r.num_ = den_;
    r.den_ = num_;
    r.fix_den_unit();
    return r;
  }

  RatQT pow(int e) const {
    if (e == 0) return one();
    RatQT base = e > 0 ? *this : inverse();
    int n = e > 0 ? e : -e;
    RatQT r = one();
    while (n > 0) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const RatQT& a, const RatQT& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatQT& a, const RatQT& b) { return !(a == b); }

  /// q -> q^-1, t -> t^-1.
  RatQT bar() const {
    return RatQT(num_.map_exponents(-1, 0, 0, -1), den_.map_exponents(-1, 0, 0, -1));
  }

  /// Exponent-linear parameter map (q,t) -> (q^a t^c, q^b t^d); throws if the
  /// denominator collapses to zero.
  RatQT subst(int a, int b, int c, int d) const {
    IntPoly dn = den_.map_exponents(a, b, c, d);
    if (dn.is_zero()) throw std::domain_error("RatQT::subst: denominator vanishes");
    return RatQT(num_.map_exponents(a, b, c, d), std::move(dn));
  }

  /// t -> q^k.
  RatQT specialize_t(int k) const { return subst(1, k, 0, 0); }
  /// swap q and t.
  RatQT swap_qt() const { return subst(0, 1, 1, 0); }

  /// The Laurent polynomial if the value lies in Z[q^{\pm}, t^{\pm}].
  std::optional<IntPoly> laurent() const {
    if (den_.is_one()) return num_;
    return std::nullopt;
  }

  std::string str(const std::string& qn = "q", const std::string& tn = "t") const {
    if (den_.is_one()) return num_.str(qn, tn);
    std::string n = num_.str(qn, tn);
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.str(qn, tn);
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  /// restore den to a true polynomial with positive leading coefficient,
  /// assuming num/den already coprime
  void fix_den_unit() {
    int dq = den_.min_qexp(), dt = den_.min_texp();
    if (dq != 0 || dt != 0) {
      den_ = den_.shifted(-dq, -dt);
      num_ = num_.shifted(-dq, -dt);
    }
    if (den_.lead().c < 0) {
      den_ = -den_;
      num_ = -num_;
    }
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = IntPoly::one();
      return;
    }
    // pull denominator to a true polynomial; track the inverse shift on num
    int dq = den_.min_qexp(), dt = den_.min_texp();
    if (dq != 0 || dt != 0) {
      den_ = den_.shifted(-dq, -dt);
      num_ = num_.shifted(-dq, -dt);
    }
    if (!den_.is_one()) {
      int nq = num_.min_qexp(), nt = num_.min_texp();
      IntPoly npoly = num_.shifted(-nq, -nt);
      IntPoly g = poly_gcd(npoly, den_);
      if (!g.is_one()) {
        npoly = divexact(npoly, g);
        den_ = divexact(den_, g);
      }
      num_ = npoly.shifted(nq, nt);
    }
    if (den_.lead().c < 0) {
      den_ = -den_;
      num_ = -num_;
    }
  }

  IntPoly num_;
  IntPoly den_;
};

/// quantum integer [n] = (q^n - q^-n)/(q - q^-1)
inline RatQT quantum_int(int n) {
  if (n < 0) return -quantum_int(-n);
  IntPoly s;
  for (int k = -(n - 1); k <= n - 1; k += 2) s += IntPoly::monomial(1, k, 0);
  return RatQT(s);
}

/// [n]! = [n][n-1]...[1]
inline RatQT quantum_factorial(int n) {
  RatQT r = RatQT::one();
  for (int k = 2; k <= n; ++k) r *= quantum_int(k);
  return r;
}

}  // namespace qfock
