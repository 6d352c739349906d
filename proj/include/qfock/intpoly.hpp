#pragma once

/**
 * @file intpoly.hpp
 * @brief Laurent polynomials in q, t over arbitrary-precision integers.
 *
 * Terms are kept in a fixed canonical order (graded-lex on the exponent
 * pair), zero coefficients are never stored, so equality is structural.
 * gcd uses content/primitive-part reduction with a primitive PRS, exact
 * throughout.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qfock {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// One Laurent term c * q^qe * t^te.
struct Term {
  int qe = 0;
  int te = 0;
  Int c;
};

/// Graded-lex: higher total degree first, ties broken by q-exponent.
inline bool term_order_less(int aq, int at, int bq, int bt) {
  const long ga = long(aq) + at, gb = long(bq) + bt;
  if (ga != gb) return ga < gb;
  return aq < bq;
}

class IntPoly {
 public:
  IntPoly() = default;

  static IntPoly zero() { return IntPoly(); }

  static IntPoly constant(Int c) {
    IntPoly p;
    if (c != 0) p.ts_.push_back({0, 0, std::move(c)});
    return p;
  }

  static IntPoly one() { return constant(1); }

  static IntPoly monomial(Int c, int qe, int te) {
    IntPoly p;
    if (c != 0) p.ts_.push_back({qe, te, std::move(c)});
    return p;
  }

  const std::vector<Term>& terms() const { return ts_; }
  bool is_zero() const { return ts_.empty(); }

  bool is_constant() const {
    return ts_.empty() || (ts_.size() == 1 && ts_[0].qe == 0 && ts_[0].te == 0);
  }

  bool is_one() const { return is_constant() && !ts_.empty() && ts_[0].c == 1; }
  bool is_monomial() const { return ts_.size() == 1; }

  /// Leading term in the canonical order (last stored term is the largest).
  const Term& lead() const {
    if (ts_.empty()) throw std::logic_error("lead() of zero polynomial");
    return ts_.back();
  }

  int min_qexp() const {
    int m = ts_.empty() ? 0 : ts_[0].qe;
    for (const auto& t : ts_) m = std::min(m, t.qe);
    return m;
  }
  int min_texp() const {
    int m = ts_.empty() ? 0 : ts_[0].te;
    for (const auto& t : ts_) m = std::min(m, t.te);
    return m;
  }
  int max_qexp() const {
    int m = ts_.empty() ? 0 : ts_[0].qe;
    for (const auto& t : ts_) m = std::max(m, t.qe);
    return m;
  }
  int max_texp() const {
    int m = ts_.empty() ? 0 : ts_[0].te;
    for (const auto& t : ts_) m = std::max(m, t.te);
    return m;
  }

  /// Multiply by the monomial q^dq t^dt.
  IntPoly shifted(int dq, int dt) const {
    IntPoly r = *this;
    for (auto& t : r.ts_) {
      t.qe += dq;
      t.te += dt;
    }
    return r;
  }

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& t : r.ts_) t.c = -t.c;
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.ts_.reserve(a.ts_.size() + b.ts_.size());
    size_t i = 0, j = 0;
    while (i < a.ts_.size() && j < b.ts_.size()) {
      const Term& x = a.ts_[i];
      const Term& y = b.ts_[j];
      if (x.qe == y.qe && x.te == y.te) {
        Int c = x.c + y.c;
        if (c != 0) r.ts_.push_back({x.qe, x.te, std::move(c)});
        ++i;
        ++j;
      } else if (term_order_less(x.qe, x.te, y.qe, y.te)) {
        r.ts_.push_back(x);
        ++i;
      } else {
        r.ts_.push_back(y);
        ++j;
      }
    }
    for (; i < a.ts_.size(); ++i) r.ts_.push_back(a.ts_[i]);
    for (; j < b.ts_.size(); ++j) r.ts_.push_back(b.ts_[j]);
    return r;
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    if (b.is_monomial()) return a.mul_term(b.ts_[0]);
    if (a.is_monomial()) return b.mul_term(a.ts_[0]);
    std::map<std::pair<long, std::pair<int, int>>, Int> acc;
    for (const auto& x : a.ts_)
      for (const auto& y : b.ts_) {
        int qe = x.qe + y.qe, te = x.te + y.te;
        acc[{long(qe) + te, {qe, te}}] += x.c * y.c;
      }
    IntPoly r;
    r.ts_.reserve(acc.size());
    for (auto& kv : acc)
      if (kv.second != 0)
        r.ts_.push_back({kv.first.second.first, kv.first.second.second, std::move(kv.second)});
    return r;
  }

  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    if (a.ts_.size() != b.ts_.size()) return false;
    for (size_t i = 0; i < a.ts_.size(); ++i)
      if (a.ts_[i].qe != b.ts_[i].qe || a.ts_[i].te != b.ts_[i].te || a.ts_[i].c != b.ts_[i].c)
        return false;
    return true;
  }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /// gcd of all integer coefficients, nonnegative.
  Int content() const {
    Int g = 0;
    for (const auto& t : ts_) {
      g = int_gcd(g, t.c);
      if (g == 1) break;
    }
    return g;
  }

  IntPoly divided_by_int(const Int& d) const {
    IntPoly r = *this;
    for (auto& t : r.ts_) {
      if (t.c % d != 0) throw std::logic_error("divided_by_int: not divisible");
      t.c /= d;
    }
    return r;
  }

  /// Ring hom on exponents: (qe, te) -> (a*qe + b*te, c*qe + d*te).
  /// Models bar (a=d=-1, b=c=0), parameter swap, and t -> q^k maps.
  IntPoly map_exponents(int a, int b, int c, int d) const {
    std::map<std::pair<long, std::pair<int, int>>, Int> acc;
    for (const auto& t : ts_) {
      int qe = a * t.qe + b * t.te;
      int te = c * t.qe + d * t.te;
      acc[{long(qe) + te, {qe, te}}] += t.c;
    }
    IntPoly r;
    for (auto& kv : acc)
      if (kv.second != 0)
        r.ts_.push_back({kv.first.second.first, kv.first.second.second, std::move(kv.second)});
    return r;
  }

  /// Integer evaluation at q=t=1 (used by a few combinatorial checks).
  Int eval_at_one() const {
    Int s = 0;
    for (const auto& t : ts_) s += t.c;
    return s;
  }

  std::string str(const std::string& qn = "q", const std::string& tn = "t") const {
    if (ts_.empty()) return "0";
    std::ostringstream os;
    // print largest term first
    for (auto it = ts_.rbegin(); it != ts_.rend(); ++it) {
      const Term& t = *it;
      Int c = t.c;
      if (it != ts_.rbegin()) {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      } else if (c < 0) {
        os << "-";
        c = -c;
      }
      bool unit = (c == 1) && (t.qe != 0 || t.te != 0);
      if (!unit) os << c.str();
      bool first = unit;
      auto var = [&](const std::string& n, int e) {
        if (e == 0) return;
        if (!first || !unit) os << "*";
        os << n;
        if (e != 1) os << "^" << e;
        first = false;
      };
      // avoid leading '*' when the coefficient was suppressed
      if (unit) {
        bool printed = false;
        if (t.qe != 0) {
          os << qn;
          if (t.qe != 1) os << "^" << t.qe;
          printed = true;
        }
        if (t.te != 0) {
          if (printed) os << "*";
          os << tn;
          if (t.te != 1) os << "^" << t.te;
        }
      } else {
        var(qn, t.qe);
        var(tn, t.te);
      }
    }
    return os.str();
  }

 private:
  IntPoly mul_term(const Term& m) const {
    IntPoly r = *this;
    for (auto& t : r.ts_) {
      t.qe += m.qe;
      t.te += m.te;
      t.c *= m.c;
    }
    return r;
  }

  std::vector<Term> ts_;  // ascending in term_order_less
};

// ---------------------------------------------------------------------------
// gcd machinery: univariate primitive PRS over a coefficient ring R, used at
// R = Int and R = UPoly<Int> (bivariate case, main variable q over Z[t]).
// ---------------------------------------------------------------------------

namespace detail {

inline bool r_is_zero(const Int& a) { return a == 0; }
inline Int r_gcd(const Int& a, const Int& b) { return int_gcd(a, b); }
inline Int r_mul(const Int& a, const Int& b) { return a * b; }
inline Int radd(const Int& a, const Int& b) { return a + b; }
inline Int rneg(const Int& a) { return -a; }
inline Int r_divexact(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) throw std::logic_error("r_divexact(Int): not divisible");
  return a / b;
}

template <class R>
struct UPoly {
  std::vector<R> c;  // c[i] is the coefficient of x^i
  void trim() {
    while (!c.empty() && r_is_zero(c.back())) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return int(c.size()) - 1; }
  const R& lc() const { return c.back(); }
};

template <class R>
bool r_is_zero(const UPoly<R>& p) {
  return p.zero();
}

template <class R>
UPoly<R> radd(const UPoly<R>& a, const UPoly<R>& b) {
  UPoly<R> r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    if (i < a.c.size() && i < b.c.size())
      r.c[i] = radd(a.c[i], b.c[i]);
    else if (i < a.c.size())
      r.c[i] = a.c[i];
    else
      r.c[i] = b.c[i];
  }
  r.trim();
  return r;
}

template <class R>
UPoly<R> rneg(const UPoly<R>& a) {
  UPoly<R> r = a;
  for (auto& x : r.c) x = rneg(x);
  return r;
}

template <class R>
UPoly<R> r_mul(const UPoly<R>& a, const UPoly<R>& b) {
  UPoly<R> r;
  if (a.zero() || b.zero()) return r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (r_is_zero(a.c[i]) || r_is_zero(b.c[j])) continue;
      auto prod = r_mul(a.c[i], b.c[j]);
      if (r_is_zero(r.c[i + j]))
        r.c[i + j] = prod;
      else
        r.c[i + j] = radd(r.c[i + j], prod);
    }
  r.trim();
  return r;
}

/// content of a UPoly = R-gcd of coefficients
template <class R>
R r_content(const UPoly<R>& p) {
  R g{};
  bool first = true;
  for (const auto& x : p.c) {
    if (r_is_zero(x)) continue;
    if (first) {
      g = x;
      first = false;
    } else {
      g = r_gcd(g, x);
    }
  }
  return g;
}

/// exact univariate division (throws if not exact)
template <class R>
UPoly<R> r_divexact(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.zero()) throw std::logic_error("r_divexact(UPoly): division by zero");
  UPoly<R> rem = a, q;
  if (rem.zero()) return q;
  if (rem.deg() < b.deg()) throw std::logic_error("r_divexact(UPoly): not divisible");
  q.c.resize(size_t(rem.deg() - b.deg()) + 1);
  while (!rem.zero() && rem.deg() >= b.deg()) {
    size_t k = size_t(rem.deg() - b.deg());
    R t = r_divexact(rem.lc(), b.lc());
    UPoly<R> sub;
    sub.c.resize(k + b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i)
      if (!r_is_zero(b.c[i])) sub.c[k + i] = r_mul(b.c[i], t);
    q.c[k] = std::move(t);
    rem = radd(rem, rneg(sub));
  }
  if (!rem.zero()) throw std::logic_error("r_divexact(UPoly): not divisible");
  q.trim();
  return q;
}

template <class R>
UPoly<R> r_div_coeff(const UPoly<R>& p, const R& d) {
  UPoly<R> r = p;
  for (auto& x : r.c)
    if (!r_is_zero(x)) x = r_divexact(x, d);
  return r;
}

/// pseudo-remainder: lc(B)^(degA-degB+1) * A mod B
template <class R>
UPoly<R> r_prem(UPoly<R> a, const UPoly<R>& b) {
  int db = b.deg();
  while (!a.zero() && a.deg() >= db) {
    int k = a.deg() - db;
    // a = a*lc(b) - lead(a)*x^k*b
    UPoly<R> scaled;
    scaled.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i)
      if (!r_is_zero(a.c[i])) scaled.c[i] = r_mul(a.c[i], b.lc());
    UPoly<R> sub;
    sub.c.resize(size_t(k) + b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i)
      if (!r_is_zero(b.c[i])) sub.c[size_t(k) + i] = r_mul(b.c[i], a.lc());
    a = radd(scaled, rneg(sub));
  }
  return a;
}

template <class R>
UPoly<R> r_gcd(UPoly<R> a, UPoly<R> b) {
  a.trim();
  b.trim();
  if (a.zero()) return b;
  if (b.zero()) return a;
  R ca = r_content(a), cb = r_content(b);
  R cg = r_gcd(ca, cb);
  a = r_div_coeff(a, ca);
  b = r_div_coeff(b, cb);
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.zero()) {
    UPoly<R> r = r_prem(a, b);
    if (!r.zero()) {
      R cr = r_content(r);
      r = r_div_coeff(r, cr);
    }
    a = std::move(b);
    b = std::move(r);
  }
  // multiply gcd back by content gcd
  UPoly<R> g = a;
  for (auto& x : g.c)
    if (!r_is_zero(x)) x = r_mul(x, cg);
  return g;
}

}  // namespace detail

// conversions between IntPoly (assumed non-Laurent: all exponents >= 0)
// and the recursive UPoly view in the main variable q over Z[t].
namespace detail {

inline UPoly<UPoly<Int>> to_recursive(const IntPoly& p) {
  UPoly<UPoly<Int>> r;
  r.c.resize(size_t(p.max_qexp()) + 1);
  for (const auto& t : p.terms()) {
    auto& co = r.c[size_t(t.qe)];
    if (co.c.size() <= size_t(t.te)) co.c.resize(size_t(t.te) + 1);
    co.c[size_t(t.te)] = t.c;
  }
  for (auto& co : r.c) co.trim();
  r.trim();
  return r;
}

inline IntPoly from_recursive(const UPoly<UPoly<Int>>& p) {
  IntPoly out;
  for (size_t i = 0; i < p.c.size(); ++i)
    for (size_t j = 0; j < p.c[i].c.size(); ++j)
      if (p.c[i].c[j] != 0) out += IntPoly::monomial(p.c[i].c[j], int(i), int(j));
  return out;
}

inline UPoly<Int> to_upoly_q(const IntPoly& p) {
  UPoly<Int> r;
  r.c.resize(size_t(p.max_qexp()) + 1);
  for (const auto& t : p.terms()) r.c[size_t(t.qe)] = t.c;
  r.trim();
  return r;
}

inline IntPoly from_upoly_q(const UPoly<Int>& p) {
  IntPoly out;
  for (size_t i = 0; i < p.c.size(); ++i)
    if (p.c[i] != 0) out += IntPoly::monomial(p.c[i], int(i), 0);
  return out;
}

}  // namespace detail

/// Exact division (throws if not exact). Inputs may be Laurent.
inline IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::logic_error("divexact: division by zero");
  if (a.is_zero()) return IntPoly();
  if (b.is_monomial()) {
    const Term& m = b.terms()[0];
    IntPoly r;
    for (const auto& t : a.terms()) {
      if (t.c % m.c != 0) throw std::logic_error("divexact: coefficient not divisible");
      r += IntPoly::monomial(t.c / m.c, t.qe - m.qe, t.te - m.te);
    }
    return r;
  }
  // shift to true polynomials
  int aq = a.min_qexp(), at = a.min_texp();
  int bq = b.min_qexp(), bt = b.min_texp();
  IntPoly A = a.shifted(-aq, -at), B = b.shifted(-bq, -bt);
  IntPoly Q;
  while (!A.is_zero()) {
    const Term& la = A.lead();
    const Term& lb = B.lead();
    if (la.c % lb.c != 0 || la.qe < lb.qe || la.te < lb.te)
      throw std::logic_error("divexact: not divisible");
    IntPoly m = IntPoly::monomial(la.c / lb.c, la.qe - lb.qe, la.te - lb.te);
    Q += m;
    A -= m * B;
  }
  return Q.shifted(aq - bq, at - bt);
}

namespace detail {

/// exact rational scalar for the interpolation steps
struct BigRat {
  Int n{0}, d{1};
  BigRat() = default;
  BigRat(Int nn) : n(std::move(nn)) {}
  BigRat(Int nn, Int dd) : n(std::move(nn)), d(std::move(dd)) { reduce(); }
  void reduce() {
    if (d == 0) throw std::logic_error("BigRat: zero denominator");
    if (n == 0) {
      d = 1;
      return;
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Int g = int_gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }
  bool zero() const { return n == 0; }
  friend BigRat operator+(const BigRat& a, const BigRat& b) {
    return BigRat(a.n * b.d + b.n * a.d, a.d * b.d);
  }
  friend BigRat operator-(const BigRat& a, const BigRat& b) {
    return BigRat(a.n * b.d - b.n * a.d, a.d * b.d);
  }
  friend BigRat operator*(const BigRat& a, const BigRat& b) { return BigRat(a.n * b.n, a.d * b.d); }
  friend BigRat operator/(const BigRat& a, const BigRat& b) {
    if (b.zero()) throw std::logic_error("BigRat: division by zero");
    return BigRat(a.n * b.d, a.d * b.n);
  }
};

/// evaluate a (non-Laurent) bivariate polynomial at t = t0, as Z[q]
inline UPoly<Int> eval_at_t(const IntPoly& p, const Int& t0) {
  UPoly<Int> r;
  r.c.resize(size_t(p.max_qexp()) + 1);
  for (const auto& tm : p.terms()) {
    Int v = tm.c;
    for (int i = 0; i < tm.te; ++i) v *= t0;
    r.c[size_t(tm.qe)] += v;
  }
  r.trim();
  return r;
}

/// leading coefficient w.r.t. q, as a polynomial in t
inline UPoly<Int> lc_q(const IntPoly& p) {
  int dq = p.max_qexp();
  UPoly<Int> r;
  for (const auto& tm : p.terms())
    if (tm.qe == dq) {
      if (r.c.size() <= size_t(tm.te)) r.c.resize(size_t(tm.te) + 1);
      r.c[size_t(tm.te)] = tm.c;
    }
  r.trim();
  return r;
}

inline Int eval_upoly(const UPoly<Int>& p, const Int& x) {
  Int r = 0;
  for (size_t i = p.c.size(); i-- > 0;) r = r * x + p.c[i];
  return r;
}

/// content of p with respect to q: gcd over Z[t] of the q-coefficients
inline IntPoly content_wrt_q(const IntPoly& p) {
  std::map<int, IntPoly> coeffs;
  for (const auto& tm : p.terms()) coeffs[tm.qe] += IntPoly::monomial(tm.c, 0, tm.te);
  IntPoly g;
  for (auto& kv : coeffs) {
    // univariate gcd in t
    IntPoly as_q = kv.second.map_exponents(0, 1, 1, 0);
    IntPoly gq = g.map_exponents(0, 1, 1, 0);
    IntPoly r = from_upoly_q(r_gcd(to_upoly_q(as_q), to_upoly_q(gq)));
    g = r.map_exponents(0, 1, 1, 0);
    if (g.is_one()) break;
  }
  if (!g.is_zero() && g.lead().c < 0) g = -g;
  return g;
}

/// interpolation-based gcd of q-primitive bivariate polynomials; returns the
/// primitive gcd, or nullopt if the point budget is exhausted (caller falls
/// back to the PRS).
std::optional<IntPoly> gcd_interp_q(const IntPoly& A, const IntPoly& B);

}  // namespace detail

/// gcd normalized to a true polynomial (min exponents 0) with positive
/// leading coefficient. Laurent monomial factors of the inputs are dropped.
inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  auto normalize = [](IntPoly g) {
    if (g.is_zero()) return g;
    g = g.shifted(-g.min_qexp(), -g.min_texp());
    if (g.lead().c < 0) g = -g;
    return g;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  IntPoly A = a.shifted(-a.min_qexp(), -a.min_texp());
  IntPoly B = b.shifted(-b.min_qexp(), -b.min_texp());
  if (A.is_monomial() || B.is_monomial()) {
    Int g = int_gcd(A.content(), B.content());
    return IntPoly::constant(g);
  }
  const bool a_uni_q = (A.max_texp() == 0), b_uni_q = (B.max_texp() == 0);
  const bool a_uni_t = (A.max_qexp() == 0), b_uni_t = (B.max_qexp() == 0);
  if (a_uni_q && b_uni_q)
    return normalize(
        detail::from_upoly_q(detail::r_gcd(detail::to_upoly_q(A), detail::to_upoly_q(B))));
  if (a_uni_t && b_uni_t) {
    IntPoly As = A.map_exponents(0, 1, 1, 0), Bs = B.map_exponents(0, 1, 1, 0);
    IntPoly g = detail::from_upoly_q(detail::r_gcd(detail::to_upoly_q(As), detail::to_upoly_q(Bs)));
    return normalize(g.map_exponents(0, 1, 1, 0));
  }
  // mixed or genuinely bivariate: split off contents w.r.t. q, then handle the primitive parts
  Int ic = int_gcd(A.content(), B.content());
  A = A.divided_by_int(A.content());
  B = B.divided_by_int(B.content());
  IntPoly ca = detail::content_wrt_q(A), cb = detail::content_wrt_q(B);
  if (!ca.is_one()) A = divexact(A, ca);
  if (!cb.is_one()) B = divexact(B, cb);
  IntPoly gc = poly_gcd(ca, cb);  // univariate in t
  IntPoly gpp;
  if (A.max_qexp() == 0 || B.max_qexp() == 0) {
    gpp = IntPoly::one();  // a q-primitive polynomial constant in q is a unit
  } else {
    auto r = detail::gcd_interp_q(A, B);
    if (r)
      gpp = *r;
    else
      gpp = detail::from_recursive(detail::r_gcd(detail::to_recursive(A), detail::to_recursive(B)));
  }
  return normalize(IntPoly::constant(ic) * gc * gpp);
}

namespace detail {

inline std::optional<IntPoly> gcd_interp_q(const IntPoly& A, const IntPoly& B) {
  // A, B q-primitive, both of positive q-degree, integer-content-free
  UPoly<Int> lcA = lc_q(A), lcB = lc_q(B);
  UPoly<Int> gamma = r_gcd(lcA, lcB);  // target leading coefficient in Z[t]
  const int tbound = gamma.deg() + std::min(A.max_texp(), B.max_texp()) + 1;

  int dq = -1;  // running gcd-degree bound
  std::vector<Int> nodes;
  std::vector<std::vector<BigRat>> values;  // values[k][j]: coeff of q^j at node k
  int failures = 0;

  for (int step = 0; step < 8 * tbound + 64; ++step) {
    // candidate points 0, 1, -1, 2, -2, ...
    Int t0 = (step % 2 == 1) ? Int((step + 1) / 2) : Int(-(step + 1) / 2);
    if (eval_upoly(lcA, t0) == 0 || eval_upoly(lcB, t0) == 0) continue;
    UPoly<Int> a0 = eval_at_t(A, t0), b0 = eval_at_t(B, t0);
    UPoly<Int> g0 = r_gcd(a0, b0);
    int d0 = g0.deg();
    if (dq < 0 || d0 < dq) {
      dq = d0;
      nodes.clear();
      values.clear();
    } else if (d0 > dq) {
      continue;  // unlucky point
    }
    if (dq == 0) return IntPoly::one();
    // normalize so lc(g0) = gamma(t0)
    BigRat scale(eval_upoly(gamma, t0), g0.lc());
    std::vector<BigRat> v(size_t(dq) + 1);
    for (int j = 0; j <= dq; ++j)
      v[size_t(j)] = BigRat(j < int(g0.c.size()) ? g0.c[size_t(j)] : Int(0)) * scale;
    nodes.push_back(t0);
    values.push_back(std::move(v));
    if (int(nodes.size()) < tbound + 1) continue;

    // Newton interpolation per q-coefficient, then expand to the power basis
    size_t m = nodes.size();
    IntPoly H;
    Int lcm_den = 1;
    std::vector<std::vector<BigRat>> tcoef(size_t(dq) + 1);
    for (int j = 0; j <= dq; ++j) {
      std::vector<BigRat> dd(m);
      for (size_t k = 0; k < m; ++k) dd[k] = values[k][size_t(j)];
      for (size_t lev = 1; lev < m; ++lev)
        for (size_t k = m - 1; k >= lev; --k)
          dd[k] = (dd[k] - dd[k - 1]) / BigRat(nodes[k] - nodes[k - lev]);
      // expand Newton form sum dd[k] * prod_{i<k}(t - nodes[i])
      std::vector<BigRat> poly(1, dd[0]);
      std::vector<BigRat> basis(1, BigRat(Int(1)));
      for (size_t k = 1; k < m; ++k) {
        // basis *= (t - nodes[k-1])
        std::vector<BigRat> nb(basis.size() + 1);
        for (size_t i = 0; i < basis.size(); ++i) {
          nb[i + 1] = nb[i + 1] + basis[i];
          nb[i] = nb[i] - basis[i] * BigRat(nodes[k - 1]);
        }
        basis = std::move(nb);
        if (poly.size() < basis.size()) poly.resize(basis.size());
        for (size_t i = 0; i < basis.size(); ++i) poly[i] = poly[i] + dd[k] * basis[i];
      }
      tcoef[size_t(j)] = std::move(poly);
      for (const auto& r : tcoef[size_t(j)])
        if (!r.zero()) lcm_den = r.d / int_gcd(lcm_den, r.d) * lcm_den;
    }
    for (int j = 0; j <= dq; ++j)
      for (size_t i = 0; i < tcoef[size_t(j)].size(); ++i) {
        const BigRat& r = tcoef[size_t(j)][i];
        if (!r.zero()) H += IntPoly::monomial(r.n * (lcm_den / r.d), j, int(i));
      }
    if (H.is_zero()) return std::nullopt;
    Int hc = H.content();
    if (hc > 1) H = H.divided_by_int(hc);
    IntPoly hq = content_wrt_q(H);
    if (!hq.is_one() && !hq.is_zero()) H = divexact(H, hq);
    try {
      (void)divexact(A, H);
      (void)divexact(B, H);
      return H;
    } catch (const std::logic_error&) {
      // all sampled points were unlucky; drop them and retry
      if (++failures > 3) return std::nullopt;
      dq = -1;
      nodes.clear();
      values.clear();
    }
  }
  return std::nullopt;
}

}  // namespace detail

}  // namespace qfock
