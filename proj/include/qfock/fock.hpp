#pragma once

/**
 * @file fock.hpp
 * @brief The level-1 Fock space H = V(L0) + V(L1): Heisenberg and sector
 *        operators, loop generators by coefficient extraction, Chevalley
 *        generators, divided powers, and the embedded Macdonald/Schur
 *        vector families.
 *
 * Coefficients live in Z(u) with u = q^{1/2} (exponents doubled), since the
 * loop-operator exponentials carry q^{n/2} factors. Public boundaries that
 * promise integer q-powers assert evenness.
 */

#include <functional>

#include "qfock/macdonald.hpp"
#include "qfock/report.hpp"

namespace qfock {

/// u = q^{1/2}; u-power as a Fock coefficient
inline RatQT uq(int e) { return RatQT::q(e); }
/// q-power in u-units
inline RatQT qq(int e) { return RatQT::q(2 * e); }
/// (-q)^e in u-units
inline RatQT minus_q_pow(int e) {
  RatQT r = qq(e);
  return (e % 2 != 0) ? -r : r;
}

/// [n] in u-units
inline RatQT uquantum_int(int n) {
  if (n < 0) return -uquantum_int(-n);
  IntPoly s;
  for (int k = -(n - 1); k <= n - 1; k += 2) s += IntPoly::monomial(1, 2 * k, 0);
  return RatQT(s);
}

inline RatQT uquantum_factorial(int n) {
  RatQT r = RatQT::one();
  for (int k = 2; k <= n; ++k) r *= uquantum_int(k);
  return r;
}

/// lattice sector e^{Lambda_i + m alpha}; the derivation eigenvalue is 2m+i
struct Sector {
  int i = 0;
  int m = 0;
  int h() const { return 2 * m + i; }
  friend bool operator==(const Sector& a, const Sector& b) { return a.i == b.i && a.m == b.m; }
  friend bool operator<(const Sector& a, const Sector& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.m < b.m;
  }
  /// shift by k half-root-steps e^{k alpha/2}
  Sector shifted_half(int k) const {
    int hh = h() + k;
    int ii = ((hh % 2) + 2) % 2;
    return Sector{ii, (hh - ii) / 2};
  }
  std::string str() const {
    return "(" + std::to_string(i) + "," + std::to_string(m) + ")";
  }
};

struct FockKey {
  Partition lam;
  Sector s;
  friend bool operator==(const FockKey& a, const FockKey& b) {
    return a.s == b.s && a.lam == b.lam;
  }
  friend bool operator<(const FockKey& a, const FockKey& b) {
    if (!(a.s == b.s)) return a.s < b.s;
    return a.lam < b.lam;
  }
};

struct TruncationError : std::runtime_error {
  int lost_degree;
  explicit TruncationError(int d)
      : std::runtime_error("degree cap truncates a nonzero term of degree " + std::to_string(d)),
        lost_degree(d) {}
};

class FockVector {
 public:
  FockVector() = default;

  static FockVector vacuum(const Sector& s) {
    FockVector v;
    v.t_[{Partition{}, s}] = RatQT::one();
    return v;
  }
  static FockVector term(const Partition& lam, const Sector& s, const RatQT& c) {
    FockVector v;
    if (!c.is_zero()) v.t_[{lam, s}] = c;
    return v;
  }

  const std::map<FockKey, RatQT>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  RatQT coeff(const Partition& lam, const Sector& s) const {
    auto it = t_.find({lam, s});
    return it == t_.end() ? RatQT::zero() : it->second;
  }

  void add_term(const FockKey& k, const RatQT& c) {
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  FockVector& operator+=(const FockVector& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  FockVector& operator-=(const FockVector& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const RatQT& c, const FockVector& v) {
    FockVector r;
    if (c.is_zero()) return r;
    for (const auto& [k, x] : v.t_) r.t_[k] = c * x;
    return r;
  }
  FockVector operator-() const { return RatQT::integer(-1) * *this; }
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.t_ == b.t_; }
  friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

  int max_degree() const {
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, k.lam.weight());
    return d;
  }

  /// coefficient-wise q -> q^{-1} (u -> u^{-1}); this is NOT the module bar
  /// involution, which lives in forms.hpp
  FockVector conj_coeffs() const {
    FockVector r;
    for (const auto& [k, c] : t_) r.t_[k] = c.bar();
    return r;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str("u", "?") + ")*a" + k.lam.str() + "|" + k.s.str() + ">";
    }
    return s;
  }

 private:
  std::map<FockKey, RatQT> t_;
};

// ---------------------------------------------------------------------------
// Heisenberg and sector operators
// ---------------------------------------------------------------------------

/// [a_n, a_{-n}] = n/(q^n + q^{-n})
inline RatQT heis_bracket(int n) {
  return RatQT::integer(n) / (qq(n) + qq(-n));
}

/// a_n for n < 0 multiplies by a_{-|n|}; for n > 0 acts as the derivation
inline FockVector heisenberg_apply(int n, const FockVector& v) {
  if (n == 0) throw std::invalid_argument("heisenberg_apply: n must be nonzero");
  FockVector out;
  if (n < 0) {
    int part = -n;
    for (const auto& [k, c] : v.terms()) {
      std::vector<int> ps = k.lam.parts();
      ps.insert(std::upper_bound(ps.begin(), ps.end(), part, std::greater<int>()), part);
      out.add_term({Partition(ps), k.s}, c);
    }
    return out;
  }
  RatQT g = heis_bracket(n);
  for (const auto& [k, c] : v.terms()) {
    int mult = k.lam.multiplicity(n);
    if (mult == 0) continue;
    std::vector<int> ps = k.lam.parts();
    ps.erase(std::find(ps.begin(), ps.end(), n));
    out.add_term({Partition(ps), k.s}, c * RatQT::integer(mult) * g);
  }
  return out;
}

/// scale each term by q^{j h} (K^j = q^{j partial})
inline FockVector k_power_apply(int j, const FockVector& v) {
  FockVector out;
  for (const auto& [k, c] : v.terms()) out.add_term(k, c * qq(j * k.s.h()));
  return out;
}

/// scale each term by its derivation eigenvalue h = 2m+i
inline FockVector partial_apply(const FockVector& v) {
  FockVector out;
  for (const auto& [k, c] : v.terms())
    out.add_term(k, c * RatQT::integer(k.s.h()));
  return out;
}

/// e^{k alpha/2}
inline FockVector half_root_shift(int k, const FockVector& v) {
  FockVector out;
  for (const auto& [kk, c] : v.terms()) out.add_term({kk.lam, kk.s.shifted_half(k)}, c);
  return out;
}

namespace fkdetail {

/// apply exp(sum_n coef(n) a_{-n} z^n), extracting the z^s coefficient
inline FockVector creation_exp(const std::function<RatQT(int)>& coef, int s,
                               const FockVector& v) {
  if (s == 0) return v;
  FockVector out;
  for (const auto& tau : partitions_of(s)) {
    RatQT c = RatQT::one();
    const auto& tp = tau.parts();
    for (int x : tp) c *= coef(x);
    for (size_t i = 0; i < tp.size();) {
      size_t j = i;
      while (j < tp.size() && tp[j] == tp[i]) ++j;
      Int fact = 1;
      for (size_t r = 2; r <= j - i; ++r) fact *= Int(r);
      c *= RatQT::fraction(1, fact);
      i = j;
    }
    if (c.is_zero()) continue;
    for (const auto& [k, cv] : v.terms()) {
      std::vector<int> ps = k.lam.parts();
      ps.insert(ps.end(), tp.begin(), tp.end());
      std::sort(ps.rbegin(), ps.rend());
      out.add_term({Partition(ps), k.s}, cv * c);
    }
  }
  return out;
}

/// apply exp(sum_n coef(n) a_n z^{-n}), extracting the z^{-r} coefficient
inline FockVector annihilation_exp(const std::function<RatQT(int)>& coef, int r,
                                   const FockVector& v) {
  if (r == 0) return v;
  FockVector out;
  for (const auto& [k, cv] : v.terms()) {
    // enumerate removal multiplicities over distinct parts
    std::vector<std::pair<int, int>> dist;
    const auto& ps = k.lam.parts();
    for (size_t i = 0; i < ps.size();) {
      size_t j = i;
      while (j < ps.size() && ps[j] == ps[i]) ++j;
      dist.push_back({ps[i], int(j - i)});
      i = j;
    }
    std::vector<int> kv(dist.size(), 0);
    std::function<void(size_t, RatQT, int)> rec = [&](size_t idx, RatQT c, int removed) {
      if (removed > r) return;
      if (idx == dist.size()) {
        if (removed != r || c.is_zero()) return;
        std::vector<int> rem;
        for (size_t d = 0; d < dist.size(); ++d)
          for (int x = 0; x < dist[d].second - kv[d]; ++x) rem.push_back(dist[d].first);
        std::sort(rem.rbegin(), rem.rend());
        out.add_term({Partition(rem), k.s}, cv * c);
        return;
      }
      int n = dist[idx].first, m = dist[idx].second;
      RatQT run = RatQT::one();
      RatQT gn = heis_bracket(n);
      for (int kk = 0; kk <= m; ++kk) {
        if (kk > 0) run = run * coef(n) * gn * RatQT::fraction(Int(m - kk + 1), Int(kk));
        kv[idx] = kk;
        rec(idx + 1, c * run, removed + n * kk);
      }
      kv[idx] = 0;
    };
    rec(0, RatQT::one(), 0);
  }
  return out;
}

}  // namespace fkdetail

/// coefficient x_k^{sign} of X^{sign}(z) = sum_n x_n z^{-n-1}
inline FockVector loop_apply(int k, int sign, const FockVector& v, int deg_cap) {
  FockVector out;
  for (const auto& [key, c] : v.terms()) {
    int h = key.s.h(), d = key.lam.weight();
    int delta = -k - 1 - sign * h;  // s_created - r_removed
    int dprime = d + delta;
    if (dprime < 0) continue;
    if (dprime > deg_cap) throw TruncationError(dprime);
    FockVector single = FockVector::term(key.lam, key.s, c);
    auto cre = [&](int n) {
      return RatQT::integer(sign) * uq(-sign * n) * (qq(n) + qq(-n)) * RatQT::fraction(1, n);
    };
    auto ann = [&](int n) {
      return RatQT::integer(-sign) * uq(-sign * n) * (qq(n) + qq(-n)) * RatQT::fraction(1, n);
    };
    for (int r = 0; r <= d; ++r) {
      int s = delta + r;
      if (s < 0) continue;
      FockVector w = fkdetail::annihilation_exp(ann, r, single);
      if (w.is_zero()) continue;
      w = fkdetail::creation_exp(cre, s, w);
      out += half_root_shift(2 * sign, w);
    }
  }
  return out;
}

enum class Gen { E0, E1, F0, F1, K0, K1, K0inv, K1inv };

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::E0: return "E0";
    case Gen::E1: return "E1";
    case Gen::F0: return "F0";
    case Gen::F1: return "F1";
    case Gen::K0: return "K0";
    case Gen::K1: return "K1";
    case Gen::K0inv: return "K0^-1";
    default: return "K1^-1";
  }
}

/// E1 = x_0^+, F1 = x_0^-, K1 = K, K0 = qK^{-1}, E0 = x_1^- K^{-1}, F0 = K x_{-1}^+
inline FockVector chevalley_apply(Gen g, const FockVector& v, int deg_cap) {
  switch (g) {
    case Gen::E1: return loop_apply(0, +1, v, deg_cap);
    case Gen::F1: return loop_apply(0, -1, v, deg_cap);
    case Gen::K1: return k_power_apply(1, v);
    case Gen::K1inv: return k_power_apply(-1, v);
    case Gen::K0: return qq(1) * k_power_apply(-1, v);
    case Gen::K0inv: return qq(-1) * k_power_apply(1, v);
    case Gen::E0: return loop_apply(1, -1, k_power_apply(-1, v), deg_cap);
    case Gen::F0: return k_power_apply(1, loop_apply(-1, +1, v, deg_cap));
  }
  throw std::logic_error("chevalley_apply: bad generator");
}

/// gen^N / [N]!
inline FockVector divided_power_apply(Gen g, int N, const FockVector& v, int deg_cap) {
  if (N < 1) throw std::invalid_argument("divided_power_apply: N >= 1");
  FockVector w = v;
  for (int k = 0; k < N; ++k) w = chevalley_apply(g, w, deg_cap);
  return uquantum_factorial(N).inverse() * w;
}

/// divided power of a loop generator x_k^{sign}
inline FockVector divided_power_loop(int k, int sign, int N, const FockVector& v, int deg_cap) {
  FockVector w = v;
  for (int r = 0; r < N; ++r) w = loop_apply(k, sign, w, deg_cap);
  return uquantum_factorial(N).inverse() * w;
}

// ---------------------------------------------------------------------------
// psi / phi series coefficients of the Drinfeld relations
// ---------------------------------------------------------------------------

/// psi_j (j >= 0): K exp((q-q^-1) sum [2k]/k a_k z^{-k}), coefficient of z^{-j}
inline FockVector psi_apply(int j, const FockVector& v) {
  if (j < 0) return FockVector();
  auto coef = [&](int n) {
    return (qq(1) - qq(-1)) * uquantum_int(2 * n) * RatQT::fraction(1, n);
  };
  return k_power_apply(1, fkdetail::annihilation_exp(coef, j, v));
}

/// phi_{-j} (j >= 0): K^{-1} exp(-(q-q^-1) sum [2k]/k a_{-k} z^{k}), coeff of z^{j}
inline FockVector phi_apply(int j, const FockVector& v) {
  if (j < 0) return FockVector();
  auto coef = [&](int n) {
    return -(qq(1) - qq(-1)) * uquantum_int(2 * n) * RatQT::fraction(1, n);
  };
  return k_power_apply(-1, fkdetail::creation_exp(coef, j, v));
}

// ---------------------------------------------------------------------------
// embedded Macdonald / Schur vector families
// ---------------------------------------------------------------------------

enum class FockFamily { Ptilde, Qtilde, Jtilde, Jstartilde, stilde };

/// positive normalization applies for m > 0 and (m,i) = (0,1)
inline bool positive_side(const Sector& s) { return s.m > 0 || (s.m == 0 && s.i == 1); }

/// v_{m,i} = (-q)^{m(m+1+i)} e^{m alpha}|L_i>  (positive side, m >= 0)
/// v_{-m,i} = (-q)^{3m(m-i)} e^{-m alpha}|L_i> (negative side, m >= 0)
inline FockVector normalized_vacuum(const Sector& s) {
  int e;
  if (positive_side(s))
    e = s.m * (s.m + 1 + s.i);
  else
    e = 3 * (-s.m) * ((-s.m) - s.i);
  RatQT c = qq(e);
  if (e % 2 != 0) c = -c;
  return FockVector::term(Partition{}, s, c);
}

namespace fkdetail {

/// sign twist of the embeddings: (-1)^{|mu|-l(mu)} on the positive side,
/// (-1)^{|mu|} on the negative side
inline int theta_sign(const Partition& mu, bool positive) {
  int e = positive ? (mu.weight() - mu.length()) : mu.weight();
  return (e % 2 == 0) ? 1 : -1;
}

}  // namespace fkdetail

/// The rescaled Macdonald / Schur vectors. Conventions (ledgered):
///   Qtilde_l = q^{f|l|/2} sum_mu [P_l at (q^2,q^4)]_mu theta(mu) a_{-mu} v_{m,i},
///     with f = 1 on the positive side, f = 5 on the negative side;
///   Ptilde = b_l(q^4,q^2)^{-1} Qtilde;
///   Jtilde = q^{|l|} c_l(q^2,q^4) Qtilde,  Jstartilde = q^{-|l|} c'_l(q^2,q^4)^{-1} Qtilde;
///   stilde = q^{f|l|/2} sum_mu [s_l]_mu theta(mu) prod_i (q^{mu_i}+q^{-mu_i}) a_{-mu} v_{m,i}.
inline FockVector macd_vector(FockFamily fam, const Partition& lam, const Sector& sec) {
  const bool pos = positive_side(sec);
  const int n = lam.weight();
  const int frame = pos ? 1 : 5;  // power of q^{1/2} per unit of degree
  FockVector vac = normalized_vacuum(sec);
  RatQT vc = vac.terms().begin()->second;

  FockVector out;
  if (fam == FockFamily::stilde) {
    SymFn sp = SymFn::single(Basis::s, lam).to_basis(Basis::p);
    for (const auto& [mu, c] : sp.terms()) {
      RatQT w = c.subst(4, 8, 0, 0);  // rational constants are unaffected
      for (int x : mu.parts()) w *= qq(x) + qq(-x);
      w *= uq(frame * n) * RatQT::integer(fkdetail::theta_sign(mu, pos)) * vc;
      out.add_term({mu, sec}, w);
    }
    return out;
  }
  SymFn Pp = macd_P(lam).to_basis(Basis::p);
  for (const auto& [mu, c] : Pp.terms()) {
    RatQT w = c.subst(4, 8, 0, 0);  // (q,t) -> (q^2, q^4) in u-units
    w *= uq(frame * n) * RatQT::integer(fkdetail::theta_sign(mu, pos)) * vc;
    out.add_term({mu, sec}, w);
  }
  switch (fam) {
    case FockFamily::Qtilde: return out;
    case FockFamily::Ptilde: {
      RatQT b42 = b_c_scalars(lam).b.subst(8, 4, 0, 0);  // b at (q^4, q^2)
      return b42.inverse() * out;
    }
    case FockFamily::Jtilde: {
      RatQT c24 = b_c_scalars(lam).c.subst(4, 8, 0, 0);
      return qq(n) * c24 * out;
    }
    case FockFamily::Jstartilde: {
      RatQT cp24 = b_c_scalars(lam).cprime.subst(4, 8, 0, 0);
      return qq(-n) * cp24.inverse() * out;
    }
    default: break;
  }
  throw std::logic_error("macd_vector: bad family");
}

// ---------------------------------------------------------------------------
// lattice membership
// ---------------------------------------------------------------------------

struct LatticeCertificate {
  bool member = true;
  std::vector<std::pair<Partition, RatQT>> coords;  // J*-tilde coordinates (u-units)
  std::string detail;
};

/// expand per weight block in the Jstartilde basis and test all coordinates
/// for membership in Z[q, q^{-1}]
inline LatticeCertificate lattice_membership(const FockVector& v) {
  LatticeCertificate cert;
  // group by (degree, sector)
  std::map<std::pair<int, Sector>, FockVector> blocks;
  for (const auto& [k, c] : v.terms())
    blocks[{k.lam.weight(), k.s}].add_term(k, c);
  for (auto& [key, block] : blocks) {
    int n = key.first;
    Sector sec = key.second;
    auto parts = partitions_of(n);
    const size_t N = parts.size();
    // dense solve: the family has full support in the a-monomial basis
    std::vector<FockVector> basis(N);
    for (size_t i = 0; i < N; ++i) basis[i] = macd_vector(FockFamily::Jstartilde, parts[i], sec);
    std::vector<std::vector<RatQT>> A(N, std::vector<RatQT>(N + 1));
    for (size_t r = 0; r < N; ++r) {
      for (size_t i = 0; i < N; ++i) A[r][i] = basis[i].coeff(parts[r], sec);
      A[r][N] = block.coeff(parts[r], sec);
    }
    for (size_t col = 0, row = 0; col < N && row < N; ++col) {
      size_t piv = row;
      while (piv < N && A[piv][col].is_zero()) ++piv;
      if (piv == N) throw std::logic_error("lattice_membership: singular family");
      std::swap(A[piv], A[row]);
      RatQT inv = A[row][col].inverse();
      for (size_t j = col; j <= N; ++j) A[row][j] = inv * A[row][j];
      for (size_t r = 0; r < N; ++r) {
        if (r == row || A[r][col].is_zero()) continue;
        RatQT f = A[r][col];
        for (size_t j = col; j <= N; ++j) A[r][j] -= f * A[row][j];
      }
      ++row;
    }
    std::vector<RatQT> x(N);
    for (size_t i = 0; i < N; ++i) x[i] = A[i][N];
    for (size_t i = 0; i < N; ++i) {
      if (!x[i].is_zero()) {
        cert.coords.push_back({parts[i], x[i]});
        auto l = x[i].laurent();
        bool ok = l.has_value();
        if (ok)
          for (const auto& t : l->terms())
            if (t.qe % 2 != 0) ok = false;  // u-exponent must be even: Z[q^{+-1}]
        if (!ok) {
          cert.member = false;
          cert.detail += "coordinate at " + parts[i].str() + " in sector " + sec.str() +
                         " is not in Z[q,q^-1]; ";
        }
      }
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// q-Vandermonde expansion (Lemma 'biglemma')
// ---------------------------------------------------------------------------

struct QVandermondeReport {
  bool pass = true;
  long permutation_terms = 0;
  long repeated_terms = 0;
  RatQT length_sum;  // sum_w q^{-2 l(w)}
  std::string detail;
};

/// expand prod_{i<j} (z_i - q^{-2} z_j); classify monomials into permutation
/// terms (-q^{-2})^{l(w)} z^{w(delta)} and repeated-exponent remainder terms
/// whose coefficients vanish at q = 1; verify sum_w q^{-2 l(w)} = q^{-C(N,2)}[N]!
inline QVandermondeReport qvandermonde_expand(int N) {
  QVandermondeReport rep;
  // expand over subsets: gamma_{ij} ? contributions
  std::map<std::vector<int>, RatQT> mono;  // exponent vector -> coeff (u-units)
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) pairs.push_back({i, j});
  std::vector<int> expv(static_cast<size_t>(N), 0);
  std::function<void(size_t, RatQT)> rec = [&](size_t idx, RatQT c) {
    if (idx == pairs.size()) {
      auto it = mono.find(expv);
      if (it == mono.end())
        mono[expv] = c;
      else {
        it->second += c;
        if (it->second.is_zero()) mono.erase(it);
      }
      return;
    }
    auto [i, j] = pairs[idx];
    expv[size_t(i)]++;
    rec(idx + 1, c);
    expv[size_t(i)]--;
    expv[size_t(j)]++;
    rec(idx + 1, c * (-qq(-2)));
    expv[size_t(j)]--;
  };
  rec(0, RatQT::one());

  // delta = (N-1, ..., 0); permutation terms have distinct exponents
  for (const auto& [e, c] : mono) {
    std::vector<int> s = e;
    std::sort(s.rbegin(), s.rend());
    bool distinct = true;
    for (size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] == s[i + 1]) distinct = false;
    if (distinct) {
      // must be w(delta) with coefficient (-q^{-2})^{l(w)}
      bool is_delta = true;
      for (int i = 0; i < N; ++i)
        if (s[size_t(i)] != N - 1 - i) is_delta = false;
      if (!is_delta) {
        rep.pass = false;
        rep.detail += "distinct-exponent monomial is not a permutation of delta; ";
        continue;
      }
      rep.permutation_terms++;
      // recover l(w) from the coefficient: must be (-q^{-2})^k
      rep.length_sum += (c.num().lead().c < 0 ? -c : c);
    } else {
      rep.repeated_terms++;
      // a_gamma(1) = 0
      if (c.num().eval_at_one() != 0) {
        rep.pass = false;
        rep.detail += "repeated-exponent coefficient does not vanish at q=1; ";
      }
    }
  }
  long nfact = 1;
  for (int k = 2; k <= N; ++k) nfact *= k;
  if (rep.permutation_terms != nfact) {
    rep.pass = false;
    rep.detail += "permutation term count mismatch; ";
  }
  // sum_w q^{-2 l(w)} = q^{-binom(N,2)} [N]!
  RatQT expect = qq(-(N * (N - 1) / 2)) * uquantum_factorial(N);
  if (rep.length_sum != expect) {
    rep.pass = false;
    rep.detail += "sum of q^{-2l(w)} mismatch; ";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// relation suites: Heisenberg / Chevalley-Serre / Drinfeld
// ---------------------------------------------------------------------------

/// all a-monomial basis vectors of degree <= cap in the given sectors
inline std::vector<FockVector> basis_vectors(int cap, const std::vector<Sector>& sectors) {
  std::vector<FockVector> out;
  for (const Sector& s : sectors)
    for (int n = 0; n <= cap; ++n)
      for (const auto& lam : partitions_of(n))
        out.push_back(FockVector::term(lam, s, RatQT::one()));
  return out;
}

inline SuiteReport verify_heisenberg(int deg_cap, const std::vector<Sector>& sectors) {
  SuiteReport rep;
  auto bs = basis_vectors(deg_cap, sectors);
  for (int n = 1; n <= deg_cap; ++n)
    for (int m = 1; m <= deg_cap; ++m) {
      bool ok = true;
      for (const auto& v : bs) {
        FockVector lhs = heisenberg_apply(n, heisenberg_apply(-m, v)) -
                         heisenberg_apply(-m, heisenberg_apply(n, v));
        FockVector rhs = (n == m) ? heis_bracket(n) * v : FockVector();
        if (lhs != rhs) ok = false;
      }
      rep.record("[a_n, a_{-m}] = delta n/(q^n+q^-n)",
                 "n=" + std::to_string(n) + " m=" + std::to_string(m), ok);
    }
  return rep;
}

inline SuiteReport verify_chevalley_serre(int deg_cap, const std::vector<Sector>& sectors) {
  SuiteReport rep;
  auto bs = basis_vectors(deg_cap, sectors);
  const int cap = deg_cap + 8;
  auto ap = [&](Gen g, const FockVector& v) { return chevalley_apply(g, v, cap); };
  const Gen Es[2] = {Gen::E0, Gen::E1};
  const Gen Fs[2] = {Gen::F0, Gen::F1};
  const Gen Ks[2] = {Gen::K0, Gen::K1};
  const Gen Kinvs[2] = {Gen::K0inv, Gen::K1inv};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int aij = (i == j) ? 2 : -2;
      bool okE = true, okF = true, okEF = true;
      for (const auto& v : bs) {
        if (ap(Ks[i], ap(Es[j], ap(Kinvs[i], v))) != qq(aij) * ap(Es[j], v)) okE = false;
        if (ap(Ks[i], ap(Fs[j], ap(Kinvs[i], v))) != qq(-aij) * ap(Fs[j], v)) okF = false;
        FockVector br = ap(Es[i], ap(Fs[j], v)) - ap(Fs[j], ap(Es[i], v));
        FockVector rhs;
        if (i == j) rhs = (qq(1) - qq(-1)).inverse() * (ap(Ks[i], v) - ap(Kinvs[i], v));
        if (br != rhs) okEF = false;
      }
      std::string ij = " i=" + std::to_string(i) + " j=" + std::to_string(j);
      rep.record("K_i E_j K_i^-1 = q^{a_ij} E_j", ij, okE);
      rep.record("K_i F_j K_i^-1 = q^{-a_ij} F_j", ij, okF);
      rep.record("[E_i, F_j] = delta (K_i - K_i^-1)/(q - q^-1)", ij, okEF);
    }
  // quartic Serre relations: sum_k (-1)^k X_i^{(3-k)} X_j X_i^{(k)} = 0, i != j
  for (int i = 0; i < 2; ++i) {
    int j = 1 - i;
    for (bool use_E : {true, false}) {
      bool ok = true;
      const Gen Xi = use_E ? Es[i] : Fs[i];
      const Gen Xj = use_E ? Es[j] : Fs[j];
      for (const auto& v : bs) {
        FockVector acc;
        for (int k = 0; k <= 3; ++k) {
          FockVector w = v;
          if (k > 0) w = divided_power_apply(Xi, k, w, cap);
          w = ap(Xj, w);
          if (3 - k > 0) w = divided_power_apply(Xi, 3 - k, w, cap);
          if (k % 2)
            acc -= w;
          else
            acc += w;
        }
        if (!acc.is_zero()) ok = false;
      }
      rep.record(std::string("Serre relation for ") + (use_E ? "E" : "F"),
                 "i=" + std::to_string(i), ok);
    }
  }
  return rep;
}

inline SuiteReport verify_drinfeld(int deg_cap, const std::vector<Sector>& sectors) {
  SuiteReport rep;
  auto bs = basis_vectors(deg_cap, sectors);
  const int cap = deg_cap + 10;
  // [a_l, x_k^pm] = pm C^{-+|l|/2} x_{k+l}^pm (C = q)
  for (int sign : {+1, -1})
    for (int l : {-2, -1, 1, 2})
      for (int k : {-2, -1, 0, 1}) {
        bool ok = true;
        for (const auto& v : bs) {
          FockVector lhs = heisenberg_apply(l, loop_apply(k, sign, v, cap)) -
                           loop_apply(k, sign, heisenberg_apply(l, v), cap);
          FockVector rhs = RatQT::integer(sign) * uq(-sign * std::abs(l)) *
                           loop_apply(k + l, sign, v, cap);
          if (lhs != rhs) ok = false;
        }
        rep.record("[a_l, x_k] = sgn C^{-sgn|l|/2} x_{k+l}",
                   "sign=" + std::to_string(sign) + " l=" + std::to_string(l) +
                       " k=" + std::to_string(k),
                   ok);
      }
  // K x_k K^-1 = q^{+-2} x_k
  for (int sign : {+1, -1})
    for (int k : {-1, 0, 1}) {
      bool ok = true;
      for (const auto& v : bs)
        if (k_power_apply(1, loop_apply(k, sign, k_power_apply(-1, v), cap)) !=
            qq(2 * sign) * loop_apply(k, sign, v, cap))
          ok = false;
      rep.record("K x_k K^-1 = q^{+-2} x_k", "sign=" + std::to_string(sign), ok);
    }
  // quadratic relation
  for (int sign : {+1, -1})
    for (int k : {-1, 0})
      for (int l : {-1, 0, 1}) {
        bool ok = true;
        for (const auto& v : bs) {
          auto X = [&](int a, const FockVector& w) { return loop_apply(a, sign, w, cap); };
          FockVector lhs = X(k + 1, X(l, v)) - qq(2 * sign) * X(l, X(k + 1, v));
          FockVector rhs = qq(2 * sign) * X(k, X(l + 1, v)) - X(l + 1, X(k, v));
          if (lhs != rhs) ok = false;
        }
        rep.record("x_{k+1} x_l - q^{+-2} x_l x_{k+1} = q^{+-2} x_k x_{l+1} - x_{l+1} x_k",
                   "sign=" + std::to_string(sign) + " k=" + std::to_string(k) +
                       " l=" + std::to_string(l),
                   ok);
      }
  // [x_k^+, x_l^-] = (C^{(k-l)/2} psi_{k+l} - C^{(l-k)/2} phi_{k+l}) / (q - q^-1)
  for (int k : {-1, 0, 1})
    for (int l : {-1, 0, 1}) {
      bool ok = true;
      for (const auto& v : bs) {
        FockVector lhs = loop_apply(k, +1, loop_apply(l, -1, v, cap), cap) -
                         loop_apply(l, -1, loop_apply(k, +1, v, cap), cap);
        FockVector rhs = uq(k - l) * psi_apply(k + l, v) - uq(l - k) * phi_apply(-(k + l), v);
        rhs = (qq(1) - qq(-1)).inverse() * rhs;
        if (lhs != rhs) ok = false;
      }
      rep.record("[x_k^+, x_l^-] = (C^{(k-l)/2} psi - C^{(l-k)/2} phi)/(q-q^-1)",
                 "k=" + std::to_string(k) + " l=" + std::to_string(l), ok);
    }
  // psi_0 acts as K, phi_0 as K^-1
  {
    bool ok = true;
    for (const auto& v : bs) {
      if (psi_apply(0, v) != k_power_apply(1, v)) ok = false;
      if (phi_apply(0, v) != k_power_apply(-1, v)) ok = false;
    }
    rep.record("psi_0 = K, phi_0 = K^-1", "", ok);
  }
  return rep;
}

}  // namespace qfock
