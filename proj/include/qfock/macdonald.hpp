#pragma once

/**
 * @file macdonald.hpp
 * @brief Macdonald polynomials P, Q and the integral forms J, J*, skew
 *        forms and structure constants, and the Cauchy-kernel checks.
 *
 * P_lambda is computed by Gram-Schmidt against the (q,t) scalar product
 * along the dominance-refining canonical order. The b/c/c' scalars use
 * the orientation fixed by orthogonality and integrality:
 *   c_lambda  = prod (1 - q^{a(s)} t^{l(s)+1})   (so J_lambda is Z[q,t]-integral)
 *   c'_lambda = prod (1 - q^{a(s)+1} t^{l(s)})
 *   b_lambda  = c/c',  (P_l, P_l) = 1/b_lambda.
 */

#include <functional>
#include <shared_mutex>

#include "qfock/qseries.hpp"
#include "qfock/report.hpp"
#include "qfock/symfunc.hpp"

namespace qfock {

enum class MacdonaldKind { P, Q, J, Jstar };

struct BCScalars {
  RatQT b, c, cprime;
};

/// c = prod(1 - q^a t^{l+1}), c' = prod(1 - q^{a+1} t^l), b = c/c'
inline BCScalars b_c_scalars(const Partition& lam) {
  RatQT c = RatQT::one(), cp = RatQT::one();
  for (const Cell& s : lam.cells()) {
    int a = lam.arm(s), l = lam.leg(s);
    c *= RatQT::one() - RatQT::monomial(1, a, l + 1);
    cp *= RatQT::one() - RatQT::monomial(1, a + 1, l);
  }
  return {c / cp, c, cp};
}

namespace mcdetail {

/// the degree-preserving Macdonald eigenoperator in boson form:
/// E = [z^0] exp(sum (1-t^-n)/n p_n z^n) exp(-sum (1-q^n) z^-n d/dp_n).
/// Triangular on the monomial basis with simple spectrum; its eigenvectors
/// normalized to leading coefficient 1 are the P_lambda.
inline SymFn apply_macd_operator(const SymFn& f) {
  SymFn fp = f.to_basis(Basis::p);
  SymFn out(Basis::p);
  for (const auto& [rho, c0] : fp.terms()) {
    std::vector<std::pair<int, int>> dist;  // (part value, multiplicity)
    {
      const auto& ps = rho.parts();
      for (size_t i = 0; i < ps.size();) {
        size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        dist.push_back({ps[i], int(j - i)});
        i = j;
      }
    }
    std::vector<int> kv(dist.size(), 0);
    std::function<void(size_t, RatQT, int)> rec = [&](size_t idx, RatQT coef, int removed) {
      if (idx == dist.size()) {
        std::vector<int> rem;
        for (size_t d = 0; d < dist.size(); ++d)
          for (int r = 0; r < dist[d].second - kv[d]; ++r) rem.push_back(dist[d].first);
        if (removed == 0) {
          std::sort(rem.rbegin(), rem.rend());
          out.add_term(Partition(rem), coef);
          return;
        }
        for (const auto& tau : partitions_of(removed)) {
          RatQT cc = coef;
          for (int x : tau.parts())
            cc *= (RatQT::one() - RatQT::t(-x)) * RatQT::fraction(1, x);
          const auto& tp = tau.parts();
          for (size_t i = 0; i < tp.size();) {
            size_t j = i;
            while (j < tp.size() && tp[j] == tp[i]) ++j;
            Int fact = 1;
            for (size_t s = 2; s <= j - i; ++s) fact *= Int(s);
            cc *= RatQT::fraction(1, fact);
            i = j;
          }
          std::vector<int> full = rem;
          full.insert(full.end(), tp.begin(), tp.end());
          std::sort(full.rbegin(), full.rend());
          out.add_term(Partition(full), cc);
        }
        return;
      }
      int n = dist[idx].first, m = dist[idx].second;
      RatQT run = RatQT::one();
      for (int k = 0; k <= m; ++k) {
        if (k > 0)
          run = run * (-(RatQT::one() - RatQT::q(n))) * RatQT::fraction(Int(m - k + 1), Int(k));
        kv[idx] = k;
        rec(idx + 1, coef * run, removed + n * k);
      }
      kv[idx] = 0;
    };
    rec(0, c0, 0);
  }
  return out;
}

struct DegreeFamily {
  std::vector<Partition> parts;       // canonical order
  std::map<Partition, size_t> index;
  std::vector<std::vector<RatQT>> P;  // P[i][j]: coeff of m_j in P_i
  std::vector<RatQT> cscalar;         // c_lambda, cached for J-basis solves
};

inline const DegreeFamily& degree_family(int n) {
  static std::map<int, DegreeFamily> cache;
  static std::shared_mutex mx;
  {
    std::shared_lock lk(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  DegreeFamily F;
  F.parts = partitions_of(n);
  const size_t N = F.parts.size();
  for (size_t i = 0; i < N; ++i) F.index[F.parts[i]] = i;
  F.cscalar.resize(N);
  for (size_t i = 0; i < N; ++i) F.cscalar[i] = b_c_scalars(F.parts[i]).c;
  // operator matrix on the m basis: C[k][j] = coeff of m_j in E m_k
  std::vector<std::vector<RatQT>> C(N, std::vector<RatQT>(N));
  for (size_t k = 0; k < N; ++k) {
    SymFn Em = apply_macd_operator(SymFn::single(Basis::m, F.parts[k])).to_basis(Basis::m);
    for (const auto& [nu, c] : Em.terms()) {
      size_t j = F.index.at(nu);
      if (j > k) throw std::logic_error("degree_family: operator not triangular");
      C[k][j] = c;
    }
  }
  // triangular eigenvector solve per lambda
  F.P.assign(N, std::vector<RatQT>(N));
  for (size_t i = 0; i < N; ++i) {
    std::vector<RatQT>& u = F.P[i];
    u[i] = RatQT::one();
    for (size_t j = i; j-- > 0;) {
      RatQT s;
      for (size_t k = j + 1; k <= i; ++k)
        if (!u[k].is_zero() && !C[k][j].is_zero()) s += u[k] * C[k][j];
      if (s.is_zero()) continue;
      RatQT gap = C[i][i] - C[j][j];
      if (gap.is_zero()) throw std::logic_error("degree_family: degenerate spectrum");
      u[j] = s / gap;
    }
  }
  std::unique_lock lk(mx);
  return cache.emplace(n, std::move(F)).first->second;
}

}  // namespace mcdetail

/// Macdonald P_lambda in the monomial basis
inline SymFn macd_P(const Partition& lam) {
  const auto& F = mcdetail::degree_family(lam.weight());
  size_t i = F.index.at(lam);
  SymFn f(Basis::m);
  for (size_t j = 0; j < F.parts.size(); ++j)
    if (!F.P[i][j].is_zero()) f.add_term(F.parts[j], F.P[i][j]);
  return f;
}

/// (P_lambda, P_lambda) under hall_qt
inline RatQT macd_norm(const Partition& lam) {
  static std::map<Partition, RatQT> cache;
  static std::shared_mutex mx;
  {
    std::shared_lock lk(mx);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  SymFn P = macd_P(lam);
  RatQT v = hall_qt(P, P);
  std::unique_lock lk(mx);
  return cache.emplace(lam, std::move(v)).first->second;
}

inline SymFn macd_family(MacdonaldKind kind, const Partition& lam) {
  SymFn P = macd_P(lam);
  switch (kind) {
    case MacdonaldKind::P: return P;
    case MacdonaldKind::Q: return b_c_scalars(lam).b * P;
    case MacdonaldKind::J: return b_c_scalars(lam).c * P;
    case MacdonaldKind::Jstar: return b_c_scalars(lam).cprime.inverse() * P;
  }
  throw std::logic_error("macd_family: bad kind");
}

namespace mcdetail {

/// coordinates of a degree-homogeneous m-basis vector in the J basis
inline std::map<Partition, RatQT> j_coordinates(const SymFn& f_m, int n) {
  const auto& F = degree_family(n);
  const size_t N = F.parts.size();
  std::vector<RatQT> rhs(N);
  for (const auto& [mu, c] : f_m.terms()) {
    if (mu.weight() != n) throw std::logic_error("j_coordinates: mixed degree");
    rhs[F.index.at(mu)] = c;
  }
  // J_i = c_i * P_i with P unitriangular (dominance-descending entries),
  // so solve from the top of the canonical order downward.
  std::vector<RatQT> x(N);
  for (size_t i = N; i-- > 0;) {
    RatQT v = rhs[i];
    for (size_t j = i + 1; j < N; ++j)
      if (!x[j].is_zero() && !F.P[j][i].is_zero())
        v -= x[j] * F.cscalar[j] * F.P[j][i];
    if (!v.is_zero()) x[i] = v / F.cscalar[i];  // P[i][i] = 1
  }
  std::map<Partition, RatQT> out;
  for (size_t i = 0; i < N; ++i)
    if (!x[i].is_zero()) out[F.parts[i]] = x[i];
  return out;
}

}  // namespace mcdetail

/// skew integral Macdonald polynomial J_{lambda/mu}: the coefficient of
/// J_mu(z) in J_lambda(x, z), as a symmetric function in x (p basis)
inline SymFn skew_J(const Partition& lam, const Partition& mu) {
  SymFn Jp = macd_family(MacdonaldKind::J, lam).to_basis(Basis::p);
  const int dz = mu.weight();
  // split p_nu(x, z) = prod (p(x) + p(z)): collect terms whose z part has
  // degree dz, convert the z part into the J basis, take the mu coordinate
  std::map<Partition, SymFn> by_zpart;  // z-partition -> x-symfn (p basis)
  for (const auto& [nu, c] : Jp.terms()) {
    const auto& parts = nu.parts();
    size_t k = parts.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> xs, zs;
      for (size_t i = 0; i < k; ++i)
        ((mask >> i) & 1u) ? zs.push_back(parts[i]) : xs.push_back(parts[i]);
      int zdeg = 0;
      for (int v : zs) zdeg += v;
      if (zdeg != dz) continue;
      std::sort(xs.rbegin(), xs.rend());
      std::sort(zs.rbegin(), zs.rend());
      by_zpart[Partition(zs)].add_term(Partition(xs), c);
    }
  }
  // z-part currently in the p basis; express in the J basis
  SymFn result(Basis::p);
  for (auto& [zpart, xfn] : by_zpart) {
    SymFn zf = SymFn::single(Basis::p, zpart).to_basis(Basis::m);
    auto coords = mcdetail::j_coordinates(zf, dz);
    auto it = coords.find(mu);
    if (it == coords.end()) continue;
    for (const auto& [xl, xc] : xfn.terms()) result.add_term(xl, xc * it->second);
  }
  return result;
}

/// f(lambda; mu, nu) = [J_nu] J_{lambda/mu}; zero unless |l| = |m| + |n|
inline RatQT struct_f(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.weight() != mu.weight() + nu.weight()) return RatQT::zero();
  SymFn skew = skew_J(lam, mu);
  if (skew.is_zero()) return RatQT::zero();
  auto coords = mcdetail::j_coordinates(skew.to_basis(Basis::m), nu.weight());
  auto it = coords.find(nu);
  return it == coords.end() ? RatQT::zero() : it->second;
}

/// Pi(x,y;q,t) = sum_l P_l(x) Q_l(y), checked in the (p(x),p(y))-bigraded
/// ring to total degree deg; when num_y_vars > 0, additionally with y
/// restricted to that many explicit variables.
inline CheckReport verify_cauchy(int num_y_vars, int deg) {
  CheckReport rep;
  using Key = std::pair<Partition, Partition>;
  std::map<Key, RatQT> lhs, rhs;
  for (int n = 0; n <= deg; ++n)
    for (const auto& rho : partitions_of(n)) {
      RatQT w = RatQT::fraction(1, rho.z());
      for (int x : rho.parts())
        w *= (RatQT::one() - RatQT::t(x)) / (RatQT::one() - RatQT::q(x));
      lhs[{rho, rho}] = w;
    }
  for (int n = 0; n <= deg; ++n)
    for (const auto& lam : partitions_of(n)) {
      SymFn Pp = macd_family(MacdonaldKind::P, lam).to_basis(Basis::p);
      SymFn Qp = macd_family(MacdonaldKind::Q, lam).to_basis(Basis::p);
      for (const auto& [r, cr] : Pp.terms())
        for (const auto& [s, cs] : Qp.terms()) {
          auto& slot = rhs[{r, s}];
          slot += cr * cs;
        }
    }
  for (auto it = rhs.begin(); it != rhs.end();)
    it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
  for (auto it = lhs.begin(); it != lhs.end();)
    it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
  if (lhs != rhs) {
    rep.pass = false;
    rep.detail = "bigraded kernel mismatch";
    return rep;
  }
  if (num_y_vars > 0) {
    const int N = num_y_vars;
    using VKey = std::pair<Partition, std::vector<int>>;
    std::map<VKey, RatQT> l2, r2;
    // lhs: exp(sum_n (1-t^n)/(1-q^n) (1/n) p_n(x) p_n(y_1..y_N))
    for (int n = 0; n <= deg; ++n)
      for (const auto& rho : partitions_of(n)) {
        RatQT w = RatQT::fraction(1, rho.z());
        for (int x : rho.parts())
          w *= (RatQT::one() - RatQT::t(x)) / (RatQT::one() - RatQT::q(x));
        // expand p_rho(y_1..y_N)
        auto py = expand_in_vars(SymFn::single(Basis::p, rho), N);
        for (const auto& [ve, cv] : py) {
          auto& slot = l2[{rho, ve}];
          slot += w * cv;
        }
      }
    for (int n = 0; n <= deg; ++n)
      for (const auto& lam : partitions_of(n)) {
        if (lam.length() > N) continue;  // Q_l(y_1..y_N) vanishes
        SymFn Pp = macd_family(MacdonaldKind::P, lam).to_basis(Basis::p);
        auto Qy = expand_in_vars(macd_family(MacdonaldKind::Q, lam), N);
        for (const auto& [r, cr] : Pp.terms())
          for (const auto& [ve, cv] : Qy) {
            auto& slot = r2[{r, ve}];
            slot += cr * cv;
          }
      }
    for (auto it = r2.begin(); it != r2.end();)
      it = it->second.is_zero() ? r2.erase(it) : std::next(it);
    for (auto it = l2.begin(); it != l2.end();)
      it = it->second.is_zero() ? l2.erase(it) : std::next(it);
    if (l2 != r2) {
      rep.pass = false;
      rep.detail = "restricted-variable kernel mismatch";
    }
  }
  return rep;
}

/// exp(sum (-1)^{n-1} (b_n/n) sum_j z_j^n) = sum_{l(lambda)<=N} P_lambda(z;q,t)
/// * curlyP_{lambda'}(b; t, q), checked to total degree deg in N z-variables.
inline CheckReport verify_dual_cauchy(int N, int deg) {
  CheckReport rep;
  using Key = std::pair<Partition, std::vector<int>>;  // (b-partition, z-exponents)
  std::map<Key, RatQT> lhs, rhs;
  for (int n = 0; n <= deg; ++n)
    for (const auto& beta : partitions_of(n)) {
      // coefficient of b_beta: prod (-1)^{b_i-1}/b_i / (multiplicities!)
      RatQT w = RatQT::fraction(1, beta.z());
      int sgn = 0;
      for (int x : beta.parts()) sgn += x - 1;
      if (sgn % 2) w = -w;
      // .. times p_beta(z_1..z_N); note z_beta = prod parts * mult! matches
      auto pz = expand_in_vars(SymFn::single(Basis::p, beta), N);
      for (const auto& [ve, cv] : pz) lhs[{beta, ve}] += w * cv;
    }
  for (int n = 0; n <= deg; ++n)
    for (const auto& lam : partitions_of(n)) {
      if (lam.length() > N) continue;
      auto Pz = expand_in_vars(macd_family(MacdonaldKind::P, lam), N);
      if (Pz.empty()) continue;
      // curlyP_{lambda'}(b; t, q): p-expansion of P_{lambda'} with q,t swapped
      SymFn Pb = macd_family(MacdonaldKind::P, lam.conjugate())
                     .to_basis(Basis::p)
                     .map_coeffs([](const RatQT& c) { return c.swap_qt(); });
      for (const auto& [beta, cb] : Pb.terms())
        for (const auto& [ve, cv] : Pz) rhs[{beta, ve}] += cb * cv;
    }
  for (auto it = rhs.begin(); it != rhs.end();)
    it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
  for (auto it = lhs.begin(); it != lhs.end();)
    it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
  if (lhs != rhs) {
    rep.pass = false;
    rep.detail = "dual kernel mismatch";
  }
  return rep;
}

/// bar(xi(z)) * xi(z) = 1 - z, coefficient-wise to order deg
inline CheckReport verify_xi_bar_identity(int deg) {
  CheckReport rep;
  ZSeries xi = xi_series(deg);
  ZSeries prod = xi * xi.bar();
  for (int k = 0; k <= deg; ++k) {
    RatQT expect = k == 0 ? RatQT::one() : (k == 1 ? -RatQT::one() : RatQT::zero());
    if (prod[k] != expect) {
      rep.pass = false;
      rep.detail = "xi bar identity fails at order " + std::to_string(k);
      return rep;
    }
  }
  // companion identity: exp(sum (1/n) [n]/[2n] z^n) = (q^3 z;q^4)/(q z;q^4)
  std::vector<RatQT> logc(size_t(deg) + 1);
  for (int n = 1; n <= deg; ++n)
    logc[size_t(n)] =
        quantum_int(n) / (quantum_int(2 * n) * RatQT::integer(n));
  ZSeries lhs = series_exp(logc, deg);
  ZSeries rhsv = poch_ratio(3, 1, 4, deg);
  for (int k = 0; k <= deg; ++k)
    if (lhs[k] != rhsv[k]) {
      rep.pass = false;
      rep.detail = "pochhammer exponential identity fails at order " + std::to_string(k);
      return rep;
    }
  return rep;
}

}  // namespace qfock
