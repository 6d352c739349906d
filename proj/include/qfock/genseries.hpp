#pragma once

/**
 * @file genseries.hpp
 * @brief Products of vertex operators on the highest weight vectors versus
 *        the closed product forms and the Macdonald-sum forms, plus the
 *        composed-kernel identities of the dual-vertex lemma.
 *
 * All comparisons are coefficient-wise over multi-exponents (k_1..k_N) of
 * (z_1..z_N). At fixed exponents both sides are finite exact computations:
 * the total Fock degree of the coefficient is determined by sum k_j.
 */

#include "qfock/vertex.hpp"

namespace qfock {

namespace gsdetail {

/// per-step scalars (-q)^{a h + b} of the four normalized products
struct ProductSpec {
  VertexKind kind;
  int a, b;             // (-q)^{a*partial + b} applied after each factor
  int cre_exp;          // creation coefficient u^{cre_exp * n}/n of the product form
  int cre_sign;         // sign of the creation exponential
  bool ratio_vandermonde;  // true: prod (1 - z_j/z_i)/xi; false: prod xi
  bool mono_positive;   // z_j^{+floor((N-j+1+i)/2)} vs z_j^{-floor((N-j+1-i)/2)}
  int mac_scale;        // u-power per unit degree of the z-variables in the mac sum
};

inline ProductSpec product_spec(VertexKind k) {
  switch (k) {
    case VertexKind::BarPhiMinus: return {k, 1, -1, -5, +1, true, true, -5};
    case VertexKind::PhiMinus: return {k, -1, 1, 7, +1, false, true, 7};
    case VertexKind::BarPhiPlus: return {k, -1, 0, -1, -1, true, false, -1};
    case VertexKind::PhiPlus: return {k, 1, 0, 11, -1, false, false, 11};
  }
  throw std::logic_error("product_spec");
}

/// target sector of the N-fold product on |Lambda_i>
inline Sector product_target(VertexKind k, int N, int i) {
  int kk = (1 + ((N + i + 1) % 2 == 0 ? 1 : -1)) / 2;
  if (k == VertexKind::BarPhiMinus || k == VertexKind::PhiMinus) {
    int m = (N + i) / 2;
    return Sector{kk, m};
  }
  int n = (N + 1 - i) / 2;
  return Sector{kk, -n};
}

inline FockVector scale_partial(int a, int b, const FockVector& v) {
  FockVector out;
  for (const auto& [key, c] : v.terms())
    out.add_term(key, c * minus_q_pow(a * key.s.h() + b));
  return out;
}

/// composite creation with per-variable degrees s (order-independent)
inline FockVector creation_multi(const std::function<RatQT(int)>& coef, std::vector<int> s,
                                 FockVector v) {
  std::sort(s.begin(), s.end());
  for (int d : s)
    if (d > 0) v = fkdetail::creation_exp(coef, d, v);
  return v;
}

}  // namespace gsdetail

/// left side: the normalized product coefficients over an exponent window.
/// Returns map from (k_1..k_N) to the exact coefficient vector, restricted to
/// final degree in [0, deg_cap] and |k_j| <= zbox.
/// the coefficient degree is determined by the exponents: each factor shifts
/// the degree by zp - (m+i) (the h-raising kinds) or zp + m (the h-lowering
/// kinds), along a deterministic sector path; this gives the exact sum filter
inline int product_degree_constant(VertexKind kind, int N, int i) {
  const bool raising = (kind == VertexKind::PhiMinus || kind == VertexKind::BarPhiMinus);
  Sector s{i, 0};
  int c = 0;
  for (int step = 0; step < N; ++step) {
    if (raising) {
      c -= s.m + s.i;
      s = s.shifted_half(1);
    } else {
      c += s.m;
      s = s.shifted_half(-1);
    }
  }
  return c;
}

inline std::map<std::vector<int>, FockVector> vertex_product_window(VertexKind kind, int N, int i,
                                                                    int zbox, int deg_cap) {
  auto spec = gsdetail::product_spec(kind);
  const int C = product_degree_constant(kind, N, i);
  const int smin = -C, smax = deg_cap - C;  // allowed values of sum k_j
  const int capI = deg_cap + N * (zbox + 3) + 6;
  std::map<std::vector<int>, FockVector> cur;
  cur[{}] = FockVector::vacuum(Sector{i, 0});
  for (int step = N; step-- > 0;) {
    std::map<std::vector<int>, FockVector> next;
    for (const auto& [exps, w] : cur) {
      int partial = 0;
      for (int x : exps) partial += x;
      for (int zp = -zbox; zp <= zbox; ++zp) {
        // prune exponent prefixes that cannot reach an allowed sum
        int lo = partial + zp - step * zbox, hi = partial + zp + step * zbox;
        if (hi < smin || lo > smax) continue;
        FockVector r = vertex_apply(kind, zp, w, capI);
        if (r.is_zero()) continue;
        r = gsdetail::scale_partial(spec.a, spec.b, r);
        std::vector<int> e;
        e.push_back(zp);
        e.insert(e.end(), exps.begin(), exps.end());
        auto it = next.find(e);
        if (it == next.end())
          next[e] = r;
        else {
          it->second += r;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    cur = std::move(next);
  }
  std::map<std::vector<int>, FockVector> out;
  for (auto& [e, w] : cur)
    if (!w.is_zero() && w.max_degree() <= deg_cap) out[e] = std::move(w);
  return out;
}

/// right side of Prop. 'genseries' over the same window
inline std::map<std::vector<int>, FockVector> genseries_rhs_window(VertexKind kind, int N, int i,
                                                                   int zbox, int deg_cap) {
  auto spec = gsdetail::product_spec(kind);
  Sector target = gsdetail::product_target(kind, N, i);
  FockVector base = normalized_vacuum(target);
  // fixed monomial exponents (1-based j)
  std::vector<int> e(static_cast<size_t>(N));
  for (int j = 1; j <= N; ++j)
    e[size_t(j - 1)] = spec.mono_positive ? (N - j + 1 + i) / 2 : -((N - j + 1 - i) / 2);
  // ratio series in each pair variable z_b/z_a
  const int maxE = 3;
  int Rcap = zbox + deg_cap + maxE + 2;
  std::vector<int> rc(static_cast<size_t>(N), Rcap);
  for (int lvl = 1; lvl < N; ++lvl) rc[size_t(lvl)] = rc[size_t(lvl - 1)] + Rcap;
  int Rmax = rc[size_t(N - 1)];
  ZSeries xi = poch_ratio(4, 8, 8, Rmax);  // xi(x) in u-units
  ZSeries ratio = xi.inverse();
  if (spec.ratio_vandermonde) {
    ZSeries onemx(Rmax);
    onemx[0] = RatQT::one();
    onemx[1] = -RatQT::one();
    ratio = onemx * ratio;
  } else {
    ratio = xi;
  }
  auto cre = [&](int n) {
    return RatQT::integer(spec.cre_sign) * uq(spec.cre_exp * n) * RatQT::fraction(1, n);
  };
  // memoized composite creations
  std::map<std::vector<int>, FockVector> cre_memo;
  auto creation = [&](std::vector<int> s) -> const FockVector& {
    std::sort(s.begin(), s.end());
    auto it = cre_memo.find(s);
    if (it != cre_memo.end()) return it->second;
    FockVector w = gsdetail::creation_multi(cre, s, base);
    return cre_memo.emplace(std::move(s), std::move(w)).first->second;
  };

  std::map<std::vector<int>, FockVector> out;
  // enumerate ratio orders r[a][b] for a < b (0-based), then creation degrees
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) pairs.push_back({a, b});
  std::vector<int> rv(pairs.size(), 0);
  std::function<void(size_t, RatQT)> rec = [&](size_t idx, RatQT coef) {
    if (coef.is_zero()) return;
    if (idx == pairs.size()) {
      // partial exponents
      std::vector<int> p = e;
      for (size_t t = 0; t < pairs.size(); ++t) {
        p[size_t(pairs[t].first)] -= rv[t];
        p[size_t(pairs[t].second)] += rv[t];
      }
      // creation degrees s_j >= 0 with total <= deg_cap
      std::vector<int> s(static_cast<size_t>(N), 0);
      std::function<void(int, int)> recs = [&](int j, int total) {
        if (j == N) {
          std::vector<int> k(static_cast<size_t>(N));
          bool inside = true;
          for (int x = 0; x < N; ++x) {
            k[size_t(x)] = p[size_t(x)] + s[size_t(x)];
            if (std::abs(k[size_t(x)]) > zbox) inside = false;
          }
          if (!inside) return;
          FockVector w = coef * creation(s);
          if (w.is_zero()) return;
          auto it = out.find(k);
          if (it == out.end())
            out[k] = w;
          else {
            it->second += w;
            if (it->second.is_zero()) out.erase(it);
          }
          return;
        }
        for (int d = 0; total + d <= deg_cap; ++d) {
          s[size_t(j)] = d;
          recs(j + 1, total + d);
        }
        s[size_t(j)] = 0;
      };
      recs(0, 0);
      return;
    }
    int a = pairs[idx].first;
    for (int r = 0; r <= rc[size_t(a)]; ++r) {
      if (r > ratio.deg()) break;
      rv[idx] = r;
      rec(idx + 1, coef * ratio[r]);
    }
    rv[idx] = 0;
  };
  rec(0, RatQT::one());
  return out;
}

/// right side of Prop. 'firstmac' over the same window
inline std::map<std::vector<int>, FockVector> firstmac_rhs_window(VertexKind kind, int N, int i,
                                                                  int zbox, int deg_cap) {
  auto spec = gsdetail::product_spec(kind);
  Sector target = gsdetail::product_target(kind, N, i);
  FockVector vac = normalized_vacuum(target);
  const bool pos = positive_side(target);
  const bool barred_prefactor =
      (kind == VertexKind::BarPhiMinus || kind == VertexKind::BarPhiPlus);

  std::vector<int> e(static_cast<size_t>(N));
  for (int j = 1; j <= N; ++j)
    e[size_t(j - 1)] = spec.mono_positive ? (N - j + 1 + i) / 2 : -((N - j + 1 - i) / 2);

  const int maxE = 3;
  int Rcap = zbox + deg_cap + maxE + 2;
  std::vector<int> rc(static_cast<size_t>(N), Rcap);
  for (int lvl = 1; lvl < N; ++lvl) rc[size_t(lvl)] = rc[size_t(lvl - 1)] + Rcap;
  int Rmax = rc[size_t(N - 1)];
  ZSeries xi = poch_ratio(4, 8, 8, Rmax);
  ZSeries ratio = barred_prefactor ? xi.bar() : xi;

  std::map<std::vector<int>, FockVector> out;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) pairs.push_back({a, b});

  for (int n = 0; n <= deg_cap; ++n) {
    for (const auto& lam : partitions_of(n)) {
      if (lam.length() > N) continue;
      // P_lambda(z_1..z_N; q^4, q^2), variables scaled by u^{mac_scale}
      SymFn Pz = macd_P(lam).map_coeffs([](const RatQT& c) { return c.subst(8, 4, 0, 0); });
      auto zmono = expand_in_vars(Pz, N);
      if (zmono.empty()) continue;
      RatQT zscale = uq(spec.mac_scale * n);
      // Fock part: sum_mu [P_{lambda'} at (q^2,q^4)]_mu theta(mu) a_{-mu} v
      SymFn Pp = macd_P(lam.conjugate()).to_basis(Basis::p);
      FockVector fock;
      for (const auto& [mu, c] : Pp.terms()) {
        RatQT w = c.subst(4, 8, 0, 0) * RatQT::integer(fkdetail::theta_sign(mu, pos));
        for (const auto& [key, vc] : vac.terms()) {
          std::vector<int> ps = key.lam.parts();
          ps.insert(ps.end(), mu.parts().begin(), mu.parts().end());
          std::sort(ps.rbegin(), ps.rend());
          fock.add_term({Partition(ps), key.s}, w * vc);
        }
      }
      if (fock.is_zero()) continue;
      // distribute ratio orders against each z-monomial of P_lambda
      std::vector<int> rv(pairs.size(), 0);
      std::function<void(size_t, RatQT)> rec = [&](size_t idx, RatQT coef) {
        if (coef.is_zero()) return;
        if (idx == pairs.size()) {
          for (const auto& [alpha, ac] : zmono) {
            std::vector<int> k(static_cast<size_t>(N));
            bool inside = true;
            for (int x = 0; x < N; ++x) {
              k[size_t(x)] = e[size_t(x)] + alpha[size_t(x)];
              for (size_t t = 0; t < pairs.size(); ++t) {
                if (pairs[t].first == x) k[size_t(x)] -= rv[t];
                if (pairs[t].second == x) k[size_t(x)] += rv[t];
              }
              if (std::abs(k[size_t(x)]) > zbox) inside = false;
            }
            if (!inside) continue;
            FockVector w = (coef * ac * zscale) * fock;
            if (w.is_zero()) continue;
            auto it = out.find(k);
            if (it == out.end())
              out[k] = w;
            else {
              it->second += w;
              if (it->second.is_zero()) out.erase(it);
            }
          }
          return;
        }
        int a = pairs[idx].first;
        for (int r = 0; r <= rc[size_t(a)]; ++r) {
          if (r > ratio.deg()) break;
          rv[idx] = r;
          rec(idx + 1, coef * ratio[r]);
        }
        rv[idx] = 0;
      };
      rec(0, RatQT::one());
    }
  }
  return out;
}

/// compare the product against both closed forms; excluded corner sectors of
/// Prop. 'fouractions' (m = 0 with the wrong i) are reported, not asserted
inline SuiteReport verify_genseries(int Nmax, int deg_cap) {
  SuiteReport rep;
  const int zbox = deg_cap + 3;
  for (VertexKind kind : {VertexKind::BarPhiMinus, VertexKind::PhiMinus, VertexKind::BarPhiPlus,
                          VertexKind::PhiPlus}) {
    for (int N = 1; N <= Nmax; ++N) {
      for (int i : {0, 1}) {
        Sector target = gsdetail::product_target(kind, N, i);
        bool excluded = false;
        if (kind == VertexKind::BarPhiMinus && target.m == 0 && target.i == 0) excluded = true;
        if (kind == VertexKind::PhiPlus && target.m == 0 && target.i == 1) excluded = true;
        auto lhs = vertex_product_window(kind, N, i, zbox, deg_cap);
        auto rhs = genseries_rhs_window(kind, N, i, zbox, deg_cap);
        bool ok = (lhs == rhs);
        std::string where = std::string(vertex_name(kind)) + " N=" + std::to_string(N) +
                            " i=" + std::to_string(i) + (excluded ? " [excluded corner]" : "");
        if (excluded)
          rep.record("genseries (excluded corner, reported only)", where, true,
                     ok ? "matches anyway" : "closed form differs in the excluded sector");
        else
          rep.record("product = genseries closed form", where, ok);
        auto rhs2 = firstmac_rhs_window(kind, N, i, zbox, deg_cap);
        bool ok2 = (lhs == rhs2);
        if (excluded)
          rep.record("firstmac (excluded corner, reported only)", where, true,
                     ok2 ? "matches anyway" : "Macdonald-sum form differs in the excluded sector");
        else
          rep.record("product = Macdonald-sum form", where, ok2);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// composed dual-vertex kernels (Lemma 'iplemma')
// ---------------------------------------------------------------------------

/// Composed dual-vertex kernels. In this realization (derived by commuting
/// the exponential factors; the printed lemma swaps the two w-exponentials
/// and drops the sector offsets):
/// (a) BarPhi*_-(z^{-1}) (-q)^{2 partial - 2} BarPhi_-(w) v_{m,i}
///     = (zw)^{m+i} (q^-8 zw; q^-4)/(q^-6 zw; q^-4)
///       exp(-sum q^{3n/2}/n a_{-n} z^{-n}) exp(+sum q^{-5n/2}/n a_{-n} w^n) v_{m,i}
/// (b) Phi*_+(z^{-1}) (-q)^{2 partial} Phi_+(w) v_{-m,i}
///     = (zw)^{m} (q^8 zw; q^4)/(q^6 zw; q^4)
///       exp(+sum q^{3n/2}/n a_{-n} z^{-n}) exp(-sum q^{11n/2}/n a_{-n} w^n) v_{-m,i}
inline SuiteReport verify_iplemma_kernels(int total_deg, const std::vector<Sector>& sectors) {
  SuiteReport rep;
  const int box = total_deg + 3;
  const int cap = 2 * box + total_deg + 8;
  for (const Sector& sec : sectors) {
    FockVector v = normalized_vacuum(sec);
    const bool part_a = positive_side(sec);
    const int offset = part_a ? (sec.m + sec.i) : (-sec.m);
    bool ok = true;
    // (a): log coeff (q^{-4n}-q^{-2n})/(1-q^{4n}); (b): (q^{6n}-q^{8n})/(1-q^{4n})
    ZSeries kernel = part_a ? poch_ratio(-4, -8, 8, 2 * box) : poch_ratio(16, 12, 8, 2 * box);
    auto creZ = [&](int n) {
      return (part_a ? -uq(3 * n) : uq(3 * n)) * RatQT::fraction(1, n);
    };
    auto creW = [&](int n) {
      return (part_a ? uq(-5 * n) : -uq(11 * n)) * RatQT::fraction(1, n);
    };
    for (int zp = -box; zp <= box; ++zp)
      for (int wp = -box; wp <= box; ++wp) {
        FockVector inner =
            vertex_apply(part_a ? VertexKind::BarPhiMinus : VertexKind::PhiPlus, wp, v, cap);
        inner = gsdetail::scale_partial(2, part_a ? -2 : 0, inner);
        FockVector lhs = dual_vertex_apply(part_a, part_a ? -1 : +1, -zp, inner, cap);
        if (lhs.max_degree() > total_deg && !lhs.is_zero()) continue;
        FockVector rhs;
        for (int k = 0; k <= 2 * box; ++k) {
          int s1 = k + offset - zp;  // z^{-s1}
          int s2 = wp - k - offset;  // w^{s2}
          if (s1 < 0 || s2 < 0 || s1 + s2 > total_deg) continue;
          if (kernel[k].is_zero()) continue;
          FockVector w1 = fkdetail::creation_exp(creZ, s1, v);
          w1 = fkdetail::creation_exp(creW, s2, w1);
          rhs += kernel[k] * w1;
        }
        if (lhs != rhs) ok = false;
      }
    rep.record(part_a ? "iplemma (a) composed kernel" : "iplemma (b) composed kernel",
               "sector " + sec.str(), ok);
  }
  return rep;
}

}  // namespace qfock
