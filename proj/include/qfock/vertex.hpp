#pragma once

/**
 * @file vertex.hpp
 * @brief The four type-I vertex operators on H, their duals, the H (x) V_z
 *        intertwiner checks, and the product generating-series identities.
 *
 * Phi_- and BarPhi_+ act by closed-form exponential factors with per-sector
 * scalar powers ((-q^3 z)^{(h+i)/2} resp. (-qz)^{-m}(-q)^{i-1}); Phi_+ and
 * BarPhi_- are defined through their commutators with x_0^-, x_0^+.
 */

#include "qfock/fock.hpp"
#include "qfock/qseries.hpp"

namespace qfock {

enum class VertexKind { PhiMinus, PhiPlus, BarPhiPlus, BarPhiMinus };

inline const char* vertex_name(VertexKind k) {
  switch (k) {
    case VertexKind::PhiMinus: return "Phi-";
    case VertexKind::PhiPlus: return "Phi+";
    case VertexKind::BarPhiPlus: return "BarPhi+";
    default: return "BarPhi-";
  }
}

/// coefficient of z^{zpow} of the named operator series applied to v
inline FockVector vertex_apply(VertexKind kind, int zpow, const FockVector& v, int deg_cap) {
  switch (kind) {
    case VertexKind::PhiMinus: {
      FockVector out;
      for (const auto& [key, c] : v.terms()) {
        int m = key.s.m, i = key.s.i, d = key.lam.weight();
        int off = m + i;  // (-q^3 z)^{(h+i)/2}
        int delta = zpow - off;
        int dprime = d + delta;
        if (dprime < 0) continue;
        if (dprime > deg_cap) throw TruncationError(dprime);
        RatQT scalar = c * minus_q_pow(3 * off);
        FockVector single = FockVector::term(key.lam, key.s, scalar);
        auto cre = [](int n) { return uq(7 * n) * RatQT::fraction(1, n); };
        auto ann = [](int n) { return -uq(-5 * n) * RatQT::fraction(1, n); };
        for (int r = 0; r <= d; ++r) {
          int s = delta + r;
          if (s < 0) continue;
          FockVector w = fkdetail::annihilation_exp(ann, r, single);
          if (w.is_zero()) continue;
          out += half_root_shift(1, fkdetail::creation_exp(cre, s, w));
        }
      }
      return out;
    }
    case VertexKind::BarPhiPlus: {
      FockVector out;
      for (const auto& [key, c] : v.terms()) {
        int m = key.s.m, i = key.s.i, d = key.lam.weight();
        int off = -m;  // (-qz)^{(-h+i)/2} (-q)^{i-1}
        int delta = zpow - off;
        int dprime = d + delta;
        if (dprime < 0) continue;
        if (dprime > deg_cap) throw TruncationError(dprime);
        RatQT scalar = c * minus_q_pow(-m + i - 1);
        FockVector single = FockVector::term(key.lam, key.s, scalar);
        auto cre = [](int n) { return -uq(-n) * RatQT::fraction(1, n); };
        auto ann = [](int n) { return uq(-n) * RatQT::fraction(1, n); };
        for (int r = 0; r <= d; ++r) {
          int s = delta + r;
          if (s < 0) continue;
          FockVector w = fkdetail::annihilation_exp(ann, r, single);
          if (w.is_zero()) continue;
          out += half_root_shift(-1, fkdetail::creation_exp(cre, s, w));
        }
      }
      return out;
    }
    case VertexKind::PhiPlus: {
      // Phi_+(z) = Phi_-(z) x_0^- - q x_0^- Phi_-(z)
      const int cap = deg_cap + 4;
      FockVector a = vertex_apply(VertexKind::PhiMinus, zpow, loop_apply(0, -1, v, cap), deg_cap);
      FockVector b =
          loop_apply(0, -1, vertex_apply(VertexKind::PhiMinus, zpow, v, cap), deg_cap + 2);
      return a - qq(1) * b;
    }
    case VertexKind::BarPhiMinus: {
      // BarPhi_-(z) = K [BarPhi_+(z), x_0^+]
      const int cap = deg_cap + 4;
      FockVector a = vertex_apply(VertexKind::BarPhiPlus, zpow, loop_apply(0, +1, v, cap), deg_cap);
      FockVector b =
          loop_apply(0, +1, vertex_apply(VertexKind::BarPhiPlus, zpow, v, cap), deg_cap + 2);
      return k_power_apply(1, a - b);
    }
  }
  throw std::logic_error("vertex_apply: bad kind");
}

/// Phi*_eps(z) = (-q)^{i+(eps-1)/2} Phi_{-eps}(q^{-2}z);
/// BarPhi*_eps(z) = (-q)^{-i+(1-eps)/2} BarPhi_{-eps}(q^{2}z).
/// i is the sector tag of the input term.
inline FockVector dual_vertex_apply(bool barred, int eps, int zpow, const FockVector& v,
                                    int deg_cap) {
  FockVector out;
  for (const auto& [key, c] : v.terms()) {
    FockVector single = FockVector::term(key.lam, key.s, c);
    int i = key.s.i;
    if (!barred) {
      VertexKind k = (eps == +1) ? VertexKind::PhiMinus : VertexKind::PhiPlus;
      int e = i + (eps - 1) / 2;
      FockVector w = vertex_apply(k, zpow, single, deg_cap);
      out += (minus_q_pow(e) * qq(-2 * zpow)) * w;
    } else {
      VertexKind k = (eps == +1) ? VertexKind::BarPhiMinus : VertexKind::BarPhiPlus;
      int e = -i + (1 - eps) / 2;
      FockVector w = vertex_apply(k, zpow, single, deg_cap);
      out += (minus_q_pow(e) * qq(2 * zpow)) * w;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// H (x) V_z and the intertwiner property
// ---------------------------------------------------------------------------

struct TensKey {
  FockKey f;
  int eps;   // +1 for v_+, -1 for v_-
  int zpow;  // power of z in V_z
  friend bool operator<(const TensKey& a, const TensKey& b) {
    if (a.zpow != b.zpow) return a.zpow < b.zpow;
    if (a.eps != b.eps) return a.eps < b.eps;
    return a.f < b.f;
  }
  friend bool operator==(const TensKey& a, const TensKey& b) {
    return a.zpow == b.zpow && a.eps == b.eps && a.f == b.f;
  }
};

class TensorVector {
 public:
  const std::map<TensKey, RatQT>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const TensKey& k, const RatQT& c) {
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  void add_fock(const FockVector& v, int eps, int zpow, const RatQT& scale = RatQT::one()) {
    for (const auto& [k, c] : v.terms()) add_term({k, eps, zpow}, scale * c);
  }
  TensorVector& operator+=(const TensorVector& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  TensorVector& operator-=(const TensorVector& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.t_ == b.t_; }

  TensorVector restrict_zwindow(int zlo, int zhi) const {
    TensorVector r;
    for (const auto& [k, c] : t_)
      if (k.zpow >= zlo && k.zpow <= zhi) r.t_[k] = c;
    return r;
  }

 private:
  std::map<TensKey, RatQT> t_;
};

/// Phi(z) v = sum_eps sum_n Phi_{eps,n} v (x) (v_eps (x) z^{-n}); the z-power
/// attached in V_z equals the z-power of the operator coefficient.
inline TensorVector intertwiner_apply(bool barred, const FockVector& v, int zlo, int zhi,
                                      int deg_cap) {
  TensorVector T;
  for (int zp = zlo; zp <= zhi; ++zp) {
    for (int eps : {+1, -1}) {
      VertexKind k;
      if (!barred)
        k = (eps == +1) ? VertexKind::PhiPlus : VertexKind::PhiMinus;
      else
        k = (eps == +1) ? VertexKind::BarPhiPlus : VertexKind::BarPhiMinus;
      T.add_fock(vertex_apply(k, zp, v, deg_cap), eps, zp);
    }
  }
  return T;
}

/// V_z action table of a Chevalley generator on (v_eps, z^k)
struct VzImage {
  bool nonzero = false;
  int eps = 0;
  int dz = 0;
  RatQT scale;
};

inline VzImage vz_action(Gen g, int eps) {
  switch (g) {
    case Gen::E0: return eps == +1 ? VzImage{true, -1, +1, RatQT::one()} : VzImage{};
    case Gen::E1: return eps == -1 ? VzImage{true, +1, 0, RatQT::one()} : VzImage{};
    case Gen::F0: return eps == -1 ? VzImage{true, +1, -1, RatQT::one()} : VzImage{};
    case Gen::F1: return eps == +1 ? VzImage{true, -1, 0, RatQT::one()} : VzImage{};
    case Gen::K1: return {true, eps, 0, qq(eps)};
    case Gen::K1inv: return {true, eps, 0, qq(-eps)};
    case Gen::K0: return {true, eps, 0, qq(-eps)};
    case Gen::K0inv: return {true, eps, 0, qq(eps)};
  }
  return {};
}

/// Delta(g) (standard) or conjugated coproduct Delta-bar(g) on H (x) V_z
inline TensorVector coproduct_apply(Gen g, bool conjugated, const TensorVector& T, int deg_cap) {
  TensorVector out;
  auto add_pair = [&](Gen first, Gen second, const TensorVector& src) {
    // first acts on the Fock leg, second on the V_z leg
    for (const auto& [k, c] : src.terms()) {
      VzImage im = vz_action(second, k.eps);
      if (!im.nonzero) continue;
      FockVector w =
          chevalley_apply(first, FockVector::term(k.f.lam, k.f.s, c * im.scale), deg_cap);
      out.add_fock(w, im.eps, k.zpow + im.dz);
    }
  };
  auto add_first_only = [&](Gen first, const TensorVector& src) {
    for (const auto& [k, c] : src.terms()) {
      FockVector w = chevalley_apply(first, FockVector::term(k.f.lam, k.f.s, c), deg_cap);
      out.add_fock(w, k.eps, k.zpow);
    }
  };
  auto add_second_only = [&](Gen second, const TensorVector& src) {
    for (const auto& [k, c] : src.terms()) {
      VzImage im = vz_action(second, k.eps);
      if (!im.nonzero) continue;
      out.add_term({k.f, im.eps, k.zpow + im.dz}, c * im.scale);
    }
  };
  const bool isE = (g == Gen::E0 || g == Gen::E1);
  const bool isF = (g == Gen::F0 || g == Gen::F1);
  Gen K = (g == Gen::E0 || g == Gen::F0 || g == Gen::K0) ? Gen::K0 : Gen::K1;
  Gen Kinv = (K == Gen::K0) ? Gen::K0inv : Gen::K1inv;
  if (isE) {
    // Delta(E) = K (x) E + E (x) 1 ; conjugated: K^{-1} (x) E + E (x) 1
    add_pair(conjugated ? Kinv : K, g, T);
    add_first_only(g, T);
  } else if (isF) {
    // Delta(F) = 1 (x) F + F (x) K^{-1} ; conjugated: F (x) K + 1 (x) F
    add_second_only(g, T);
    add_pair(g, conjugated ? K : Kinv, T);
  } else {
    add_pair(g, g, T);
  }
  return out;
}

/// Delta(g) Phi = Phi g, coefficient-wise, on all basis vectors of degree
/// <= deg_cap in the listed sectors (and the conjugated statement for BarPhi)
inline SuiteReport verify_intertwiner(Gen g, int deg_cap, const std::vector<Sector>& sectors) {
  SuiteReport rep;
  const int zw = deg_cap + 5;
  const int cap = deg_cap + 2 * zw + 6;
  for (bool barred : {false, true}) {
    bool ok = true;
    for (const auto& v : basis_vectors(deg_cap, sectors)) {
      TensorVector wide = intertwiner_apply(barred, v, -zw - 1, zw + 1, cap);
      TensorVector lhs = coproduct_apply(g, barred, wide, cap).restrict_zwindow(-zw, zw);
      TensorVector rhs =
          intertwiner_apply(barred, chevalley_apply(g, v, cap), -zw, zw, cap);
      if (!(lhs == rhs)) ok = false;
    }
    rep.record(std::string(barred ? "Delta-bar(g) BarPhi = BarPhi g" : "Delta(g) Phi = Phi g"),
               gen_name(g), ok);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// the relation system (kphi)..(phiminusxoneminus) and the a_n lemma
// ---------------------------------------------------------------------------

inline SuiteReport verify_vertex_relations(int deg_cap, const std::vector<Sector>& sectors) {
  SuiteReport rep;
  const int zw = deg_cap + 4;
  const int cap = deg_cap + 2 * zw + 8;
  auto bs = basis_vectors(deg_cap, sectors);
  auto bp = [&](int zp, const FockVector& v) {
    return vertex_apply(VertexKind::BarPhiPlus, zp, v, cap);
  };
  auto bm = [&](int zp, const FockVector& v) {
    return vertex_apply(VertexKind::BarPhiMinus, zp, v, cap);
  };
  // hatted generators
  auto hx0p = [&](const FockVector& v) { return loop_apply(0, +1, k_power_apply(1, v), cap); };
  auto hx0m = [&](const FockVector& v) { return k_power_apply(-1, loop_apply(0, -1, v, cap)); };
  auto hxm1p = [&](const FockVector& v) { return loop_apply(-1, +1, k_power_apply(1, v), cap); };
  auto hx1m = [&](const FockVector& v) { return k_power_apply(-1, loop_apply(1, -1, v, cap)); };

  auto check = [&](const std::string& name,
                   const std::function<FockVector(int, const FockVector&)>& lhs,
                   const std::function<FockVector(int, const FockVector&)>& rhs) {
    bool ok = true;
    for (const auto& v : bs)
      for (int zp = -zw; zp <= zw; ++zp)
        if (lhs(zp, v) != rhs(zp, v)) ok = false;
    rep.record(name, "", ok);
  };

  // (kphi) K BarPhi_pm K^-1 = q^{-+1} BarPhi_pm
  check("K BarPhi+ K^-1 = q^-1 BarPhi+",
        [&](int zp, const FockVector& v) {
          return k_power_apply(1, bp(zp, k_power_apply(-1, v)));
        },
        [&](int zp, const FockVector& v) { return qq(-1) * bp(zp, v); });
  check("K BarPhi- K^-1 = q BarPhi-",
        [&](int zp, const FockVector& v) {
          return k_power_apply(1, bm(zp, k_power_apply(-1, v)));
        },
        [&](int zp, const FockVector& v) { return qq(1) * bm(zp, v); });
  // (phiplusxzeroplus) BarPhi+ hx0+ = q hx0+ BarPhi+ + q^-1 BarPhi-
  check("BarPhi+ x^0+ = q x^0+ BarPhi+ + q^-1 BarPhi-",
        [&](int zp, const FockVector& v) { return bp(zp, hx0p(v)); },
        [&](int zp, const FockVector& v) {
          return qq(1) * hx0p(bp(zp, v)) + qq(-1) * bm(zp, v);
        });
  // (phiminusxzeroplus) BarPhi- hx0+ = q^-1 hx0+ BarPhi-
  check("BarPhi- x^0+ = q^-1 x^0+ BarPhi-",
        [&](int zp, const FockVector& v) { return bm(zp, hx0p(v)); },
        [&](int zp, const FockVector& v) { return qq(-1) * hx0p(bm(zp, v)); });
  // (phiplusxzerominus) BarPhi+ hx0- = hx0- BarPhi+
  check("BarPhi+ x^0- = x^0- BarPhi+",
        [&](int zp, const FockVector& v) { return bp(zp, hx0m(v)); },
        [&](int zp, const FockVector& v) { return hx0m(bp(zp, v)); });
  // (phiminusxzerominus) BarPhi- hx0- = hx0- BarPhi- + q K^-1 BarPhi+
  check("BarPhi- x^0- = x^0- BarPhi- + q K^-1 BarPhi+",
        [&](int zp, const FockVector& v) { return bm(zp, hx0m(v)); },
        [&](int zp, const FockVector& v) {
          return hx0m(bm(zp, v)) + qq(1) * k_power_apply(-1, bp(zp, v));
        });
  // (phiplusxminusoneplus) BarPhi+ hx-1+ = q^-1 hx-1+ BarPhi+ + q^-2 z^-1 BarPhi-
  check("BarPhi+ x^-1+ = q^-1 x^-1+ BarPhi+ + q^-2 z^-1 BarPhi-",
        [&](int zp, const FockVector& v) { return bp(zp, hxm1p(v)); },
        [&](int zp, const FockVector& v) {
          return qq(-1) * hxm1p(bp(zp, v)) + qq(-2) * bm(zp + 1, v);
        });
  // (phiminusxminusoneplus) BarPhi- hx-1+ = q hx-1+ BarPhi-
  check("BarPhi- x^-1+ = q x^-1+ BarPhi-",
        [&](int zp, const FockVector& v) { return bm(zp, hxm1p(v)); },
        [&](int zp, const FockVector& v) { return qq(1) * hxm1p(bm(zp, v)); });
  // (phiplusxoneminus) BarPhi+ hx1- = hx1- BarPhi+
  check("BarPhi+ x^1- = x^1- BarPhi+",
        [&](int zp, const FockVector& v) { return bp(zp, hx1m(v)); },
        [&](int zp, const FockVector& v) { return hx1m(bp(zp, v)); });
  // (phiminusxoneminus) BarPhi- hx1- = hx1- BarPhi- + z BarPhi+ K1
  check("BarPhi- x^1- = x^1- BarPhi- + z BarPhi+ K1",
        [&](int zp, const FockVector& v) { return bm(zp, hx1m(v)); },
        [&](int zp, const FockVector& v) {
          return hx1m(bm(zp, v)) + bp(zp - 1, k_power_apply(1, v));
        });
  // Lemma (xmbarphiplus); the exchange scalar that actually holds (and that
  // the defining relations imply) is q^{-1}, not the printed q
  {
    bool ok = true;
    for (const auto& v : bs)
      for (int k = -2; k <= 2; ++k)
        for (int zp = -zw; zp <= zw; ++zp)
          if (loop_apply(k, -1, bp(zp, v), cap) != qq(-1) * bp(zp, loop_apply(k, -1, v, cap)))
            ok = false;
    rep.record("X^-(w) BarPhi+(z) = q^-1 BarPhi+(z) X^-(w)", "", ok);
  }
  // Lemma (anphiplus)/(aminusnphiplus): [a_{+-n}, BarPhi+(z)] =
  //   (-q^{-n/2}/(q^n+q^-n)) z^{+-n} BarPhi+(z)
  for (int n = 1; n <= std::max(2, deg_cap); ++n) {
    bool ok = true;
    RatQT cn = -uq(-n) / (qq(n) + qq(-n));
    for (const auto& v : bs)
      for (int zp = -zw; zp <= zw; ++zp) {
        FockVector lhs =
            heisenberg_apply(n, bp(zp, v)) - bp(zp, heisenberg_apply(n, v));
        if (lhs != cn * bp(zp - n, v)) ok = false;
        FockVector lhs2 =
            heisenberg_apply(-n, bp(zp, v)) - bp(zp, heisenberg_apply(-n, v));
        if (lhs2 != cn * bp(zp + n, v)) ok = false;
      }
    rep.record("[a_{+-n}, BarPhi+(z)] = -q^{-n/2}/(q^n+q^-n) z^{+-n} BarPhi+(z)",
               "n=" + std::to_string(n), ok);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// leading-term normalizations
// ---------------------------------------------------------------------------

inline SuiteReport verify_vertex_normalization() {
  SuiteReport rep;
  const Sector L0{0, 0}, L1{1, 0};
  const int cap = 6;
  // Phi_-(z)|L0> = |L1> (x) v_- + lower; top coefficient 1 at z^0
  rep.record("Phi-(z)|L0> top term |L1>", "",
             vertex_apply(VertexKind::PhiMinus, 0, FockVector::vacuum(L0), cap) ==
                 FockVector::vacuum(L1));
  // Phi_+(z)|L1> = |L0> (x) v_+ + lower
  rep.record("Phi+(z)|L1> top term |L0>", "",
             vertex_apply(VertexKind::PhiPlus, 0, FockVector::vacuum(L1), cap) ==
                 FockVector::vacuum(L0));
  // dual normalizations: Phi*_+(z)|L0> = |L1> + ..., Phi*_-(z)|L1> = |L0> + ...
  rep.record("Phi*+(z)|L0> top term |L1>", "",
             dual_vertex_apply(false, +1, 0, FockVector::vacuum(L0), cap) ==
                 FockVector::vacuum(L1));
  rep.record("Phi*-(z)|L1> top term |L0>", "",
             dual_vertex_apply(false, -1, 0, FockVector::vacuum(L1), cap) ==
                 FockVector::vacuum(L0));
  // BarPhi+(z)|L1>: the e^{-alpha/2} shift lowers h by one
  FockVector w = vertex_apply(VertexKind::BarPhiPlus, 0, FockVector::vacuum(L1), cap);
  bool ok = !w.is_zero();
  for (const auto& [k, c] : w.terms())
    if (k.s.h() != 0) ok = false;
  rep.record("BarPhi+(z)|L1> lands in h = 0", "", ok);
  return rep;
}

}  // namespace qfock
