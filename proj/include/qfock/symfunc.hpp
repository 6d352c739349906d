#pragma once

/**
 * @file symfunc.hpp
 * @brief The ring of symmetric functions with m, p, s bases, the (q,t)
 *        scalar product and the omega_{q,t} involution.
 *
 * Conversion tables are built per degree and cached. The p-basis is free
 * commutative, so multiplication and the scalar product pivot through it.
 * Schur conversions use Murnaghan-Nakayama characters: s_l = sum chi/z p,
 * p_mu = sum chi s_l.
 */

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "qfock/partition.hpp"
#include "qfock/ratqt.hpp"

namespace qfock {

enum class Basis { m, p, s };

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::p: return "p";
    default: return "s";
  }
}

namespace sfdetail {

/// number of ordered assignments of the parts of lambda to the rows of mu
/// filling each row exactly: the coefficient of m_mu in p_lambda
inline Int p_to_m_coeff(const Partition& lam, const Partition& mu) {
  std::vector<int> rem = mu.parts();
  std::function<Int(size_t)> rec = [&](size_t i) -> Int {
    if (i == lam.parts().size()) {
      for (int r : rem)
        if (r != 0) return 0;
      return 1;
    }
    Int total = 0;
    for (size_t j = 0; j < rem.size(); ++j) {
      if (rem[j] >= lam.parts()[i]) {
        // skip equal remaining capacities to the left only when they would
        // double-count? no: rows are distinguishable (mu_j positions), each
        // assignment is distinct, so count all.
        rem[j] -= lam.parts()[i];
        total += rec(i + 1);
        rem[j] += lam.parts()[i];
      }
    }
    return total;
  };
  return rec(0);
}

/// Murnaghan-Nakayama character chi^lambda_mu via beta-numbers
inline Int mn_character(const Partition& lam, const Partition& mu) {
  if (lam.weight() != mu.weight()) return 0;
  std::function<Int(std::vector<int>, size_t)> rec;
  // beta set: strictly decreasing "first-column hook lengths"
  auto betas = [](const Partition& p) {
    std::vector<int> b;
    int l = p.length();
    for (int i = 1; i <= l; ++i) b.push_back(p.part(i) + l - i);
    return b;  // strictly decreasing
  };
  rec = [&](std::vector<int> b, size_t k) -> Int {
    if (k == mu.parts().size()) return 1;
    int r = mu.parts()[k];
    Int total = 0;
    for (size_t i = 0; i < b.size(); ++i) {
      int target = b[i] - r;
      if (target < 0) continue;
      bool occupied = false;
      int crossings = 0;
      for (size_t j = 0; j < b.size(); ++j) {
        if (j == i) continue;
        if (b[j] == target) occupied = true;
        if (b[j] > target && b[j] < b[i]) ++crossings;
      }
      if (occupied) continue;
      std::vector<int> nb = b;
      nb[i] = target;
      std::sort(nb.rbegin(), nb.rend());
      while (!nb.empty() && nb.back() == 0) {
        // a zero beta is only removable together with shifting; normalize:
        // drop trailing zero and decrement the rest
        nb.pop_back();
        for (auto& x : nb) --x;
      }
      Int sub = rec(nb, k + 1);
      total += (crossings % 2 == 0) ? sub : -sub;
    }
    return total;
  };
  return rec(betas(lam), 0);
}

struct DegreeTables {
  std::vector<Partition> parts;            // canonical order
  std::map<Partition, size_t> index;
  std::vector<std::vector<Int>> p2m;       // p2m[i][j]: coeff of m_j in p_i
  std::vector<std::vector<RatQT>> m2p;     // m2p[i][j]: coeff of p_j in m_i
  std::vector<std::vector<Int>> chi;       // chi[i][j] = chi^{parts[i]}_{parts[j]}
  std::vector<Int> zvals;
};

inline const DegreeTables& degree_tables(int n) {
  static std::map<int, DegreeTables> cache;
  static std::shared_mutex mx;
  {
    std::shared_lock lk(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  DegreeTables T;
  T.parts = partitions_of(n);
  const size_t N = T.parts.size();
  for (size_t i = 0; i < N; ++i) T.index[T.parts[i]] = i;
  T.zvals.resize(N);
  for (size_t i = 0; i < N; ++i) T.zvals[i] = T.parts[i].z();
  T.p2m.assign(N, std::vector<Int>(N));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) T.p2m[i][j] = p_to_m_coeff(T.parts[i], T.parts[j]);
  // invert the (dominance-)upper-triangular p2m over Q by back substitution:
  // m_j = sum_i m2p[j][i] p_i with p2m[i][j] != 0 only for j >= i.
  T.m2p.assign(N, std::vector<RatQT>(N));
  for (size_t j0 = 0; j0 < N; ++j0) {
    // solve sum_i x_i p2m[i][j] = delta_{j,j0}; p2m[i][j] = 0 unless i <= j
    std::vector<RatQT> x(N);
    for (size_t jj = 0; jj < N; ++jj) {
      RatQT rhs = (jj == j0) ? RatQT::one() : RatQT::zero();
      for (size_t i = 0; i < jj; ++i)
        if (T.p2m[i][jj] != 0) rhs -= x[i] * RatQT::integer(T.p2m[i][jj]);
      if (T.p2m[jj][jj] == 0) throw std::logic_error("degree_tables: singular p2m");
      x[jj] = rhs / RatQT::integer(T.p2m[jj][jj]);
    }
    for (size_t i = 0; i < N; ++i) T.m2p[j0][i] = x[i];
  }
  T.chi.assign(N, std::vector<Int>(N));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) T.chi[i][j] = mn_character(T.parts[i], T.parts[j]);
  std::unique_lock lk(mx);
  return cache.emplace(n, std::move(T)).first->second;
}

}  // namespace sfdetail

class SymFn {
 public:
  SymFn() : basis_(Basis::m) {}
  explicit SymFn(Basis b) : basis_(b) {}

  static SymFn zero(Basis b = Basis::m) { return SymFn(b); }
  static SymFn unit(Basis b = Basis::m) {
    SymFn f(b);
    f.terms_[Partition{}] = RatQT::one();
    return f;
  }
  static SymFn single(Basis b, const Partition& lam, const RatQT& c = RatQT::one()) {
    SymFn f(b);
    if (!c.is_zero()) f.terms_[lam] = c;
    return f;
  }

  Basis basis() const { return basis_; }
  const std::map<Partition, RatQT>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RatQT coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? RatQT::zero() : it->second;
  }

  void add_term(const Partition& lam, const RatQT& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(lam);
    if (it == terms_.end()) {
      terms_[lam] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymFn& operator+=(const SymFn& o) {
    require_same_basis(o);
    for (const auto& [l, c] : o.terms_) add_term(l, c);
    return *this;
  }
  SymFn& operator-=(const SymFn& o) {
    require_same_basis(o);
    for (const auto& [l, c] : o.terms_) add_term(l, -c);
    return *this;
  }
  friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
  friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
  friend SymFn operator*(const RatQT& c, const SymFn& f) {
    SymFn r(f.basis_);
    if (c.is_zero()) return r;
    for (const auto& [l, x] : f.terms_) r.terms_[l] = c * x;
    return r;
  }

  friend bool operator==(const SymFn& a, const SymFn& b) {
    if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
    return a.to_basis(Basis::p).terms() == b.to_basis(Basis::p).terms();
  }
  friend bool operator!=(const SymFn& a, const SymFn& b) { return !(a == b); }

  /// apply a coefficient map (parameter substitutions etc.)
  SymFn map_coeffs(const std::function<RatQT(const RatQT&)>& f) const {
    SymFn r(basis_);
    for (const auto& [l, c] : terms_) r.add_term(l, f(c));
    return r;
  }

  SymFn to_basis(Basis target) const {
    if (target == basis_) return *this;
    using sfdetail::degree_tables;
    SymFn out(target);
    for (const auto& [lam, c] : terms_) {
      const auto& T = degree_tables(lam.weight());
      size_t i = T.index.at(lam);
      const size_t N = T.parts.size();
      auto emit = [&](size_t j, const RatQT& v) { out.add_term(T.parts[j], v); };
      if (basis_ == Basis::p && target == Basis::m) {
        for (size_t j = 0; j < N; ++j)
          if (T.p2m[i][j] != 0) emit(j, c * RatQT::integer(T.p2m[i][j]));
      } else if (basis_ == Basis::m && target == Basis::p) {
        for (size_t j = 0; j < N; ++j)
          if (!T.m2p[i][j].is_zero()) emit(j, c * T.m2p[i][j]);
      } else if (basis_ == Basis::p && target == Basis::s) {
        // p_mu = sum_l chi^l_mu s_l
        for (size_t j = 0; j < N; ++j)
          if (T.chi[j][i] != 0) emit(j, c * RatQT::integer(T.chi[j][i]));
      } else if (basis_ == Basis::s && target == Basis::p) {
        // s_l = sum_mu chi^l_mu / z_mu p_mu
        for (size_t j = 0; j < N; ++j)
          if (T.chi[i][j] != 0)
            emit(j, c * RatQT::fraction(T.chi[i][j], T.zvals[j]));
      } else {
        // two-step via p
        SymFn tmp = SymFn::single(basis_, lam, c).to_basis(Basis::p).to_basis(target);
        for (const auto& [l2, c2] : tmp.terms()) out.add_term(l2, c2);
        continue;
      }
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [l, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")*" + basis_name(basis_) + l.str();
    }
    return s;
  }

 private:
  void require_same_basis(const SymFn& o) const {
    if (basis_ != o.basis_) throw std::logic_error("SymFn: basis mismatch");
  }

  Basis basis_;
  std::map<Partition, RatQT> terms_;
};

/// product, computed in the free p-basis
inline SymFn sf_multiply(const SymFn& f, const SymFn& g) {
  SymFn fp = f.to_basis(Basis::p), gp = g.to_basis(Basis::p);
  SymFn r(Basis::p);
  for (const auto& [a, ca] : fp.terms())
    for (const auto& [b, cb] : gp.terms()) {
      std::vector<int> parts = a.parts();
      parts.insert(parts.end(), b.parts().begin(), b.parts().end());
      std::sort(parts.rbegin(), parts.rend());
      r.add_term(Partition(parts), ca * cb);
    }
  return r.to_basis(f.basis());
}

/// Macdonald's (q,t) scalar product: (p_l, p_m) = delta z_l prod (1-q^l_i)/(1-t^l_i)
inline RatQT hall_qt(const SymFn& f, const SymFn& g) {
  SymFn fp = f.to_basis(Basis::p), gp = g.to_basis(Basis::p);
  RatQT total;
  for (const auto& [lam, cf] : fp.terms()) {
    RatQT cg = gp.coeff(lam);
    if (cg.is_zero()) continue;
    RatQT w = RatQT::integer(lam.z());
    for (int x : lam.parts())
      w *= (RatQT::one() - RatQT::q(x)) / (RatQT::one() - RatQT::t(x));
    total += cf * cg * w;
  }
  return total;
}

/// omega_{q,t}(p_n) = (-1)^{n-1} (1-q^n)/(1-t^n) p_n, extended multiplicatively
inline SymFn omega_qt(const SymFn& f) {
  SymFn fp = f.to_basis(Basis::p);
  SymFn r(Basis::p);
  for (const auto& [lam, c] : fp.terms()) {
    RatQT w = c;
    for (int x : lam.parts()) {
      w *= (RatQT::one() - RatQT::q(x)) / (RatQT::one() - RatQT::t(x));
      if (x % 2 == 0) w = -w;
    }
    r.add_term(lam, w);
  }
  return r.to_basis(f.basis());
}

/// expand into explicit variables x_1..x_N: exponent vector (descending-sorted
/// representative omitted; full orbit emitted) -> coefficient
inline std::map<std::vector<int>, RatQT> expand_in_vars(const SymFn& f, int N) {
  SymFn fm = f.to_basis(Basis::m);
  std::map<std::vector<int>, RatQT> out;
  for (const auto& [lam, c] : fm.terms()) {
    if (lam.length() > N) continue;
    std::vector<int> v(static_cast<size_t>(N), 0);
    for (int i = 0; i < lam.length(); ++i) v[size_t(i)] = lam.part(i + 1);
    std::sort(v.begin(), v.end());
    do {
      auto it = out.find(v);
      if (it == out.end())
        out[v] = c;
      else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return out;
}

}  // namespace qfock
