#pragma once

/**
 * @file qseries.hpp
 * @brief Formal power series in one variable z with RatQT coefficients,
 *        and the q-Pochhammer ratio series used by the vertex operator
 *        identities.
 */

#include <vector>

#include "qfock/ratqt.hpp"

namespace qfock {

/// coefficients c[k] of sum c[k] z^k, fixed truncation order
struct ZSeries {
  std::vector<RatQT> c;
  explicit ZSeries(int deg = 0) : c(size_t(deg) + 1) {}
  int deg() const { return int(c.size()) - 1; }
  RatQT& operator[](int k) { return c[size_t(k)]; }
  const RatQT& operator[](int k) const { return c[size_t(k)]; }

  static ZSeries one(int deg) {
    ZSeries s(deg);
    s[0] = RatQT::one();
    return s;
  }

  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    int d = std::min(a.deg(), b.deg());
    ZSeries r(d);
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d - i; ++j) {
        if (a[i].is_zero() || b[j].is_zero()) continue;
        r[i + j] += a[i] * b[j];
      }
    return r;
  }

  friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
    ZSeries r(std::min(a.deg(), b.deg()));
    for (int i = 0; i <= r.deg(); ++i) r[i] = a[i] + b[i];
    return r;
  }

  ZSeries bar() const {
    ZSeries r(deg());
    for (int i = 0; i <= deg(); ++i) r[i] = c[size_t(i)].bar();
    return r;
  }

  ZSeries inverse() const {
    if (c[0].is_zero()) throw std::domain_error("ZSeries: inverse needs a unit constant term");
    ZSeries r(deg());
    RatQT c0inv = c[0].inverse();
    r[0] = c0inv;
    for (int k = 1; k <= deg(); ++k) {
      RatQT s;
      for (int j = 1; j <= k; ++j) s += c[size_t(j)] * r[k - j];
      r[k] = -c0inv * s;
    }
    return r;
  }
};

/// exp of a series with zero constant term, given the log coefficients l[n]
inline ZSeries series_exp(const std::vector<RatQT>& logc, int deg) {
  ZSeries r = ZSeries::one(deg);
  // r' = l' r termwise: r[k] = (1/k) sum_{n=1..k} n*l[n]*r[k-n]
  for (int k = 1; k <= deg; ++k) {
    RatQT s;
    for (int n = 1; n <= k; ++n) {
      if (n >= int(logc.size()) || logc[size_t(n)].is_zero()) continue;
      s += RatQT::integer(n) * logc[size_t(n)] * r[k - n];
    }
    r[k] = s / RatQT::integer(k);
  }
  return r;
}

/// (q^a z; q^s)_inf / (q^b z; q^s)_inf as a series in z:
/// log = sum_n z^n/n * (q^{bn} - q^{an})/(1 - q^{sn})
inline ZSeries poch_ratio(int a, int b, int s, int deg) {
  std::vector<RatQT> logc(size_t(deg) + 1);
  for (int n = 1; n <= deg; ++n)
    logc[size_t(n)] = (RatQT::q(b * n) - RatQT::q(a * n)) /
                      ((RatQT::one() - RatQT::q(s * n)) * RatQT::integer(n));
  return series_exp(logc, deg);
}

/// xi(z) = (q^2 z; q^4)_inf / (q^4 z; q^4)_inf
inline ZSeries xi_series(int deg) { return poch_ratio(2, 4, 4, deg); }

}  // namespace qfock
