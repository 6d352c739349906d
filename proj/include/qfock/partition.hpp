#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions, dominance order, arm/leg statistics.
 */

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfock/intpoly.hpp"

namespace qfock {

/// 1-based cell (row, col) of a partition diagram.
struct Cell {
  int row = 1;
  int col = 1;
};

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : p_(parts) { validate(); }
  explicit Partition(std::vector<int> parts) : p_(std::move(parts)) { validate(); }

  const std::vector<int>& parts() const { return p_; }
  int length() const { return int(p_.size()); }
  int weight() const { return std::accumulate(p_.begin(), p_.end(), 0); }
  bool empty() const { return p_.empty(); }
  int part(int i) const { return (i >= 1 && i <= length()) ? p_[size_t(i - 1)] : 0; }

  Partition conjugate() const {
    if (p_.empty()) return Partition();
    std::vector<int> c(size_t(p_[0]), 0);
    for (int x : p_)
      for (int j = 0; j < x; ++j) c[size_t(j)]++;
    return Partition(std::move(c));
  }

  /// multiplicity of the part i
  int multiplicity(int i) const {
    int m = 0;
    for (int x : p_)
      if (x == i) ++m;
    return m;
  }

  /// z_lambda = prod i^{m_i} m_i!
  Int z() const {
    Int r = 1;
    size_t k = 0;
    while (k < p_.size()) {
      size_t j = k;
      while (j < p_.size() && p_[j] == p_[k]) ++j;
      int mult = int(j - k);
      for (int s = 1; s <= mult; ++s) r *= s;
      for (int s = 0; s < mult; ++s) r *= p_[k];
      k = j;
    }
    return r;
  }

  bool contains(const Partition& mu) const {
    // mu subset of this
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
      if (mu.part(i) > part(i)) return false;
    return true;
  }

  bool in_diagram(const Cell& s) const {
    return s.row >= 1 && s.row <= length() && s.col >= 1 && s.col <= part(s.row);
  }

  /// arm a(s) = lambda_i - j
  int arm(const Cell& s) const {
    if (!in_diagram(s)) throw std::domain_error("arm: cell outside diagram");
    return part(s.row) - s.col;
  }

  /// leg l(s) = lambda'_j - i
  int leg(const Cell& s) const {
    if (!in_diagram(s)) throw std::domain_error("leg: cell outside diagram");
    int colheight = 0;
    for (int x : p_)
      if (x >= s.col) ++colheight;
    return colheight - s.row;
  }

  std::vector<Cell> cells() const {
    std::vector<Cell> cs;
    for (int i = 1; i <= length(); ++i)
      for (int j = 1; j <= part(i); ++j) cs.push_back({i, j});
    return cs;
  }

  /// partial-sum vector padded to the weight; the canonical sort key
  std::vector<int> partial_sums() const {
    std::vector<int> s;
    int acc = 0, w = weight();
    for (int x : p_) {
      acc += x;
      s.push_back(acc);
    }
    while (int(s.size()) < w) s.push_back(acc);
    return s;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p_.size(); ++i) {
      if (i) os << ",";
      os << p_[i];
    }
    os << ")";
    return os.str();
  }

  /// parse "(3,1)" / "()" / "3,1"
  static Partition parse(const std::string& s) {
    std::vector<int> v;
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1);
    if (!body.empty() && body.back() == ')') body.pop_back();
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) continue;
      v.push_back(std::stoi(tok));
    }
    return Partition(std::move(v));
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  /// plain container order; use canonical_less for the dominance-refining order
  friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

 private:
  void validate() const {
    for (size_t i = 0; i < p_.size(); ++i) {
      if (p_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
      if (i && p_[i] > p_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  std::vector<int> p_;
};

enum class Dominance { less_equal, incomparable_or_unequal_weight };

/// three-way dominance test: returns less_equal iff |a| = |b| and every
/// partial sum of a is <= that of b
inline Dominance dominance_leq(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return Dominance::incomparable_or_unequal_weight;
  int sa = 0, sb = 0;
  int n = std::max(a.length(), b.length());
  for (int i = 1; i <= n; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return Dominance::incomparable_or_unequal_weight;
  }
  return Dominance::less_equal;
}

inline bool dominated(const Partition& a, const Partition& b) {
  return dominance_leq(a, b) == Dominance::less_equal;
}

inline bool strictly_dominated(const Partition& a, const Partition& b) {
  return a != b && dominated(a, b);
}

/// Deterministic total order refining dominance at fixed weight: compare
/// weight, then partial-sum vectors lexicographically (smaller first).
inline bool canonical_less(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a.partial_sums() < b.partial_sums();
}

/// All partitions of n (optionally with length <= max_length), listed in the
/// canonical order (dominance-smaller first).
inline std::vector<Partition> partitions_of(int n, int max_length = -1) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  // generate all weakly decreasing sequences summing to n
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_length >= 0 && int(cur.size()) >= max_length) return;
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  std::sort(out.begin(), out.end(),
            [](const Partition& x, const Partition& y) { return canonical_less(x, y); });
  return out;
}

/// number of partitions of n (independent count for tests)
inline Int partition_count(int n) {
  // Euler's pentagonal recurrence
  std::vector<Int> p(size_t(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Int s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      Int sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) s += sign * p[size_t(m - g1)];
      if (g2 <= m) s += sign * p[size_t(m - g2)];
    }
    p[size_t(m)] = s;
  }
  return p[size_t(n)];
}

}  // namespace qfock
