#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "positroidlab/base.hpp"

namespace plab {

/// Permutation of [1,n] in one-line notation.
class Perm {
 public:
  Perm() : n_(0) {}

  explicit Perm(std::vector<int> images) : n_(int(images.size())), img_(std::move(images)) {
    std::vector<char> seen(n_ + 1, 0);
    for (int v : img_) {
      if (v < 1 || v > n_ || seen[v]) throw DomainError("not a permutation of [1,n]");
      seen[v] = 1;
    }
  }

  static Perm identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Perm(std::move(img));
  }

  /// The shift a -> a+k (mod n), values in [1,n].
  static Perm eps(int k, int n) {
    std::vector<int> img(n);
    for (int a = 1; a <= n; ++a) img[a - 1] = (a - 1 + k) % n + ((a - 1 + k) % n < 0 ? n : 0) + 1;
    return Perm(std::move(img));
  }

  /// Accepts digit shorthand ("465213", only for n <= 9) or space/comma
  /// separated one-line notation ("4 6 5 2 1 3").
  static Perm from_string(const std::string& s) {
    std::vector<int> img;
    if (s.find(' ') == std::string::npos && s.find(',') == std::string::npos) {
      for (char c : s) {
        if (c < '1' || c > '9') throw DomainError("bad permutation digit string: " + s);
        img.push_back(c - '0');
      }
      if (img.size() > 9) throw DomainError("digit shorthand only supported for n <= 9");
    } else {
      std::string t = s;
      for (char& c : t)
        if (c == ',') c = ' ';
      std::istringstream in(t);
      int v;
      while (in >> v) img.push_back(v);
    }
    if (img.empty()) throw DomainError("empty permutation: " + s);
    return Perm(std::move(img));
  }

  int n() const { return n_; }
  int operator()(int a) const { return img_[a - 1]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const {
    std::vector<int> inv(n_);
    for (int a = 1; a <= n_; ++a) inv[img_[a - 1] - 1] = a;
    return Perm(std::move(inv));
  }

  /// (*this) after `other`: result(a) = this(other(a)).
  Perm compose(const Perm& other) const {
    if (other.n_ != n_) throw DomainError("composing permutations of different sizes");
    std::vector<int> img(n_);
    for (int a = 1; a <= n_; ++a) img[a - 1] = img_[other(a) - 1];
    return Perm(std::move(img));
  }

  /// Right multiplication by the transposition of positions p and q.
  Perm swap_positions(int p, int q) const {
    std::vector<int> img = img_;
    std::swap(img[p - 1], img[q - 1]);
    return Perm(std::move(img));
  }

  /// Adjacent transposition as a permutation; index a in [1, n-1], and a = n
  /// (or 0) means the wraparound swap of positions n and 1.
  static Perm simple(int a, int n) {
    int p = ((a - 1) % n + n) % n + 1;
    int q = p % n + 1;
    return identity(n).swap_positions(p, q);
  }

  bool is_identity() const {
    for (int a = 1; a <= n_; ++a)
      if (img_[a - 1] != a) return false;
    return true;
  }

  bool is_derangement() const {
    for (int a = 1; a <= n_; ++a)
      if (img_[a - 1] == a) return false;
    return true;
  }

  std::vector<int> fixed_points() const {
    std::vector<int> fp;
    for (int a = 1; a <= n_; ++a)
      if (img_[a - 1] == a) fp.push_back(a);
    return fp;
  }

  int num_cycles() const {
    std::vector<char> seen(n_ + 1, 0);
    int c = 0;
    for (int a = 1; a <= n_; ++a) {
      if (seen[a]) continue;
      ++c;
      for (int b = a; !seen[b]; b = img_[b - 1]) seen[b] = 1;
    }
    return c;
  }

  std::string to_string() const {
    if (n_ <= 9) {
      std::string s;
      for (int v : img_) s += char('0' + v);
      return s;
    }
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (i) s += ' ';
      s += std::to_string(img_[i]);
    }
    return s;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  int n_;
  std::vector<int> img_;
};

/// n-periodic bijection of the integers, stored by its window [f(1),...,f(n)].
class AffinePerm {
 public:
  AffinePerm() : n_(0) {}

  AffinePerm(int n, std::vector<long long> window) : n_(n), win_(std::move(window)) {
    if (int(win_.size()) != n || n <= 0) throw DomainError("window size mismatch");
    std::vector<char> seen(n, 0);
    for (long long v : win_) {
      int r = int(((v - 1) % n + n) % n);
      if (seen[r]) throw DomainError("window values not distinct modulo n");
      seen[r] = 1;
    }
  }

  static AffinePerm shift(int k, int n) {
    std::vector<long long> w(n);
    for (int a = 1; a <= n; ++a) w[a - 1] = a + k;
    return AffinePerm(n, std::move(w));
  }

  int n() const { return n_; }
  const std::vector<long long>& window() const { return win_; }

  long long operator()(long long a) const {
    long long q = (a - 1) / n_, r = (a - 1) % n_;
    if (r < 0) {
      r += n_;
      q -= 1;
    }
    return win_[r] + q * n_;
  }

  /// av(f) = (1/n) sum (f(a) - a); always an integer.
  long long av() const {
    long long s = 0;
    for (int a = 1; a <= n_; ++a) s += win_[a - 1] - a;
    return s / n_;
  }

  AffinePerm inverse() const {
    std::vector<long long> w(n_);
    for (int a = 1; a <= n_; ++a) {
      long long v = win_[a - 1];
      long long r = ((v - 1) % n_ + n_) % n_ + 1;  // v reduced into [1,n]
      long long shift = v - r;                     // multiple of n
      w[r - 1] = a - shift;
    }
    return AffinePerm(n_, std::move(w));
  }

  /// (*this) after `other`.
  AffinePerm compose(const AffinePerm& other) const {
    if (other.n_ != n_) throw DomainError("composing affine permutations of different sizes");
    std::vector<long long> w(n_);
    for (int a = 1; a <= n_; ++a) w[a - 1] = (*this)(other(a));
    return AffinePerm(n_, std::move(w));
  }

  bool bounded() const {
    for (int a = 1; a <= n_; ++a)
      if (!(a < win_[a - 1] && win_[a - 1] <= a + n_)) return false;
    return true;
  }

  /// Inversions (i,j) with i in [1,n], j > i, f(i) > f(j). Finite because
  /// beyond the window spread every later value is too large to invert.
  long long length() const {
    long long lo = *std::min_element(win_.begin(), win_.end());
    long long hi = *std::max_element(win_.begin(), win_.end());
    long long horizon = ((hi - lo) / n_ + 1) * n_;
    long long count = 0;
    for (int i = 1; i <= n_; ++i) {
      long long fi = win_[i - 1];
      for (long long j = i + 1; j <= i + horizon; ++j)
        if (fi > (*this)(j)) ++count;
    }
    return count;
  }

  /// Right multiplication by the affine simple reflection s_a, a in [0, n-1].
  AffinePerm right_simple(int a) const {
    std::vector<long long> w = win_;
    if (a == 0) {
      long long f0 = win_[n_ - 1] - n_;      // f(0)
      long long fn1 = win_[0] + n_;          // f(n+1)
      w[0] = f0;
      w[n_ - 1] = fn1;
    } else {
      std::swap(w[a - 1], w[a]);
    }
    return AffinePerm(n_, std::move(w));
  }

  /// True iff right multiplication by s_a decreases length.
  bool right_descent(int a) const {
    if (a == 0) return win_[n_ - 1] - n_ > win_[0];
    return win_[a - 1] > win_[a];
  }

  friend bool operator==(const AffinePerm& a, const AffinePerm& b) {
    return a.n_ == b.n_ && a.win_ == b.win_;
  }
  friend bool operator!=(const AffinePerm& a, const AffinePerm& b) { return !(a == b); }
  friend bool operator<(const AffinePerm& a, const AffinePerm& b) { return a.win_ < b.win_; }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string(win_[i]);
    }
    return s + "]";
  }

 private:
  int n_;
  std::vector<long long> win_;
};

struct PermType {
  int k, n;
  friend bool operator==(const PermType&, const PermType&) = default;
};

/// (k, n) where k counts anti-excedences a <= pi^{-1}(a).
inline PermType type_of(const Perm& pi) {
  Perm inv = pi.inverse();
  int k = 0;
  for (int a = 1; a <= pi.n(); ++a)
    if (a <= inv(a)) ++k;
  return {k, pi.n()};
}

/// Bounded affine lift; fixed points use the loopless convention f(a) = a + n.
/// With strict = true a fixed point is rejected instead.
inline AffinePerm lift(const Perm& pi, bool strict = false) {
  int n = pi.n();
  std::vector<long long> w(n);
  for (int a = 1; a <= n; ++a) {
    int v = pi(a);
    if (v == a && strict) throw DomainError("fixed point at " + std::to_string(a));
    w[a - 1] = v > a ? v : v + n;
  }
  return AffinePerm(n, std::move(w));
}

inline Perm reduce(const AffinePerm& f) {
  int n = f.n();
  std::vector<int> img(n);
  for (int a = 1; a <= n; ++a) img[a - 1] = int(((f(a) - 1) % n + n) % n) + 1;
  return Perm(std::move(img));
}

enum class Side { left, right };

/// Canonical transposition representative (a, b): a in [1,n], a < b.
using Transposition = std::pair<long long, long long>;

/// Reflections t with l(f t) < l(f) (right) or l(t f) < l(f) (left),
/// by canonical representative. Cardinality equals length(f).
inline std::set<Transposition> associated_reflections(const AffinePerm& f, Side side) {
  const AffinePerm g = (side == Side::right) ? f : f.inverse();
  std::set<Transposition> out;
  long long lo = *std::min_element(g.window().begin(), g.window().end());
  long long hi = *std::max_element(g.window().begin(), g.window().end());
  long long horizon = ((hi - lo) / g.n() + 1) * g.n();
  for (int i = 1; i <= g.n(); ++i)
    for (long long j = i + 1; j <= i + horizon; ++j)
      if (g(i) > g(j)) out.insert({i, j});
  return out;
}

inline bool is_length_additive(const AffinePerm& u, const AffinePerm& v) {
  if (u.n() != v.n()) throw DomainError("length additivity needs equal n");
  return u.compose(v).length() == u.length() + v.length();
}

/// Right weak order within one av-class.
inline bool leq_R(const AffinePerm& u, const AffinePerm& f) {
  if (u.n() != f.n()) throw DomainError("comparing affine permutations of different sizes");
  if (u.av() != f.av()) throw DomainError("incomparable coset");
  return f.length() == u.length() + u.inverse().compose(f).length();
}

/// Circular weak order on permutations of one type.
inline bool leq_circ(const Perm& iota, const Perm& pi) {
  if (!(type_of(iota) == type_of(pi))) throw DomainError("permutations of different type");
  return leq_R(lift(iota), lift(pi));
}

/// All u <= f in right weak order, by downward closure along length-decreasing
/// simple reflections. Deterministic (sorted by window).
inline std::vector<AffinePerm> lower_ideal(const AffinePerm& f) {
  std::set<AffinePerm> seen{f};
  std::vector<AffinePerm> frontier{f};
  while (!frontier.empty()) {
    std::vector<AffinePerm> next;
    for (const AffinePerm& g : frontier) {
      for (int a = 0; a < f.n(); ++a) {
        if (!g.right_descent(a)) continue;
        AffinePerm h = g.right_simple(a);
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Every permutation of type (k, n), as one-line images; enumeration order is
/// lexicographic over all of S_n filtered by type.
inline std::vector<Perm> all_perms_of_type(int k, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    Perm p(img);
    if (type_of(p).k == k) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace plab
