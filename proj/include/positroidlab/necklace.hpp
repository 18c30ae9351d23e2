#pragma once

#include <optional>
#include <string>
#include <vector>

#include "positroidlab/subset.hpp"

namespace plab {

enum class ToggleClass { aligned, noncrossing_nonaligned, crossing, forbidden };

inline std::string to_string(ToggleClass c) {
  switch (c) {
    case ToggleClass::aligned: return "aligned";
    case ToggleClass::noncrossing_nonaligned: return "noncrossing-nonaligned";
    case ToggleClass::crossing: return "crossing";
    case ToggleClass::forbidden: return "forbidden";
  }
  return "?";
}

/// Cyclic tuple of k-subsets with removal and insertion permutations:
/// I_{a+1} = I_a \ removal(a) + insertion(a), indices mod n.
class Necklace {
 public:
  Necklace(std::vector<KSubset> subsets, Perm removal, Perm insertion)
      : n_(int(subsets.size())),
        subsets_(std::move(subsets)),
        removal_(std::move(removal)),
        insertion_(std::move(insertion)) {
    if (removal_.n() != n_ || insertion_.n() != n_ || n_ == 0)
      throw DomainError("necklace permutation size mismatch");
    k_ = subsets_[0].k();
    for (int a = 1; a <= n_; ++a) {
      const KSubset& cur = at(a);
      if (cur.k() != k_ || cur.n() != n_) throw DomainError("necklace subset size mismatch");
      if (!cur.contains(removal_(a))) throw DomainError("removal value not present at position");
      KSubset next = cur.without(removal_(a));
      if (next.contains(insertion_(a)) && insertion_(a) != removal_(a))
        throw DomainError("insertion value already present");
      next = next.with(insertion_(a));
      if (next != at(a + 1)) throw DomainError("necklace recurrence violated");
    }
  }

  int n() const { return n_; }
  int k() const { return k_; }

  /// 1-based, cyclic.
  const KSubset& at(int a) const { return subsets_[((a - 1) % n_ + n_) % n_]; }
  const std::vector<KSubset>& subsets() const { return subsets_; }

  const Perm& removal() const { return removal_; }
  const Perm& insertion() const { return insertion_; }
  int removal_at(int a) const { return removal_(((a - 1) % n_ + n_) % n_ + 1); }
  int insertion_at(int a) const { return insertion_(((a - 1) % n_ + n_) % n_ + 1); }

  Perm trip() const { return insertion_.compose(removal_.inverse()); }
  Perm underlying() const { return removal_.inverse().compose(insertion_); }

  /// Equality is position-wise and includes the permutations.
  friend bool operator==(const Necklace& a, const Necklace& b) {
    return a.subsets_ == b.subsets_ && a.removal_ == b.removal_ && a.insertion_ == b.insertion_;
  }
  friend bool operator!=(const Necklace& a, const Necklace& b) { return !(a == b); }

  Necklace apply(const Perm& sigma) const {
    std::vector<KSubset> subs;
    subs.reserve(n_);
    for (const KSubset& s : subsets_) subs.push_back(s.apply(sigma));
    return Necklace(std::move(subs), sigma.compose(removal_), sigma.compose(insertion_));
  }

  /// Two-line arrow notation: subsets interleaved with insertion over removal.
  std::string pretty() const {
    std::string top, mid, bot;
    for (int a = 1; a <= n_; ++a) {
      std::string sub = at(a).to_string();
      std::string ins = std::to_string(insertion_(a));
      std::string rem = std::to_string(removal_(a));
      size_t w = std::max(ins.size(), rem.size());
      top += std::string(sub.size() + 1, ' ') + ins + std::string(w - ins.size() + 1, ' ');
      mid += sub + " " + std::string(w, '<') + " ";
      bot += std::string(sub.size() + 1, ' ') + rem + std::string(w - rem.size() + 1, ' ');
    }
    return top + "\n" + mid + "\n" + bot;
  }

 private:
  int n_, k_;
  std::vector<KSubset> subsets_;
  Perm removal_, insertion_;
};

/// Necklace with the given removal and insertion permutations. The first
/// subset is { a : rho^{-1}(a) <= iota^{-1}(a) }; it determines the rest.
inline Necklace grassmannlike(const Perm& rho, const Perm& iota) {
  if (rho.n() != iota.n()) throw DomainError("removal/insertion size mismatch");
  int n = rho.n();
  Perm rinv = rho.inverse(), iinv = iota.inverse();
  KSubset first(n, 0);
  for (int a = 1; a <= n; ++a)
    if (rinv(a) <= iinv(a)) first = first.with(a);
  std::vector<KSubset> subs{first};
  for (int a = 1; a < n; ++a) subs.push_back(subs.back().exchanged(rho(a), iota(a)));
  return Necklace(std::move(subs), rho, iota);
}

inline Necklace forward_necklace(const Perm& pi) {
  return grassmannlike(Perm::identity(pi.n()), pi);
}

/// Rotation by r: position a of the result holds I_{a+r}; both permutations
/// are composed with the shift on the right.
inline Necklace rotate(const Necklace& N, int r) {
  int n = N.n();
  r = ((r % n) + n) % n;
  std::vector<KSubset> subs;
  subs.reserve(n);
  for (int a = 1; a <= n; ++a) subs.push_back(N.at(a + r));
  Perm eps = Perm::eps(r, n);
  return Necklace(std::move(subs), N.removal().compose(eps), N.insertion().compose(eps));
}

/// Reverse Grassmann necklace of pi (removal pi^{-1}, insertion identity),
/// rotated by `shift`.
inline Necklace reverse_necklace(const Perm& pi, int shift = 0) {
  Necklace base = grassmannlike(pi.inverse(), Perm::identity(pi.n()));
  return shift % pi.n() == 0 ? base : rotate(base, shift);
}

namespace detail {
// Position of e in the cyclic order starting at w: 0 for w itself, else 1..n-1.
inline int cyc_pos(int w, int e, int n) { return ((e - w) % n + n) % n; }
}  // namespace detail

/// Classifies the chord pair (removal -> insertion at positions a-1 and a).
inline ToggleClass classify_toggle(const Necklace& N, int a) {
  int n = N.n();
  int w = N.removal_at(a - 1), x = N.insertion_at(a - 1);
  int y = N.removal_at(a), z = N.insertion_at(a);
  if (w == z || y == x) return ToggleClass::forbidden;
  bool loop1 = (w == x), loop2 = (y == z);
  if (loop1 && loop2) return ToggleClass::noncrossing_nonaligned;
  if (loop1) {
    // point vs chord: never crossing; aligned iff order w, y, z.
    return detail::cyc_pos(w, y, n) < detail::cyc_pos(w, z, n)
               ? ToggleClass::aligned
               : ToggleClass::noncrossing_nonaligned;
  }
  if (loop2) {
    // aligned iff order y, w, x.
    return detail::cyc_pos(y, w, n) < detail::cyc_pos(y, x, n)
               ? ToggleClass::aligned
               : ToggleClass::noncrossing_nonaligned;
  }
  int py = detail::cyc_pos(w, y, n), pz = detail::cyc_pos(w, z, n), px = detail::cyc_pos(w, x, n);
  bool y_in = py < px, z_in = pz < px;  // strictly between w and x
  if (y_in != z_in) return ToggleClass::crossing;
  if (py < pz && pz < px) return ToggleClass::aligned;               // w, y, z, x
  if (px < pz && pz < py) return ToggleClass::aligned;               // w, x, z, y
  return ToggleClass::noncrossing_nonaligned;
}

/// Exchanges the chords at positions a-1 and a; only subset I_a changes.
inline Necklace toggle(const Necklace& N, int a) {
  int n = N.n();
  a = ((a - 1) % n + n) % n + 1;
  if (N.removal_at(a - 1) == N.insertion_at(a))
    throw DomainError("forbidden toggle: removal at " + std::to_string(a - 1) +
                      " equals insertion at " + std::to_string(a));
  if (N.removal_at(a) == N.insertion_at(a - 1))
    throw DomainError("forbidden toggle: removal at " + std::to_string(a) +
                      " equals insertion at " + std::to_string(a - 1));
  int p = (a + n - 2) % n + 1;  // position a-1, wrapped
  Perm rho = N.removal().swap_positions(p, a);
  Perm iota = N.insertion().swap_positions(p, a);
  std::vector<KSubset> subs = N.subsets();
  subs[a - 1] = N.at(a - 1).exchanged(N.removal_at(a), N.insertion_at(a));
  return Necklace(std::move(subs), std::move(rho), std::move(iota));
}

/// Dual necklace: removal and insertion are replaced by each other's inverses;
/// trip and underlying permutations swap.
inline Necklace dual(const Necklace& N) {
  return grassmannlike(N.insertion().inverse(), N.removal().inverse());
}

/// Laurent-monomial expressions, over the forward-necklace basis of the trip
/// permutation, for all subsets of a necklace reachable by aligned toggles.
struct UnitMonomialPath {
  Necklace base;      // forward necklace of pi
  Necklace target;    // necklace with insertion iota
  // exponents[a-1][b-1] = exponent of base subset I_b in the monomial for
  // target subset I_a.
  std::vector<std::vector<long long>> exponents;
  std::vector<int> toggle_positions;  // the path taken, for reference

  /// Indicator-vector consistency: sum of exponents times base indicators
  /// equals the target indicator, per position.
  bool grading_consistent() const {
    int n = base.n();
    for (int a = 1; a <= n; ++a) {
      for (int e = 1; e <= n; ++e) {
        long long s = 0;
        for (int b = 1; b <= n; ++b)
          if (base.at(b).contains(e)) s += exponents[a - 1][b - 1];
        if (s != (target.at(a).contains(e) ? 1 : 0)) return false;
      }
    }
    return true;
  }
};

/// Walks aligned toggles from the forward necklace of pi down to the necklace
/// with insertion iota, composing the exchange monomials along the way.
/// Requires iota <= pi in circular weak order. `prefer_high` switches the
/// greedy cover choice, giving an alternative path to the same answer.
inline UnitMonomialPath unit_monomial_path(const Perm& pi, const Perm& iota,
                                           bool prefer_high = false) {
  if (!(type_of(iota) == type_of(pi))) throw DomainError("iota and pi have different types");
  int n = pi.n();
  AffinePerm f = lift(pi), i = lift(iota);
  if (!leq_R(i, f)) throw DomainError("iota not below pi in circular weak order");

  Necklace neck = forward_necklace(pi);
  std::vector<std::vector<long long>> exps(n, std::vector<long long>(n, 0));
  for (int a = 1; a <= n; ++a) exps[a - 1][a - 1] = 1;
  std::vector<int> path;

  AffinePerm cur = f;
  while (cur != i) {
    std::optional<int> chosen;
    for (int idx = 0; idx < n; ++idx) {
      int s = prefer_high ? n - 1 - idx : idx;
      if (!cur.right_descent(s)) continue;
      AffinePerm down = cur.right_simple(s);
      if (leq_R(i, down)) {
        chosen = s;
        break;
      }
    }
    if (!chosen) throw DomainError("no descending cover toward iota");
    int pos = *chosen + 1;  // s_{a-1} acts at necklace position a
    if (classify_toggle(neck, pos) != ToggleClass::aligned)
      throw VerificationError("weak-order cover did not give an aligned toggle");
    neck = toggle(neck, pos);
    path.push_back(pos);
    int ia = pos - 1, im = (pos + n - 2) % n, ip = pos % n;  // a, a-1, a+1 (0-based)
    std::vector<long long> fresh(n);
    for (int b = 0; b < n; ++b) fresh[b] = exps[im][b] + exps[ip][b] - exps[ia][b];
    exps[ia] = std::move(fresh);
    cur = cur.right_simple(*chosen);
  }
  return UnitMonomialPath{forward_necklace(pi), std::move(neck), std::move(exps),
                          std::move(path)};
}

}  // namespace plab
