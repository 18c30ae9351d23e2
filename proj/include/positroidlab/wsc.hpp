#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "positroidlab/positroid.hpp"
#include "positroidlab/rational.hpp"

namespace plab {

/// No cyclically ordered a < b < c < d with a,c in I\J and b,d in J\I.
inline bool weakly_separated(const KSubset& I, const KSubset& J) {
  if (I.n() != J.n()) throw DomainError("weak separation across ground sets");
  if (I.k() != J.k()) throw DomainError("weak separation of unequal sizes");
  int n = I.n();
  // Scan the circle and count sign changes of the difference pattern.
  int changes = 0;
  int prev = 0;  // +1: last difference was I-only, -1: J-only
  int first = 0;
  for (int e = 1; e <= n; ++e) {
    int cur = 0;
    if (I.contains(e) && !J.contains(e)) cur = 1;
    else if (J.contains(e) && !I.contains(e)) cur = -1;
    if (cur == 0) continue;
    if (prev != 0 && cur != prev) ++changes;
    if (first == 0) first = cur;
    prev = cur;
  }
  if (prev != 0 && first != 0 && prev != first) ++changes;
  return changes <= 2;
}

/// Pairwise weakly separated set of k-subsets.
class WSCollection {
 public:
  WSCollection(int n, int k, std::vector<KSubset> subsets)
      : n_(n), k_(k), subsets_(std::move(subsets)) {
    std::sort(subsets_.begin(), subsets_.end());
    subsets_.erase(std::unique(subsets_.begin(), subsets_.end()), subsets_.end());
    for (const KSubset& s : subsets_)
      if (s.n() != n_ || s.k() != k_) throw DomainError("collection member of wrong type");
    for (size_t i = 0; i < subsets_.size(); ++i)
      for (size_t j = i + 1; j < subsets_.size(); ++j)
        if (!weakly_separated(subsets_[i], subsets_[j]))
          throw DomainError("collection is not weakly separated: " + subsets_[i].to_string() +
                            " vs " + subsets_[j].to_string());
  }

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<KSubset>& subsets() const { return subsets_; }
  bool contains(const KSubset& s) const {
    return std::binary_search(subsets_.begin(), subsets_.end(), s);
  }
  size_t size() const { return subsets_.size(); }

  friend bool operator==(const WSCollection& a, const WSCollection& b) {
    return a.subsets_ == b.subsets_;
  }

 private:
  int n_, k_;
  std::vector<KSubset> subsets_;
};

/// Pairwise check; returns the first violating pair in scan order, if any.
inline std::optional<std::pair<KSubset, KSubset>> ws_violation(
    const std::vector<KSubset>& C) {
  for (size_t i = 0; i < C.size(); ++i)
    for (size_t j = i + 1; j < C.size(); ++j)
      if (!weakly_separated(C[i], C[j])) return std::make_pair(C[i], C[j]);
  return std::nullopt;
}

inline bool is_ws_collection(const std::vector<KSubset>& C) { return !ws_violation(C); }

/// Greedy completion of C to an inclusion-maximal weakly separated collection
/// inside the positroid, scanning candidates in colex order.
inline WSCollection complete_to_maximal(const WSCollection& C, const Positroid& M) {
  for (const KSubset& s : C.subsets())
    if (!M.contains(s)) throw DomainError("collection member outside the positroid");
  std::vector<KSubset> cur = C.subsets();
  for (const KSubset& cand : M.bases()) {
    if (std::find(cur.begin(), cur.end(), cand) != cur.end()) continue;
    bool ok = true;
    for (const KSubset& s : cur)
      if (!weakly_separated(cand, s)) {
        ok = false;
        break;
      }
    if (ok) cur.push_back(cand);
  }
  return WSCollection(C.n(), C.k(), std::move(cur));
}

/// Greedy completion among all k-subsets (no positroid constraint).
inline WSCollection complete_to_maximal_free(const WSCollection& C) {
  std::vector<KSubset> cur = C.subsets();
  for (const KSubset& cand : all_ksubsets(C.n(), C.k())) {
    if (std::find(cur.begin(), cur.end(), cand) != cur.end()) continue;
    bool ok = true;
    for (const KSubset& s : cur)
      if (!weakly_separated(cand, s)) {
        ok = false;
        break;
      }
    if (ok) cur.push_back(cand);
  }
  return WSCollection(C.n(), C.k(), std::move(cur));
}

struct SquareMove {
  KSubset from, to;  // replace `from` by `to`
  int a, b, c, d;    // cyclic witnesses: from = S+a+c, to = S+b+d
  friend bool operator<(const SquareMove& x, const SquareMove& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  }
  friend bool operator==(const SquareMove& x, const SquareMove& y) {
    return x.from == y.from && x.to == y.to;
  }
};

/// All exchanges from = S+a+c -> to = S+b+d whose four side subsets lie in C.
inline std::vector<SquareMove> square_moves_available(const WSCollection& C) {
  std::vector<SquareMove> out;
  int n = C.n();
  for (const KSubset& I : C.subsets()) {
    auto mem = I.members();
    for (int a : mem)
      for (int c : mem) {
        if (a == c) continue;
        KSubset S = I.without(a).without(c);
        for (int b = a % n + 1; b != c; b = b % n + 1) {
          if (I.contains(b)) continue;
          for (int d = c % n + 1; d != a; d = d % n + 1) {
            if (I.contains(d)) continue;
            if (!C.contains(S.with(a).with(b)) || !C.contains(S.with(b).with(c)) ||
                !C.contains(S.with(c).with(d)) || !C.contains(S.with(a).with(d)))
              continue;
            out.push_back(SquareMove{I, S.with(b).with(d), a, b, c, d});
          }
        }
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline WSCollection apply_square_move(const WSCollection& C, const SquareMove& mv) {
  std::vector<KSubset> subs;
  for (const KSubset& s : C.subsets())
    if (s != mv.from) subs.push_back(s);
  subs.push_back(mv.to);
  return WSCollection(C.n(), C.k(), std::move(subs));
}

// ---------------------------------------------------------------------------
// Exact plane geometry for tilings and necklace curves.

struct Vec2 {
  Rat x, y;
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Rational points on the unit circle in strictly convex clockwise position,
/// via the tangent-half-angle parametrization.
inline std::vector<Vec2> polygon_points(int n) {
  std::vector<Vec2> pts;
  for (int j = 1; j <= n; ++j) {
    Rat t(n + 1 - 2 * j, 2);  // strictly decreasing: clockwise
    Rat t2 = t * t;
    Rat den = t2 + 1;
    pts.push_back(Vec2{(Rat(1) - t2) / den, (Rat(2) * t) / den});
  }
  return pts;
}

inline Vec2 subset_point(const KSubset& I, const std::vector<Vec2>& pts) {
  Vec2 p{Rat(0), Rat(0)};
  for (int e : I.members()) p = p + pts[e - 1];
  return p;
}

inline bool point_on_segment(const Vec2& q, const Vec2& A, const Vec2& B) {
  if (A == B) return q == A;
  if (cross(B - A, q - A) != 0) return false;
  Rat t = dot(q - A, B - A) / dot(B - A, B - A);
  return t >= 0 && t <= 1;
}

/// Parity-based point-in-region test for a closed polygonal curve that may
/// touch itself at vertices but has no crossing self-intersections. Points on
/// the curve count as inside.
inline bool weakly_inside(const Vec2& q, const std::vector<Vec2>& curve) {
  int m = int(curve.size());
  for (int i = 0; i < m; ++i) {
    if (point_on_segment(q, curve[i], curve[(i + 1) % m])) return true;
  }
  // Choose a ray direction through no curve vertex.
  Vec2 d{Rat(1), Rat(0)};
  for (long lambda = 0;; ++lambda) {
    d = Vec2{Rat(1), rat(lambda, 1)};
    bool good = true;
    for (const Vec2& v : curve) {
      Vec2 w = v - q;
      if (cross(d, w) == 0 && dot(d, w) > 0) {
        good = false;
        break;
      }
    }
    if (good) break;
    if (lambda > 4 * m + 4) throw DomainError("no generic ray direction found");
  }
  int parity = 0;
  for (int i = 0; i < m; ++i) {
    Vec2 A = curve[i], B = curve[(i + 1) % m];
    if (A == B) continue;
    Rat sa = cross(d, A - q), sb = cross(d, B - q);
    if (sgn(sa) == sgn(sb)) continue;  // both strict (no vertex on ray)
    // Intersection point X = A + u (B - A) with cross(d, X - q) = 0.
    Rat u = sa / (sa - sb);
    Vec2 X{A.x + u * (B.x - A.x), A.y + u * (B.y - A.y)};
    if (dot(d, X - q) > 0) parity ^= 1;
  }
  return parity == 1;
}

inline bool segments_cross(const Vec2& A, const Vec2& B, const Vec2& C, const Vec2& D) {
  // Strict transversal crossing of open segments.
  Rat d1 = cross(B - A, C - A), d2 = cross(B - A, D - A);
  Rat d3 = cross(D - C, A - C), d4 = cross(D - C, B - C);
  return sgn(d1) * sgn(d2) < 0 && sgn(d3) * sgn(d4) < 0;
}

struct CurveReport {
  std::vector<std::pair<int, int>> crossings;  // segment index pairs
  std::vector<std::pair<int, int>> nestings;   // loop index pairs
  bool clean() const { return crossings.empty() && nestings.empty(); }
};

/// Checks the polygonal curve of a necklace: no two edges cross transversally
/// and no simple loop of the curve encloses another.
inline CurveReport necklace_curve_report(const Necklace& N) {
  int n = N.n();
  std::vector<Vec2> pts = polygon_points(n);
  std::vector<Vec2> curve;
  for (int a = 1; a <= n; ++a) curve.push_back(subset_point(N.at(a), pts));
  CurveReport rep;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (segments_cross(curve[i], curve[(i + 1) % n], curve[j], curve[(j + 1) % n]))
        rep.crossings.push_back({i, j});

  // Split at repeated vertices into simple loops, then test for nesting.
  std::vector<std::vector<Vec2>> loops;
  std::vector<Vec2> stack;
  for (int i = 0; i <= n; ++i) {
    Vec2 v = curve[i % n];
    auto it = std::find(stack.begin(), stack.end(), v);
    if (it != stack.end()) {
      std::vector<Vec2> loop(it, stack.end());
      if (loop.size() >= 3) loops.push_back(loop);
      stack.erase(it + 1, stack.end());
    } else {
      stack.push_back(v);
    }
  }
  for (size_t i = 0; i < loops.size(); ++i)
    for (size_t j = 0; j < loops.size(); ++j) {
      if (i == j) continue;
      // A vertex of loop i not on loop j, strictly inside loop j.
      for (const Vec2& v : loops[i]) {
        bool on_j = false;
        int m = int(loops[j].size());
        for (int s = 0; s < m && !on_j; ++s)
          on_j = point_on_segment(v, loops[j][s], loops[j][(s + 1) % m]);
        if (!on_j && weakly_inside(v, loops[j])) {
          rep.nestings.push_back({int(i), int(j)});
          break;
        }
      }
    }
  return rep;
}

/// Subsets weakly separated from the necklace whose point lies weakly inside
/// the necklace curve. Requires a weakly separated necklace.
inline std::vector<KSubset> necklace_interior(const Necklace& N) {
  if (auto bad = ws_violation(N.subsets()))
    throw DomainError("necklace is not weakly separated: " + bad->first.to_string() + " vs " +
                      bad->second.to_string());
  CurveReport rep = necklace_curve_report(N);
  if (!rep.crossings.empty())
    throw VerificationError("necklace curve has crossing self-intersections");
  int n = N.n();
  std::vector<Vec2> pts = polygon_points(n);
  std::vector<Vec2> curve;
  for (int a = 1; a <= n; ++a) curve.push_back(subset_point(N.at(a), pts));
  std::vector<KSubset> out;
  for (const KSubset& J : all_ksubsets(n, N.k())) {
    bool sep = true;
    for (const KSubset& I : N.subsets())
      if (!weakly_separated(I, J)) {
        sep = false;
        break;
      }
    if (!sep) continue;
    if (weakly_inside(subset_point(J, pts), curve)) out.push_back(J);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Plabic tilings.

struct TilingFace {
  bool white;
  KSubset core;                  // X: intersection (white) or union (black)
  std::vector<KSubset> members;  // in cyclic order of the varying element
};

struct PlabicTiling {
  int n, k;
  std::vector<KSubset> vertices;
  std::vector<Vec2> positions;             // parallel to vertices
  std::vector<TilingFace> faces;           // nontrivial cliques only
  std::set<std::pair<KSubset, KSubset>> edges;  // ordered pairs (min, max)
};

/// CW-complex of a weakly separated collection: vertices at subset points,
/// faces from nontrivial same-core cliques, edges between cyclically
/// consecutive clique members.
inline PlabicTiling tiling(const WSCollection& C) {
  PlabicTiling T;
  T.n = C.n();
  T.k = C.k();
  std::vector<Vec2> pts = polygon_points(T.n);
  for (const KSubset& s : C.subsets()) {
    T.vertices.push_back(s);
    T.positions.push_back(subset_point(s, pts));
  }
  std::map<KSubset, std::vector<int>> white, black;  // core -> varying elements
  for (const KSubset& s : C.subsets()) {
    auto mem = s.members();
    for (int e : mem) white[s.without(e)].push_back(e);
    for (int e = 1; e <= T.n; ++e)
      if (!s.contains(e)) black[s.with(e)].push_back(e);
  }
  auto emit = [&](bool is_white, const KSubset& core, std::vector<int> elems) {
    if (elems.size() < 3) return;
    std::sort(elems.begin(), elems.end());
    TilingFace face;
    face.white = is_white;
    face.core = core;
    for (int e : elems)
      face.members.push_back(is_white ? core.with(e) : core.without(e));
    for (size_t i = 0; i < face.members.size(); ++i) {
      KSubset a = face.members[i], b = face.members[(i + 1) % face.members.size()];
      T.edges.insert({std::min(a, b), std::max(a, b)});
    }
    T.faces.push_back(std::move(face));
  };
  for (auto& [core, elems] : white) emit(true, core, elems);
  for (auto& [core, elems] : black) emit(false, core, elems);
  return T;
}

}  // namespace plab
