#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "positroidlab/twist.hpp"
#include "positroidlab/wsc.hpp"

namespace plab {

/// Sparse multivariate Laurent polynomial with integer coefficients.
class LaurentPoly {
 public:
  using Exp = std::vector<int>;

  explicit LaurentPoly(int vars) : m_(vars) {}

  static LaurentPoly constant(int vars, long long c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_[Exp(vars, 0)] = c;
    return p;
  }

  static LaurentPoly variable(int vars, int i) {
    LaurentPoly p(vars);
    Exp e(vars, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
  }

  static LaurentPoly monomial(int vars, const Exp& e, long long c = 1) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  int vars() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, long long>& terms() const { return terms_; }

  bool is_monomial() const { return terms_.size() == 1; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.m_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e(a.m_);
        for (int i = 0; i < a.m_; ++i) e[i] = ea[i] + eb[i];
        __int128 prod = (__int128)ca * cb;
        if (prod > INT64_MAX || prod < INT64_MIN) throw DomainError("coefficient overflow");
        r.add_term(e, (long long)prod);
      }
    return r;
  }

  /// Exact division; throws when the quotient is not a Laurent polynomial.
  /// Lead-term elimination in lexicographic order: when the division is exact
  /// each step produces one quotient term, so the step count is bounded by
  /// the quotient size.
  LaurentPoly divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    LaurentPoly q(m_), r = *this;
    const auto& [ed, cd] = *d.terms_.rbegin();
    size_t guard = 0, bound = 200000;
    while (!r.is_zero()) {
      const auto& [er, cr] = *r.terms_.rbegin();
      if (cr % cd != 0) throw DomainError("inexact polynomial division");
      Exp e(m_);
      for (int i = 0; i < m_; ++i) e[i] = er[i] - ed[i];
      LaurentPoly t = monomial(m_, e, cr / cd);
      q.add_term(e, cr / cd);
      r = r - t * d;
      if (++guard > bound) throw DomainError("inexact polynomial division");
    }
    return q;
  }

  Rat evaluate(const std::vector<Rat>& x) const {
    Rat out(0);
    for (const auto& [e, c] : terms_) {
      Rat term = rat_of(c);
      for (int i = 0; i < m_; ++i)
        if (e[i] != 0) term *= rat_pow(x[i], e[i]);
      out += term;
    }
    return out;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += c >= 0 ? " + " : " - ";
      else if (c < 0) s += "-";
      long long ac = c >= 0 ? c : -c;
      std::string mono;
      for (int i = 0; i < m_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) s += std::to_string(ac);
      else if (ac == 1) s += mono;
      else s += std::to_string(ac) + "*" + mono;
    }
    return s;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ < b.terms_;
  }

 private:
  void add_term(const Exp& e, long long c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_[e] = c;
      return;
    }
    __int128 s = (__int128)it->second + c;
    if (s > INT64_MAX || s < INT64_MIN) throw DomainError("coefficient overflow");
    it->second = (long long)s;
    if (it->second == 0) terms_.erase(it);
  }

  int m_;
  std::map<Exp, long long> terms_;
};

// ---------------------------------------------------------------------------

/// Cluster seed over a positroid variety: labels (exact Pluecker labels where
/// known, always a Laurent expression in the initial cluster) plus a quiver
/// with the first n vertices frozen at the boundary necklace.
struct SeedContext {
  Perm pi;                       // trip permutation of the ambient variety
  std::vector<KSubset> initial;  // labels of the initial cluster, frozen first
  int num_frozen;
  Necklace frozen_necklace;
};

class Seed {
 public:
  Seed(std::shared_ptr<const SeedContext> ctx, Quiver quiver)
      : ctx_(std::move(ctx)), quiver_(std::move(quiver)) {
    int m = int(ctx_->initial.size());
    for (int v = 0; v < m; ++v) {
      expr_.push_back(LaurentPoly::variable(m, v));
      labels_.push_back(ctx_->initial[v]);
    }
  }

  const SeedContext& ctx() const { return *ctx_; }
  std::shared_ptr<const SeedContext> ctx_ptr() const { return ctx_; }
  int size() const { return int(expr_.size()); }
  int num_frozen() const { return ctx_->num_frozen; }
  int rank() const { return size() - num_frozen(); }
  bool frozen(int v) const { return v < ctx_->num_frozen; }
  const Quiver& quiver() const { return quiver_; }
  const LaurentPoly& expr(int v) const { return expr_[v]; }
  const std::optional<KSubset>& label(int v) const { return labels_[v]; }
  const Necklace& frozen_necklace() const { return ctx_->frozen_necklace; }

  /// Value of every vertex at one sampled point of the variety.
  std::vector<Rat> evaluate(const PlueckerValues& point) const {
    std::vector<Rat> init;
    for (const KSubset& I : ctx_->initial) {
      auto it = point.find(I);
      if (it == point.end()) throw DomainError("sample point misses a label");
      init.push_back(it->second);
    }
    std::vector<Rat> out;
    for (const LaurentPoly& e : expr_) out.push_back(e.evaluate(init));
    return out;
  }

  /// Exchange ratio exponents at a mutable vertex: net arrow counts into it.
  std::vector<long long> exchange_ratio(int p) const {
    if (frozen(p)) throw DomainError("exchange ratio of a frozen vertex");
    std::vector<long long> e(size(), 0);
    for (int j = 0; j < size(); ++j)
      if (j != p) e[j] = quiver_.net(j, p);
    return e;
  }

  Rat exchange_ratio_value(int p, const PlueckerValues& point) const {
    std::vector<Rat> vals = evaluate(point);
    std::vector<long long> e = exchange_ratio(p);
    Rat out(1);
    for (int j = 0; j < size(); ++j)
      if (e[j] != 0) out *= rat_pow(vals[j], e[j]);
    return out;
  }

  /// Quiver and cluster mutation; an involution at every mutable vertex.
  Seed mutate(int p) const {
    if (frozen(p)) throw DomainError("cannot mutate a frozen vertex");
    Seed out = *this;
    int m = size();
    LaurentPoly t_in = LaurentPoly::constant(m, 1), t_out = LaurentPoly::constant(m, 1);
    for (int j = 0; j < m; ++j) {
      long long net = quiver_.net(j, p);
      for (long long c = 0; c < net; ++c) t_in = t_in * expr_[j];
      for (long long c = 0; c < -net; ++c) t_out = t_out * expr_[j];
    }
    out.expr_[p] = (t_in + t_out).divide_exact(expr_[p]);
    out.labels_[p] = std::nullopt;

    // Quiver: paths through p, then reversal at p, with cancellation.
    Quiver q;
    q.m = quiver_.m;
    q.frozen = quiver_.frozen;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        long long net = quiver_.net(i, j);
        if (net <= 0) continue;
        if (i == p || j == p) continue;
        q.add_arrow(i, j, net);
      }
    for (int i = 0; i < m; ++i) {
      long long in = quiver_.net(i, p);
      if (in <= 0) continue;
      for (int j = 0; j < m; ++j) {
        long long outn = quiver_.net(p, j);
        if (outn <= 0) continue;
        if (q.frozen[i] && q.frozen[j]) continue;
        q.add_arrow(i, j, in * outn);
      }
    }
    for (int i = 0; i < m; ++i) {
      long long net = quiver_.net(i, p);
      if (net > 0) q.add_arrow(p, i, net);
      else if (net < 0) q.add_arrow(i, p, -net);
    }
    out.quiver_ = std::move(q);
    return out;
  }

  /// Multidegree of a vertex in the column grading; throws if a label is not
  /// homogeneous (which would contradict the cone grading).
  std::vector<long long> multidegree(int v) const {
    int n = ctx_->pi.n();
    std::optional<std::vector<long long>> deg;
    for (const auto& [e, c] : expr_[v].terms()) {
      std::vector<long long> d(n, 0);
      for (int i = 0; i < size(); ++i) {
        if (e[i] == 0) continue;
        for (int el : ctx_->initial[i].members()) d[el - 1] += e[i];
      }
      if (deg && *deg != d) throw VerificationError("label is not multihomogeneous");
      deg = d;
    }
    if (!deg) throw DomainError("zero label");
    return *deg;
  }

  /// Canonical key for deduplication: the unordered mutable cluster.
  std::vector<LaurentPoly> cluster_key() const {
    std::vector<LaurentPoly> key(expr_.begin() + num_frozen(), expr_.end());
    std::sort(key.begin(), key.end());
    return key;
  }

 private:
  std::shared_ptr<const SeedContext> ctx_;
  std::vector<LaurentPoly> expr_;
  std::vector<std::optional<KSubset>> labels_;
  Quiver quiver_;
};

// ---------------------------------------------------------------------------
// Seeds from graphs and collections.

/// Target or source seed of a (possibly relabeled) plabic graph. Boundary
/// faces come first in necklace position order; interior faces follow sorted
/// by label.
inline Seed seed_from_graph(const PlabicGraph& G, LabelMode mode = LabelMode::target) {
  FaceLabeling fl = face_labels(G);
  const std::vector<KSubset>& lab = fl.labels(mode);
  int n = G.n;
  std::vector<int> order;  // face ids in seed-vertex order
  for (int a = 1; a <= n; ++a) order.push_back(fl.fd.boundary_face[a - 1]);
  std::vector<int> interior;
  for (int f = 0; f < fl.fd.num_faces; ++f)
    if (!fl.fd.is_boundary_face(f)) interior.push_back(f);
  std::sort(interior.begin(), interior.end(),
            [&](int x, int y) { return lab[x] < lab[y]; });
  order.insert(order.end(), interior.begin(), interior.end());

  std::vector<int> pos(fl.fd.num_faces);
  for (int v = 0; v < int(order.size()); ++v) pos[order[v]] = v;

  Quiver base = dual_quiver(G, fl.fd);
  Quiver q;
  q.m = base.m;
  q.frozen.assign(q.m, 0);
  for (int v = 0; v < n; ++v) q.frozen[v] = 1;
  for (const auto& [arc, mult] : base.arrows) q.add_arrow(pos[arc.first], pos[arc.second], mult);

  std::vector<KSubset> labels;
  for (int f : order) labels.push_back(lab[f]);
  Necklace neck = mode == LabelMode::target
                      ? fl.boundary_necklace
                      : reverse_necklace(fl.tr.pos_trip, 0).apply(G.rho);
  auto ctx = std::make_shared<SeedContext>(
      SeedContext{fl.tr.trip, std::move(labels), n, std::move(neck)});
  return Seed(std::move(ctx), std::move(q));
}

/// Quiver of a weakly separated collection via its tiling: arrows join
/// subsets adjacent in both of their nontrivial cliques, oriented against the
/// clockwise order of the varying elements.
inline Quiver quiver_from_collection(const std::vector<KSubset>& C,
                                     const std::vector<char>& frozen) {
  int m = int(C.size());
  if (m == 0) return Quiver{};
  int n = C[0].n();
  std::map<KSubset, int> index;
  for (int i = 0; i < m; ++i) index[C[i]] = i;
  Quiver q;
  q.m = m;
  q.frozen = frozen;
  auto succ_in = [&](const std::vector<int>& cyc, int e) {
    for (size_t i = 0; i < cyc.size(); ++i)
      if (cyc[i] == e) return cyc[(i + 1) % cyc.size()];
    throw DomainError("element missing from clique");
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      KSubset X(n, C[i].mask() & C[j].mask());
      if (X.k() != C[i].k() - 1) continue;
      KSubset K(n, C[i].mask() | C[j].mask());
      std::vector<int> white, black;
      for (int e = 1; e <= n; ++e) {
        if (!X.contains(e) && index.count(X.with(e))) white.push_back(e);
        if (K.contains(e) && index.count(K.without(e))) black.push_back(e);
      }
      if (white.size() < 3 || black.size() < 3) continue;
      int ei = std::countr_zero(C[i].mask() & ~X.mask()) + 1;
      int ej = std::countr_zero(C[j].mask() & ~X.mask()) + 1;
      bool wij = succ_in(white, ei) == ej;  // j follows i clockwise in white
      bool wji = succ_in(white, ej) == ei;
      if (!wij && !wji) continue;
      // The black clique must agree: removing ej gives i, so i follows j in
      // the removal cycle exactly when j follows i in the insertion cycle.
      bool bij = succ_in(black, ei) == ej;
      bool bji = succ_in(black, ej) == ei;
      if (wij != bij || wji != bji)
        throw VerificationError("clique orientations disagree");
      if (wij) q.add_arrow(j, i);
      else q.add_arrow(i, j);
    }
  return q;
}

/// Seed on a maximal weakly separated collection with prescribed boundary
/// necklace; vertex order is necklace positions then sorted interior labels.
inline Seed seed_from_collection(const std::vector<KSubset>& collection, const Necklace& neck,
                                 const Perm& pi) {
  int n = neck.n();
  std::set<KSubset> neck_set(neck.subsets().begin(), neck.subsets().end());
  if (int(neck_set.size()) != n) throw DomainError("necklace with repeated subsets");
  std::vector<KSubset> order(neck.subsets());
  std::vector<KSubset> interior;
  for (const KSubset& s : collection)
    if (!neck_set.count(s)) interior.push_back(s);
  std::sort(interior.begin(), interior.end());
  order.insert(order.end(), interior.begin(), interior.end());
  std::vector<char> frozen(order.size(), 0);
  for (int v = 0; v < n; ++v) frozen[v] = 1;
  Quiver q = quiver_from_collection(order, frozen);
  auto ctx = std::make_shared<SeedContext>(SeedContext{pi, order, n, neck});
  return Seed(std::move(ctx), std::move(q));
}

// ---------------------------------------------------------------------------
// Mutation closure.

struct Closure {
  std::vector<Seed> seeds;
  std::vector<LaurentPoly> variables;  // distinct mutable expressions
  bool complete;                       // false if the cap was hit
};

inline Closure mutation_closure(const Seed& start, size_t max_seeds = 2000) {
  Closure out{{}, {}, true};
  std::set<std::vector<LaurentPoly>> seen;
  std::set<LaurentPoly> vars;
  std::queue<Seed> q;
  q.push(start);
  seen.insert(start.cluster_key());
  while (!q.empty()) {
    Seed s = q.front();
    q.pop();
    out.seeds.push_back(s);
    for (int v = s.num_frozen(); v < s.size(); ++v) vars.insert(s.expr(v));
    if (out.seeds.size() + q.size() > max_seeds) {
      out.complete = false;
      break;
    }
    for (int p = s.num_frozen(); p < s.size(); ++p) {
      Seed t = s.mutate(p);
      if (seen.insert(t.cluster_key()).second) q.push(t);
    }
  }
  out.variables.assign(vars.begin(), vars.end());
  return out;
}

// ---------------------------------------------------------------------------
// Quasi-equivalence.

struct QuasiCertificate {
  bool ok = false;
  std::string failure;
  // Row i: exponents of the i-th frozen of the second seed over the frozens
  // of the first seed.
  std::vector<std::vector<long long>> frozen_change;
  // Per mutable of the first seed: exponents (over first-seed frozens) of the
  // monomial relating it to its partner in the second seed.
  std::vector<std::vector<long long>> rescale;
  std::vector<int> mutable_map;  // first-seed mutable index -> second-seed index
  int points_checked = 0;
};

namespace detail {

// Solve A x = b over the rationals (square, possibly singular -> nullopt).
inline std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> A,
                                                      std::vector<Rat> b) {
  int n = int(A.size());
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (A[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(A[pivot], A[c]);
    std::swap(b[pivot], b[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rat f = A[r][c] / A[c][c];
      for (int j = c; j < n; ++j) A[r][j] -= f * A[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rat> x(n);
  for (int c = 0; c < n; ++c) x[c] = b[c] / A[c][c];
  return x;
}

// All solutions of A x = b as particular + kernel basis, via row reduction.
// Returns false when the system is inconsistent.
struct AffineSolutions {
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> kernel;
};

inline std::optional<AffineSolutions> solve_affine(std::vector<std::vector<Rat>> A,
                                                   std::vector<Rat> b) {
  int rows = int(A.size()), cols = rows ? int(A[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c] / A[r][c];
      for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  AffineSolutions sol;
  sol.particular.assign(cols, Rat(0));
  std::vector<char> is_pivot(cols, 0);
  for (int i = 0; i < r; ++i) {
    sol.particular[pivot_col[i]] = b[i] / A[i][pivot_col[i]];
    is_pivot[pivot_col[i]] = 1;
  }
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[c] = Rat(1);
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -A[i][c] / A[i][pivot_col[i]];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

inline Rat eval_monomial(const std::vector<Rat>& vals, const std::vector<long long>& exps) {
  Rat out(1);
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0) out *= rat_pow(vals[i], exps[i]);
  return out;
}

}  // namespace detail

/// Monomial exponents of each frozen of `s` over the forward-necklace basis.
/// The necklace is rotated if needed so its insertion permutation has the
/// type of the trip permutation (as for shifted reverse necklaces).
inline std::vector<std::vector<long long>> frozen_exponents_over_base(const Seed& s) {
  const Perm& pi = s.ctx().pi;
  const Necklace& neck = s.frozen_necklace();
  int n = neck.n();
  for (int r = 0; r < n; ++r) {
    Necklace rotated = r == 0 ? neck : rotate(neck, r);
    if (!(type_of(rotated.insertion()) == type_of(pi))) continue;
    if (!leq_circ(rotated.insertion(), pi)) continue;
    UnitMonomialPath ump = unit_monomial_path(pi, rotated.insertion());
    std::vector<std::vector<long long>> out(n);
    for (int b = 1; b <= n; ++b) out[(b - 1 + r) % n] = ump.exponents[b - 1];
    return out;
  }
  throw DomainError("no rotation of the frozen necklace sits below the trip permutation");
}

/// Tests quasi-equivalence at the given sample points and produces the
/// certificate: frozen change of basis (unimodular, exact), per-mutable
/// rescaling monomials, and exchange-ratio agreement.
inline QuasiCertificate quasi_equivalent(const Seed& s1, const Seed& s2,
                                         const std::vector<PlueckerValues>& points) {
  QuasiCertificate cert;
  cert.points_checked = int(points.size());
  if (s1.ctx().pi != s2.ctx().pi) {
    cert.failure = "seeds live on different varieties";
    return cert;
  }
  if (s1.rank() != s2.rank() || s1.num_frozen() != s2.num_frozen()) {
    cert.failure = "seed ranks differ";
    return cert;
  }
  int n = s1.num_frozen(), r = s1.rank();

  std::vector<std::vector<Rat>> v1, v2;
  for (const PlueckerValues& pt : points) {
    v1.push_back(s1.evaluate(pt));
    v2.push_back(s2.evaluate(pt));
  }

  // Frozen groups coincide: exact change of basis via the toggle monomials.
  std::vector<std::vector<long long>> E1 = frozen_exponents_over_base(s1);
  std::vector<std::vector<long long>> E2 = frozen_exponents_over_base(s2);
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = rat_of(E1[j][i]);  // transpose: solve X E1 = E2
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> b(n);
    for (int j = 0; j < n; ++j) b[j] = rat_of(E2[i][j]);
    auto x = detail::solve_rational(A, b);
    if (!x) {
      cert.failure = "frozen basis matrix is singular";
      return cert;
    }
    std::vector<long long> row;
    for (const Rat& c : *x) {
      if (c.get_den() != 1) {
        cert.failure = "frozen change of basis is not integral at frozen " + std::to_string(i);
        return cert;
      }
      row.push_back((long long)c.get_num().get_si());
    }
    cert.frozen_change.push_back(std::move(row));
  }
  // Verify monomial identities at every point.
  for (size_t t = 0; t < points.size(); ++t) {
    std::vector<Rat> fr1(v1[t].begin(), v1[t].begin() + n);
    for (int i = 0; i < n; ++i)
      if (detail::eval_monomial(fr1, cert.frozen_change[i]) != v2[t][i]) {
        cert.failure = "frozen monomial identity fails at frozen " + std::to_string(i);
        return cert;
      }
  }

  // Mutable matching: x1_i = M x2_j with M a monomial in the first frozens,
  // proposed through the column grading and checked at the points.
  std::vector<std::vector<Rat>> ind(n, std::vector<Rat>(n));
  const Necklace& N1 = s1.frozen_necklace();
  for (int e = 1; e <= n; ++e)
    for (int b = 1; b <= n; ++b) ind[e - 1][b - 1] = Rat(N1.at(b).contains(e) ? 1 : 0);

  // The grading pins the exponents only up to the kernel of the indicator
  // matrix (one dimension per extra cycle of the trip permutation); small
  // kernel coefficients are searched and every candidate is checked at the
  // sample points.
  auto rescale_for = [&](int i, int j) -> std::optional<std::vector<long long>> {
    std::vector<long long> d1 = s1.multidegree(n + i), d2 = s2.multidegree(n + j);
    std::vector<Rat> b(n);
    for (int e = 0; e < n; ++e) b[e] = rat_of(d1[e] - d2[e]);
    auto sol = detail::solve_affine(ind, b);
    if (!sol) return std::nullopt;
    int dim = int(sol->kernel.size());
    if (dim > 3) return std::nullopt;  // out of desk-scale reach
    const long long B = 3;
    std::vector<long long> lambda(dim, -B);
    auto validates = [&](const std::vector<long long>& exps) {
      for (size_t t = 0; t < points.size(); ++t) {
        if (v2[t][n + j] == 0) {
          if (v1[t][n + i] != 0) return false;
          continue;
        }
        std::vector<Rat> fr1(v1[t].begin(), v1[t].begin() + n);
        if (v1[t][n + i] != detail::eval_monomial(fr1, exps) * v2[t][n + j]) return false;
      }
      return true;
    };
    while (true) {
      std::vector<Rat> cand = sol->particular;
      for (int d = 0; d < dim; ++d)
        for (int e = 0; e < n; ++e) cand[e] += rat_of(lambda[d]) * sol->kernel[d][e];
      bool integral = true;
      std::vector<long long> exps;
      for (const Rat& c : cand) {
        if (c.get_den() != 1) {
          integral = false;
          break;
        }
        exps.push_back((long long)c.get_num().get_si());
      }
      if (integral && validates(exps)) return exps;
      int d = 0;
      while (d < dim && lambda[d] == B) lambda[d++] = -B;
      if (d == dim) break;
      ++lambda[d];
    }
    return std::nullopt;
  };

  std::vector<std::vector<std::pair<int, std::vector<long long>>>> options(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (auto exps = rescale_for(i, j)) options[i].push_back({j, *exps});

  std::vector<int> match(r, -1);
  std::vector<char> taken(r, 0);
  std::function<bool(int)> assign = [&](int i) {
    if (i == r) return true;
    for (const auto& [j, exps] : options[i]) {
      if (taken[j]) continue;
      taken[j] = 1;
      match[i] = j;
      if (assign(i + 1)) return true;
      taken[j] = 0;
      match[i] = -1;
    }
    return false;
  };
  if (!assign(0)) {
    cert.failure = "no frozen-monomial matching of mutable variables";
    return cert;
  }
  cert.mutable_map = match;
  for (int i = 0; i < r; ++i)
    for (const auto& [j, exps] : options[i])
      if (j == match[i]) {
        cert.rescale.push_back(exps);
        break;
      }

  // Exchange ratios coincide under the matching.
  for (size_t t = 0; t < points.size(); ++t)
    for (int i = 0; i < r; ++i) {
      Rat y1 = s1.exchange_ratio_value(n + i, points[t]);
      Rat y2 = s2.exchange_ratio_value(n + match[i], points[t]);
      if (y1 != y2) {
        cert.failure = "exchange ratios differ at mutable " + std::to_string(i);
        return cert;
      }
    }

  cert.ok = true;
  return cert;
}

struct QuasiSearchResult {
  bool found = false;
  std::vector<int> mutations;  // mutable indices (0-based within mutables)
  QuasiCertificate certificate;
};

/// Breadth-first search over mutation sequences of the first seed, testing
/// quasi-equivalence against the second at every node.
inline QuasiSearchResult quasi_transformation_search(const Seed& s1, const Seed& s2, int depth,
                                                     const std::vector<PlueckerValues>& points) {
  struct Node {
    Seed seed;
    std::vector<int> path;
  };
  std::set<std::vector<LaurentPoly>> seen{s1.cluster_key()};
  std::queue<Node> q;
  q.push({s1, {}});
  while (!q.empty()) {
    Node cur = q.front();
    q.pop();
    QuasiCertificate cert = quasi_equivalent(cur.seed, s2, points);
    if (cert.ok) return {true, cur.path, std::move(cert)};
    if (int(cur.path.size()) >= depth) continue;
    for (int p = 0; p < cur.seed.rank(); ++p) {
      Seed next = cur.seed.mutate(cur.seed.num_frozen() + p);
      if (!seen.insert(next.cluster_key()).second) continue;
      std::vector<int> path = cur.path;
      path.push_back(p);
      q.push({std::move(next), std::move(path)});
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Toggles realized as boundary square moves.

struct ToggleWitness {
  std::vector<KSubset> collection;  // face labels: maximal between necklace and interior
  int position;                     // necklace position of the square move
  KSubset moved_from, moved_to;
  KSubset interior_term;            // the exchange term enclosed by the curve
  bool degenerate = false;
};

/// Realizes an aligned toggle as a square move at a boundary face of a
/// suitable collection, and validates the local quiver picture around the
/// enclosed exchange term.
inline ToggleWitness toggle_quasi_witness(const Necklace& N, int a, const Positroid& M) {
  if (classify_toggle(N, a) != ToggleClass::aligned)
    throw DomainError("toggle is not aligned");
  if (auto bad = ws_violation(N.subsets()))
    throw DomainError("necklace is not weakly separated");
  Necklace N2 = toggle(N, a);
  if (auto bad = ws_violation(N2.subsets()))
    throw DomainError("toggled necklace is not weakly separated");
  int n = N.n(), k = N.k();

  int ra = N.removal_at(a), ia = N.insertion_at(a);
  int rp = N.removal_at(a - 1), ip = N.insertion_at(a - 1);
  if (rp == ip || ra == ia) {
    // A loop chord: the move is carried by sliding a lollipop; the two
    // necklaces label the same faces.
    std::vector<KSubset> subs = N.subsets();
    for (const KSubset& s : N2.subsets()) subs.push_back(s);
    WSCollection C = complete_to_maximal_free(WSCollection(n, k, std::move(subs)));
    std::set<KSubset> s1(N.subsets().begin(), N.subsets().end());
    std::set<KSubset> s2(N2.subsets().begin(), N2.subsets().end());
    if (s1 != s2) throw VerificationError("lollipop toggle changed the label set");
    return ToggleWitness{C.subsets(), a, N.at(a), N2.at(a), N.at(a), true};
  }

  KSubset S = N.at(a - 1).without(rp).without(ra);
  KSubset t_removal = S.with(rp).with(ip);   // exchange term from the removal chord
  KSubset t_insertion = S.with(ra).with(ia); // exchange term from the insertion chord
  std::vector<KSubset> subs = N.subsets();
  subs.push_back(t_removal);
  subs.push_back(t_insertion);
  WSCollection C = complete_to_maximal_free(WSCollection(n, k, std::move(subs)));

  std::vector<KSubset> din = necklace_interior(N);
  std::set<KSubset> din_set(din.begin(), din.end());
  bool rem_in = din_set.count(t_removal), ins_in = din_set.count(t_insertion);
  if (rem_in == ins_in)
    throw VerificationError("expected exactly one exchange term inside the curve");
  KSubset inside = rem_in ? t_removal : t_insertion;
  KSubset outside = rem_in ? t_insertion : t_removal;
  if (M.contains(outside))
    throw VerificationError("outer exchange term unexpectedly lies in the positroid");

  // Face labels on both sides of the toggle: the parts of the completed
  // collection (with the moved label exchanged) enclosed by each curve.
  std::vector<KSubset> labels1, labels2;
  std::vector<KSubset> din2 = necklace_interior(N2);
  std::set<KSubset> din2_set(din2.begin(), din2.end());
  for (const KSubset& s : C.subsets()) {
    if (din_set.count(s)) labels1.push_back(s);
    if (s != N.at(a) && din2_set.count(s)) labels2.push_back(s);
  }
  if (!din2_set.count(N2.at(a))) throw VerificationError("moved label left the curve");
  if (std::find(labels2.begin(), labels2.end(), N2.at(a)) == labels2.end())
    labels2.push_back(N2.at(a));
  std::sort(labels2.begin(), labels2.end());

  // Quivers come from the tiling of the full completed collection, with the
  // edges restricted to the enclosed labels on each side of the move.
  auto restricted_quiver = [&](const std::vector<KSubset>& ambient,
                               const std::vector<KSubset>& labels) {
    std::vector<char> none(ambient.size(), 0);
    Quiver full = quiver_from_collection(ambient, none);
    std::map<KSubset, int> amb_index, lab_index;
    for (size_t i = 0; i < ambient.size(); ++i) amb_index[ambient[i]] = int(i);
    for (size_t i = 0; i < labels.size(); ++i) lab_index[labels[i]] = int(i);
    Quiver q;
    q.m = int(labels.size());
    q.frozen.assign(q.m, 0);
    for (const auto& [arc, mult] : full.arrows) {
      auto f = lab_index.find(ambient[arc.first]);
      auto t = lab_index.find(ambient[arc.second]);
      if (f != lab_index.end() && t != lab_index.end()) q.add_arrow(f->second, t->second, mult);
    }
    return q;
  };
  auto index_of = [&](const std::vector<KSubset>& labels, const KSubset& lab) {
    auto it = std::find(labels.begin(), labels.end(), lab);
    if (it == labels.end()) throw VerificationError("label missing from witness collection");
    return int(it - labels.begin());
  };
  std::vector<KSubset> ambient2 = C.subsets();
  ambient2.erase(std::remove(ambient2.begin(), ambient2.end(), N.at(a)), ambient2.end());
  ambient2.push_back(N2.at(a));
  std::sort(ambient2.begin(), ambient2.end());
  std::set<KSubset> neck_set(N.subsets().begin(), N.subsets().end());
  if (neck_set.count(inside)) {
    // The exchange term is itself a necklace label (tiny wraparound cases):
    // there is no mutable vertex at it and no local picture to check.
    return ToggleWitness{labels1, a, N.at(a), N2.at(a), inside, false};
  }
  Quiver q1 = restricted_quiver(C.subsets(), labels1);
  Quiver q2 = restricted_quiver(ambient2, labels2);
  int prev1 = index_of(labels1, N.at(a - 1)), cur1 = index_of(labels1, N.at(a));
  int next1 = index_of(labels1, N.at(a + 1)), in1 = index_of(labels1, inside);
  int prev2 = index_of(labels2, N.at(a - 1)), cur2 = index_of(labels2, N2.at(a));
  int next2 = index_of(labels2, N.at(a + 1)), in2 = index_of(labels2, inside);
  // The picture is defined up to reversing every arrow on both sides.
  int sign = 0;
  if (q1.net(prev1, cur1) >= 1 && q1.net(next1, cur1) >= 1 && q1.net(cur1, in1) >= 1) sign = 1;
  if (q1.net(cur1, prev1) >= 1 && q1.net(cur1, next1) >= 1 && q1.net(in1, cur1) >= 1) sign = -1;
  if (sign == 0) throw VerificationError("local picture missing arrows before the move");
  auto net2 = [&](int x, int y) { return sign > 0 ? q2.net(x, y) : q2.net(y, x); };
  auto net1 = [&](int x, int y) { return sign > 0 ? q1.net(x, y) : q1.net(y, x); };
  if (net2(cur2, prev2) < 1 || net2(cur2, next2) < 1 || net2(in2, cur2) < 1)
    throw VerificationError("local picture missing arrows after the move");
  bool dotted1 = net1(in1, next1) > 0, dotted2 = net2(next2, in2) > 0;
  bool dashed1 = net1(in1, prev1) > 0, dashed2 = net2(prev2, in2) > 0;
  if (dotted1 == dotted2 || dashed1 == dashed2)
    throw VerificationError("local picture arrows do not flip across the move");

  return ToggleWitness{labels1, a, N.at(a), N2.at(a), inside, false};
}

}  // namespace plab
