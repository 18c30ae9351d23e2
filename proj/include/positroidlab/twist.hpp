#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "positroidlab/plabic.hpp"
#include "positroidlab/prng.hpp"
#include "positroidlab/rational.hpp"
#include "positroidlab/wsc.hpp"

namespace plab {

/// Exact-rational k x n matrix.
struct QMatrix {
  int k = 0, n = 0;
  std::vector<std::vector<Rat>> a;  // k rows, n columns

  static QMatrix zero(int k, int n) {
    return QMatrix{k, n, std::vector<std::vector<Rat>>(k, std::vector<Rat>(n, Rat(0)))};
  }

  std::vector<Rat> column(int j) const {
    std::vector<Rat> c(k);
    for (int r = 0; r < k; ++r) c[r] = a[r][j - 1];
    return c;
  }

  friend bool operator==(const QMatrix& x, const QMatrix& y) {
    return x.k == y.k && x.n == y.n && x.a == y.a;
  }
};

inline Rat det(std::vector<std::vector<Rat>> m) {
  int k = int(m.size());
  Rat d(1);
  for (int c = 0; c < k; ++c) {
    int pivot = -1;
    for (int r = c; r < k; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (int r = c + 1; r < k; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

/// Determinant of the columns indexed by I (in increasing order).
inline Rat pluecker(const QMatrix& M, const KSubset& I) {
  if (I.k() != M.k) throw DomainError("minor size does not match row count");
  std::vector<std::vector<Rat>> sub(M.k, std::vector<Rat>(M.k));
  auto mem = I.members();
  for (int r = 0; r < M.k; ++r)
    for (int c = 0; c < M.k; ++c) sub[r][c] = M.a[r][mem[c] - 1];
  return det(sub);
}

using PlueckerValues = std::map<KSubset, Rat>;

inline PlueckerValues all_plueckers(const QMatrix& M) {
  PlueckerValues out;
  for (const KSubset& I : all_ksubsets(M.n, M.k)) out[I] = pluecker(M, I);
  return out;
}

/// Column permutation action: result column a is M's column sigma(a).
inline QMatrix column_permute(const QMatrix& M, const Perm& sigma) {
  QMatrix R = QMatrix::zero(M.k, M.n);
  for (int r = 0; r < M.k; ++r)
    for (int c = 1; c <= M.n; ++c) R.a[r][c - 1] = M.a[r][sigma(c) - 1];
  return R;
}

struct SignVector {
  std::vector<int> sign;  // entries +1 / -1, per column
  int n() const { return int(sign.size()); }
};

inline QMatrix scale_columns(const QMatrix& M, const SignVector& eps) {
  QMatrix R = M;
  for (int c = 1; c <= M.n; ++c)
    if (eps.sign[c - 1] < 0)
      for (int r = 0; r < M.k; ++r) R.a[r][c - 1] = -R.a[r][c - 1];
  return R;
}

/// Solve A x = b exactly (square).
inline std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  int k = int(A.size());
  for (int c = 0; c < k; ++c) {
    int pivot = -1;
    for (int r = c; r < k; ++r)
      if (A[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("singular linear system");
    std::swap(A[pivot], A[c]);
    std::swap(b[pivot], b[c]);
    for (int r = 0; r < k; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rat f = A[r][c] / A[c][c];
      for (int j = c; j < k; ++j) A[r][j] -= f * A[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rat> x(k);
  for (int c = 0; c < k; ++c) x[c] = b[c] / A[c][c];
  return x;
}

/// Right twist along a necklace: column a is the unique vector pairing to 1
/// with column removal(a) of M and to 0 with the other columns indexed I_a.
inline QMatrix right_twist(const Necklace& N, const QMatrix& M) {
  if (N.n() != M.n || N.k() != M.k) throw DomainError("necklace and matrix sizes differ");
  QMatrix R = QMatrix::zero(M.k, M.n);
  for (int a = 1; a <= N.n(); ++a) {
    auto mem = N.at(a).members();
    std::vector<std::vector<Rat>> A(M.k, std::vector<Rat>(M.k));
    std::vector<Rat> b(M.k, Rat(0));
    for (int r = 0; r < M.k; ++r) {
      for (int c = 0; c < M.k; ++c) A[r][c] = M.a[c][mem[r] - 1];  // rows <- M_b transposed
      if (mem[r] == N.removal_at(a)) b[r] = Rat(1);
    }
    std::vector<Rat> v;
    try {
      v = solve_linear(std::move(A), std::move(b));
    } catch (const DomainError&) {
      throw DomainError("necklace minor " + N.at(a).to_string() + " is singular");
    }
    for (int r = 0; r < M.k; ++r) R.a[r][a - 1] = v[r];
  }
  return R;
}

/// Left twist: column a pairs to 1 with column insertion(a), to 0 with the
/// rest of the columns indexed I_{a+1}.
inline QMatrix left_twist(const Necklace& N, const QMatrix& M) {
  if (N.n() != M.n || N.k() != M.k) throw DomainError("necklace and matrix sizes differ");
  QMatrix R = QMatrix::zero(M.k, M.n);
  for (int a = 1; a <= N.n(); ++a) {
    auto mem = N.at(a + 1).members();
    std::vector<std::vector<Rat>> A(M.k, std::vector<Rat>(M.k));
    std::vector<Rat> b(M.k, Rat(0));
    for (int r = 0; r < M.k; ++r) {
      for (int c = 0; c < M.k; ++c) A[r][c] = M.a[c][mem[r] - 1];
      if (mem[r] == N.insertion_at(a)) b[r] = Rat(1);
    }
    std::vector<Rat> v;
    try {
      v = solve_linear(std::move(A), std::move(b));
    } catch (const DomainError&) {
      throw DomainError("necklace minor " + N.at(a + 1).to_string() + " is singular");
    }
    for (int r = 0; r < M.k; ++r) R.a[r][a - 1] = v[r];
  }
  return R;
}

inline QMatrix right_twist(const Perm& pi, const QMatrix& M) {
  return right_twist(forward_necklace(pi), M);
}
inline QMatrix left_twist(const Perm& pi, const QMatrix& M) {
  return left_twist(reverse_necklace(pi, 0), M);
}

// ---------------------------------------------------------------------------
// Boundary measurement via matchings.

using EdgeWeights = std::vector<Rat>;  // per edge id, strictly positive

/// Subdivide unicolored interior edges so that every interior edge joins
/// opposite colors. Weights split so the product is preserved (new edge gets
/// weight 1).
inline std::pair<PlabicGraph, EdgeWeights> bipartite_normalize(const PlabicGraph& G,
                                                               const EdgeWeights& w) {
  PlabicGraph H = G;
  EdgeWeights wh = w;
  for (int e = 0; e < int(H.edges.size()); ++e) {
    auto [u, v] = H.edges[e];
    if (u < H.n || v < H.n) continue;
    if (H.color[u] != H.color[v]) continue;
    int mid = H.num_vertices();
    H.color.push_back(H.color[u] == VColor::white ? VColor::black : VColor::white);
    int e2 = int(H.edges.size());
    H.edges.push_back({mid, v});
    for (int& ed : H.rot[v])
      if (ed == e) ed = e2;
    H.edges[e] = {u, mid};
    H.rot.push_back({e, e2});
    wh.push_back(Rat(1));
  }
  validate(H);
  for (int v = H.n; v < H.num_vertices(); ++v)
    if (H.degree(v) == 1 && H.other_end(H.rot[v][0], v) >= H.n)
      throw DomainError("interior leaf: matchings do not see the trip structure");
  return {H, wh};
}

/// Weight-generating function of almost perfect matchings, grouped by
/// boundary: position p belongs to the boundary set when its pendant white
/// neighbor is matched to it, or its pendant black neighbor is not.
inline PlueckerValues boundary_measurement_vector(const PlabicGraph& G0,
                                                  const EdgeWeights& w0) {
  auto [G, w] = bipartite_normalize(G0, w0);
  int V = G.num_vertices();
  std::vector<char> used(V, 0);
  PlueckerValues out;
  int k_expected = -1;

  std::vector<int> interior;
  for (int v = G.n; v < V; ++v) interior.push_back(v);

  std::vector<int> chosen;  // matched edges
  auto boundary_set = [&]() {
    // Position space; the relabeling acts afterwards by column permutation.
    std::vector<int> mem;
    for (int p = 1; p <= G.n; ++p) {
      int nb = G.other_end(G.pendant(p), p - 1);
      bool matched = used[p - 1];
      bool white = G.color[nb] == VColor::white;
      if ((white && matched) || (!white && !matched)) mem.push_back(p);
    }
    return mem;
  };

  std::function<void(size_t)> rec = [&](size_t idx) {
    while (idx < interior.size() && used[interior[idx]]) ++idx;
    if (idx == interior.size()) {
      auto mem = boundary_set();
      if (k_expected < 0) k_expected = int(mem.size());
      if (int(mem.size()) != k_expected)
        throw VerificationError("matching boundaries of unequal size");
      Rat weight(1);
      for (int e : chosen) weight *= w[e];
      out[KSubset::of(G.n, mem)] += weight;
      return;
    }
    int v = interior[idx];
    used[v] = 1;
    for (int e : G.rot[v]) {
      int u = G.other_end(e, v);
      if (used[u]) continue;
      used[u] = 1;
      chosen.push_back(e);
      rec(idx + 1);
      chosen.pop_back();
      used[u] = 0;
    }
    used[v] = 0;
  };
  rec(0);
  if (out.empty()) throw DomainError("graph admits no almost perfect matching");
  return out;
}

/// Matrix whose row span realizes a Pluecker vector; the columns indexed by
/// the first nonzero coordinate form an identity block. Verified against the
/// input up to the common scale.
inline QMatrix matrix_from_plueckers(const PlueckerValues& vals, int n, int k) {
  std::optional<KSubset> base;
  for (const KSubset& I : all_ksubsets(n, k)) {
    auto it = vals.find(I);
    if (it != vals.end() && it->second != 0) {
      base = I;
      break;
    }
  }
  if (!base) throw DomainError("zero Pluecker vector");
  auto val = [&](const KSubset& I) {
    auto it = vals.find(I);
    return it == vals.end() ? Rat(0) : it->second;
  };
  Rat scale = val(*base);
  auto mem = base->members();
  QMatrix M = QMatrix::zero(k, n);
  for (int r = 0; r < k; ++r) {
    for (int j = 1; j <= n; ++j) {
      if (base->contains(j)) {
        M.a[r][j - 1] = (j == mem[r]) ? Rat(1) : Rat(0);
        continue;
      }
      // Determinant with column j substituted in place of the r-th member.
      std::vector<int> cols = mem;
      cols[r] = j;
      int inv = 0;
      std::vector<int> sorted_cols = cols;
      for (size_t x = 0; x < sorted_cols.size(); ++x)
        for (size_t y = x + 1; y < sorted_cols.size(); ++y)
          if (sorted_cols[x] > sorted_cols[y]) ++inv;
      std::sort(sorted_cols.begin(), sorted_cols.end());
      if (std::unique(sorted_cols.begin(), sorted_cols.end()) != sorted_cols.end())
        throw DomainError("internal: duplicate column");
      Rat v = val(KSubset::of(n, sorted_cols));
      M.a[r][j - 1] = (inv % 2 ? -v : v) / scale;
    }
  }
  // The reconstruction must reproduce the vector up to the common scale.
  for (const auto& [I, v] : vals)
    if (pluecker(M, I) * scale != v)
      throw VerificationError("Pluecker vector fails the quadratic relations");
  return M;
}

/// Boundary measurement point of a (possibly relabeled) graph, as a matrix.
/// For a relabeled graph the label-space point is the column permutation of
/// the position-space point by the inverse relabeling.
inline QMatrix boundary_measurement(const PlabicGraph& G, const EdgeWeights& w) {
  PlabicGraph plain = G;
  plain.rho = Perm::identity(G.n);
  PlueckerValues vec = boundary_measurement_vector(plain, w);
  int k = vec.begin()->first.k();
  QMatrix M = matrix_from_plueckers(vec, G.n, k);
  return column_permute(M, G.rho.inverse());
}

inline EdgeWeights unit_weights(const PlabicGraph& G) {
  return EdgeWeights(G.edges.size(), Rat(1));
}

inline EdgeWeights random_weights(const PlabicGraph& G, SplitMix64& rng) {
  EdgeWeights w;
  for (size_t e = 0; e < G.edges.size(); ++e) w.push_back(rng.positive_rational());
  return w;
}

/// Positive sample of the open cell indexed by pi: boundary measurement of a
/// synthesized graph with random positive weights. The vanishing pattern is
/// checked exactly.
inline QMatrix sample_point(const Perm& pi, SplitMix64& rng) {
  PlabicGraph G = generate_graph(pi);
  QMatrix M = boundary_measurement(G, random_weights(G, rng));
  Positroid P(pi);
  for (const KSubset& I : all_ksubsets(M.n, M.k)) {
    Rat v = pluecker(M, I);
    if (P.contains(I) ? v <= 0 : v != 0)
      throw VerificationError("sample point violates the basis pattern at " + I.to_string());
  }
  return M;
}

// ---------------------------------------------------------------------------
// Sign automorphism.

/// Sign vector epsilon with det(columns rho(I)) = sign-corrected det at every
/// face label I of graphs with the conjugated trip permutation. Solved as a
/// GF(2) system over the candidate labels and verified.
inline SignVector sign_automorphism(const Perm& rho, const Perm& pi) {
  int n = pi.n();
  Perm iota = pi.compose(rho);
  if (!(type_of(iota) == type_of(pi))) throw DomainError("relabeling does not preserve type");
  if (!leq_circ(iota, pi)) throw DomainError("pi rho is not below pi in circular weak order");
  Perm mu = rho.inverse().compose(pi).compose(rho);
  if (lift(mu).length() != lift(pi).length())
    throw DomainError("conjugate permutation has different length");

  // Candidate labels: positroid bases weakly separated from the necklace.
  Positroid M(mu);
  std::vector<KSubset> labels;
  for (const KSubset& J : M.bases()) {
    bool ok = true;
    for (const KSubset& I : M.necklace().subsets())
      if (!weakly_separated(I, J)) {
        ok = false;
        break;
      }
    if (ok) labels.push_back(J);
  }

  // One GF(2) equation per label: sum of unknowns over rho(I) = inversion
  // parity of rho restricted to I.
  std::vector<std::pair<std::uint32_t, int>> rows;
  for (const KSubset& I : labels) {
    auto mem = I.members();
    int inv = 0;
    for (size_t x = 0; x < mem.size(); ++x)
      for (size_t y = x + 1; y < mem.size(); ++y)
        if (rho(mem[x]) > rho(mem[y])) ++inv;
    rows.push_back({I.apply(rho).mask(), inv & 1});
  }
  // Gaussian elimination over GF(2); free variables set to zero.
  std::vector<std::uint32_t> basis(n, 0);
  std::vector<int> rhs(n, 0);
  for (auto [m, r] : rows) {
    for (int b = n - 1; b >= 0; --b) {
      if (!((m >> b) & 1)) continue;
      if (!basis[b]) {
        basis[b] = m;
        rhs[b] = r;
        break;
      }
      m ^= basis[b];
      r ^= rhs[b];
    }
    if (std::popcount(m) == 0 && r) throw VerificationError("sign system inconsistent");
  }
  std::vector<int> x(n, 0);
  for (int b = n - 1; b >= 0; --b) {
    if (!basis[b]) continue;
    int r = rhs[b];
    for (int c = b - 1; c >= 0; --c)
      if ((basis[b] >> c) & 1) r ^= x[c];
    x[b] = r;
  }
  SignVector eps;
  for (int c = 0; c < n; ++c) eps.sign.push_back(x[c] ? -1 : 1);
  // Verify every candidate constraint.
  for (auto [m, r] : rows) {
    int s = 0;
    for (int b = 0; b < n; ++b)
      if ((m >> b) & 1) s ^= (eps.sign[b] < 0);
    if (s != r) throw VerificationError("sign system verification failed");
  }
  return eps;
}

// ---------------------------------------------------------------------------
// Twist identity checks.

struct CheckReport {
  bool ok = true;
  std::string detail;
};

/// Both round trips along the necklace and its dual are the identity on the
/// given matrix (which should lie on the open cell of the trip permutation).
inline CheckReport twist_roundtrip_check(const Necklace& N, const QMatrix& M) {
  Necklace Nd = dual(N);
  CheckReport rep;
  if (left_twist(Nd, right_twist(N, M)) != M) {
    rep.ok = false;
    rep.detail = "left-after-right round trip moved the point";
    return rep;
  }
  if (right_twist(Nd, left_twist(N, M)) != M) {
    rep.ok = false;
    rep.detail = "right-after-left round trip moved the point";
    return rep;
  }
  return rep;
}

/// Face-label coordinates survive the composite of the two one-sided twists,
/// even off the open cell (only the forward-necklace minors need to be
/// invertible).
inline CheckReport triangularity_check(const Perm& pi, const QMatrix& z,
                                       const std::vector<KSubset>& target_labels) {
  QMatrix zz = left_twist(pi, right_twist(pi, z));
  for (const KSubset& I : target_labels)
    if (pluecker(z, I) != pluecker(zz, I))
      return {false, "coordinate " + I.to_string() + " changed"};
  return {true, ""};
}

struct DiagramReport {
  bool face_labels_equal = true;
  std::optional<KSubset> first_face_mismatch;
  std::optional<KSubset> off_label_discrepancy;  // coordinate where the maps differ
};

/// Compares the two routes around the boundary-measurement diagram on the
/// point cut out by the weights: equality on the face labels of the
/// underlying graph, plus a witness coordinate where the maps differ.
inline DiagramReport diagram_check(const PlabicGraph& G_rho, const EdgeWeights& w) {
  Perm rho = G_rho.rho;
  PlabicGraph G = G_rho;
  G.rho = Perm::identity(G.n);
  FaceLabeling fl = face_labels(G);
  Perm mu = fl.tr.trip, pi = rho.compose(mu).compose(rho.inverse());

  QMatrix y = boundary_measurement(G, w);
  QMatrix lhs = left_twist(mu, y);
  QMatrix rhs = column_permute(left_twist(pi, column_permute(y, rho.inverse())), rho);

  DiagramReport rep;
  std::set<KSubset> labels(fl.target.begin(), fl.target.end());
  for (const KSubset& I : fl.target)
    if (pluecker(lhs, I) != pluecker(rhs, I)) {
      rep.face_labels_equal = false;
      if (!rep.first_face_mismatch) rep.first_face_mismatch = I;
    }
  for (const KSubset& J : all_ksubsets(G.n, fl.boundary_necklace.k()))
    if (!labels.count(J) && pluecker(lhs, J) != pluecker(rhs, J)) {
      rep.off_label_discrepancy = J;
      break;
    }
  return rep;
}

}  // namespace plab
