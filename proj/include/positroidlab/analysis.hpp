#pragma once

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "positroidlab/seed.hpp"

namespace plab {

/// Weak-order elements below the lift whose conjugate keeps the length.
inline std::vector<Perm> sep_set(const Perm& pi) {
  AffinePerm f = lift(pi);
  std::vector<Perm> out;
  for (const AffinePerm& i : lower_ideal(f))
    if (i.inverse().compose(f).compose(i).length() == f.length()) out.push_back(reduce(i));
  return out;
}

struct ToggleGraph {
  std::vector<AffinePerm> vertices;          // the separating ideal elements, sorted
  std::vector<std::pair<int, int>> edges;    // index pairs, first < second
  std::vector<int> component;                // per vertex
  int num_components = 0;

  int index_of(const AffinePerm& v) const {
    for (int i = 0; i < int(vertices.size()); ++i)
      if (vertices[i] == v) return i;
    return -1;
  }
};

/// Graph on the separating elements with simple-reflection edges.
inline ToggleGraph toggle_graph(const Perm& pi) {
  AffinePerm f = lift(pi);
  ToggleGraph tg;
  for (const AffinePerm& i : lower_ideal(f))
    if (i.inverse().compose(f).compose(i).length() == f.length()) tg.vertices.push_back(i);
  int m = int(tg.vertices.size()), n = pi.n();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < m; ++v)
    for (int a = 0; a < n; ++a) {
      AffinePerm w = tg.vertices[v].right_simple(a);
      int u = tg.index_of(w);
      if (u > v) {
        tg.edges.push_back({v, u});
        parent[find(v)] = find(u);
      }
    }
  tg.component.assign(m, -1);
  std::map<int, int> roots;
  for (int v = 0; v < m; ++v) {
    int r = find(v);
    auto [it, fresh] = roots.insert({r, tg.num_components});
    if (fresh) ++tg.num_components;
    tg.component[v] = it->second;
  }
  return tg;
}

/// The lift and the minimal shift share a toggle-graph component.
inline bool is_toggle_connected(const Perm& pi) {
  ToggleGraph tg = toggle_graph(pi);
  auto [k, n] = type_of(pi);
  int a = tg.index_of(lift(pi)), b = tg.index_of(AffinePerm::shift(k, n));
  if (a < 0 || b < 0) return false;
  return tg.component[a] == tg.component[b];
}

enum class SchubertClass { schubert, opposite_schubert, neither };

inline std::string to_string(SchubertClass c) {
  switch (c) {
    case SchubertClass::schubert: return "schubert";
    case SchubertClass::opposite_schubert: return "opposite-schubert";
    case SchubertClass::neither: return "neither";
  }
  return "?";
}

/// Single descent with no fixed point before it (schubert), or the low and
/// high values each increasing with no high fixed points (opposite).
inline SchubertClass is_schubert(const Perm& pi) {
  int n = pi.n();
  int descents = 0, descent_at = 0;
  for (int a = 1; a < n; ++a)
    if (pi(a) > pi(a + 1)) {
      ++descents;
      descent_at = a;
    }
  if (descents == 1) {
    bool fixed_before = false;
    for (int a = 1; a <= descent_at; ++a) fixed_before = fixed_before || pi(a) == a;
    if (!fixed_before) return SchubertClass::schubert;
  }
  int k = type_of(pi).k;
  int last_low = 0, last_high = 0;
  bool low_inc = true, high_inc = true, high_fixed = false;
  for (int a = 1; a <= n; ++a) {
    int v = pi(a);
    if (v <= k) {
      low_inc = low_inc && v > last_low;
      last_low = v;
    } else {
      high_inc = high_inc && v > last_high;
      last_high = v;
      if (v == a) high_fixed = true;
    }
  }
  if (low_inc && high_inc && !high_fixed) return SchubertClass::opposite_schubert;
  return SchubertClass::neither;
}

// ---------------------------------------------------------------------------
// Sweeps over all permutations at desk scale.

struct SweepInstance {
  int n = 0, k = 0;
  std::string pi;
  std::string status;   // "pass" or "fail"
  std::string witness;  // filled on failure
};

struct SweepReport {
  std::string kind;
  int n_max = 0;
  std::vector<SweepInstance> instances;
  bool all_pass = true;
  long long checks = 0;
};

namespace detail {

inline std::vector<PlueckerValues> sweep_points(const Perm& pi, int count,
                                                std::uint64_t salt) {
  SplitMix64 rng(salt * 0x9e3779b97f4a7c15ull + pi.n());
  std::vector<PlueckerValues> pts;
  for (int t = 0; t < count; ++t) pts.push_back(all_plueckers(sample_point(pi, rng)));
  return pts;
}

}  // namespace detail

/// One permutation's worth of a sweep; returns the failure witness, if any.
inline std::optional<std::string> sweep_one(const std::string& kind, const Perm& pi,
                                            long long& checks) {
  AffinePerm f = lift(pi);
  if (kind == "main-2-iff-3") {
    for (const AffinePerm& i : lower_ideal(f)) {
      Perm iota = reduce(i);
      bool len_eq = i.inverse().compose(f).compose(i).length() == f.length();
      bool ws = is_ws_collection(grassmannlike(pi.inverse().compose(iota), iota).subsets());
      ++checks;
      if (len_eq != ws)
        return "iota=" + iota.to_string() + " length-equality=" + std::to_string(len_eq) +
               " weakly-separated=" + std::to_string(ws);
    }
    return std::nullopt;
  }
  if (kind == "unit-necklace") {
    auto pts = detail::sweep_points(pi, 20, 11);
    Necklace base = forward_necklace(pi);
    for (const AffinePerm& i : lower_ideal(f)) {
      Perm iota = reduce(i);
      UnitMonomialPath ump = unit_monomial_path(pi, iota);
      if (!ump.grading_consistent()) return "grading failure at iota=" + iota.to_string();
      for (const PlueckerValues& pt : pts)
        for (int a = 1; a <= pi.n(); ++a) {
          Rat lhs = pt.at(ump.target.at(a));
          Rat rhs(1);
          for (int b = 1; b <= pi.n(); ++b) {
            long long e = ump.exponents[a - 1][b - 1];
            if (e != 0) rhs *= rat_pow(pt.at(base.at(b)), e);
          }
          ++checks;
          if (lhs != rhs)
            return "monomial mismatch at iota=" + iota.to_string() + " position " +
                   std::to_string(a);
        }
    }
    return std::nullopt;
  }
  if (kind == "aligned-weak-order") {
    for (const AffinePerm& i : lower_ideal(f)) {
      Perm iota = reduce(i);
      Necklace N = grassmannlike(pi.inverse().compose(iota), iota);
      for (int a = 1; a <= pi.n(); ++a) {
        ToggleClass c = classify_toggle(N, a);
        if (c == ToggleClass::forbidden) continue;
        AffinePerm moved = i.right_simple((a - 1 + pi.n()) % pi.n());
        bool below = moved.av() == f.av() && leq_R(moved, f);
        ++checks;
        if ((c == ToggleClass::aligned) != below)
          return "iota=" + iota.to_string() + " a=" + std::to_string(a) + " class=" +
                 to_string(c);
      }
    }
    return std::nullopt;
  }
  if (kind == "aligned-noncrossing") {
    if (!pi.is_derangement()) return std::nullopt;
    for (const AffinePerm& i : lower_ideal(f)) {
      Perm iota = reduce(i);
      Necklace N = grassmannlike(pi.inverse().compose(iota), iota);
      if (!is_ws_collection(N.subsets())) continue;
      for (int a = 1; a <= pi.n(); ++a) {
        ++checks;
        if (classify_toggle(N, a) == ToggleClass::noncrossing_nonaligned)
          return "noncrossing nonaligned toggle at iota=" + iota.to_string() + " a=" +
                 std::to_string(a);
      }
    }
    return std::nullopt;
  }
  if (kind == "exchange-nonbasis") {
    Positroid M(pi);
    std::set<std::pair<Perm, Perm>> seen;
    std::vector<Necklace> frontier{forward_necklace(pi)};
    seen.insert({frontier[0].removal(), frontier[0].insertion()});
    while (!frontier.empty()) {
      std::vector<Necklace> next;
      for (const Necklace& N : frontier) {
        for (int z = 1; z <= pi.n(); ++z)
          for (int y = 1; y <= pi.n(); ++y) {
            if (y == z) continue;
            try {
              necklace_exchange_nonbasis(N, z, y, M);
              ++checks;
            } catch (const DomainError&) {
            } catch (const VerificationError& e) {
              return std::string(e.what()) + " at z=" + std::to_string(z) + " y=" +
                     std::to_string(y);
            }
          }
        for (int a = 1; a <= pi.n(); ++a) {
          ToggleClass c = classify_toggle(N, a);
          if (c != ToggleClass::aligned && c != ToggleClass::noncrossing_nonaligned) continue;
          Necklace T = toggle(N, a);
          if (seen.insert({T.removal(), T.insertion()}).second) next.push_back(T);
        }
      }
      frontier = std::move(next);
    }
    return std::nullopt;
  }
  if (kind == "target-ws") {
    for (const AffinePerm& i : lower_ideal(f)) {
      Perm iota = reduce(i);
      Perm rho = pi.inverse().compose(iota);
      Necklace N = grassmannlike(rho, iota);
      if (!is_ws_collection(N.subsets())) continue;
      PlabicGraph G = relabel(generate_graph(N.underlying()), rho);
      FaceLabeling fl = face_labels(G);
      ++checks;
      if (!is_ws_collection(fl.target)) return "target collection not ws at iota=" + iota.to_string();
    }
    return std::nullopt;
  }
  if (kind == "schubert") {
    SchubertClass cls = is_schubert(pi);
    if (cls == SchubertClass::neither) return std::nullopt;
    auto ideal = lower_ideal(f);
    auto sep = sep_set(pi);
    ++checks;
    if (sep.size() != ideal.size())
      return to_string(cls) + ": separating set misses " +
             std::to_string(ideal.size() - sep.size()) + " ideal elements";
    if (!is_toggle_connected(pi)) return to_string(cls) + ": toggle graph disconnected";
    return std::nullopt;
  }
  if (kind == "toggle-witness") {
    Positroid M(pi);
    for (const AffinePerm& i : lower_ideal(f)) {
      Perm iota = reduce(i);
      Necklace N = grassmannlike(pi.inverse().compose(iota), iota);
      if (!is_ws_collection(N.subsets())) continue;
      if (lift(N.underlying()).length() != f.length()) continue;
      for (int a = 1; a <= pi.n(); ++a) {
        if (classify_toggle(N, a) != ToggleClass::aligned) continue;
        Necklace N2 = toggle(N, a);
        if (!is_ws_collection(N2.subsets())) continue;
        if (lift(N2.underlying()).length() != f.length()) continue;
        try {
          toggle_quasi_witness(N, a, M);
          ++checks;
        } catch (const std::exception& e) {
          return "witness failed at iota=" + iota.to_string() + " a=" + std::to_string(a) +
                 ": " + e.what();
        }
      }
    }
    return std::nullopt;
  }
  throw DomainError("unknown sweep kind: " + kind);
}

/// Runs a sweep over every permutation of every size up to n_max. Failures
/// carry witnesses; instances are reported in lexicographic order.
inline SweepReport sweep(const std::string& kind, int n_max, int jobs = 1) {
  SweepReport rep;
  rep.kind = kind;
  rep.n_max = n_max;
  std::vector<Perm> perms;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do perms.push_back(Perm(img));
    while (std::next_permutation(img.begin(), img.end()));
  }
  std::vector<SweepInstance> slots(perms.size());
  std::vector<long long> counts(perms.size(), 0);
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      size_t idx = cursor.fetch_add(1);
      if (idx >= perms.size()) return;
      const Perm& pi = perms[idx];
      SweepInstance inst;
      auto [k, n] = type_of(pi);
      inst.n = n;
      inst.k = k;
      inst.pi = pi.to_string();
      auto witness = sweep_one(kind, pi, counts[idx]);
      inst.status = witness ? "fail" : "pass";
      if (witness) inst.witness = *witness;
      slots[idx] = std::move(inst);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (size_t idx = 0; idx < perms.size(); ++idx) {
    rep.checks += counts[idx];
    rep.all_pass = rep.all_pass && slots[idx].status == "pass";
    rep.instances.push_back(std::move(slots[idx]));
  }
  return rep;
}

}  // namespace plab
