#pragma once

#include <array>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "positroidlab/positroid.hpp"

namespace plab {

enum class VColor { boundary, white, black };

/// Planar bicolored graph in a disk, encoded by a rotation system.
/// Vertices 0..n-1 are the boundary vertices at positions 1..n in clockwise
/// order; position i carries the label rho(i). Each rotation list holds the
/// incident edge ids in counterclockwise order.
struct PlabicGraph {
  int n = 0;
  Perm rho;                                // boundary relabeling (identity if plain)
  std::vector<VColor> color;               // per vertex id
  std::vector<std::array<int, 2>> edges;   // endpoint vertex ids
  std::vector<std::vector<int>> rot;       // per vertex: incident edge ids, CCW

  int num_vertices() const { return int(color.size()); }

  int other_end(int e, int v) const {
    return edges[e][0] == v ? edges[e][1] : edges[e][0];
  }

  int degree(int v) const { return int(rot[v].size()); }

  /// Edge id of the unique pendant edge at boundary position p.
  int pendant(int p) const { return rot[p - 1][0]; }
};

namespace detail {

// Directed-edge indexing over real edges followed by n virtual boundary arcs.
// Arc p joins boundary positions p and p+1; its "+" direction is p -> p+1.
struct DirIndex {
  int real_edges, n;
  int num() const { return 2 * (real_edges + n); }
  int fwd(int e) const { return 2 * e; }
  int rev(int e) const { return 2 * e + 1; }
  int arc_plus(int p) const { return 2 * (real_edges + p - 1); }
  int arc_minus(int p) const { return 2 * (real_edges + p - 1) + 1; }
  bool is_arc(int d) const { return d >= 2 * real_edges; }
  int edge(int d) const { return d / 2; }
  int flip(int d) const { return d ^ 1; }
};

}  // namespace detail

/// Face structure of the graph drawn in the disk (virtual arcs close the
/// boundary). Face ids exclude the outer region.
struct FaceData {
  detail::DirIndex dir;
  std::vector<int> face_of;          // directed edge -> face id (-1 for outer)
  std::vector<std::vector<int>> face_edges;  // per face: directed edges, in orbit order
  std::vector<int> boundary_face;    // index a-1 -> face id just before position a
  int num_faces = 0;

  bool is_boundary_face(int f) const {
    for (int a = 0; a < int(boundary_face.size()); ++a)
      if (boundary_face[a] == f) return true;
    return false;
  }
};

namespace detail {

inline int head_of(const PlabicGraph& G, const DirIndex& dir, int d) {
  if (dir.is_arc(d)) {
    int p = (d / 2) - dir.real_edges + 1;           // arc index 1..n
    int a = p - 1, b = p % G.n;                     // vertex ids of positions p, p+1
    return (d & 1) ? a : b;
  }
  int e = dir.edge(d);
  return (d & 1) ? G.edges[e][0] : G.edges[e][1];
}

inline int tail_of(const PlabicGraph& G, const DirIndex& dir, int d) {
  return head_of(G, dir, dir.flip(d));
}

// Augmented rotation at v: boundary vertices gain their two arcs,
// counterclockwise order [arc to previous, pendant, arc to next].
// Entries are directed edges pointing away from v.
inline std::vector<int> rot_away(const PlabicGraph& G, const DirIndex& dir, int v) {
  std::vector<int> out;
  if (G.color[v] == VColor::boundary) {
    int p = v + 1;
    int prev_arc = (p + G.n - 2) % G.n + 1;  // arc joining p-1 and p
    out.push_back(dir.arc_minus(prev_arc));  // toward position p-1
    int e = G.rot[v][0];
    out.push_back(G.edges[e][0] == v ? dir.fwd(e) : dir.rev(e));
    out.push_back(dir.arc_plus(p));          // toward position p+1
    return out;
  }
  for (int e : G.rot[v]) out.push_back(G.edges[e][0] == v ? dir.fwd(e) : dir.rev(e));
  return out;
}

// Next directed edge of the face lying to the left of d.
inline int face_next(const PlabicGraph& G, const DirIndex& dir, int d) {
  int v = head_of(G, dir, d);
  std::vector<int> away = rot_away(G, dir, v);
  int arrival = dir.flip(d);
  for (int i = 0; i < int(away.size()); ++i)
    if (away[i] == arrival)
      return away[(i + int(away.size()) - 1) % away.size()];
  throw DomainError("malformed rotation system: arrival edge missing at vertex " +
                    std::to_string(v));
}

}  // namespace detail

/// Structural validation; throws DomainError on malformed input.
inline void validate(const PlabicGraph& G) {
  int V = G.num_vertices();
  if (G.n <= 0 || V < G.n || G.rho.n() != G.n) throw DomainError("bad boundary data");
  if (int(G.rot.size()) != V) throw DomainError("rotation table size mismatch");
  std::vector<int> deg(V, 0);
  for (int e = 0; e < int(G.edges.size()); ++e) {
    auto [u, v] = G.edges[e];
    if (u < 0 || u >= V || v < 0 || v >= V || u == v) throw DomainError("bad edge endpoints");
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < V; ++v) {
    if (int(G.rot[v].size()) != deg[v]) throw DomainError("rotation list does not match degree");
    std::set<int> seen;
    for (int e : G.rot[v]) {
      if (e < 0 || e >= int(G.edges.size()) || (G.edges[e][0] != v && G.edges[e][1] != v))
        throw DomainError("rotation references a non-incident edge");
      if (!seen.insert(e).second) throw DomainError("duplicate edge in rotation");
    }
    if (v < G.n) {
      if (G.color[v] != VColor::boundary) throw DomainError("boundary vertex recolored");
      if (deg[v] != 1) throw DomainError("boundary vertex degree must be 1");
    } else {
      if (G.color[v] == VColor::boundary) throw DomainError("interior vertex marked boundary");
      if (deg[v] == 0) throw DomainError("isolated interior vertex");
      if (G.color[v] == VColor::black && deg[v] == 1 &&
          G.other_end(G.rot[v][0], v) < G.n)
        throw DomainError("black lollipop");
    }
  }
  // Reachability from the boundary through real edges.
  std::vector<char> seen(V, 0);
  std::queue<int> q;
  for (int p = 0; p < G.n; ++p) {
    seen[p] = 1;
    q.push(p);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : G.rot[v]) {
      int w = G.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  for (int v = 0; v < V; ++v)
    if (!seen[v]) throw DomainError("component not attached to the boundary");
}

/// Faces of the disk embedding. Also verifies the rotation system is planar
/// (Euler count) with the boundary circle as the outer face.
inline FaceData faces(const PlabicGraph& G) {
  validate(G);
  detail::DirIndex dir{int(G.edges.size()), G.n};
  FaceData fd{dir, std::vector<int>(dir.num(), -2), {}, std::vector<int>(G.n, -1), 0};
  int orbits = 0;
  for (int d0 = 0; d0 < dir.num(); ++d0) {
    if (fd.face_of[d0] != -2) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      orbit.push_back(d);
      fd.face_of[d] = orbits;
      d = detail::face_next(G, dir, d);
      if (int(orbit.size()) > dir.num()) throw DomainError("face tracing failed");
    } while (d != d0);
    fd.face_edges.push_back(std::move(orbit));
    ++orbits;
  }
  int V = G.num_vertices(), E_aug = int(G.edges.size()) + G.n;
  if (orbits != E_aug - V + 2)
    throw DomainError("rotation system is not a planar disk embedding");

  // The outer face consists of the arcs traversed in increasing direction.
  int outer = fd.face_of[dir.arc_plus(1)];
  for (int p = 1; p <= G.n; ++p)
    if (fd.face_of[dir.arc_plus(p)] != outer)
      throw DomainError("boundary circle does not bound the outer face");

  // Renumber with the outer face removed.
  std::vector<int> remap(orbits, -1);
  int next_id = 0;
  std::vector<std::vector<int>> kept;
  for (int f = 0; f < orbits; ++f) {
    if (f == outer) continue;
    remap[f] = next_id++;
    kept.push_back(std::move(fd.face_edges[f]));
  }
  fd.face_edges = std::move(kept);
  for (int& f : fd.face_of) f = (f == outer || f == -2) ? -1 : remap[f];
  fd.num_faces = next_id;
  for (int a = 1; a <= G.n; ++a) {
    int arc = (a + G.n - 2) % G.n + 1;  // joins positions a-1 and a
    fd.boundary_face[a - 1] = fd.face_of[dir.arc_minus(arc)];
  }
  return fd;
}

/// Trips and the faces to the left of each trip.
struct Trips {
  Perm trip;      // label space: trip rho(p) leads to trip(rho(p))
  Perm pos_trip;  // position space
  std::vector<std::vector<int>> walk;       // per position p-1: directed edges
  std::vector<std::vector<char>> left_of;   // per position p-1: face id -> on the left?
};

inline Trips trips(const PlabicGraph& G, const FaceData& fd) {
  const detail::DirIndex& dir = fd.dir;
  int n = G.n;
  std::vector<int> pos_img(n);
  Trips out;
  out.walk.resize(n);
  out.left_of.assign(n, std::vector<char>(fd.num_faces, 0));

  // Face adjacency across real edges, for the left-region flood.
  for (int p = 1; p <= n; ++p) {
    int e = G.pendant(p);
    int d = G.edges[e][0] == p - 1 ? dir.fwd(e) : dir.rev(e);
    std::vector<int>& walk = out.walk[p - 1];
    long long guard = 0;
    while (true) {
      walk.push_back(d);

      int v = detail::head_of(G, dir, d);
      if (G.color[v] == VColor::boundary) break;
      std::vector<int> away = detail::rot_away(G, dir, v);
      int arrival = dir.flip(d);
      int idx = -1;
      for (int i = 0; i < int(away.size()); ++i)
        if (away[i] == arrival) idx = i;
      int m = int(away.size());
      d = G.color[v] == VColor::white ? away[(idx + m - 1) % m] : away[(idx + 1) % m];
      if (++guard > 4LL * dir.num()) throw DomainError("trip does not reach the boundary");
    }
    pos_img[p - 1] = detail::head_of(G, dir, walk.back()) + 1;

    // Smooth away leaf turnarounds: a backtracked excursion lies on one side
    // of the essential curve and must not seed the flood.
    std::vector<int> reduced;
    for (int dd : walk) {
      if (!reduced.empty() && reduced.back() == dir.flip(dd)) reduced.pop_back();
      else reduced.push_back(dd);
    }

    std::vector<char>& left = out.left_of[p - 1];
    if (reduced.empty()) {
      // Round trip at a white lollipop: the whole disk counts as its left.
      left.assign(fd.num_faces, 1);
      continue;
    }
    std::set<int> blocked;
    for (int dd : reduced) blocked.insert(dir.edge(dd));
    std::queue<int> q;
    for (int dd : reduced) {
      int f = fd.face_of[dd];
      if (f >= 0 && !left[f]) {
        left[f] = 1;
        q.push(f);
      }
    }
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (int dd : fd.face_edges[f]) {
        if (dir.is_arc(dd)) continue;
        if (blocked.count(dir.edge(dd))) continue;
        int g = fd.face_of[dir.flip(dd)];
        if (g >= 0 && !left[g]) {
          left[g] = 1;
          q.push(g);
        }
      }
    }
  }
  out.pos_trip = Perm(std::move(pos_img));
  out.trip = G.rho.compose(out.pos_trip).compose(G.rho.inverse());
  return out;
}

inline Trips trips(const PlabicGraph& G) { return trips(G, faces(G)); }

enum class LabelMode { target, source };

struct FaceLabeling {
  FaceData fd;
  Trips tr;
  std::vector<KSubset> target;  // per face id, in label space
  std::vector<KSubset> source;
  Necklace boundary_necklace;   // target labels of boundary faces, positions 1..n

  const std::vector<KSubset>& labels(LabelMode m) const {
    return m == LabelMode::target ? target : source;
  }
};

/// Target and source face labels. Throws SizeMismatchError when label sizes
/// disagree (the relabeling does not preserve the type).
inline FaceLabeling face_labels(const PlabicGraph& G) {
  FaceData fd = faces(G);
  Trips tr = trips(G, fd);
  int n = G.n;
  std::vector<std::vector<int>> tgt(fd.num_faces), src(fd.num_faces);
  for (int p = 1; p <= n; ++p) {
    int src_label = G.rho(p);
    int tgt_label = G.rho(tr.pos_trip(p));
    for (int f = 0; f < fd.num_faces; ++f)
      if (tr.left_of[p - 1][f]) {
        tgt[f].push_back(tgt_label);
        src[f].push_back(src_label);
      }
  }
  std::vector<KSubset> target, source;
  int k_trip = type_of(tr.trip).k;
  for (int f = 0; f < fd.num_faces; ++f) {
    if (int(tgt[f].size()) != k_trip) throw SizeMismatchError(k_trip, int(tgt[f].size()));
    target.push_back(KSubset::of(n, tgt[f]));
    source.push_back(KSubset::of(n, src[f]));
  }
  std::vector<KSubset> boundary;
  for (int a = 1; a <= n; ++a) boundary.push_back(target[fd.boundary_face[a - 1]]);
  Perm iota = G.rho.compose(tr.pos_trip);  // insertion permutation of the boundary necklace
  Necklace neck(std::move(boundary), G.rho, iota);
  return FaceLabeling{std::move(fd), std::move(tr), std::move(target), std::move(source),
                      std::move(neck)};
}

/// Quiver on faces: boundary faces frozen, arrows across bicolored edges,
/// two-cycles canceled.
struct Quiver {
  int m = 0;
  std::vector<char> frozen;
  std::map<std::pair<int, int>, long long> arrows;  // net multiplicities, positive

  void add_arrow(int i, int j, long long mult = 1) {
    if (i == j || mult == 0) return;
    auto rit = arrows.find({j, i});
    if (rit != arrows.end()) {
      long long cancel = std::min(mult, rit->second);
      rit->second -= cancel;
      mult -= cancel;
      if (rit->second == 0) arrows.erase(rit);
    }
    if (mult > 0) arrows[{i, j}] += mult;
  }

  long long net(int i, int j) const {
    auto it = arrows.find({i, j});
    if (it != arrows.end()) return it->second;
    auto rit = arrows.find({j, i});
    return rit == arrows.end() ? 0 : -rit->second;
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.m == b.m && a.frozen == b.frozen && a.arrows == b.arrows;
  }
};

inline Quiver dual_quiver(const PlabicGraph& G, const FaceData& fd) {
  Quiver Q;
  Q.m = fd.num_faces;
  Q.frozen.assign(Q.m, 0);
  for (int f : fd.boundary_face) Q.frozen[f] = 1;
  const detail::DirIndex& dir = fd.dir;
  for (int e = 0; e < int(G.edges.size()); ++e) {
    auto [u, v] = G.edges[e];
    VColor cu = G.color[u], cv = G.color[v];
    if (cu == VColor::boundary || cv == VColor::boundary || cu == cv) continue;
    int white_to_black = (cu == VColor::white) ? dir.fwd(e) : dir.rev(e);
    int from = fd.face_of[dir.flip(white_to_black)];
    int to = fd.face_of[white_to_black];
    if (from >= 0 && to >= 0) Q.add_arrow(from, to);
  }
  return Q;
}

inline Quiver dual_quiver(const PlabicGraph& G) { return dual_quiver(G, faces(G)); }

/// Relabels the boundary: position p now shows sigma(old label).
inline PlabicGraph relabel(const PlabicGraph& G, const Perm& sigma) {
  PlabicGraph H = G;
  H.rho = sigma.compose(G.rho);
  return H;
}

/// Reduced plabic graph with the prescribed trip permutation, built by
/// peeling adjacent transpositions into boundary bridges over lollipops.
inline PlabicGraph generate_graph(const Perm& pi) {
  int n = pi.n();
  // Strip bridges: (i, j) cyclically adjacent among non-fixed positions with
  // the dimension dropping by one.
  std::vector<std::pair<int, int>> bridges;
  Perm cur = pi;
  while (!cur.is_identity()) {
    long long d = dimension(cur);
    std::optional<std::pair<int, int>> found;
    for (int i = 1; i <= n && !found; ++i) {
      if (cur(i) == i) continue;
      for (int j = 1; j <= n && !found; ++j) {
        if (j == i || cur(j) == j) continue;
        bool clear = true;
        for (int p = i % n + 1; p != j; p = p % n + 1)
          if (cur(p) != p) clear = false;
        if (!clear) continue;
        Perm next = cur.swap_positions(i, j);
        if (dimension(next) == d - 1) found = {i, j};
      }
    }
    if (!found) throw DomainError("no bridge reduction available");
    bridges.push_back(*found);
    cur = cur.swap_positions(found->first, found->second);
  }

  // Assemble from the innermost bridge out. A strand that never meets a
  // bridge is a white lollipop; a bridged strand ends at its deepest bridge
  // vertex (interior leaves would break the matching model downstream).
  PlabicGraph G;
  G.n = n;
  G.rho = Perm::identity(n);
  G.color.assign(n, VColor::boundary);
  G.rot.assign(n, {});
  struct Strand {
    std::vector<int> chain;  // vertex ids, innermost first
  };
  std::vector<Strand> strand(n + 1);
  std::vector<char> bridged(n + 1, 0);
  for (auto [i, j] : bridges) bridged[i] = bridged[j] = 1;
  for (int p = 1; p <= n; ++p) {
    if (bridged[p]) continue;
    int head = G.num_vertices();
    G.color.push_back(VColor::white);
    G.rot.push_back({});
    strand[p].chain = {head};
  }
  struct Bridge {
    int w, b, i, j;
  };
  std::vector<Bridge> built;
  for (int t = int(bridges.size()) - 1; t >= 0; --t) {
    auto [i, j] = bridges[t];
    int w = G.num_vertices();
    G.color.push_back(VColor::white);
    G.rot.push_back({});
    int b = G.num_vertices();
    G.color.push_back(VColor::black);
    G.rot.push_back({});
    strand[i].chain.push_back(w);
    strand[j].chain.push_back(b);
    built.push_back({w, b, i, j});
  }

  // Edges: along each strand, then the bridge links. Rotations follow the
  // local picture: on the clockwise-first strand the link leaves between the
  // outward and inward edges' counterclockwise gap.
  std::vector<int> up_edge(G.num_vertices(), -1), down_edge(G.num_vertices(), -1);
  for (int p = 1; p <= n; ++p) {
    const std::vector<int>& ch = strand[p].chain;
    int prev = p - 1;  // boundary vertex id
    for (int idx = int(ch.size()) - 1; idx >= 0; --idx) {
      int e = int(G.edges.size());
      G.edges.push_back({prev, ch[idx]});
      if (prev >= n) up_edge[prev] = e;
      else G.rot[prev].push_back(e);
      down_edge[ch[idx]] = e;
      prev = ch[idx];
    }
  }
  std::vector<int> link_edge(G.num_vertices(), -1);
  for (const Bridge& br : built) {
    int e = int(G.edges.size());
    G.edges.push_back({br.w, br.b});
    link_edge[br.w] = link_edge[br.b] = e;
  }
  for (const Bridge& br : built) {
    G.rot[br.w] = {link_edge[br.w], down_edge[br.w]};
    if (up_edge[br.w] >= 0) G.rot[br.w].push_back(up_edge[br.w]);
    G.rot[br.b] = {down_edge[br.b], link_edge[br.b]};
    if (up_edge[br.b] >= 0) G.rot[br.b].push_back(up_edge[br.b]);
  }
  for (int p = 1; p <= n; ++p) {
    if (bridged[p]) continue;
    int head = strand[p].chain[0];
    G.rot[head] = {down_edge[head]};
  }
  validate(G);
  return G;
}

namespace detail {

struct Crossing {
  int first_pos, second_pos;  // positions along the two trips (run starts)
};

}  // namespace detail

/// Reducedness: no round trips, no essential self-intersections, no pair of
/// trips crossing twice in the same order, and face count equal to the
/// dimension of the trip permutation.
inline bool is_reduced(const PlabicGraph& G) {
  FaceData fd = faces(G);
  Trips tr;
  try {
    tr = trips(G, fd);
  } catch (const DomainError&) {
    return false;  // walk never reached the boundary: round trip
  }
  const detail::DirIndex& dir = fd.dir;

  // Round trips: every directed real edge must lie on a boundary trip.
  std::set<int> covered;
  for (const auto& walk : tr.walk)
    for (int d : walk) covered.insert(d);
  if (int(covered.size()) != 2 * int(G.edges.size())) return false;

  // Self-intersections: a trip repeating an undirected edge, other than an
  // immediate turnaround at a leaf.
  for (const auto& walk : tr.walk) {
    std::map<int, std::vector<int>> occur;
    for (int i = 0; i < int(walk.size()); ++i) occur[dir.edge(walk[i])].push_back(i);
    for (const auto& [e, where] : occur) {
      if (where.size() == 1) continue;
      if (where.size() > 2) return false;
      bool leaf_turn = where[1] == where[0] + 1 &&
                       G.degree(detail::head_of(G, dir, walk[where[0]])) == 1;
      if (!leaf_turn) return false;
    }
  }

  // Double crossings in the same order. Shared runs are collapsed so a chain
  // of common edges counts as a single crossing.
  for (int p = 0; p < G.n; ++p)
    for (int q = p + 1; q < G.n; ++q) {
      const auto& wp = tr.walk[p];
      const auto& wq = tr.walk[q];
      std::map<int, int> pos_q;
      for (int i = 0; i < int(wq.size()); ++i) pos_q[dir.edge(wq[i])] = i;
      std::vector<std::pair<int, int>> shared;  // (pos in p, pos in q)
      for (int i = 0; i < int(wp.size()); ++i) {
        auto it = pos_q.find(dir.edge(wp[i]));
        if (it != pos_q.end()) shared.push_back({i, it->second});
      }
      std::vector<std::pair<int, int>> runs;
      for (auto [a, b] : shared) {
        if (!runs.empty() && a == runs.back().first + 1) {
          runs.back().first = a;  // extend the run; keep q-start
          continue;
        }
        runs.push_back({a, b});
      }
      // Trips traverse a shared edge oppositely, so q-positions reverse along
      // a run; compare run order in both trips.
      for (size_t r1 = 0; r1 < runs.size(); ++r1)
        for (size_t r2 = r1 + 1; r2 < runs.size(); ++r2)
          if ((runs[r1].first < runs[r2].first) == (runs[r1].second < runs[r2].second))
            return false;
    }

  Perm t = tr.trip;
  return fd.num_faces == dimension(t);
}

/// Contracts every edge whose endpoints are interior and share a color.
inline PlabicGraph contract_unicolored(const PlabicGraph& G) {
  PlabicGraph H = G;
  while (true) {
    int target = -1;
    for (int e = 0; e < int(H.edges.size()) && target < 0; ++e) {
      auto [u, v] = H.edges[e];
      if (u >= H.n && v >= H.n && H.color[u] == H.color[v]) target = e;
    }
    if (target < 0) break;
    auto [u, v] = H.edges[target];
    // Merge v into u: splice v's rotation into u's at the slot of the edge.
    std::vector<int> ru = H.rot[u], rv = H.rot[v];
    auto at = [&](const std::vector<int>& r, int e) {
      for (int i = 0; i < int(r.size()); ++i)
        if (r[i] == e) return i;
      throw DomainError("edge missing from rotation");
    };
    int iu = at(ru, target), iv = at(rv, target);
    std::vector<int> merged;
    for (int s = 1; s < int(ru.size()); ++s) merged.push_back(ru[(iu + s) % ru.size()]);
    for (int s = 1; s < int(rv.size()); ++s) merged.push_back(rv[(iv + s) % rv.size()]);
    if (std::set<int>(merged.begin(), merged.end()).size() != merged.size())
      throw DomainError("contraction would create a loop");
    H.rot[u] = merged;
    for (auto& ed : H.edges) {
      if (ed[0] == v) ed[0] = u;
      if (ed[1] == v) ed[1] = u;
    }
    // Drop vertex v and edge `target`, compacting ids.
    std::vector<int> vmap(H.num_vertices());
    int nv = 0;
    for (int w = 0; w < H.num_vertices(); ++w) vmap[w] = (w == v) ? -1 : nv++;
    std::vector<int> emap(H.edges.size());
    int ne = 0;
    for (int e = 0; e < int(H.edges.size()); ++e) emap[e] = (e == target) ? -1 : ne++;
    PlabicGraph K;
    K.n = H.n;
    K.rho = H.rho;
    for (int w = 0; w < H.num_vertices(); ++w) {
      if (w == v) continue;
      K.color.push_back(H.color[w]);
      std::vector<int> r;
      for (int e : H.rot[w])
        if (e != target) r.push_back(emap[e]);
      K.rot.push_back(std::move(r));
    }
    for (int e = 0; e < int(H.edges.size()); ++e) {
      if (e == target) continue;
      K.edges.push_back({vmap[H.edges[e][0]], vmap[H.edges[e][1]]});
    }
    H = std::move(K);
  }
  validate(H);
  return H;
}

/// Removes interior degree-2 vertices (they are invisible to trips), merging
/// their edges. Skipped when the merge would create a loop or a
/// boundary-to-boundary edge.
inline PlabicGraph dissolve_degree_two(const PlabicGraph& G0) {
  PlabicGraph H = G0;
  while (true) {
    int v = -1;
    for (int w = H.n; w < H.num_vertices() && v < 0; ++w) {
      if (H.degree(w) != 2) continue;
      int u = H.other_end(H.rot[w][0], w), x = H.other_end(H.rot[w][1], w);
      if (u == x) continue;
      if (u < H.n && x < H.n) continue;
      v = w;
    }
    if (v < 0) break;
    int e1 = H.rot[v][0], e2 = H.rot[v][1];
    int x = H.other_end(e2, v);
    // e1 becomes the merged edge (u, x); e2 and v disappear.
    auto& ed = H.edges[e1];
    if (ed[0] == v) ed[0] = x;
    else ed[1] = x;
    for (int& e : H.rot[x])
      if (e == e2) e = e1;
    std::vector<int> vmap(H.num_vertices());
    int nv = 0;
    for (int w = 0; w < H.num_vertices(); ++w) vmap[w] = (w == v) ? -1 : nv++;
    std::vector<int> emap(H.edges.size());
    int ne = 0;
    for (int e = 0; e < int(H.edges.size()); ++e) emap[e] = (e == e2) ? -1 : ne++;
    PlabicGraph K;
    K.n = H.n;
    K.rho = H.rho;
    for (int w = 0; w < H.num_vertices(); ++w) {
      if (w == v) continue;
      K.color.push_back(H.color[w]);
      std::vector<int> r;
      for (int e : H.rot[w]) r.push_back(emap[e]);
      K.rot.push_back(std::move(r));
    }
    for (int e = 0; e < int(H.edges.size()); ++e) {
      if (e == e2) continue;
      K.edges.push_back({vmap[H.edges[e][0]], vmap[H.edges[e][1]]});
    }
    H = std::move(K);
  }
  validate(H);
  return H;
}

/// Contract unicolored edges and dissolve degree-2 vertices until stable.
inline PlabicGraph normalize(const PlabicGraph& G0) {
  PlabicGraph H = G0;
  while (true) {
    PlabicGraph K = dissolve_degree_two(contract_unicolored(H));
    if (K.edges.size() == H.edges.size() && K.num_vertices() == H.num_vertices()) return K;
    H = std::move(K);
  }
}

/// Square move at the interior face whose target label is `label`. The graph
/// is first normalized; face corners of degree above three are split off into
/// trivalent copies.
inline PlabicGraph square_move(const PlabicGraph& G0, const KSubset& label) {
  PlabicGraph G = normalize(G0);
  FaceLabeling fl = face_labels(G);
  int face = -1;
  for (int f = 0; f < fl.fd.num_faces; ++f)
    if (fl.target[f] == label && !fl.fd.is_boundary_face(f)) face = f;
  if (face < 0) throw DomainError("no interior face with target label " + label.to_string());

  const detail::DirIndex& dir = fl.fd.dir;
  const std::vector<int>& boundary = fl.fd.face_edges[face];
  if (boundary.size() != 4) throw DomainError("face is not a quadrilateral");
  std::vector<int> corners;
  for (int d : boundary) corners.push_back(detail::head_of(G, dir, d));
  for (int c = 0; c < 4; ++c) {
    if (G.color[corners[c]] == VColor::boundary) throw DomainError("face touches the boundary");
    if (G.color[corners[c]] == G.color[corners[(c + 1) % 4]])
      throw DomainError("face corners do not alternate in color");
  }

  // Split any high-degree corner so the face sees a trivalent vertex.
  for (int c = 0; c < 4; ++c) {
    int v = corners[c];
    if (G.degree(v) == 3 || G.degree(v) == 2) continue;
    int e_in = dir.edge(boundary[c]);                 // arrives at v
    int e_out = dir.edge(boundary[(c + 1) % 4]);      // leaves v
    int vp = G.num_vertices();
    G.color.push_back(G.color[v]);
    int link = int(G.edges.size());
    G.edges.push_back({v, vp});
    // New vertex takes the two face edges plus the link; the face keeps its
    // corner between e_in and e_out.
    for (auto& e : {e_in, e_out}) {
      auto& ed = G.edges[e];
      if (ed[0] == v) ed[0] = vp;
      else ed[1] = vp;
    }
    std::vector<int> rv;
    for (int e : G.rot[v]) {
      if (e == e_in) rv.push_back(link);
      else if (e != e_out) rv.push_back(e);
    }
    G.rot[v] = rv;
    // The face keeps its corner between e_out and e_in (counterclockwise).
    G.rot.push_back({e_out, e_in, link});
    corners[c] = vp;
  }
  validate(G);

  // Identify the four corners again (ids moved only for split corners), then
  // swap their colors.
  for (int v : corners) G.color[v] = G.color[v] == VColor::white ? VColor::black : VColor::white;
  validate(G);
  return G;
}

}  // namespace plab
