#pragma once

// Shared hexagon-core test graphs realizing trip permutation 465213 with
// three different boundary labelings. Vertices 0..5 are boundary positions
// 1..6; 6..11 are the interior hexagon v1..v6 with a chord.

#include "positroidlab/plabic.hpp"

namespace figs {

inline plab::PlabicGraph hexagon_core(const std::vector<plab::VColor>& inner,
                                      const plab::Perm& rho,
                                      const std::vector<std::array<int, 2>>& pendant_edges,
                                      const std::vector<std::vector<int>>& inner_rot) {
  plab::PlabicGraph G;
  G.n = 6;
  G.rho = rho;
  G.color.assign(6, plab::VColor::boundary);
  for (plab::VColor c : inner) G.color.push_back(c);
  G.edges = {{6, 7}, {7, 8}, {8, 9}, {9, 6}, {7, 10}, {10, 11}, {11, 8}};
  for (auto pe : pendant_edges) G.edges.push_back(pe);
  G.rot.assign(6, {});
  for (int e = 7; e < int(G.edges.size()); ++e) {
    int b = G.edges[e][1] < 6 ? G.edges[e][1] : G.edges[e][0];
    G.rot[b] = {e};
  }
  for (const auto& r : inner_rot) G.rot.push_back(r);
  plab::validate(G);
  return G;
}

/// Plain graph: trip permutation 465213, interior labels {236, 246}.
inline plab::PlabicGraph fig_left() {
  using plab::VColor;
  return hexagon_core(
      {VColor::white, VColor::black, VColor::white, VColor::black, VColor::white,
       VColor::black},
      plab::Perm::identity(6), {{7, 1}, {6, 0}, {9, 5}, {8, 4}, {11, 3}, {10, 2}},
      {{0, 8, 3}, {4, 7, 0, 1}, {6, 1, 2, 10}, {2, 3, 9}, {12, 4, 5}, {5, 6, 11}});
}

/// Relabeled by 132456; boundary necklace gains 245, interior {236, 246}.
inline plab::PlabicGraph fig_top_center() {
  using plab::VColor;
  return hexagon_core(
      {VColor::white, VColor::black, VColor::white, VColor::black, VColor::white,
       VColor::black},
      plab::Perm::from_string("132456"),
      {{6, 0}, {9, 5}, {8, 4}, {11, 3}, {10, 1}, {11, 2}},
      {{0, 7, 3}, {4, 0, 1}, {6, 1, 2, 9}, {2, 3, 8}, {11, 4, 5}, {12, 5, 6, 10}});
}

/// Color-swapped copy of the plain embedding relabeled by 132546: its
/// boundary necklace has insertion the shift by k, so its target seed is the
/// source structure. Interior labels {124, 246}.
inline plab::PlabicGraph fig_right() {
  using plab::VColor;
  return hexagon_core(
      {VColor::black, VColor::white, VColor::black, VColor::white, VColor::black,
       VColor::white},
      plab::Perm::from_string("132546"),
      {{7, 1}, {6, 0}, {9, 5}, {8, 4}, {11, 3}, {10, 2}},
      {{0, 8, 3}, {4, 7, 0, 1}, {6, 1, 2, 10}, {2, 3, 9}, {12, 4, 5}, {5, 6, 11}});
}

/// Color-swapped, relabeled by 123546; boundary gains 146, interior {124, 246}.
inline plab::PlabicGraph fig_bottom_center() {
  using plab::VColor;
  return hexagon_core(
      {VColor::black, VColor::white, VColor::black, VColor::white, VColor::black,
       VColor::white},
      plab::Perm::from_string("123546"),
      {{6, 0}, {9, 5}, {8, 4}, {11, 3}, {10, 1}, {11, 2}},
      {{0, 7, 3}, {4, 0, 1}, {6, 1, 2, 9}, {2, 3, 8}, {11, 4, 5}, {12, 5, 6, 10}});
}

}  // namespace figs
