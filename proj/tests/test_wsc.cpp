#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "doctest.h"
#include "fig_graphs.hpp"
#include "positroidlab/wsc.hpp"

using namespace plab;

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do out.push_back(Perm(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

const Perm kPi = Perm::from_string("465213");

WSCollection target_collection(const PlabicGraph& G) {
  FaceLabeling fl = face_labels(G);
  return WSCollection(G.n, fl.boundary_necklace.k(), fl.target);
}

}  // namespace

TEST_CASE("weak separation of pairs") {
  CHECK_FALSE(weakly_separated(KSubset::from_string("2456", 7), KSubset::from_string("1347", 7)));
  KSubset I = KSubset::from_string("246", 6);
  CHECK(weakly_separated(I, I));
  CHECK(weakly_separated(KSubset::from_string("123", 6), KSubset::from_string("345", 6)));
  CHECK_FALSE(weakly_separated(KSubset::from_string("135", 6), KSubset::from_string("246", 6)));
  for (const KSubset& A : all_ksubsets(6, 3))
    for (const KSubset& B : all_ksubsets(6, 3))
      CHECK(weakly_separated(A, B) == weakly_separated(B, A));
  CHECK_THROWS_AS(weakly_separated(KSubset::from_string("12", 6), KSubset::from_string("123", 6)),
                  DomainError);
}

TEST_CASE("collection check with witness") {
  CHECK(is_ws_collection(forward_necklace(Perm::from_string("5761432")).subsets()));
  CHECK(is_ws_collection({KSubset::from_string("135", 6)}));

  // A unit necklace that is not weakly separated.
  Necklace E = grassmannlike(Perm::from_string("1324657"), Perm::from_string("5671342"));
  CHECK(E.at(3) == KSubset::from_string("2456", 7));
  CHECK(E.at(6) == KSubset::from_string("1357", 7));
  CHECK(E.at(7) == KSubset::from_string("1347", 7));
  auto bad = ws_violation(E.subsets());
  REQUIRE(bad.has_value());
  CHECK_FALSE(weakly_separated(bad->first, bad->second));
  CHECK_FALSE(weakly_separated(KSubset::from_string("2456", 7), KSubset::from_string("1347", 7)));
}

TEST_CASE("completion to maximal collections") {
  Positroid M(kPi);
  WSCollection C(6, 3, forward_necklace(kPi).subsets());
  WSCollection full = complete_to_maximal(C, M);
  CHECK(full.size() == 8);
  for (const KSubset& s : C.subsets()) CHECK(full.contains(s));
  for (const KSubset& s : full.subsets()) CHECK(M.contains(s));
  for (const KSubset& cand : M.bases()) {
    if (full.contains(cand)) continue;
    bool addable = true;
    for (const KSubset& s : full.subsets()) addable = addable && weakly_separated(cand, s);
    CHECK_FALSE(addable);
  }
  CHECK(complete_to_maximal(full, M) == full);

  Positroid top(Perm::eps(3, 6));
  WSCollection Ct(6, 3, forward_necklace(Perm::eps(3, 6)).subsets());
  CHECK(complete_to_maximal(Ct, top).size() == 10);

  Positroid small(Perm::from_string("564123"));
  CHECK_THROWS_AS(complete_to_maximal(C, small), DomainError);
}

TEST_CASE("available square moves on a target collection") {
  WSCollection C = target_collection(figs::fig_left());
  auto moves = square_moves_available(C);
  REQUIRE(moves.size() == 2);
  CHECK(moves[0].from == KSubset::from_string("236", 6));
  CHECK(moves[0].to == KSubset::from_string("124", 6));
  CHECK(moves[1].from == KSubset::from_string("246", 6));
  CHECK(moves[1].to == KSubset::from_string("356", 6));

  WSCollection C2 = apply_square_move(C, moves[0]);
  auto back = square_moves_available(C2);
  bool restored = false;
  for (const SquareMove& mv : back)
    if (mv.from == moves[0].to && mv.to == moves[0].from)
      restored = apply_square_move(C2, mv) == C;
  CHECK(restored);

  WSCollection tiny(6, 3,
                    {KSubset::from_string("123", 6), KSubset::from_string("234", 6),
                     KSubset::from_string("345", 6)});
  CHECK(square_moves_available(tiny).empty());
}

TEST_CASE("maximal collections over a positroid are square-move connected") {
  for (int n = 4; n <= 5; ++n)
    for (const Perm& pi : all_perms(n)) {
      Positroid M(pi);
      WSCollection base(n, M.k(), forward_necklace(pi).subsets());
      WSCollection first = complete_to_maximal(base, M);
      std::set<std::vector<KSubset>> seen{first.subsets()};
      std::queue<WSCollection> q;
      q.push(first);
      while (!q.empty()) {
        WSCollection cur = q.front();
        q.pop();
        for (const SquareMove& mv : square_moves_available(cur)) {
          if (!M.contains(mv.to)) continue;
          bool frozen = false;
          for (const KSubset& s : base.subsets()) frozen = frozen || s == mv.from;
          if (frozen) continue;
          WSCollection nxt = apply_square_move(cur, mv);
          if (seen.insert(nxt.subsets()).second) q.push(nxt);
        }
      }
      // Every maximal collection between the necklace and the positroid shows up.
      std::function<void(WSCollection)> extend = [&](WSCollection cur) {
        bool maximal = true;
        for (const KSubset& cand : M.bases()) {
          if (cur.contains(cand)) continue;
          bool ok = true;
          for (const KSubset& s : cur.subsets()) ok = ok && weakly_separated(cand, s);
          if (!ok) continue;
          maximal = false;
          std::vector<KSubset> subs = cur.subsets();
          subs.push_back(cand);
          extend(WSCollection(n, M.k(), std::move(subs)));
        }
        if (maximal) CHECK(seen.count(cur.subsets()));
      };
      extend(base);
    }
}

TEST_CASE("tilings") {
  WSCollection pairc(6, 3, {KSubset::from_string("123", 6), KSubset::from_string("234", 6)});
  PlabicTiling Tp = tiling(pairc);
  CHECK(Tp.vertices.size() == 2);
  CHECK(Tp.faces.empty());
  CHECK(Tp.edges.empty());

  WSCollection sq(4, 2,
                  {KSubset::from_string("12", 4), KSubset::from_string("23", 4),
                   KSubset::from_string("34", 4), KSubset::from_string("14", 4),
                   KSubset::from_string("13", 4)});
  PlabicTiling T = tiling(sq);
  CHECK(T.vertices.size() == 5);
  CHECK(T.faces.size() == 4);
  CHECK(T.edges.size() == 8);
  int white = 0, black = 0;
  for (const TilingFace& f : T.faces) (f.white ? white : black)++;
  CHECK(white == 2);
  CHECK(black == 2);

  WSCollection empty(6, 3, {});
  PlabicTiling Te = tiling(empty);
  CHECK(Te.vertices.empty());
  CHECK(Te.faces.empty());
}

TEST_CASE("necklace curves are clean for weak-order necklaces") {
  for (int n = 4; n <= 6; ++n)
    for (const Perm& pi : all_perms(n)) {
      for (const AffinePerm& i : lower_ideal(lift(pi))) {
        Perm iota = reduce(i);
        Necklace N = grassmannlike(pi.inverse().compose(iota), iota);
        if (!is_ws_collection(N.subsets())) continue;
        CHECK(necklace_curve_report(N).clean());
      }
    }
}

TEST_CASE("necklace interiors") {
  Necklace fwd = forward_necklace(kPi);
  std::vector<KSubset> din = necklace_interior(fwd);
  std::set<KSubset> dset(din.begin(), din.end());
  CHECK(dset.count(KSubset::from_string("236", 6)));
  CHECK(dset.count(KSubset::from_string("246", 6)));
  for (const KSubset& I : fwd.subsets()) CHECK(dset.count(I));

  // For a forward necklace the interior is exactly the set of bases weakly
  // separated from it.
  for (int n = 4; n <= 5; ++n)
    for (const Perm& pi : all_perms(n)) {
      Positroid M(pi);
      Necklace N = forward_necklace(pi);
      auto inside = necklace_interior(N);
      std::set<KSubset> in_set(inside.begin(), inside.end());
      std::set<KSubset> expect;
      for (const KSubset& J : M.bases()) {
        bool sep = true;
        for (const KSubset& I : N.subsets()) sep = sep && weakly_separated(I, J);
        if (sep) expect.insert(J);
      }
      CHECK(in_set == expect);
    }

  Necklace n2 = grassmannlike(Perm::from_string("123546"), Perm::from_string("465123"));
  auto din2 = necklace_interior(n2);
  std::set<KSubset> d2(din2.begin(), din2.end());
  CHECK(d2.count(KSubset::from_string("124", 6)));
  CHECK(d2.count(KSubset::from_string("246", 6)));
  Positroid M(kPi);
  for (const KSubset& J : din2) CHECK(M.contains(J));

  Necklace bad = grassmannlike(Perm::from_string("1324657"), Perm::from_string("5671342"));
  CHECK_THROWS_AS(necklace_interior(bad), DomainError);
}

TEST_CASE("face labels are maximal collections between necklace and interior") {
  for (int n = 4; n <= 5; ++n)
    for (const Perm& pi : all_perms(n)) {
      for (const AffinePerm& i : lower_ideal(lift(pi))) {
        Perm iota = reduce(i);
        Perm rho = pi.inverse().compose(iota);
        if (lift(iota.inverse().compose(pi).compose(iota)).length() != lift(pi).length())
          continue;  // seed-size condition fails; labels are not weakly separated
        PlabicGraph G = relabel(generate_graph(rho.inverse().compose(pi).compose(rho)), rho);
        FaceLabeling fl = face_labels(G);
        Necklace N = fl.boundary_necklace;
        CHECK(is_ws_collection(fl.target));
        std::set<KSubset> din;
        for (const KSubset& J : necklace_interior(N)) din.insert(J);
        std::set<KSubset> labels(fl.target.begin(), fl.target.end());
        for (const KSubset& I : labels) CHECK(din.count(I));
        for (const KSubset& J : din) {
          if (labels.count(J)) continue;
          bool addable = true;
          for (const KSubset& I : labels) addable = addable && weakly_separated(I, J);
          CHECK_FALSE(addable);
        }
      }
    }
}

TEST_CASE("weakly separated boundary forces weakly separated target collection") {
  for (int n = 4; n <= 6; ++n)
    for (const Perm& pi : all_perms(n)) {
      for (const AffinePerm& i : lower_ideal(lift(pi))) {
        Perm iota = reduce(i);
        Perm rho = pi.inverse().compose(iota);
        Necklace N = grassmannlike(rho, iota);
        if (!is_ws_collection(N.subsets())) continue;
        PlabicGraph G = relabel(generate_graph(N.underlying()), rho);
        FaceLabeling fl = face_labels(G);
        CHECK(fl.boundary_necklace == N);
        CHECK(is_ws_collection(fl.target));
      }
    }
}

TEST_CASE("weakly separated derangement necklaces: noncrossing toggles align") {
  for (int n = 4; n <= 6; ++n)
    for (const Perm& pi : all_perms(n)) {
      if (!pi.is_derangement()) continue;
      for (const AffinePerm& i : lower_ideal(lift(pi))) {
        Perm iota = reduce(i);
        Necklace N = grassmannlike(pi.inverse().compose(iota), iota);
        if (!is_ws_collection(N.subsets())) continue;
        for (int a = 1; a <= n; ++a) {
          ToggleClass c = classify_toggle(N, a);
          CHECK(c != ToggleClass::noncrossing_nonaligned);
        }
      }
    }
}
