#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "positroidlab/perm.hpp"

using namespace plab;

namespace {

// Independent inversion counter with a deliberately oversized horizon.
long long brute_length(const AffinePerm& f) {
  long long lo = f(1), hi = f(1);
  for (int a = 1; a <= f.n(); ++a) {
    lo = std::min(lo, f(a));
    hi = std::max(hi, f(a));
  }
  long long horizon = 3 * ((hi - lo) + f.n());
  long long c = 0;
  for (int i = 1; i <= f.n(); ++i)
    for (long long j = i + 1; j <= i + horizon; ++j)
      if (f(i) > f(j)) ++c;
  return c;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do out.push_back(Perm(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation type counts anti-excedences") {
  CHECK(type_of(Perm::from_string("465213")) == PermType{3, 6});
  CHECK(type_of(Perm::identity(5)) == PermType{5, 5});
  CHECK(type_of(Perm::from_string("651324")) == PermType{4, 6});
  CHECK(type_of(Perm::eps(3, 6)) == PermType{3, 6});
}

TEST_CASE("lift and reduce") {
  AffinePerm f = lift(Perm::from_string("465213"));
  CHECK(f.window() == std::vector<long long>{4, 6, 5, 8, 7, 9});
  CHECK(lift(Perm::from_string("564123")).window() == std::vector<long long>{5, 6, 4, 7, 8, 9});
  CHECK(lift(Perm::eps(3, 6)) == AffinePerm::shift(3, 6));
  CHECK(reduce(f) == Perm::from_string("465213"));
  CHECK(reduce(AffinePerm::shift(3, 6)) == Perm::from_string("456123"));
  CHECK(reduce(AffinePerm(6, {5, 6, 4, 7, 8, 9})) == Perm::from_string("564123"));
  CHECK_THROWS_AS(lift(Perm::identity(3), true), DomainError);

  for (int n = 1; n <= 7; ++n)
    for (const Perm& p : all_perms(n)) {
      AffinePerm g = lift(p);
      CHECK(g.bounded());
      CHECK(g.av() == type_of(p).k);
      CHECK(reduce(g) == p);
    }
}

TEST_CASE("affine length") {
  CHECK(AffinePerm(6, {4, 6, 5, 8, 7, 9}).length() == 2);
  CHECK(AffinePerm(6, {5, 6, 4, 7, 8, 9}).length() == 2);
  CHECK(AffinePerm::shift(2, 5).length() == 0);
  for (const Perm& p : all_perms(5)) {
    AffinePerm f = lift(p);
    CHECK(f.length() == brute_length(f));
    CHECK(f.length() == f.inverse().length());
  }
}

TEST_CASE("associated reflections") {
  AffinePerm f(6, {4, 6, 5, 8, 7, 9});
  auto right = associated_reflections(f, Side::right);
  CHECK(right == std::set<Transposition>{{2, 3}, {4, 5}});
  CHECK(associated_reflections(AffinePerm::shift(2, 6), Side::right).empty());
  CHECK(associated_reflections(AffinePerm::shift(2, 6), Side::left).empty());
  for (const Perm& p : all_perms(5)) {
    AffinePerm g = lift(p);
    CHECK((long long)associated_reflections(g, Side::right).size() == g.length());
    CHECK((long long)associated_reflections(g, Side::left).size() == g.length());
  }
}

TEST_CASE("length additivity agrees with reflection disjointness") {
  auto reflections_disjoint = [](const AffinePerm& u, const AffinePerm& v) {
    auto a = associated_reflections(u, Side::right);
    auto b = associated_reflections(v, Side::left);
    std::vector<Transposition> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    return inter.empty();
  };

  AffinePerm f = lift(Perm::from_string("465213"));
  AffinePerm i = lift(Perm::from_string("456213"));
  CHECK(is_length_additive(AffinePerm::shift(3, 6), f));
  CHECK(is_length_additive(i, i.inverse().compose(f)));
  CHECK_FALSE(is_length_additive(f, f.inverse()));

  for (const Perm& p : all_perms(4))
    for (const Perm& q : all_perms(4)) {
      AffinePerm u = lift(p), v = lift(q);
      CHECK(is_length_additive(u, v) == reflections_disjoint(u, v));
    }
}

TEST_CASE("right weak order") {
  AffinePerm f = lift(Perm::from_string("465213"));
  CHECK(leq_R(AffinePerm::shift(3, 6), f));
  CHECK(leq_R(lift(Perm::from_string("456213")), f));
  CHECK(leq_R(f, f));
  CHECK_THROWS_AS(leq_R(AffinePerm::shift(2, 6), f), DomainError);

  CHECK(leq_circ(Perm::eps(3, 6), Perm::from_string("465213")));
  CHECK(leq_circ(Perm::from_string("465213"), Perm::from_string("465213")));
  CHECK(leq_circ(Perm::from_string("456213"), Perm::from_string("465213")));
  CHECK_THROWS_AS(leq_circ(Perm::from_string("651324"), Perm::from_string("465213")),
                  DomainError);
}

TEST_CASE("right weak order is a partial order on each bounded class") {
  for (int n = 4; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<AffinePerm> cls;
      for (const Perm& p : all_perms_of_type(k, n)) cls.push_back(lift(p));
      int m = int(cls.size());
      std::vector<std::vector<char>> le(m, std::vector<char>(m, 0));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) le[i][j] = leq_R(cls[i], cls[j]);
      for (int i = 0; i < m; ++i) CHECK(le[i][i]);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (i != j && le[i][j]) CHECK_FALSE(le[j][i]);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (!le[i][j]) continue;
          for (int l = 0; l < m; ++l)
            if (le[j][l]) CHECK(le[i][l]);
        }
    }
  }
}

TEST_CASE("lower ideals") {
  AffinePerm f(6, {4, 6, 5, 8, 7, 9});
  auto ideal = lower_ideal(f);
  std::set<AffinePerm> expect{f, AffinePerm(6, {4, 5, 6, 8, 7, 9}),
                              AffinePerm(6, {4, 6, 5, 7, 8, 9}), AffinePerm::shift(3, 6)};
  CHECK(std::set<AffinePerm>(ideal.begin(), ideal.end()) == expect);

  CHECK(lower_ideal(AffinePerm::shift(2, 5)) ==
        std::vector<AffinePerm>{AffinePerm::shift(2, 5)});

  CHECK(lower_ideal(lift(Perm::from_string("5761432"))).size() == 12);

  // BFS closure agrees with the defining filter, and stays bounded.
  for (int n = 4; n <= 6; ++n)
    for (const Perm& p : all_perms(n)) {
      AffinePerm g = lift(p);
      auto ideal_g = lower_ideal(g);
      for (const AffinePerm& u : ideal_g) CHECK(u.bounded());
      std::set<AffinePerm> filter;
      for (const Perm& q : all_perms_of_type(type_of(p).k, n)) {
        AffinePerm u = lift(q);
        if (leq_R(u, g)) filter.insert(u);
      }
      CHECK(std::set<AffinePerm>(ideal_g.begin(), ideal_g.end()) == filter);
    }
}

TEST_CASE("conjugation by the shift preserves length") {
  for (int n = 4; n <= 6; ++n)
    for (const Perm& p : all_perms(n)) {
      AffinePerm f = lift(p);
      AffinePerm e = AffinePerm::shift(type_of(p).k, n);
      CHECK(e.inverse().compose(f).compose(e).length() == f.length());
    }
}

TEST_CASE("permutation string forms") {
  CHECK(Perm::from_string("4 6 5 2 1 3") == Perm::from_string("465213"));
  CHECK(Perm::from_string("465213").to_string() == "465213");
  CHECK_THROWS_AS(Perm::from_string("460213"), DomainError);
  CHECK_THROWS_AS(Perm::from_string("441213"), DomainError);
}
