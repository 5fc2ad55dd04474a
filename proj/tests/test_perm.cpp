#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "poscat/perm.hpp"

using namespace poscat;

TEST_CASE("length and reduced words") {
  CHECK(Perm::identity(4).length() == 0);
  CHECK(Perm({2, 1, 3}).length() == 1);
  CHECK(Perm({4, 3, 2, 1}).length() == 6);

  CHECK(Perm::identity(3).reduced_word().empty());
  CHECK(Perm({1, 3, 2, 4}).reduced_word() == std::vector<int>{2});

  Perm w({3, 4, 1, 2});
  std::vector<int> word = w.reduced_word();
  CHECK(static_cast<int>(word.size()) == w.length());
  CHECK(word_product(4, word) == w);

  // every reduced word of every element of S_4 multiplies back
  for (const Perm& u : all_perms(4)) {
    std::vector<int> uw = u.reduced_word();
    CHECK(static_cast<int>(uw.size()) == u.length());
    CHECK(word_product(4, uw) == u);
  }
}

TEST_CASE("bruhat order") {
  Perm id3 = Perm::identity(3);
  Perm s1 = Perm::transposition(3, 1), s2 = Perm::transposition(3, 2);
  for (const Perm& w : all_perms(3)) CHECK(bruhat_leq(id3, w));
  CHECK_FALSE(bruhat_leq(s1, s2));
  CHECK(bruhat_leq(s2, Perm({3, 2, 1})));  // s2 <= s1 s2 s1
  CHECK_THROWS_AS(bruhat_leq(id3, Perm::identity(4)), std::invalid_argument);
}

TEST_CASE("grassmannian predicate") {
  CHECK(Perm({3, 4, 1, 2}).is_k_grassmannian(2));
  for (int k = 0; k <= 4; ++k) CHECK(Perm::identity(4).is_k_grassmannian(k));
  CHECK_FALSE(Perm({2, 1, 3}).is_k_grassmannian(2));
  CHECK(max_grassmannian(2, 4) == Perm({3, 4, 1, 2}));
}

TEST_CASE("pair_to_f") {
  CHECK(pair_to_f(Perm::identity(4), Perm({3, 4, 1, 2}), 2) ==
        BoundedAffinePerm(2, 4, {3, 4, 5, 6}));
  // the explicit 14-strand triple
  Perm v({2, 1, 8, 4, 6, 3, 11, 9, 10, 5, 7, 13, 14, 12});
  Perm w({8, 9, 10, 1, 11, 12, 2, 3, 13, 4, 14, 5, 6, 7});
  BoundedAffinePerm f =
      BoundedAffinePerm(7, 14, {3, 8, 9, 16, 7, 14, 15, 20, 12, 18, 13, 24, 19, 25});
  CHECK(pair_to_f(v, w, 7) == f);
  auto [v2, w2] = f_to_pair(f);
  CHECK(v2 == v);
  CHECK(w2 == w);
  CHECK(f.reduction().cycle_count() == 1);

  Perm s1 = Perm::transposition(2, 1);
  CHECK(pair_to_f(s1, s1, 1) == BoundedAffinePerm(1, 2, {1, 4}));
  auto [v3, w3] = f_to_pair(BoundedAffinePerm(1, 2, {1, 4}));
  CHECK(v3 == s1);
  CHECK(w3 == s1);

  CHECK_THROWS_AS(pair_to_f(Perm({2, 1, 3}), Perm::identity(3), 1),
                  std::invalid_argument);
}

TEST_CASE("bounded affine invariants and parsing") {
  CHECK_THROWS_AS(BoundedAffinePerm(1, 2, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(BoundedAffinePerm(1, 2, {4, 1}), std::invalid_argument);
  BoundedAffinePerm f = BoundedAffinePerm::parse("3,4,5,6");
  CHECK(f.k() == 2);
  CHECK(f(0) == 2);  // periodic extension
  CHECK(f(5) == 7);
  CHECK_THROWS_AS(BoundedAffinePerm::parse("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("1,2,foo"), std::invalid_argument);
}

TEST_CASE("enumeration of B_{k,n}") {
  CHECK(enumerate_bounded_affine(1, 2).size() == 3);
  CHECK(enumerate_bounded_affine(0, 3).size() == 1);
  CHECK(enumerate_bounded_affine(2, 4).size() == 33);
  // cardinality equals the number of positroid pairs, and the bijection
  // round-trips
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      auto fs = enumerate_bounded_affine(k, n);
      long pairs = 0;
      for (const Perm& w : grassmannian_perms(k, n))
        for (const Perm& v : all_perms(n))
          if (bruhat_leq(v, w)) ++pairs;
      CHECK(static_cast<long>(fs.size()) == pairs);
      for (const auto& f : fs) {
        auto [v, w] = f_to_pair(f);
        CHECK(pair_to_f(v, w, k) == f);
        CHECK(w.length() >= v.length());
        // cycles of the reduction match both conjugates
        CHECK(f.reduction().cycle_count() == (v.inverse() * w).cycle_count());
        CHECK(f.reduction().cycle_count() == (w * v.inverse()).cycle_count());
      }
    }
}

TEST_CASE("top cell") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      BoundedAffinePerm f = top_cell_f(k, n);
      auto [v, w] = f_to_pair(f);
      CHECK(v.is_identity());
      CHECK(w == max_grassmannian(k, n));
      CHECK(w.length() == k * (n - k));
    }
}
