#include <doctest.h>

#include "poscat/deogram.hpp"
#include "poscat/hecke.hpp"
#include "poscat/qtcatalan.hpp"

using namespace poscat;

TEST_CASE("grid words") {
  GridWord one = grid_word(1, 2, {1});
  CHECK(one.word == std::vector<int>{1});
  CHECK(one.product() == Perm::transposition(2, 1));

  GridWord full24 = grid_word(2, 4, {2, 2});
  CHECK(full24.word == std::vector<int>{2, 3, 1, 2});
  CHECK(full24.product() == Perm({3, 4, 1, 2}));

  GridWord full38 = grid_word(3, 8, {5, 5, 5});
  CHECK(full38.length() == 15);
  CHECK(full38.product().is_k_grassmannian(3));
  CHECK(full38.product().length() == 15);

  CHECK_THROWS_AS(grid_word(2, 4, {3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(grid_word(2, 4, {1, 2}), std::invalid_argument);

  // shapes and grid words are inverse on k-Grassmannian permutations
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Perm& w : grassmannian_perms(k, n))
        CHECK(grid_word(k, n, shape_of_grassmannian(w, k)).product() == w);
}

TEST_CASE("distinguished condition on pure fillings") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      std::vector<int> rect(k, n - k);
      GridWord g = grid_word(k, n, rect);
      std::vector<Box> all_x(g.length(), Box::crossing);
      std::vector<Box> all_o(g.length(), Box::elbow);
      CHECK(is_distinguished(g, all_x));
      CHECK(is_distinguished(g, all_o));
      CHECK(route_wires(g, all_x).distinguished);
      CHECK(route_wires(g, all_o).distinguished);
      CHECK(Deogram{g, all_x}.u() == g.product());
      CHECK(Deogram{g, all_o}.u().is_identity());
      CHECK(route_wires(g, all_x).u == g.product());
      CHECK(route_wires(g, all_o).u.is_identity());
    }
}

TEST_CASE("single box enumeration") {
  GridWord g = grid_word(1, 2, {1});
  auto deos_id = enumerate_deograms(g, Perm::identity(2));
  REQUIRE(deos_id.size() == 1);
  CHECK(deos_id[0].choices == std::vector<Box>{Box::elbow});
  auto deos_s1 = enumerate_deograms(g, Perm::transposition(2, 1));
  REQUIRE(deos_s1.size() == 1);
  CHECK(deos_s1[0].choices == std::vector<Box>{Box::crossing});
}

TEST_CASE("richardson word with no short subexpression") {
  // w = s1 s2 s3 s2 s1, v = s2: every distinguished subexpression skips at
  // least 3 letters, never exactly 2
  GridWord g = explicit_word(4, {1, 2, 3, 2, 1});
  auto deos = enumerate_deograms(g, Perm::transposition(4, 2));
  CHECK(!deos.empty());
  for (const Deogram& d : deos) {
    CHECK(d.elb() >= 3);
    CHECK(d.elb() != 2);
  }
}

TEST_CASE("deodhar point counts") {
  CHECK(deodhar_point_count(BoundedAffinePerm(1, 2, {2, 3})) == L_q() - Laurent(1));
  CHECK(deodhar_point_count(top_cell_f(2, 5)) ==
        (L_q() - Laurent(1)).pow(4) * (L_q(2) + Laurent(1)));
  // agreement with R over all of B_{k,n} for small n (the full n <= 7 sweep
  // runs in the acceptance suite)
  RPolyCache cache;
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& f : enumerate_bounded_affine(k, n)) {
        auto [v, w] = f_to_pair(f);
        CHECK(deodhar_point_count(f) == cache.r_polynomial(v, w));
      }
}

TEST_CASE("maximal deograms") {
  MaximalDeograms m38 = maximal_deograms(top_cell_f(3, 8));
  CHECK(m38.count == 7);
  CHECK(m38.min_elbows == 7);
  MaximalDeograms m37 = maximal_deograms(top_cell_f(3, 7));
  CHECK(m37.count == 5);
  // the f_{2,3} count matches the Dyck oracle
  MaximalDeograms m23 = maximal_deograms(top_cell_f(2, 3));
  CHECK(m23.count == static_cast<long>(enumerate_dyck(2, 1).size()));
  CHECK(m23.count == 1);
  // min elbows is n - c(f-bar) on positroid pairs
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& f : enumerate_bounded_affine(k, n)) {
        MaximalDeograms md = maximal_deograms(f);
        CHECK(md.min_elbows == n - f.reduction().cycle_count());
      }
}

TEST_CASE("deogram properties: parity of crossings") {
  for (const auto& f : enumerate_bounded_affine(2, 5)) {
    auto [v, w] = f_to_pair(f);
    GridWord g = grid_word(2, 5, shape_of_grassmannian(w, 2));
    for (const Deogram& d : enumerate_deograms(g, v)) {
      CHECK(d.xing() >= v.length());
      CHECK((d.xing() - v.length()) % 2 == 0);
    }
  }
}

TEST_CASE("render and parse round trip") {
  GridWord one = grid_word(1, 2, {1});
  Deogram cross{one, {Box::crossing}};
  Deogram elb{one, {Box::elbow}};
  CHECK(render_deogram(cross).find('X') != std::string::npos);
  CHECK(render_deogram(elb).find('O') != std::string::npos);
  for (const Deogram& d : maximal_deograms(top_cell_f(3, 8)).list) {
    Deogram back = parse_deogram(render_deogram(d));
    CHECK(back.choices == d.choices);
    CHECK(back.word.lambda == d.word.lambda);
    CHECK(back.word.n == d.word.n);
  }
  CHECK_THROWS_AS(render_deogram(Deogram{explicit_word(3, {1, 2}),
                                         {Box::crossing, Box::crossing}}),
                  std::invalid_argument);
}

TEST_CASE("wire formulation agrees with the subexpression scan") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      // every shape in the k x (n-k) rectangle
      std::vector<int> lambda(k, 0);
      auto rec = [&](auto&& self, int row, int prev) -> void {
        if (row == k) {
          GridWord g = grid_word(k, n, lambda);
          int len = g.length();
          if (len > 12) return;
          std::vector<Box> ch(len);
          for (long mask = 0; mask < (1L << len); ++mask) {
            for (int i = 0; i < len; ++i)
              ch[i] = (mask >> i) & 1 ? Box::elbow : Box::crossing;
            WireResult wr = route_wires(g, ch);
            CHECK(wr.distinguished == is_distinguished(g, ch));
            if (wr.distinguished) CHECK(wr.u == Deogram{g, ch}.u());
          }
          return;
        }
        for (int len = prev; len >= 0; --len) {
          lambda[row] = len;
          self(self, row + 1, len);
        }
      };
      rec(rec, 0, n - k);
    }
}
