#include <doctest.h>

#include <map>
#include <numeric>

#include "poscat/qtcatalan.hpp"

using namespace poscat;

namespace {

DyckPath path_of(int a, int b, const std::string& s) {
  DyckPath p{a, b, {}};
  for (char c : s) p.steps.push_back(c == 'N');
  return p;
}

Laurent qt(int qe, int te, long c = 1) {
  Mono m;
  m[Var::q] = 2 * qe;
  m[Var::t] = 2 * te;
  return Laurent::monomial(c, m);
}

}  // namespace

TEST_CASE("enumeration counts") {
  for (int b = 1; b <= 9; ++b) CHECK(enumerate_dyck(1, b).size() == 1);
  CHECK(enumerate_dyck(2, 3).size() == 2);
  CHECK(enumerate_dyck(3, 5).size() == 7);
  CHECK_THROWS_AS(enumerate_dyck(2, 4), std::invalid_argument);
  // count = binomial(a+b, a) / (a+b) for all coprime pairs in range
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; a + b <= 13; ++b) {
      if (std::gcd(a, b) != 1) continue;
      long binom = 1;
      for (int i = 0; i < a; ++i) binom = binom * (a + b - i) / (i + 1);
      CHECK(static_cast<long>(enumerate_dyck(a, b).size()) == binom / (a + b));
    }
}

TEST_CASE("area and dinv on pinned paths") {
  CHECK(area(path_of(3, 5, "NNNEEEEE")) == 4);
  CHECK(dinv(path_of(3, 5, "NNNEEEEE")) == 0);
  CHECK(area(path_of(2, 3, "NNEEE")) == 1);
  CHECK(dinv(path_of(2, 3, "NNEEE")) == 0);
  CHECK(dinv(path_of(2, 3, "NENEE")) == 1);
  CHECK(area(path_of(2, 3, "NENEE")) == 0);
  // the diagonal-hugging path contributes q^0 t^4
  CHECK(area(path_of(3, 5, "NENEENEE")) == 0);
  CHECK(dinv(path_of(3, 5, "NENEENEE")) == 4);
}

TEST_CASE("the seven (3,5) paths carry the statistics of the figure") {
  std::multiset<std::pair<int, int>> got;
  for (const DyckPath& p : enumerate_dyck(3, 5)) got.insert({area(p), dinv(p)});
  std::multiset<std::pair<int, int>> want{{4, 0}, {3, 1}, {2, 2}, {2, 1},
                                          {1, 3}, {1, 2}, {0, 4}};
  CHECK(got == want);
}

TEST_CASE("qt catalan golden values") {
  CHECK(qt_catalan(3, 5) == qt(4, 0) + qt(3, 1) + qt(2, 2) + qt(2, 1) + qt(1, 3) +
                                qt(1, 2) + qt(0, 4));
  CHECK(qt_catalan(2, 3) == qt(1, 0) + qt(0, 1));
  CHECK(qt_catalan(1, 4) == Laurent(1));
}

TEST_CASE("symmetry, unimodality, swap") {
  for (int a = 1; a <= 6; ++a)
    for (int b = a; a + b <= 13; ++b) {
      if (std::gcd(a, b) != 1) continue;
      Laurent c = qt_catalan(a, b);
      CHECK(c == qt_catalan(b, a));
      CHECK(c.is_qt_symmetric());
      CHECK(c.is_qt_unimodal());
      CHECK(c.eval_all_ones() == BigInt(static_cast<long>(enumerate_dyck(a, b).size())));
    }
}
