// Acceptance suite: one pass/fail line per criterion, exact equalities, with
// the per-criterion wall-clock budgets enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "poscat/deogram.hpp"
#include "poscat/hecke.hpp"
#include "poscat/homfly.hpp"
#include "poscat/positroid.hpp"
#include "poscat/qtcatalan.hpp"
#include "poscat/soergel.hpp"
#include "poscat/sweeps.hpp"

using namespace poscat;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [exception: ") + e.what() + "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_seconds) {
    ok = false;
    note += " [over budget]";
  }
  if (!ok) ++g_failures;
  std::printf("%s criterion %2d: %s (%.2fs, budget %.0fs)%s\n", ok ? "PASS" : "FAIL",
              number, title.c_str(), secs, budget_seconds, note.c_str());
  std::fflush(stdout);
}

Laurent qt(int q2, int t2, long c = 1) {
  Mono m;
  m[Var::q] = q2;
  m[Var::t] = t2;
  return Laurent::monomial(c, m);
}

Laurent az(int a, int z, long c = 1) {
  Mono m;
  m[Var::a] = 2 * a;
  m[Var::z] = 2 * z;
  return Laurent::monomial(c, m);
}

}  // namespace

int main() {
  criterion(1, "golden q,t-Catalan C_{3,5}", 1, [] {
    Laurent want = qt(8, 0) + qt(6, 2) + qt(4, 4) + qt(4, 2) + qt(2, 6) + qt(2, 4) +
                   qt(0, 8);
    return qt_catalan(3, 5) == want;
  });

  criterion(2, "golden HOMFLY of the (3,8) torus braid and its top term", 10, [] {
    Laurent p = homfly(braid_from_pair(Perm::identity(8), max_grassmannian(3, 8)));
    Laurent want = az(-8, 8) + az(-8, 6, 8) + az(-8, 4, 21) + az(-8, 2, 21) +
                   az(-8, 0, 7) - az(-10, 6) - az(-10, 4, 7) - az(-10, 2, 14) -
                   az(-10, 0, 8) + az(-12, 2) + az(-12, 0, 2);
    if (!(p == want)) return false;
    QFraction top = homfly_top(Perm::identity(8), max_grassmannian(3, 8));
    return top.den_pow_qm1 == 0 &&
           top.num == L_q(8) + L_q(6) + L_q(5) + L_q(4) + L_q(3) + L_q(2) + Laurent(1);
  });

  criterion(3, "HOMFLY top term vs R-polynomial over S5 x S5", 600, [] {
    return sweep_homfly_thm2(5, true).ok();
  });

  criterion(4, "trace formula vs recursion over S5 x S5", 300, [] {
    return sweep_trace_vs_recursive(5, true).ok();
  });

  criterion(5, "Deodhar point counts equal R over B_{k,n}, n <= 7", 600, [] {
    return sweep_deodhar(7, true).ok() &&
           sweep_distinguished_agreement(7, 10, true).ok();
  });

  criterion(6, "maximal Deogram counts are rational Catalan numbers, n <= 10", 300, [] {
    if (maximal_deograms(top_cell_f(3, 8)).count != 7) return false;
    if (maximal_deograms(top_cell_f(3, 7)).count != 5) return false;
    return sweep_maximal_counts(10, true).ok();
  });

  criterion(7, "point-count identities and the k-independent probability", 300, [] {
    // coprime (k,n) throughout; (2,4) over F_2 disproves the non-coprime case
    return sweep_point_counts(10, 8, true).ok();
  });

  criterion(8, "q,t-symmetry and unimodality of C_{k,n-k}, n <= 13", 120, [] {
    return sweep_catalan_symmetry(13, true).ok();
  });

  criterion(9, "matrix layer round trip over fixed-point-free B_{k,n}, n <= 6", 120, [] {
    return sweep_min_matrix(6, true).ok();
  });

  criterion(10, "2-strand Soergel engine golden values", 60, [] {
    if (!sweep_khr_golden(24).ok()) return false;
    if (!(pkr_top(BraidWord(2, {1, 1, 1}), 24) == qt(1, -1) + qt(-1, 1))) return false;
    return qt(1, 1) * pkr_top(BraidWord(2, {1, 1, 1}), 24) == qt_catalan(2, 3);
  });

  criterion(11, "stratification mass check, n <= 6", 300, [] {
    return sweep_stratification(6, true).ok();
  });

  criterion(12, "property suites at the default seed", 300, [] {
    return sweep_homfly_skein(500, 20240817, true).ok() &&
           sweep_homfly_markov(500, 20240818, true).ok() &&
           sweep_laurent_axioms(1000, 20240819, true).ok() &&
           sweep_bruhat_oracle(5, true).ok();
  });

  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
