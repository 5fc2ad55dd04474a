#include <doctest.h>

#include "poscat/sweeps.hpp"

using namespace poscat;

namespace {

void check_equal_reports(const SweepReport& a, const SweepReport& b) {
  CHECK(a.cases == b.cases);
  CHECK(a.failures.size() == b.failures.size());
  for (size_t i = 0; i < a.failures.size() && i < b.failures.size(); ++i) {
    CHECK(a.failures[i].key == b.failures[i].key);
    CHECK(a.failures[i].expected == b.failures[i].expected);
    CHECK(a.failures[i].got == b.failures[i].got);
  }
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference") {
  check_equal_reports(sweep_trace_vs_recursive(4, false), sweep_trace_vs_recursive(4, true));
  check_equal_reports(sweep_deodhar(5, false), sweep_deodhar(5, true));
  check_equal_reports(sweep_homfly_thm2(4, false), sweep_homfly_thm2(4, true));
  check_equal_reports(sweep_homfly_skein(60, 123, false), sweep_homfly_skein(60, 123, true));
  check_equal_reports(sweep_catalan_symmetry(11, false), sweep_catalan_symmetry(11, true));
  check_equal_reports(sweep_point_counts(7, 6, false), sweep_point_counts(7, 6, true));
  check_equal_reports(sweep_min_matrix(5, false), sweep_min_matrix(5, true));
}

TEST_CASE("sweeps are clean at small sizes") {
  CHECK(sweep_bruhat_oracle(4, true).ok());
  CHECK(sweep_distinguished_agreement(5, 8, true).ok());
  CHECK(sweep_maximal_counts(8, true).ok());
  CHECK(sweep_stratification(5, true).ok());
  CHECK(sweep_laurent_axioms(300, 99, true).ok());
  CHECK(sweep_homfly_markov(80, 5, true).ok());
  CHECK(sweep_khr_golden(24).ok());
}

TEST_CASE("random sweeps are seed-deterministic") {
  SweepReport a = sweep_homfly_skein(30, 42, true);
  SweepReport b = sweep_homfly_skein(30, 42, false);
  check_equal_reports(a, b);
}
