#ifndef POSCAT_SWEEPS_HPP
#define POSCAT_SWEEPS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace poscat {

// Batch verification kernels. Every sweep exists in a serial form (the
// reference) and an OpenMP form over independent cases; results are merged
// deterministically (failures sorted by case key). `parallel = false` runs
// the serial reference.

struct SweepFailure {
  std::string key;
  std::string expected;
  std::string got;
};

struct SweepReport {
  std::string name;
  long cases = 0;
  std::vector<SweepFailure> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
};

int sweep_thread_count();  // POSCAT_THREADS env var, else OpenMP default

// Hecke: r_polynomial_trace == r_polynomial_recursive over S_n x S_n.
SweepReport sweep_trace_vs_recursive(int n, bool parallel);

// Bruhat dot criterion against the subword oracle, S_n for n <= max_n.
SweepReport sweep_bruhat_oracle(int max_n, bool parallel);

// HOMFLY: max a-degree behavior and (q-1)^{n-1} homfly_top == R over S_n^2.
SweepReport sweep_homfly_thm2(int n, bool parallel);

// Skein relation on random braid words.
SweepReport sweep_homfly_skein(int cases, uint64_t seed, bool parallel);

// Conjugation, word-choice and stabilization invariance on random cases.
SweepReport sweep_homfly_markov(int cases, uint64_t seed, bool parallel);

// Laurent ring axioms on random triples.
SweepReport sweep_laurent_axioms(int cases, uint64_t seed, bool parallel);

// Deodhar point count == R polynomial over every f in B_{k,n}, n <= max_n.
SweepReport sweep_deodhar(int max_n, bool parallel);

// Subexpression and wire formulations agree on every filling of every grid
// word with at most max_len boxes, shapes inside k x (n-k) for n <= max_n.
SweepReport sweep_distinguished_agreement(int max_n, int max_len, bool parallel);

// Maximal Deogram counts equal rational Catalan numbers for coprime (k,n).
SweepReport sweep_maximal_counts(int max_n, bool parallel);

// q,t-symmetry and unimodality of C_{k,n-k} for coprime (k,n), n <= max_n.
SweepReport sweep_catalan_symmetry(int max_n, bool parallel);

// Point-count identities for the top cell and the k-independent probability.
SweepReport sweep_point_counts(int max_n_coprime, int max_n_prob, bool parallel);

// Sum of positroid point counts over B_{k,n} equals the Gaussian binomial.
SweepReport sweep_stratification(int max_n, bool parallel);

// f_from_matrix(min_matrix(f)) == f over fixed-point-free f, n <= max_n.
SweepReport sweep_min_matrix(int max_n, bool parallel);

// Golden 2-strand Soergel values (serial; the cases are few and heavy).
SweepReport sweep_khr_golden(int cutoff);

}  // namespace poscat

#endif
