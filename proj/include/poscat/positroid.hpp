#ifndef POSCAT_POSITROID_HPP
#define POSCAT_POSITROID_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "poscat/laurent.hpp"
#include "poscat/perm.hpp"

namespace poscat {

using Rational = boost::multiprecision::cpp_rational;

struct RationalMatrix {
  int k = 0, n = 0;
  std::vector<std::vector<Rational>> rows;  // k rows of n entries

  const Rational& at(int i, int j) const { return rows[i - 1][j - 1]; }
};

// f_A(i) = min{ j >= i : A_i in span(A_{i+1}, ..., A_j) } with columns
// extended n-periodically; exact arithmetic. Throws if A is rank deficient.
BoundedAffinePerm f_from_matrix(const RationalMatrix& A);

// The 0/1 representative X^min of the stratum of f, built from the cycles of
// f-bar (minimal index first, cycles ordered by minimal index). Requires
// f(i) != i for all i.
RationalMatrix min_matrix(const BoundedAffinePerm& f);

// #Pi_f(F_q) = R_v^w for the positroid pair of f.
Laurent positroid_point_count(const BoundedAffinePerm& f);

// #Pi_f(F_q) / (q-1)^{n-1}; divisibility is asserted.
Laurent quotient_point_count(const BoundedAffinePerm& f);

// q = 1 value of the quotient point count; requires c(f-bar) = 1.
BigInt f_catalan(const BoundedAffinePerm& f);

// #Gr(k,n)(F_q) = Gaussian binomial.
Laurent grassmannian_count(int k, int n);

// A reduced fraction of polynomials in q.
struct PolyFraction {
  Laurent num, den;
  bool operator==(const PolyFraction& o) const {
    return num == o.num && den == o.den;
  }
  std::string to_string() const;
};

// Reduce a fraction of polynomials in q alone (Euclidean gcd, primitive
// normalization, positive leading denominator coefficient).
PolyFraction reduce_q_fraction(const Laurent& num, const Laurent& den);

// Probability that a random k-subspace lies in the open cell; equals
// (q-1)^n / (q^n - 1) independently of k.
PolyFraction top_cell_probability(int k, int n);

// (q^{1/2} + t^{1/2})^{n-1} * C_{k,n-k}(q,t); requires gcd(k,n) = 1.
Laurent predicted_mixed_hodge(int k, int n);

}  // namespace poscat

#endif
