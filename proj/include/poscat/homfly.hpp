#ifndef POSCAT_HOMFLY_HPP
#define POSCAT_HOMFLY_HPP

#include "poscat/braid.hpp"
#include "poscat/hecke.hpp"
#include "poscat/laurent.hpp"

namespace poscat {

// HOMFLY polynomial of the braid closure, in a and z, normalized by
// P(unknot) = 1 and a P(L+) - a^{-1} P(L-) = z P(L0). Computed through the
// Markov trace on the Hecke algebra.
Laurent homfly(const BraidWord& b);

// A Laurent polynomial divided by a power of (q-1), kept exactly reduced.
struct QFraction {
  Laurent num;
  int den_pow_qm1 = 0;

  bool operator==(const QFraction& o) const {
    return den_pow_qm1 == o.den_pow_qm1 && num == o.num;
  }
  std::string to_string() const;
};

// Top a-degree invariant of the Richardson link: substitute a := q^{-1/2},
// z := q^{1/2} - q^{-1/2} into a^kappa [a^kappa] P(beta_{v,w}) where
// kappa = n - 1 - (l(w) - l(v)). In general a rational function with
// denominator a power of (q-1); zero when v is not below w.
QFraction homfly_top(const Perm& v, const Perm& w);

// (q-1)^{n-1} * homfly_top(v, w); always a Laurent polynomial, and equal to
// the R-polynomial R_v^w.
Laurent homfly_top_scaled(const Perm& v, const Perm& w);

// Rewrite a Laurent polynomial in q alone as a polynomial in z under
// z = q^{1/2} - q^{-1/2}; throws if no such polynomial exists.
Laurent q_to_z(const Laurent& s);

}  // namespace poscat

#endif
