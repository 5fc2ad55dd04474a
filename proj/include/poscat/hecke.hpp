#ifndef POSCAT_HECKE_HPP
#define POSCAT_HECKE_HPP

#include <unordered_map>

#include "poscat/laurent.hpp"
#include "poscat/perm.hpp"

namespace poscat {

// Element of the Hecke algebra of S_n in the T-basis, with coefficients that
// are Laurent polynomials (in q for the R-polynomial layer; the HOMFLY layer
// also uses a). Canonical: no zero coefficients.
class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {}

  int n() const { return n_; }
  const std::unordered_map<Perm, Laurent, Perm::Hash>& support() const {
    return support_;
  }

  bool is_zero() const { return support_.empty(); }
  Laurent coeff_of(const Perm& w) const;

  void add(const Perm& w, const Laurent& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement operator*(const Laurent& c) const;

  bool operator==(const HeckeElement& o) const;

  // T_{s_i} * h, expanded via T_s T_v = T_{sv} if sv > v,
  // else (1-q) T_v + q T_{sv}.
  HeckeElement mul_gen_left(int i) const;
  // h * T_{s_i}.
  HeckeElement mul_gen_right(int i) const;
  // h * T_{s_i}^{-1} with T_s^{-1} = q^{-1} T_s + (1 - q^{-1}).
  HeckeElement mul_gen_right_inv(int i) const;
  // h * T_v along a reduced word of v.
  HeckeElement mul_t_right(const Perm& v) const;

  static HeckeElement t_id(int n);
  static HeckeElement t_basis(const Perm& w);
  static HeckeElement t_inverse(const Perm& w);  // T_w^{-1}

  // One "one-line-perm : polynomial" entry per line, sorted by permutation.
  std::string to_string() const;

 private:
  int n_;
  std::unordered_map<Perm, Laurent, Perm::Hash> support_;
};

// Standard trace: coefficient of T_id.
Laurent epsilon(const HeckeElement& h);

// Kazhdan-Lusztig R-polynomials, memoized per-cache instance. Caches behave
// as pure functions; use one instance per worker thread in parallel sweeps.
class RPolyCache {
 public:
  const Laurent& r_polynomial(const Perm& v, const Perm& w);

 private:
  struct PairHash {
    size_t operator()(const std::pair<Perm, Perm>& p) const {
      return Perm::Hash{}(p.first) * 1000003u ^ Perm::Hash{}(p.second);
    }
  };
  std::unordered_map<std::pair<Perm, Perm>, Laurent, PairHash> memo_;
};

// One-shot recursive R-polynomial (fresh cache).
Laurent r_polynomial_recursive(const Perm& v, const Perm& w);

// R via the trace formula q^{l(w)-l(v)} epsilon(T_w^{-1} T_v).
Laurent r_polynomial_trace(const Perm& v, const Perm& w);

}  // namespace poscat

#endif
