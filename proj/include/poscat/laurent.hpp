#ifndef POSCAT_LAURENT_HPP
#define POSCAT_LAURENT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace poscat {

using BigInt = boost::multiprecision::cpp_int;

// Variable universe for the sparse Laurent type. All exponents are stored
// doubled, so q^(3/2) has stored exponent 3.
enum class Var : int { q = 0, t = 1, a = 2, z = 3 };

constexpr int kNumVars = 4;

const char* var_name(Var v);

struct Mono {
  std::array<int, kNumVars> e2{};  // doubled exponents

  int& operator[](Var v) { return e2[static_cast<int>(v)]; }
  int operator[](Var v) const { return e2[static_cast<int>(v)]; }
  bool operator==(const Mono&) const = default;
  auto operator<=>(const Mono&) const = default;

  int total2() const { return e2[0] + e2[1] + e2[2] + e2[3]; }
  Mono operator+(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r.e2[i] = e2[i] + o.e2[i];
    return r;
  }
  Mono operator-(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r.e2[i] = e2[i] - o.e2[i];
    return r;
  }
};

// Exact sparse Laurent polynomial in q, t, a, z with half-integer exponents
// and arbitrary-precision integer coefficients. Canonical: no zero terms.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(long c) { if (c != 0) terms_[Mono{}] = c; }
  explicit Laurent(const BigInt& c) { if (c != 0) terms_[Mono{}] = c; }

  static Laurent monomial(const BigInt& c, const Mono& m);
  // Single variable to a (doubled) power: var_pow2(Var::q, 1) is q^(1/2).
  static Laurent var_pow2(Var v, int e2, const BigInt& c = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t term_count() const { return terms_.size(); }
  const std::map<Mono, BigInt>& terms() const { return terms_; }

  bool operator==(const Laurent&) const = default;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
  Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  Laurent operator-() const;

  Laurent pow(int e) const;  // e >= 0

  // True iff a single term.
  bool is_unit_monomial() const { return terms_.size() == 1; }

  bool uses(Var v) const;
  // Largest / smallest doubled exponent of v; throws on zero polynomial.
  int max_deg2(Var v) const;
  int min_deg2(Var v) const;

  // Coefficient of v^(e2/2) as a polynomial in the remaining variables.
  Laurent coeff(Var v, int e2) const;

  // Exact substitution var := expr. expr must be a single term if var occurs
  // with a negative or non-integer exponent; otherwise Horner evaluation.
  Laurent substitute(Var v, const Laurent& expr) const;

  // Exact division; throws DivisionError (carrying the remainder) when the
  // division leaves a remainder.
  Laurent divide_exact(const Laurent& d) const;

  // Integer evaluation helpers.
  BigInt eval_all_ones() const;

  bool is_qt_symmetric() const;
  bool is_qt_unimodal() const;

  std::string to_string() const;
  std::string to_json() const;

 private:
  void add_term(const Mono& m, const BigInt& c);
  std::map<Mono, BigInt> terms_;
};

struct DivisionError : std::runtime_error {
  explicit DivisionError(const std::string& what, Laurent rem)
      : std::runtime_error(what), remainder(std::move(rem)) {}
  Laurent remainder;
};

inline Laurent operator*(const BigInt& c, const Laurent& p) {
  return Laurent(c) * p;
}

// Convenience constructors for whole-exponent monomials.
Laurent L_q(int e = 1);
Laurent L_t(int e = 1);
Laurent L_a(int e = 1);
Laurent L_z(int e = 1);

// q-analogs: [n]_q = 1 + q + ... + q^(n-1), [n]_q! and the Gaussian binomial.
Laurent q_int(int n);
Laurent q_factorial(int n);
Laurent q_binomial(int n, int k);

}  // namespace poscat

#endif
