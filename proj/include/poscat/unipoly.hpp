#ifndef POSCAT_UNIPOLY_HPP
#define POSCAT_UNIPOLY_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace poscat {

using Rational = boost::multiprecision::cpp_rational;

// Polynomial in one variable y over exact rationals; the variable has
// polynomial degree 2. Canonical: no trailing zero coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long c) { if (c != 0) c_.assign(1, Rational(c)); }
  UniPoly(const Rational& c) { if (c != 0) c_.assign(1, c); }
  static UniPoly y(int power = 1, const Rational& c = 1);

  bool is_zero() const { return c_.empty(); }
  int deg_y() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
  }
  Rational at_zero() const { return coeff(0); }

  bool operator==(const UniPoly&) const = default;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }

  // Homogeneous of the given polynomial degree (deg y = 2); zero counts.
  bool is_homogeneous(int poly_degree) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

using PolyMatrix = std::vector<std::vector<UniPoly>>;  // [row][col]

PolyMatrix pm_zero(int rows, int cols);
PolyMatrix pm_identity(int nn);
PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b);
bool pm_is_zero(const PolyMatrix& a);
// Evaluate a polynomial at a square matrix.
PolyMatrix pm_poly_eval(const UniPoly& p, const PolyMatrix& m);

}  // namespace poscat

#endif
