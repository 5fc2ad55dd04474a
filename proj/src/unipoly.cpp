#include "poscat/unipoly.hpp"

#include <sstream>

namespace poscat {

UniPoly UniPoly::y(int power, const Rational& c) {
  UniPoly p;
  if (c != 0) {
    p.c_.assign(power + 1, Rational(0));
    p.c_[power] = c;
  }
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  UniPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

bool UniPoly::is_homogeneous(int poly_degree) const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && 2 * static_cast<int>(i) != poly_degree) return false;
  return true;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg_y(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Rational abs_a = a < 0 ? Rational(-a) : a;
    if (abs_a != 1 || i == 0) os << abs_a;
    if (i >= 1) {
      if (abs_a != 1) os << "*";
      os << "y";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

PolyMatrix pm_zero(int rows, int cols) {
  return PolyMatrix(rows, std::vector<UniPoly>(cols));
}

PolyMatrix pm_identity(int nn) {
  PolyMatrix m = pm_zero(nn, nn);
  for (int i = 0; i < nn; ++i) m[i][i] = UniPoly(1);
  return m;
}

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) {
  int rows = static_cast<int>(a.size());
  int inner = rows ? static_cast<int>(a[0].size()) : 0;
  int cols = b.empty() ? 0 : static_cast<int>(b[0].size());
  PolyMatrix r = pm_zero(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int l = 0; l < inner; ++l) {
      if (a[i][l].is_zero()) continue;
      for (int j = 0; j < cols; ++j)
        if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

bool pm_is_zero(const PolyMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

PolyMatrix pm_poly_eval(const UniPoly& p, const PolyMatrix& m) {
  int nn = static_cast<int>(m.size());
  PolyMatrix acc = pm_zero(nn, nn);
  PolyMatrix pw = pm_identity(nn);
  for (int i = 0; i <= p.deg_y(); ++i) {
    if (p.coeff(i) != 0) {
      UniPoly c(p.coeff(i));
      for (int r = 0; r < nn; ++r)
        for (int s = 0; s < nn; ++s) acc[r][s] += c * pw[r][s];
    }
    if (i < p.deg_y()) pw = pm_mul(pw, m);
  }
  return acc;
}

}  // namespace poscat
