#ifndef POSCAT_QTCATALAN_HPP
#define POSCAT_QTCATALAN_HPP

#include <string>
#include <vector>

#include "poscat/laurent.hpp"

namespace poscat {

// Lattice path in an a x b rectangle (a vertical, b horizontal steps) that
// stays weakly above the diagonal y = (a/b) x; gcd(a,b) = 1.
struct DyckPath {
  int a = 1, b = 1;
  std::vector<bool> steps;  // true = N, false = E; length a+b

  std::string to_string() const;  // e.g. "NNEEE"
};

// All paths of Dyck(a,b); count equals binomial(a+b, a) / (a+b).
std::vector<DyckPath> enumerate_dyck(int a, int b);

// Unit cells fully contained between the path and the diagonal.
int area(const DyckPath& p);

// Pairs (h, v): h a horizontal step, v a later vertical step, whose open
// intervals of slope-(a/b) line intercepts overlap.
int dinv(const DyckPath& p);

// C_{a,b}(q,t) = sum over Dyck(a,b) of q^area t^dinv.
Laurent qt_catalan(int a, int b);

}  // namespace poscat

#endif
