#ifndef POSCAT_SOERGEL_HPP
#define POSCAT_SOERGEL_HPP

#include <map>

#include "poscat/braid.hpp"
#include "poscat/laurent.hpp"
#include "poscat/unipoly.hpp"

namespace poscat {

// Free graded left module over R = Q[y] with a right action of y, given in
// the left basis: e_j . y = sum_i right_y[i][j] e_i. The entry (i,j) is
// homogeneous of polynomial degree gen_degrees[j] + 2 - gen_degrees[i].
struct GradedBimodule2 {
  std::vector<int> gen_degrees;
  PolyMatrix right_y;

  int rank() const { return static_cast<int>(gen_degrees.size()); }
  void check_grading() const;
};

GradedBimodule2 bimodule_R();    // the regular bimodule
GradedBimodule2 bimodule_B_s();  // R tensor_{R^s} R, generators 1x1 and 1xy
GradedBimodule2 tensor(const GradedBimodule2& b, const GradedBimodule2& c);
GradedBimodule2 shift(const GradedBimodule2& b, int degree_shift);

// Cochain complex of bimodules; objects[t] sits in cohomological degree
// min_deg + t, diff[t] : objects[t] -> objects[t+1] as a matrix of left
// coefficients.
struct BimoduleComplex {
  int min_deg = 0;
  std::vector<GradedBimodule2> objects;
  std::vector<PolyMatrix> diff;

  int max_deg() const { return min_deg + static_cast<int>(objects.size()) - 1; }
  void check() const;  // d.d = 0 and each differential is a bimodule map
};

// Rouquier complex of a 2-strand braid word.
BimoduleComplex rouquier_complex(const BraidWord& b);

// Complex of free graded R-modules (after HH^0).
struct ModuleComplex {
  int min_deg = 0;
  std::vector<std::vector<int>> gen_degrees;
  std::vector<PolyMatrix> diff;
};

// Termwise kernel of (left y - right y) with induced differentials.
ModuleComplex hh0(const BimoduleComplex& c);

// Bigraded dimension tables: (cohomological degree k, polynomial half-degree
// p) -> dimension.
using DimTable = std::map<std::pair<int, int>, int>;

// dim of the degree-2p slice of H^k(hh0(c)), for 2p <= cutoff.
DimTable hhh_dims(const BimoduleComplex& c, int cutoff);
// same after extending scalars along y -> 0.
DimTable hhhc_dims(const BimoduleComplex& c, int cutoff);

// Top a-degree Khovanov-Rozansky polynomials of the closure, normalized per
// the equivariant and non-equivariant formulas. The cutoff must be large
// enough for the tail dimensions to stabilize.
Laurent pkr_top(const BraidWord& b, int cutoff = 24);
Laurent pkrc_top(const BraidWord& b, int cutoff = 24);

}  // namespace poscat

#endif
