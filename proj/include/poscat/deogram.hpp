#ifndef POSCAT_DEOGRAM_HPP
#define POSCAT_DEOGRAM_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "poscat/laurent.hpp"
#include "poscat/perm.hpp"

namespace poscat {

// A reduced word presented box-by-box. Grid words come from a partition
// lambda inside a k x (n-k) rectangle, rows indexed from the top, with the
// box in row r, column c carrying generator k - r + c; reading order is row
// by row, left to right, and products apply the leftmost factor last.
struct GridWord {
  int k = 0, n = 0;
  std::vector<int> lambda;               // row lengths, top row first
  std::vector<int> word;                 // generator indices in reading order
  std::vector<std::pair<int, int>> box;  // (row, col) per letter; empty if not a grid
  bool grid = false;

  int length() const { return static_cast<int>(word.size()); }
  Perm product() const;  // w: product of all letters
};

GridWord grid_word(int k, int n, const std::vector<int>& lambda);
GridWord explicit_word(int n, const std::vector<int>& word);

// The shape lambda_w of a k-Grassmannian permutation.
std::vector<int> shape_of_grassmannian(const Perm& w, int k);

enum class Box : uint8_t { crossing, elbow };

struct Deogram {
  GridWord word;
  std::vector<Box> choices;

  Perm u() const;  // product of the crossing letters
  int xing() const;
  int elb() const;
};

// Deodhar's distinguished condition, subexpression form: scanning in reading
// order with partial crossing product pi, an elbow at letter s is permitted
// iff l(pi s) > l(pi).
bool is_distinguished(const GridWord& w, const std::vector<Box>& choices);

// Independent wire-label formulation: route labeled paths through the
// filling; an elbow is permitted iff its bottom-left label is smaller than
// its top-right label. Returns the routed permutation u as well.
struct WireResult {
  bool distinguished = false;
  Perm u;
};
WireResult route_wires(const GridWord& w, const std::vector<Box>& choices);

// All distinguished fillings with u_D = v. Word length bound 22.
std::vector<Deogram> enumerate_deograms(const GridWord& word, const Perm& v);

// DFS visitor over distinguished fillings with u_D = v.
void for_each_deogram(const GridWord& word, const Perm& v,
                      const std::function<void(const std::vector<Box>&)>& emit);

// Deodhar's point count: sum of (q-1)^elb q^((xing - l(v))/2) over
// f-Deograms; equals the R-polynomial of the associated pair.
Laurent deodhar_point_count(const BoundedAffinePerm& f);

struct MaximalDeograms {
  long count = 0;
  int min_elbows = 0;
  std::vector<Deogram> list;
};
MaximalDeograms maximal_deograms(const BoundedAffinePerm& f);

// Monospaced rendering in the style of a labeled Young-diagram filling, and
// its inverse.
std::string render_deogram(const Deogram& d);
Deogram parse_deogram(const std::string& text);

}  // namespace poscat

#endif
