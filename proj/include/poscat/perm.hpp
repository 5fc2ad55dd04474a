#ifndef POSCAT_PERM_HPP
#define POSCAT_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace poscat {

// Element of S_n in one-line notation: images[i] = w(i+1), values 1..n.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  static Perm transposition(int n, int i);  // s_i = (i, i+1)

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }  // 1-based
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  Perm inverse() const;
  // Composition: (*this * o)(x) = (*this)(o(x)).
  Perm operator*(const Perm& o) const;

  Perm mul_gen_left(int i) const;   // s_i * w  (swaps values i, i+1)
  Perm mul_gen_right(int i) const;  // w * s_i  (swaps positions i, i+1)

  int length() const;  // inversion count
  bool is_identity() const;
  int cycle_count() const;

  bool has_left_descent(int i) const;   // l(s_i w) < l(w)
  bool has_right_descent(int i) const;  // l(w s_i) < l(w)

  // Lexicographically smallest reduced word; the product of the returned
  // generators with the leftmost factor applied last equals w.
  std::vector<int> reduced_word() const;

  bool is_k_grassmannian(int k) const;

  std::string to_string() const;          // "3,4,1,2"
  static Perm parse(const std::string&);  // throws std::invalid_argument

  struct Hash {
    size_t operator()(const Perm& p) const;
  };

 private:
  std::vector<int> images_;
};

// Product of a generator word, leftmost factor applied last.
Perm word_product(int n, const std::vector<int>& word);

// Strong Bruhat order via the dot criterion. Throws on mismatched n.
bool bruhat_leq(const Perm& v, const Perm& w);

// All permutations of S_n in lexicographic order.
std::vector<Perm> all_perms(int n);

// All k-Grassmannian permutations of S_n.
std::vector<Perm> grassmannian_perms(int k, int n);

// The maximal k-Grassmannian permutation (reduction of the top-cell window).
Perm max_grassmannian(int k, int n);

// Bounded affine permutation of type (k,n), stored by its window
// f(1), ..., f(n); periodicity f(j+n) = f(j)+n is implicit.
class BoundedAffinePerm {
 public:
  BoundedAffinePerm(int k, int n, std::vector<int> window);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<int>& window() const { return window_; }
  int operator()(int j) const;  // any integer argument, via periodicity

  bool operator==(const BoundedAffinePerm&) const = default;
  auto operator<=>(const BoundedAffinePerm&) const = default;

  Perm reduction() const;  // f-bar: window values mod n
  bool has_fixed_point() const;

  std::string to_string() const;
  static BoundedAffinePerm parse(const std::string&);  // infers k from the sum

 private:
  int k_ = 0, n_ = 0;
  std::vector<int> window_;
};

// The top-cell bounded affine permutation f_{k,n}: i -> i + k.
BoundedAffinePerm top_cell_f(int k, int n);

// The bijection of positroid pairs: f(j) = v~^{-1}(tau_{k,n}(w~(j))).
// Requires v <= w with w k-Grassmannian.
BoundedAffinePerm pair_to_f(const Perm& v, const Perm& w, int k);

// Inverse of pair_to_f; throws if the window is not a valid element of B_{k,n}.
std::pair<Perm, Perm> f_to_pair(const BoundedAffinePerm& f);

// All elements of B_{k,n}. Documented bound n <= 9.
std::vector<BoundedAffinePerm> enumerate_bounded_affine(int k, int n);

}  // namespace poscat

#endif
