#ifndef POSCAT_BRAID_HPP
#define POSCAT_BRAID_HPP

#include <string>
#include <vector>

#include "poscat/perm.hpp"

namespace poscat {

// Braid word on n strands; letters are signed generator indices,
// +i for sigma_i and -i for sigma_i^{-1}.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  BraidWord(int strands, std::vector<int> ls);

  int exponent_sum() const;
  Perm underlying_perm() const;

  std::string to_string() const;                       // "2 1 -3"
  static BraidWord parse(int n, const std::string&);   // throws on junk
};

struct ClosureStats {
  int e = 0;           // exponent sum
  int components = 0;  // cycles of the underlying permutation
  int chi = 0;         // (e - n + components) / 2
};

ClosureStats closure_stats(const BraidWord& b);

// beta_{v,w} = beta(w) . beta(v)^{-1}.
BraidWord braid_from_pair(const Perm& v, const Perm& w);

}  // namespace poscat

#endif
