#include "poscat/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace poscat {

BraidWord::BraidWord(int strands, std::vector<int> ls)
    : n(strands), letters(std::move(ls)) {
  if (n < 1) throw std::invalid_argument("BraidWord: need at least one strand");
  for (int l : letters)
    if (l == 0 || std::abs(l) > n - 1)
      throw std::invalid_argument("BraidWord: letter out of range");
}

int BraidWord::exponent_sum() const {
  int e = 0;
  for (int l : letters) e += l > 0 ? 1 : -1;
  return e;
}

Perm BraidWord::underlying_perm() const {
  Perm p = Perm::identity(n);
  for (int l : letters) p = p.mul_gen_right(std::abs(l));
  return p;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << " ";
    os << letters[i];
  }
  return os.str();
}

BraidWord BraidWord::parse(int n, const std::string& s) {
  std::vector<int> letters;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    try {
      size_t used = 0;
      int x = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("junk");
      letters.push_back(x);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed braid letter '" + tok + "'");
    }
  }
  return BraidWord(n, std::move(letters));
}

ClosureStats closure_stats(const BraidWord& b) {
  ClosureStats st;
  st.e = b.exponent_sum();
  st.components = b.underlying_perm().cycle_count();
  int num = st.e - b.n + st.components;
  if (num % 2 != 0)
    throw std::logic_error("closure_stats: chi is not an integer");
  st.chi = num / 2;
  return st;
}

BraidWord braid_from_pair(const Perm& v, const Perm& w) {
  if (v.n() != w.n()) throw std::invalid_argument("braid_from_pair: mismatched n");
  std::vector<int> letters;
  for (int i : w.reduced_word()) letters.push_back(i);
  std::vector<int> vw = v.reduced_word();
  for (auto it = vw.rbegin(); it != vw.rend(); ++it) letters.push_back(-*it);
  return BraidWord(v.n(), std::move(letters));
}

}  // namespace poscat
