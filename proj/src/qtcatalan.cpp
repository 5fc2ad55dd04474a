#include "poscat/qtcatalan.hpp"

#include <numeric>
#include <stdexcept>

namespace poscat {

std::string DyckPath::to_string() const {
  std::string s;
  for (bool st : steps) s += st ? 'N' : 'E';
  return s;
}

static void check_ab(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("Dyck: a, b must be positive");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("Dyck: a, b must be coprime");
  if (a + b > 26) throw std::invalid_argument("Dyck: a + b > 26 unsupported");
}

std::vector<DyckPath> enumerate_dyck(int a, int b) {
  check_ab(a, b);
  std::vector<DyckPath> out;
  std::vector<bool> steps(a + b);
  // stays weakly above y = (a/b)x: b*y >= a*x at every lattice point
  auto rec = [&](auto&& self, int x, int y, int pos) -> void {
    if (pos == a + b) {
      out.push_back(DyckPath{a, b, steps});
      return;
    }
    if (y < a) {
      steps[pos] = true;
      self(self, x, y + 1, pos + 1);
    }
    if (x < b && static_cast<long>(b) * y >= static_cast<long>(a) * (x + 1)) {
      steps[pos] = false;
      self(self, x + 1, y, pos + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

int area(const DyckPath& p) {
  // Cell with lower-left corner (i, j) counts when it lies below the path
  // (path height over [i, i+1] is >= j+1) and weakly above the diagonal
  // (b*j >= a*(i+1)).
  int count = 0;
  int x = 0, y = 0;
  for (bool st : p.steps) {
    if (st) {
      ++y;
    } else {
      for (int j = 0; j < y; ++j)
        if (static_cast<long>(p.b) * j >= static_cast<long>(p.a) * (x + 1)) ++count;
      ++x;
    }
  }
  return count;
}

int dinv(const DyckPath& p) {
  // Intercept intervals scaled by b: E-step at (x..x+1, y) gives the open
  // interval (b y - a(x+1), b y - a x); N-step at (x, y..y+1) gives
  // (b y - a x, b y - a x + b).
  struct Step {
    long lo, hi;
    bool vertical;
  };
  std::vector<Step> st;
  int x = 0, y = 0;
  for (bool s : p.steps) {
    if (s) {
      st.push_back({static_cast<long>(p.b) * y - static_cast<long>(p.a) * x,
                    static_cast<long>(p.b) * y - static_cast<long>(p.a) * x + p.b,
                    true});
      ++y;
    } else {
      st.push_back({static_cast<long>(p.b) * y - static_cast<long>(p.a) * (x + 1),
                    static_cast<long>(p.b) * y - static_cast<long>(p.a) * x,
                    false});
      ++x;
    }
  }
  int count = 0;
  for (size_t i = 0; i < st.size(); ++i) {
    if (st[i].vertical) continue;
    for (size_t j = i + 1; j < st.size(); ++j) {
      if (!st[j].vertical) continue;
      if (st[i].lo < st[j].hi && st[j].lo < st[i].hi) ++count;
    }
  }
  return count;
}

Laurent qt_catalan(int a, int b) {
  check_ab(a, b);
  Laurent c;
  for (const DyckPath& p : enumerate_dyck(a, b))
    c += Laurent::monomial(1, [&] {
      Mono m;
      m[Var::q] = 2 * area(p);
      m[Var::t] = 2 * dinv(p);
      return m;
    }());
  return c;
}

}  // namespace poscat
