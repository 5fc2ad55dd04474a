#include "poscat/positroid.hpp"

#include <numeric>
#include <sstream>

#include "poscat/hecke.hpp"
#include "poscat/qtcatalan.hpp"

namespace poscat {

namespace {

// Incremental exact row-echelon basis for membership tests.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}

  // Reduce v against the basis; returns the residual.
  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (const auto& b : basis_) {
      int p = pivot_of(b);
      if (v[p] != 0) {
        Rational factor = v[p] / b[p];
        for (int i = 0; i < dim_; ++i) v[i] -= factor * b[i];
      }
    }
    return v;
  }

  bool contains(const std::vector<Rational>& v) const {
    for (const Rational& x : reduce(v))
      if (x != 0) return false;
    return true;
  }

  // Returns true if v enlarged the span.
  bool add(const std::vector<Rational>& v) {
    std::vector<Rational> r = reduce(v);
    for (const Rational& x : r)
      if (x != 0) {
        basis_.push_back(std::move(r));
        return true;
      }
    return false;
  }

  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  int pivot_of(const std::vector<Rational>& b) const {
    for (int i = 0; i < dim_; ++i)
      if (b[i] != 0) return i;
    return dim_;
  }
  int dim_;
  std::vector<std::vector<Rational>> basis_;
};

std::vector<Rational> column(const RationalMatrix& A, int j) {
  int jj = ((j - 1) % A.n + A.n) % A.n + 1;
  std::vector<Rational> c(A.k);
  for (int i = 1; i <= A.k; ++i) c[i - 1] = A.at(i, jj);
  return c;
}

}  // namespace

BoundedAffinePerm f_from_matrix(const RationalMatrix& A) {
  if (A.k < 1 || A.n < 1 || static_cast<int>(A.rows.size()) != A.k)
    throw std::invalid_argument("f_from_matrix: bad dimensions");
  for (const auto& r : A.rows)
    if (static_cast<int>(r.size()) != A.n)
      throw std::invalid_argument("f_from_matrix: ragged rows");
  {
    EchelonBasis full(A.k);
    for (int j = 1; j <= A.n; ++j) full.add(column(A, j));
    if (full.rank() != A.k)
      throw std::invalid_argument("f_from_matrix: matrix is rank deficient");
  }
  std::vector<int> window(A.n);
  for (int i = 1; i <= A.n; ++i) {
    std::vector<Rational> target = column(A, i);
    EchelonBasis span(A.k);
    int fi = -1;
    for (int j = i; j <= i + A.n; ++j) {
      if (j > i) span.add(column(A, j));
      if (span.contains(target)) {
        fi = j;
        break;
      }
    }
    window[i - 1] = fi;
  }
  long sum = 0;
  for (int i = 1; i <= A.n; ++i) sum += window[i - 1] - i;
  return BoundedAffinePerm(static_cast<int>(sum / A.n), A.n, std::move(window));
}

namespace {

// Search for 0/1 columns of one f-bar cycle realizing the window conditions
// of f on that cycle. Rows of distinct cycles are disjoint, so the span
// conditions decouple cycle by cycle. Columns are assigned right to left;
// candidate vectors are tried in lexicographic order, which makes the result
// deterministic. Ascent conditions (f(a) <= n) are checked as soon as their
// window is assigned; wrap conditions are pruned partially and verified at
// the end.
struct CycleSolver {
  int n, s;                     // strand count, private row count
  std::vector<int> cols;        // member columns, increasing
  std::vector<int> fvals;       // f(a) for each member column
  std::vector<unsigned> assign;  // bitmask over private rows, 0 = unassigned
  std::vector<int> col_index;   // column -> position in cols, or -1

  bool in_span(unsigned v, const std::vector<unsigned>& gens) const {
    // exact rational rank of small 0/1 systems
    std::vector<std::vector<Rational>> m;
    for (unsigned g : gens) {
      std::vector<Rational> row(s, 0);
      for (int b = 0; b < s; ++b) row[b] = (g >> b) & 1;
      m.push_back(std::move(row));
    }
    auto rank = [&](std::vector<std::vector<Rational>> mm) {
      int r = 0;
      for (int c = 0; c < s && r < static_cast<int>(mm.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(mm.size()); ++i)
          if (mm[i][c] != 0) {
            piv = i;
            break;
          }
        if (piv < 0) continue;
        std::swap(mm[r], mm[piv]);
        for (int i = 0; i < static_cast<int>(mm.size()); ++i) {
          if (i == r || mm[i][c] == 0) continue;
          Rational fac = mm[i][c] / mm[r][c];
          for (int cc = 0; cc < s; ++cc) mm[i][cc] -= fac * mm[r][cc];
        }
        ++r;
      }
      return r;
    };
    int base = rank(m);
    std::vector<Rational> row(s, 0);
    for (int b = 0; b < s; ++b) row[b] = (v >> b) & 1;
    m.push_back(std::move(row));
    return rank(m) == base;
  }

  // columns of the cycle with residues in the cyclic interval (a, b], only
  // those already assigned
  std::vector<unsigned> window_vectors(int a, int b) const {
    std::vector<unsigned> out;
    for (int j = a + 1; j <= b; ++j) {
      int r = (j - 1) % n + 1;
      int idx = col_index[r];
      if (idx >= 0 && assign[idx] != 0) out.push_back(assign[idx]);
    }
    return out;
  }

  bool conditions_ok(bool final_pass) const {
    for (size_t i = 0; i < cols.size(); ++i) {
      if (assign[i] == 0) continue;
      int a = cols[i], fa = fvals[i];
      bool window_complete = true;
      for (int j = a + 1; j <= fa; ++j) {
        int r = (j - 1) % n + 1;
        int idx = col_index[r];
        if (idx >= 0 && assign[idx] == 0) window_complete = false;
      }
      // never in the span strictly before f(a); sound even on a partially
      // assigned window, since spans only grow
      if (in_span(assign[i], window_vectors(a, fa - 1))) return false;
      if ((final_pass || window_complete) &&
          !in_span(assign[i], window_vectors(a, fa)))
        return false;
    }
    return true;
  }

  bool solve(int pos) {
    if (pos < 0) return conditions_ok(true);
    for (unsigned v = 1; v < (1u << s); ++v) {
      assign[pos] = v;
      if (conditions_ok(false) && solve(pos - 1)) return true;
    }
    assign[pos] = 0;
    return false;
  }
};

}  // namespace

RationalMatrix min_matrix(const BoundedAffinePerm& f) {
  if (f.has_fixed_point())
    throw std::invalid_argument("min_matrix: f has a fixed point (zero column)");
  int n = f.n(), k = f.k();
  if (n > 8) throw std::invalid_argument("min_matrix: n > 8 unsupported");
  Perm fbar = f.reduction();
  // cycles of f-bar, minimal index first, ordered by minimal index; the
  // label rule assigns each cycle a band of rows, one row per ascending run
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int j = start;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = fbar(j);
    }
    cycles.push_back(std::move(cyc));
  }
  RationalMatrix M;
  M.k = k;
  M.n = n;
  M.rows.assign(k, std::vector<Rational>(n, 0));
  int row_base = 0;
  for (const auto& cyc : cycles) {
    int runs = 1;
    for (size_t i = 0; i + 1 < cyc.size(); ++i)
      if (cyc[i] > cyc[i + 1]) ++runs;
    CycleSolver solver;
    solver.n = n;
    solver.s = runs;
    solver.cols = cyc;
    std::sort(solver.cols.begin(), solver.cols.end());
    solver.col_index.assign(n + 1, -1);
    for (size_t i = 0; i < solver.cols.size(); ++i) {
      solver.col_index[solver.cols[i]] = static_cast<int>(i);
      solver.fvals.push_back(f.window()[solver.cols[i] - 1]);
    }
    solver.assign.assign(solver.cols.size(), 0);
    if (!solver.solve(static_cast<int>(solver.cols.size()) - 1))
      throw std::logic_error("min_matrix: no 0/1 representative found");
    for (size_t i = 0; i < solver.cols.size(); ++i)
      for (int b = 0; b < runs; ++b)
        if ((solver.assign[i] >> b) & 1)
          M.rows[row_base + b][solver.cols[i] - 1] = 1;
    row_base += runs;
  }
  if (row_base != k) throw std::logic_error("min_matrix: row count mismatch");
  return M;
}

Laurent positroid_point_count(const BoundedAffinePerm& f) {
  auto [v, w] = f_to_pair(f);
  return r_polynomial_recursive(v, w);
}

Laurent quotient_point_count(const BoundedAffinePerm& f) {
  return positroid_point_count(f).divide_exact((L_q() - Laurent(1)).pow(f.n() - 1));
}

BigInt f_catalan(const BoundedAffinePerm& f) {
  if (f.reduction().cycle_count() != 1)
    throw std::invalid_argument("f_catalan: f-bar is not a single cycle");
  return quotient_point_count(f).substitute(Var::q, Laurent(1)).eval_all_ones();
}

Laurent grassmannian_count(int k, int n) { return q_binomial(n, k); }

std::string PolyFraction::to_string() const {
  if (den.is_one()) return num.to_string();
  return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

namespace {

// dense coefficient vector of a polynomial in q alone (integer exponents)
std::vector<Rational> to_dense_q(const Laurent& p, int& shift) {
  if (p.is_zero()) {
    shift = 0;
    return {};
  }
  for (Var v : {Var::t, Var::a, Var::z})
    if (p.uses(v)) throw std::domain_error("q fraction: polynomial not in q alone");
  int lo = p.min_deg2(Var::q), hi = p.max_deg2(Var::q);
  if (lo % 2 != 0 || hi % 2 != 0)
    throw std::domain_error("q fraction: half-integer exponents unsupported");
  shift = lo / 2;
  std::vector<Rational> c(hi / 2 - lo / 2 + 1, 0);
  for (const auto& [m, coef] : p.terms()) c[(m[Var::q] - lo) / 2] = Rational(coef);
  return c;
}

std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= factor * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  while (!b.empty()) {
    auto r = poly_mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Laurent from_dense_q(const std::vector<Rational>& c, const BigInt& scale) {
  Laurent p;
  for (size_t i = 0; i < c.size(); ++i) {
    Rational scaled = c[i] * scale;
    if (boost::multiprecision::denominator(scaled) != 1)
      throw std::logic_error("q fraction: scaling failed to clear denominators");
    p += Laurent::var_pow2(Var::q, 2 * static_cast<int>(i),
                           boost::multiprecision::numerator(scaled));
  }
  return p;
}

BigInt content(const Laurent& p) {
  BigInt g = 0;
  for (const auto& [m, c] : p.terms()) g = boost::multiprecision::gcd(g, c);
  return g == 0 ? BigInt(1) : g;
}

}  // namespace

PolyFraction reduce_q_fraction(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw std::invalid_argument("reduce_q_fraction: zero denominator");
  if (num.is_zero()) return PolyFraction{Laurent(), Laurent(1)};
  int s1 = 0, s2 = 0;
  std::vector<Rational> a = to_dense_q(num, s1), b = to_dense_q(den, s2);
  std::vector<Rational> g = poly_gcd(a, b);
  // normalize gcd to be monic
  if (!g.empty()) {
    Rational lead = g.back();
    for (auto& x : g) x /= lead;
  }
  auto exact_div = [](const std::vector<Rational>& p, const std::vector<Rational>& d) {
    std::vector<Rational> rem = p, quot(p.size() - d.size() + 1, 0);
    while (rem.size() >= d.size() && !rem.empty()) {
      Rational factor = rem.back() / d.back();
      quot[rem.size() - d.size()] = factor;
      size_t off = rem.size() - d.size();
      for (size_t i = 0; i < d.size(); ++i) rem[off + i] -= factor * d[i];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return quot;
  };
  std::vector<Rational> qa = g.size() > 1 ? exact_div(a, g) : a;
  std::vector<Rational> qb = g.size() > 1 ? exact_div(b, g) : b;
  // scale num and den by a single factor so the ratio is preserved
  BigInt lcm_den = 1;
  for (const Rational& x : qa)
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
  for (const Rational& x : qb)
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
  Laurent rn = from_dense_q(qa, lcm_den);
  Laurent rd = from_dense_q(qb, lcm_den);
  // carry the monomial shift into the numerator; make contents coprime and
  // the denominator's leading coefficient positive
  rn *= Laurent::var_pow2(Var::q, 2 * (s1 - s2));
  BigInt cn = content(rn), cd = content(rd);
  BigInt cg = boost::multiprecision::gcd(cn, cd);
  if (cg > 1) {
    rn = rn.divide_exact(Laurent(cg));
    rd = rd.divide_exact(Laurent(cg));
  }
  if (rd.coeff(Var::q, rd.max_deg2(Var::q)).eval_all_ones() < 0) {
    rn = -rn;
    rd = -rd;
  }
  return PolyFraction{rn, rd};
}

PolyFraction top_cell_probability(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("top_cell_probability: bad k");
  auto [v, w] = f_to_pair(top_cell_f(k, n));
  return reduce_q_fraction(r_polynomial_recursive(v, w), q_binomial(n, k));
}

Laurent predicted_mixed_hodge(int k, int n) {
  if (std::gcd(k, n) != 1)
    throw std::invalid_argument("predicted_mixed_hodge: gcd(k,n) != 1");
  Laurent half_sum = Laurent::var_pow2(Var::q, 1) + Laurent::var_pow2(Var::t, 1);
  return half_sum.pow(n - 1) * qt_catalan(k, n - k);
}

}  // namespace poscat
