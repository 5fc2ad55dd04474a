#include "poscat/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace poscat {

const char* var_name(Var v) {
  switch (v) {
    case Var::q: return "q";
    case Var::t: return "t";
    case Var::a: return "a";
    case Var::z: return "z";
  }
  return "?";
}

Laurent Laurent::monomial(const BigInt& c, const Mono& m) {
  Laurent r;
  if (c != 0) r.terms_[m] = c;
  return r;
}

Laurent Laurent::var_pow2(Var v, int e2, const BigInt& c) {
  Mono m;
  m[v] = e2;
  return monomial(c, m);
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Mono{} &&
         terms_.begin()->second == 1;
}

void Laurent::add_term(const Mono& m, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Laurent Laurent::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Laurent::pow: negative exponent");
  Laurent r(1);
  Laurent base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Laurent::uses(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m[v] != 0) return true;
  return false;
}

int Laurent::max_deg2(Var v) const {
  if (terms_.empty()) throw std::domain_error("max_deg of zero polynomial");
  int best = terms_.begin()->first[v];
  for (const auto& [m, c] : terms_) best = std::max(best, m[v]);
  return best;
}

int Laurent::min_deg2(Var v) const {
  if (terms_.empty()) throw std::domain_error("min_deg of zero polynomial");
  int best = terms_.begin()->first[v];
  for (const auto& [m, c] : terms_) best = std::min(best, m[v]);
  return best;
}

Laurent Laurent::coeff(Var v, int e2) const {
  Laurent r;
  for (const auto& [m, c] : terms_) {
    if (m[v] == e2) {
      Mono m2 = m;
      m2[v] = 0;
      r.add_term(m2, c);
    }
  }
  return r;
}

Laurent Laurent::substitute(Var v, const Laurent& expr) const {
  if (!uses(v)) return *this;
  bool needs_unit = false;
  for (const auto& [m, c] : terms_) {
    if (m[v] < 0 || m[v] % 2 != 0) {
      needs_unit = true;
      break;
    }
  }
  if (expr.is_unit_monomial()) {
    const auto& [em, ec] = *expr.terms_.begin();
    Laurent r;
    for (const auto& [m, c] : terms_) {
      int e2 = m[v];
      Mono shifted = m;
      shifted[v] = 0;
      // target exponents: em scaled by e2/2 per variable (doubled arithmetic)
      Mono scaled;
      for (int i = 0; i < kNumVars; ++i) {
        long long prod = static_cast<long long>(em.e2[i]) * e2;
        if (prod % 2 != 0)
          throw std::domain_error("substitute: non-half-integer exponent produced");
        scaled.e2[i] = static_cast<int>(prod / 2);
      }
      BigInt coeff_pow;
      if (ec == 1) {
        coeff_pow = 1;
      } else if (e2 % 2 == 0) {
        int e = e2 / 2;
        if (e >= 0) {
          coeff_pow = 1;
          for (int i = 0; i < e; ++i) coeff_pow *= ec;
        } else if (ec == -1) {
          coeff_pow = (e % 2 == 0) ? 1 : -1;
        } else {
          throw std::domain_error("substitute: negative power of non-unit coefficient");
        }
      } else {
        throw std::domain_error("substitute: fractional power of coefficient");
      }
      r.add_term(shifted + scaled, c * coeff_pow);
    }
    return r;
  }
  if (needs_unit)
    throw std::domain_error(
        "substitute: variable occurs with negative or fractional exponent and "
        "replacement is not a single term");
  // Horner over integer powers of v.
  int top = max_deg2(v) / 2;
  Laurent r;
  for (int k = top; k >= 0; --k) {
    r = r * expr + coeff(v, 2 * k);
  }
  return r;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
  if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (is_zero()) return Laurent();
  // Window for quotient exponents; in an integral domain the extreme degrees
  // of a product add, so an exact quotient lives in this box.
  Mono lo, hi;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    int pmax = terms_.rbegin()->first.e2[i], pmin = pmax;
    int dmax = d.terms_.rbegin()->first.e2[i], dmin = dmax;
    for (const auto& [m, c] : terms_) {
      pmax = std::max(pmax, m[v]);
      pmin = std::min(pmin, m[v]);
    }
    for (const auto& [m, c] : d.terms_) {
      dmax = std::max(dmax, m[v]);
      dmin = std::min(dmin, m[v]);
    }
    hi.e2[i] = pmax - dmax;
    lo.e2[i] = pmin - dmin;
  }
  const auto& [dlm, dlc] = *d.terms_.rbegin();  // lex-leading divisor term
  Laurent rem = *this;
  Laurent quot;
  while (!rem.is_zero()) {
    const auto& [rlm, rlc] = *rem.terms_.rbegin();
    Mono tm = rlm - dlm;
    bool inside = true;
    for (int i = 0; i < kNumVars; ++i)
      if (tm.e2[i] < lo.e2[i] || tm.e2[i] > hi.e2[i]) inside = false;
    if (!inside || rlc % dlc != 0)
      throw DivisionError("divide_exact: nonzero remainder", rem);
    BigInt tc = rlc / dlc;
    Laurent term = monomial(tc, tm);
    quot += term;
    rem -= term * d;
  }
  return quot;
}

BigInt Laurent::eval_all_ones() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

bool Laurent::is_qt_symmetric() const {
  for (const auto& [m, c] : terms_) {
    if (m[Var::a] != 0 || m[Var::z] != 0)
      throw std::domain_error("is_qt_symmetric: polynomial not in q,t");
    Mono sw = m;
    std::swap(sw.e2[0], sw.e2[1]);
    auto it = terms_.find(sw);
    if (it == terms_.end() || it->second != c) return false;
  }
  return true;
}

bool Laurent::is_qt_unimodal() const {
  // For each total degree and each residue class of the t-exponent mod 1,
  // the diagonal coefficient sequence must rise then fall.
  std::map<std::pair<int, int>, std::map<int, BigInt>> diag;  // (total2, t2 mod 2)
  for (const auto& [m, c] : terms_) {
    if (m[Var::a] != 0 || m[Var::z] != 0)
      throw std::domain_error("is_qt_unimodal: polynomial not in q,t");
    if (m[Var::q] < 0 || m[Var::t] < 0)
      throw std::domain_error("is_qt_unimodal: negative exponents");
    int t2 = m[Var::t];
    diag[{m.total2(), ((t2 % 2) + 2) % 2}][t2 / 2] = c;
  }
  for (const auto& [key, seq] : diag) {
    int jmin = seq.begin()->first, jmax = seq.rbegin()->first;
    std::vector<BigInt> coeffs;
    for (int j = jmin; j <= jmax; ++j) {
      auto it = seq.find(j);
      coeffs.push_back(it == seq.end() ? BigInt(0) : it->second);
    }
    size_t i = 0;
    while (i + 1 < coeffs.size() && coeffs[i] <= coeffs[i + 1]) ++i;
    while (i + 1 < coeffs.size() && coeffs[i] >= coeffs[i + 1]) ++i;
    if (i + 1 != coeffs.size() && coeffs.size() > 1) return false;
  }
  return true;
}

namespace {

void append_exp(std::ostringstream& os, Var v, int e2, bool& lead) {
  if (e2 == 0) return;
  if (!lead) os << "*";
  lead = false;
  os << var_name(v);
  if (e2 == 2) return;
  if (e2 % 2 == 0)
    os << "^" << e2 / 2;
  else
    os << "^(" << e2 << "/2)";
}

}  // namespace

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  // Canonical print order: total degree descending, then q, t, a, z
  // exponents descending.
  std::vector<std::pair<Mono, BigInt>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    int tx = x.first.total2(), ty = y.first.total2();
    if (tx != ty) return tx > ty;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v) {
    BigInt ac = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool lead = true;
    if (ac != 1 || m == Mono{}) {
      os << ac.str();
      lead = false;
    }
    for (Var var : {Var::q, Var::t, Var::a, Var::z}) append_exp(os, var, m[var], lead);
  }
  return os.str();
}

std::string Laurent::to_json() const {
  // List of {"exp": {var: doubled exponent}, "coeff": decimal string}.
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"exp\":{";
    bool f2 = true;
    for (Var var : {Var::q, Var::t, Var::a, Var::z}) {
      if (m[var] == 0) continue;
      if (!f2) os << ",";
      f2 = false;
      os << "\"" << var_name(var) << "\":" << m[var];
    }
    os << "},\"coeff\":\"" << c.str() << "\"}";
  }
  os << "]";
  return os.str();
}

Laurent L_q(int e) { return Laurent::var_pow2(Var::q, 2 * e); }
Laurent L_t(int e) { return Laurent::var_pow2(Var::t, 2 * e); }
Laurent L_a(int e) { return Laurent::var_pow2(Var::a, 2 * e); }
Laurent L_z(int e) { return Laurent::var_pow2(Var::z, 2 * e); }

Laurent q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative n");
  Laurent r;
  for (int i = 0; i < n; ++i) r += L_q(i);
  return r;
}

Laurent q_factorial(int n) {
  Laurent r(1);
  for (int i = 1; i <= n; ++i) r *= q_int(i);
  return r;
}

Laurent q_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("q_binomial: out of range");
  return q_factorial(n).divide_exact(q_factorial(k) * q_factorial(n - k));
}

}  // namespace poscat
