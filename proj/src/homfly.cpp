#include "poscat/homfly.hpp"

#include <sstream>

namespace poscat {

namespace {

// sigma_i maps to c T_i with c = -q^{-1/2} a^{-1}; the two skein coefficient
// constraints force c^2 = a^{-2} q^{-1} and z = q^{1/2} - q^{-1/2}.
Laurent crossing_scalar() {
  Mono m;
  m[Var::q] = -1;
  m[Var::a] = -2;
  return Laurent::monomial(-1, m);
}

Laurent crossing_scalar_inv() {
  Mono m;
  m[Var::q] = 1;
  m[Var::a] = 2;
  return Laurent::monomial(-1, m);
}

Perm restrict_perm(const Perm& w) {
  std::vector<int> img(w.images().begin(), w.images().end() - 1);
  return Perm(std::move(img));
}

// Markov functional E_n = (a - a^{-1})^{n-1} Tr_n, evaluated by strand
// reduction: T_w with w(j) = n factors as T_u T_{n-1} T_{n-2} ... T_j with
// u in S_{n-1}, and the T_{n-1} letter contributes weight -a(q-1).
Laurent markov_functional(const HeckeElement& h) {
  int n = h.n();
  if (n == 1) {
    Laurent r;
    for (const auto& [w, c] : h.support()) r += c;
    return r;
  }
  const Laurent w_keep = L_a(1) - L_a(-1);
  const Laurent w_drop = -(L_a(1) * (L_q() - Laurent(1)));
  HeckeElement down(n - 1);
  for (const auto& [w, c] : h.support()) {
    int j = w.inverse()(n);
    if (j == n) {
      down.add(restrict_perm(w), c * w_keep);
      continue;
    }
    // u = w composed with the inverse descending chain; u(n) = n
    std::vector<int> uimg(n);
    for (int x = 1; x <= n; ++x) uimg[x - 1] = w(x < n ? (x >= j ? x + 1 : x) : j);
    Perm u = restrict_perm(Perm(std::move(uimg)));
    HeckeElement term(n - 1);
    term.add(u, c * w_drop);
    for (int i = n - 2; i >= j; --i) term = term.mul_gen_right(i);
    down += term;
  }
  return markov_functional(down);
}

}  // namespace

Laurent q_to_z(const Laurent& s) {
  Laurent rem = s, out;
  const Laurent zq = Laurent::var_pow2(Var::q, 1) - Laurent::var_pow2(Var::q, -1);
  while (!rem.is_zero()) {
    if (rem.uses(Var::t) || rem.uses(Var::a) || rem.uses(Var::z))
      throw std::domain_error("q_to_z: input not purely in q");
    int d2 = rem.max_deg2(Var::q);
    if (d2 < 0)
      throw std::domain_error("q_to_z: no polynomial representation in z");
    Laurent lead = rem.coeff(Var::q, d2);
    out += lead * L_z(0) * Laurent::var_pow2(Var::z, 2 * d2);
    rem -= lead * zq.pow(d2);
  }
  return out;
}

Laurent homfly(const BraidWord& b) {
  if (b.n > 10) throw std::invalid_argument("homfly: strand bound (10) exceeded");
  HeckeElement h = HeckeElement::t_id(b.n);
  const Laurent c = crossing_scalar(), cinv = crossing_scalar_inv();
  for (int l : b.letters) {
    if (l > 0)
      h = h.mul_gen_right(l) * c;
    else
      h = h.mul_gen_right_inv(-l) * cinv;
  }
  Laurent x = markov_functional(h);  // = z^{n-1} P, in a and q^{1/2}
  // convert each a-coefficient to a z-polynomial, then shift by z^{-(n-1)}
  Laurent p;
  if (x.is_zero()) return p;
  for (int a2 = x.min_deg2(Var::a); a2 <= x.max_deg2(Var::a); ++a2) {
    Laurent ca = x.coeff(Var::a, a2);
    if (ca.is_zero()) continue;
    Laurent cz = q_to_z(ca);
    Mono shift;
    shift[Var::a] = a2;
    shift[Var::z] = -2 * (b.n - 1);
    p += cz * Laurent::monomial(1, shift);
  }
  for (const auto& [m, cc] : p.terms()) {
    if (m[Var::a] % 2 != 0 || m[Var::z] % 2 != 0)
      throw std::logic_error("homfly: non-integer a/z exponent in result");
  }
  return p;
}

std::string QFraction::to_string() const {
  if (den_pow_qm1 == 0) return num.to_string();
  std::ostringstream os;
  os << "(" << num.to_string() << ") / (q - 1)";
  if (den_pow_qm1 > 1) os << "^" << den_pow_qm1;
  return os.str();
}

QFraction homfly_top(const Perm& v, const Perm& w) {
  int n = v.n();
  int kappa = n - 1 - (w.length() - v.length());
  Laurent p = homfly(braid_from_pair(v, w));
  bool leq = bruhat_leq(v, w);
  int mda = p.max_deg2(Var::a);
  if (leq) {
    if (mda != 2 * kappa)
      throw std::logic_error("homfly_top: top a-degree != kappa for v <= w");
  } else {
    if (mda >= 2 * kappa)
      throw std::logic_error("homfly_top: top a-degree not below kappa for v ≰ w");
    return QFraction{};
  }
  Laurent coef = p.coeff(Var::a, 2 * kappa);  // in z
  int m = 0;
  if (!coef.is_zero() && coef.uses(Var::z)) m = std::max(0, -coef.min_deg2(Var::z) / 2);
  // clear z-denominators, substitute, then divide by z^m = q^{-m/2}(q-1)^m
  Laurent y = coef * L_z(m);
  y = y.substitute(Var::z, Laurent::var_pow2(Var::q, 1) - Laurent::var_pow2(Var::q, -1));
  Mono mono;
  mono[Var::q] = -kappa + m;  // a^kappa -> q^{-kappa/2}, and q^{m/2} from 1/z^m
  QFraction f;
  f.num = y * Laurent::monomial(1, mono);
  f.den_pow_qm1 = m;
  const Laurent qm1 = L_q() - Laurent(1);
  while (f.den_pow_qm1 > 0) {
    try {
      f.num = f.num.divide_exact(qm1);
      --f.den_pow_qm1;
    } catch (const DivisionError&) {
      break;
    }
  }
  return f;
}

Laurent homfly_top_scaled(const Perm& v, const Perm& w) {
  QFraction f = homfly_top(v, w);
  int n = v.n();
  if (f.den_pow_qm1 > n - 1)
    throw std::logic_error("homfly_top_scaled: denominator exceeds (q-1)^{n-1}");
  return f.num * (L_q() - Laurent(1)).pow(n - 1 - f.den_pow_qm1);
}

}  // namespace poscat
