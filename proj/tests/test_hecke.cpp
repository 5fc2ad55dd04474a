#include <doctest.h>

#include "poscat/hecke.hpp"

using namespace poscat;

namespace {

// T_w * h, multiplying generator by generator along a reduced word of w
HeckeElement t_mul_left(const Perm& w, const HeckeElement& h) {
  HeckeElement r = h;
  std::vector<int> word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = r.mul_gen_left(*it);
  return r;
}

}  // namespace

TEST_CASE("quadratic relation (T_s + q)(T_s - 1) = 0") {
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i) {
      HeckeElement ts = HeckeElement::t_basis(Perm::transposition(n, i));
      HeckeElement sq = ts.mul_gen_right(i);  // T_s T_s
      HeckeElement expected = ts * (Laurent(1) - L_q());
      expected += HeckeElement::t_id(n) * L_q();
      CHECK(sq == expected);
    }
}

TEST_CASE("generator products") {
  int n = 3;
  Perm s1 = Perm::transposition(n, 1), s2 = Perm::transposition(n, 2);
  HeckeElement t1 = HeckeElement::t_basis(s1);
  HeckeElement rel = t1 * (Laurent(1) - L_q());
  rel += HeckeElement::t_id(n) * L_q();
  CHECK(t1.mul_gen_right(1) == rel);
  CHECK(HeckeElement::t_id(n).mul_gen_right(1) == t1);
  CHECK(t1.mul_gen_right(2) == HeckeElement::t_basis(s1 * s2));
}

TEST_CASE("t_inverse") {
  CHECK(HeckeElement::t_inverse(Perm::identity(3)) == HeckeElement::t_id(3));
  Perm s1 = Perm::transposition(2, 1);
  HeckeElement expect(2);
  expect.add(s1, L_q(-1));
  expect.add(Perm::identity(2), Laurent(1) - L_q(-1));
  CHECK(HeckeElement::t_inverse(s1) == expect);
  // T_w T_w^{-1} = T_id; the support of T_w^{-1} consists of u with
  // u^{-1} <= w (equivalently u <= w^{-1})
  for (const Perm& w : all_perms(4)) {
    HeckeElement inv = HeckeElement::t_inverse(w);
    CHECK(t_mul_left(w, inv) == HeckeElement::t_id(4));
    for (const auto& [u, c] : inv.support()) CHECK(bruhat_leq(u.inverse(), w));
  }
}

TEST_CASE("standard trace") {
  CHECK(epsilon(HeckeElement::t_id(2)) == Laurent(1));
  CHECK(epsilon(HeckeElement::t_basis(Perm::transposition(2, 1))).is_zero());
  // epsilon(T_u T_v) = q^{l(v)} iff u = v^{-1}, exhaustively in S_4
  for (const Perm& u : all_perms(4))
    for (const Perm& v : all_perms(4)) {
      Laurent tr = epsilon(HeckeElement::t_basis(u).mul_t_right(v));
      if (u == v.inverse())
        CHECK(tr == L_q(v.length()));
      else
        CHECK(tr.is_zero());
    }
}

TEST_CASE("element serialization") {
  HeckeElement h = HeckeElement::t_inverse(Perm::transposition(2, 1));
  CHECK(h.to_string() == "1,2 : 1 - q^-1\n2,1 : q^-1\n");
}

TEST_CASE("r-polynomial base cases and examples") {
  Perm id2 = Perm::identity(2), s1 = Perm::transposition(2, 1);
  CHECK(r_polynomial_recursive(s1, s1) == Laurent(1));
  CHECK(r_polynomial_recursive(id2, s1) == L_q() - Laurent(1));
  CHECK(r_polynomial_trace(id2, id2) == Laurent(1));
  CHECK(r_polynomial_trace(id2, s1) == L_q() - Laurent(1));
  // R for the (2,5) top cell is (q-1)^4 (q^2+1)
  Laurent r = r_polynomial_recursive(Perm::identity(5), max_grassmannian(2, 5));
  CHECK(r == (L_q() - Laurent(1)).pow(4) * (L_q(2) + Laurent(1)));
}

TEST_CASE("r-polynomial structural properties on S4") {
  RPolyCache cache;
  for (const Perm& v : all_perms(4))
    for (const Perm& w : all_perms(4)) {
      const Laurent& r = cache.r_polynomial(v, w);
      bool leq = bruhat_leq(v, w);
      CHECK(r.is_zero() == !leq);
      if (!leq) continue;
      CHECK(r == r_polynomial_trace(v, w));
      CHECK(r.max_deg2(Var::q) == 2 * (w.length() - v.length()));
      // q = 1 specialization
      BigInt at_one = r.substitute(Var::q, Laurent(1)).eval_all_ones();
      CHECK(at_one == (v == w ? 1 : 0));
    }
}
