#include "poscat/hecke.hpp"

#include <algorithm>
#include <sstream>

namespace poscat {

Laurent HeckeElement::coeff_of(const Perm& w) const {
  auto it = support_.find(w);
  return it == support_.end() ? Laurent() : it->second;
}

void HeckeElement::add(const Perm& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = support_.find(w);
  if (it == support_.end()) {
    support_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) support_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.support_) add(w, c);
  return *this;
}

HeckeElement HeckeElement::operator*(const Laurent& c) const {
  HeckeElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : support_) r.add(w, cw * c);
  return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  if (n_ != o.n_ || support_.size() != o.support_.size()) return false;
  for (const auto& [w, c] : support_) {
    auto it = o.support_.find(w);
    if (it == o.support_.end() || !(it->second == c)) return false;
  }
  return true;
}

HeckeElement HeckeElement::mul_gen_left(int i) const {
  HeckeElement r(n_);
  const Laurent one_minus_q = Laurent(1) - L_q();
  for (const auto& [v, c] : support_) {
    Perm sv = v.mul_gen_left(i);
    if (sv.length() > v.length()) {
      r.add(sv, c);
    } else {
      r.add(v, c * one_minus_q);
      r.add(sv, c * L_q());
    }
  }
  return r;
}

HeckeElement HeckeElement::mul_gen_right(int i) const {
  HeckeElement r(n_);
  const Laurent one_minus_q = Laurent(1) - L_q();
  for (const auto& [v, c] : support_) {
    Perm vs = v.mul_gen_right(i);
    if (vs.length() > v.length()) {
      r.add(vs, c);
    } else {
      r.add(v, c * one_minus_q);
      r.add(vs, c * L_q());
    }
  }
  return r;
}

HeckeElement HeckeElement::mul_gen_right_inv(int i) const {
  // h T_s^{-1} = q^{-1} (h T_s) + (1 - q^{-1}) h
  HeckeElement r = mul_gen_right(i) * L_q(-1);
  r += *this * (Laurent(1) - L_q(-1));
  return r;
}

HeckeElement HeckeElement::mul_t_right(const Perm& v) const {
  HeckeElement r = *this;
  for (int i : v.reduced_word()) r = r.mul_gen_right(i);
  return r;
}

HeckeElement HeckeElement::t_id(int n) {
  HeckeElement r(n);
  r.add(Perm::identity(n), Laurent(1));
  return r;
}

HeckeElement HeckeElement::t_basis(const Perm& w) {
  return t_id(w.n()).mul_t_right(w);
}

HeckeElement HeckeElement::t_inverse(const Perm& w) {
  HeckeElement r = t_id(w.n());
  std::vector<int> word = w.reduced_word();
  // (T_{s_{i_1}} ... T_{s_{i_l}})^{-1} applied right-to-left
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    r = r.mul_gen_right_inv(*it);
  return r;
}

std::string HeckeElement::to_string() const {
  std::vector<std::pair<Perm, Laurent>> entries(support_.begin(), support_.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream os;
  for (const auto& [w, c] : entries)
    os << w.to_string() << " : " << c.to_string() << "\n";
  return os.str();
}

Laurent epsilon(const HeckeElement& h) {
  return h.coeff_of(Perm::identity(h.n()));
}

const Laurent& RPolyCache::r_polynomial(const Perm& v, const Perm& w) {
  if (v.n() != w.n()) throw std::invalid_argument("r_polynomial: mismatched n");
  auto key = std::make_pair(v, w);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  Laurent result;
  if (!bruhat_leq(v, w)) {
    result = Laurent();
  } else if (v == w) {
    result = Laurent(1);
  } else {
    // smallest i with s_i w < w, for determinism
    int s = 0;
    for (int i = 1; i < w.n(); ++i) {
      if (w.has_left_descent(i)) {
        s = i;
        break;
      }
    }
    Perm sw = w.mul_gen_left(s);
    Perm sv = v.mul_gen_left(s);
    if (sv.length() < v.length()) {
      result = r_polynomial(sv, sw);
    } else {
      // copy before the second recursive call; an insertion may rehash memo_
      Laurent r1 = r_polynomial(sv, w);
      Laurent r2 = r_polynomial(sv, sw);
      result = (L_q() - Laurent(1)) * r1 + L_q() * r2;
    }
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

Laurent r_polynomial_recursive(const Perm& v, const Perm& w) {
  RPolyCache cache;
  return cache.r_polynomial(v, w);
}

Laurent r_polynomial_trace(const Perm& v, const Perm& w) {
  if (v.n() != w.n()) throw std::invalid_argument("r_polynomial_trace: mismatched n");
  HeckeElement prod = HeckeElement::t_inverse(w).mul_t_right(v);
  return L_q(w.length() - v.length()) * epsilon(prod);
}

}  // namespace poscat
