#include "poscat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace poscat {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > n() || seen[x - 1])
      throw std::invalid_argument("Perm: not a permutation of 1..n");
    seen[x - 1] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition: bad index");
  Perm p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> inv(n());
  for (int i = 1; i <= n(); ++i) inv[images_[i - 1] - 1] = i;
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

Perm Perm::operator*(const Perm& o) const {
  if (n() != o.n()) throw std::invalid_argument("Perm product: mismatched n");
  std::vector<int> v(n());
  for (int i = 1; i <= n(); ++i) v[i - 1] = images_[o(i) - 1];
  Perm r;
  r.images_ = std::move(v);
  return r;
}

Perm Perm::mul_gen_left(int i) const {
  Perm r = *this;
  for (auto& x : r.images_) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  return r;
}

Perm Perm::mul_gen_right(int i) const {
  Perm r = *this;
  std::swap(r.images_[i - 1], r.images_[i]);
  return r;
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

int Perm::cycle_count() const {
  std::vector<bool> seen(n(), false);
  int c = 0;
  for (int i = 1; i <= n(); ++i) {
    if (seen[i - 1]) continue;
    ++c;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      j = images_[j - 1];
    }
  }
  return c;
}

bool Perm::has_left_descent(int i) const {
  // position of i comes after position of i+1
  int pi = 0, pi1 = 0;
  for (int j = 1; j <= n(); ++j) {
    if (images_[j - 1] == i) pi = j;
    if (images_[j - 1] == i + 1) pi1 = j;
  }
  return pi > pi1;
}

bool Perm::has_right_descent(int i) const { return images_[i - 1] > images_[i]; }

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  Perm w = *this;
  while (!w.is_identity()) {
    for (int i = 1; i < n(); ++i) {
      if (w.has_left_descent(i)) {
        word.push_back(i);
        w = w.mul_gen_left(i);
        break;
      }
    }
  }
  return word;
}

bool Perm::is_k_grassmannian(int k) const {
  if (k < 0 || k > n()) throw std::invalid_argument("is_k_grassmannian: bad k");
  Perm inv = inverse();
  for (int i = 1; i < k; ++i)
    if (inv(i) > inv(i + 1)) return false;
  for (int i = k + 1; i < n(); ++i)
    if (inv(i) > inv(i + 1)) return false;
  return true;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) {
    if (i) os << ",";
    os << images_[i];
  }
  return os.str();
}

Perm Perm::parse(const std::string& s) {
  std::vector<int> v;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      size_t used = 0;
      int x = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("junk");
      v.push_back(x);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed permutation entry at position " +
                                  std::to_string(pos) + ": '" + tok + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (v.empty()) throw std::invalid_argument("empty permutation string");
  return Perm(std::move(v));
}

size_t Perm::Hash::operator()(const Perm& p) const {
  size_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

Perm word_product(int n, const std::vector<int>& word) {
  Perm p = Perm::identity(n);
  for (int i : word) p = p.mul_gen_right(i);
  return p;
}

bool bruhat_leq(const Perm& v, const Perm& w) {
  if (v.n() != w.n()) throw std::invalid_argument("bruhat_leq: mismatched n");
  int n = v.n();
  // dot criterion: for all i,j, #{a <= i : v(a) >= j} <= #{a <= i : w(a) >= j}
  std::vector<int> cv(n + 2, 0), cw(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= v(i); ++j) ++cv[j];
    for (int j = 1; j <= w(i); ++j) ++cw[j];
    for (int j = 1; j <= n; ++j)
      if (cv[j] > cw[j]) return false;
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Perm> grassmannian_perms(int k, int n) {
  // Choose the set of positions of values 1..k; both blocks increasing.
  std::vector<Perm> out;
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 1);
  auto emit = [&]() {
    std::vector<int> img(n, 0);
    int low = 1, high = k + 1;
    std::vector<bool> is_low(n + 1, false);
    for (int p : comb) is_low[p] = true;
    for (int p = 1; p <= n; ++p) img[p - 1] = is_low[p] ? low++ : high++;
    out.push_back(Perm(std::move(img)));
  };
  if (k == 0 || k == n) {
    out.push_back(Perm::identity(n));
    return out;
  }
  while (true) {
    emit();
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + 1 + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

Perm max_grassmannian(int k, int n) {
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = (i + k - 1) % n + 1;
  return Perm(std::move(img));
}

BoundedAffinePerm::BoundedAffinePerm(int k, int n, std::vector<int> window)
    : k_(k), n_(n), window_(std::move(window)) {
  if (n_ <= 0 || k_ < 0 || k_ > n_ || static_cast<int>(window_.size()) != n_)
    throw std::invalid_argument("BoundedAffinePerm: bad dimensions");
  long sum = 0;
  std::vector<bool> seen(n_, false);
  for (int j = 1; j <= n_; ++j) {
    int fj = window_[j - 1];
    if (fj < j || fj > j + n_)
      throw std::invalid_argument("BoundedAffinePerm: j <= f(j) <= j+n violated");
    sum += fj - j;
    int r = ((fj - 1) % n_ + n_) % n_;
    if (seen[r]) throw std::invalid_argument("BoundedAffinePerm: not a bijection mod n");
    seen[r] = true;
  }
  if (sum != static_cast<long>(k_) * n_)
    throw std::invalid_argument("BoundedAffinePerm: displacement sum != k*n");
}

int BoundedAffinePerm::operator()(int j) const {
  int q = (j - 1) / n_, r = (j - 1) % n_;
  if (r < 0) {
    r += n_;
    --q;
  }
  return window_[r] + q * n_;
}

Perm BoundedAffinePerm::reduction() const {
  std::vector<int> img(n_);
  for (int j = 1; j <= n_; ++j) img[j - 1] = (window_[j - 1] - 1) % n_ + 1;
  return Perm(std::move(img));
}

bool BoundedAffinePerm::has_fixed_point() const {
  for (int j = 1; j <= n_; ++j)
    if (window_[j - 1] == j) return true;
  return false;
}

std::string BoundedAffinePerm::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    if (i) os << ",";
    os << window_[i];
  }
  return os.str();
}

BoundedAffinePerm BoundedAffinePerm::parse(const std::string& s) {
  std::vector<int> v;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      size_t used = 0;
      int x = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("junk");
      v.push_back(x);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed window entry at position " +
                                  std::to_string(pos) + ": '" + tok + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (v.empty()) throw std::invalid_argument("empty window string");
  int n = static_cast<int>(v.size());
  long sum = 0;
  for (int j = 1; j <= n; ++j) sum += v[j - 1] - j;
  if (sum % n != 0) throw std::invalid_argument("window displacement sum not divisible by n");
  return BoundedAffinePerm(static_cast<int>(sum / n), n, std::move(v));
}

BoundedAffinePerm top_cell_f(int k, int n) {
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = i + k;
  return BoundedAffinePerm(k, n, std::move(w));
}

namespace {

// u~ extension of a one-line permutation
int ext(const std::vector<int>& img, int j, int n) {
  int q = (j - 1) / n, r = (j - 1) % n;
  if (r < 0) {
    r += n;
    --q;
  }
  return img[r] + q * n;
}

int tau_kn(int j, int k, int n) {
  int q = (j - 1) / n, r = (j - 1) % n;
  if (r < 0) {
    r += n;
    --q;
  }
  int jj = r + 1;
  return (jj <= k ? jj + n : jj) + q * n;
}

}  // namespace

BoundedAffinePerm pair_to_f(const Perm& v, const Perm& w, int k) {
  if (v.n() != w.n()) throw std::invalid_argument("pair_to_f: mismatched n");
  if (!w.is_k_grassmannian(k))
    throw std::invalid_argument("pair_to_f: w is not k-Grassmannian");
  if (!bruhat_leq(v, w)) throw std::invalid_argument("pair_to_f: v ≰ w");
  int n = v.n();
  const std::vector<int> vinv = v.inverse().images();
  std::vector<int> window(n);
  for (int j = 1; j <= n; ++j)
    window[j - 1] = ext(vinv, tau_kn(ext(w.images(), j, n), k, n), n);
  return BoundedAffinePerm(k, n, std::move(window));
}

std::pair<Perm, Perm> f_to_pair(const BoundedAffinePerm& f) {
  // Read w off the wrap pattern and v^{-1} off the window values; validity of
  // the window guarantees (v, w) is the unique preimage.
  int n = f.n(), k = f.k();
  std::vector<int> wimg(n), vinv(n);
  int low = 0, high = k;
  for (int j = 1; j <= n; ++j) {
    int fj = f.window()[j - 1];
    if (fj > n) {
      wimg[j - 1] = ++low;
      vinv[wimg[j - 1] - 1] = fj - n;
    } else {
      wimg[j - 1] = ++high;
      vinv[wimg[j - 1] - 1] = fj;
    }
  }
  if (low != k) throw std::invalid_argument("f_to_pair: window has wrong wrap count");
  Perm w(wimg);
  Perm v = Perm(vinv).inverse();
  if (!bruhat_leq(v, w))
    throw std::invalid_argument("f_to_pair: recovered pair violates v <= w");
  if (pair_to_f(v, w, k) != f)
    throw std::invalid_argument("f_to_pair: window not in the image of pair_to_f");
  return {v, w};
}

std::vector<BoundedAffinePerm> enumerate_bounded_affine(int k, int n) {
  if (n > 9) throw std::invalid_argument("enumerate_bounded_affine: n > 9 unsupported");
  if (k < 0 || k > n) throw std::invalid_argument("enumerate_bounded_affine: bad k");
  // Windows are sigma(j) + n * x_j for a permutation sigma and wrap choices
  // x_j in {0,1}: sigma(j) < j forces a wrap, sigma(j) > j forbids one, and
  // fixed points are free; exactly k wraps in total.
  std::vector<BoundedAffinePerm> out;
  for (const Perm& sigma : all_perms(n)) {
    int forced = 0;
    std::vector<int> free_pos;
    for (int j = 1; j <= n; ++j) {
      if (sigma(j) < j) ++forced;
      else if (sigma(j) == j) free_pos.push_back(j);
    }
    int need = k - forced;
    if (need < 0 || need > static_cast<int>(free_pos.size())) continue;
    int m = static_cast<int>(free_pos.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) != need) continue;
      std::vector<int> window(n);
      for (int j = 1; j <= n; ++j)
        window[j - 1] = sigma(j) + (sigma(j) < j ? n : 0);
      for (int b = 0; b < m; ++b)
        if (mask & (1u << b)) window[free_pos[b] - 1] += n;
      out.emplace_back(k, n, std::move(window));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace poscat
