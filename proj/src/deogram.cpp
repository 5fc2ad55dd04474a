#include "poscat/deogram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace poscat {

Perm GridWord::product() const { return word_product(n, word); }

GridWord grid_word(int k, int n, const std::vector<int>& lambda) {
  if (k < 0 || k > n) throw std::invalid_argument("grid_word: bad k");
  GridWord g;
  g.k = k;
  g.n = n;
  g.lambda = lambda;
  g.lambda.resize(k, 0);
  g.grid = true;
  int prev = n - k;
  for (int r = 1; r <= k; ++r) {
    int len = g.lambda[r - 1];
    if (len < 0 || len > n - k || len > prev)
      throw std::invalid_argument("grid_word: lambda not a partition in the rectangle");
    prev = len;
    for (int c = 1; c <= len; ++c) {
      g.word.push_back(k - r + c);
      g.box.emplace_back(r, c);
    }
  }
  return g;
}

GridWord explicit_word(int n, const std::vector<int>& word) {
  GridWord g;
  g.n = n;
  g.word = word;
  g.grid = false;
  for (int i : word)
    if (i < 1 || i >= n) throw std::invalid_argument("explicit_word: letter out of range");
  Perm w = g.product();
  if (w.length() != static_cast<int>(word.size()))
    throw std::invalid_argument("explicit_word: word is not reduced");
  return g;
}

std::vector<int> shape_of_grassmannian(const Perm& w, int k) {
  if (!w.is_k_grassmannian(k))
    throw std::invalid_argument("shape_of_grassmannian: w not k-Grassmannian");
  Perm inv = w.inverse();
  std::vector<int> lambda(k, 0);
  for (int r = 1; r <= k; ++r) lambda[r - 1] = inv(k + 1 - r) - (k + 1 - r);
  return lambda;
}

Perm Deogram::u() const {
  Perm p = Perm::identity(word.n);
  for (size_t i = 0; i < choices.size(); ++i)
    if (choices[i] == Box::crossing) p = p.mul_gen_right(word.word[i]);
  return p;
}

int Deogram::xing() const {
  return static_cast<int>(std::count(choices.begin(), choices.end(), Box::crossing));
}

int Deogram::elb() const {
  return static_cast<int>(choices.size()) - xing();
}

bool is_distinguished(const GridWord& w, const std::vector<Box>& choices) {
  if (choices.size() != w.word.size())
    throw std::invalid_argument("is_distinguished: wrong choices length");
  Perm pi = Perm::identity(w.n);
  for (size_t i = 0; i < choices.size(); ++i) {
    int s = w.word[i];
    if (choices[i] == Box::crossing) {
      pi = pi.mul_gen_right(s);
    } else {
      Perm ps = pi.mul_gen_right(s);
      if (ps.length() < pi.length()) return false;
    }
  }
  return true;
}

WireResult route_wires(const GridWord& w, const std::vector<Box>& choices) {
  if (choices.size() != w.word.size())
    throw std::invalid_argument("route_wires: wrong choices length");
  WireResult res;
  res.distinguished = true;
  int n = w.n;
  if (!w.grid) {
    // wiring-diagram form: wires sit on levels 1..n; a crossing at s_j swaps
    // the wires on levels j, j+1, an elbow leaves them in place and requires
    // the lower label to be smaller
    std::vector<int> lab(n + 1);
    for (int m = 1; m <= n; ++m) lab[m] = m;
    for (size_t i = 0; i < choices.size(); ++i) {
      int j = w.word[i];
      if (choices[i] == Box::crossing) {
        std::swap(lab[j], lab[j + 1]);
      } else if (lab[j] > lab[j + 1]) {
        res.distinguished = false;
      }
    }
    std::vector<int> img(lab.begin() + 1, lab.end());
    res.u = Perm(std::move(img));
    return res;
  }
  // geometric form. The wires of the eventual routing are traversed from the
  // northwest: a wire enters on the left edge of row r with label k+1-r, or
  // on the top edge of column c with label k+c, and travels south and east.
  // An elbow turns its west entrant south (the bottom-left arc) and its
  // north entrant east (the top-right arc); it is permitted iff the
  // bottom-left label is smaller than the top-right label.
  int k = w.k;
  const std::vector<int>& lam = w.lambda;
  auto lam_at = [&](int r) { return (r >= 1 && r <= k) ? lam[r - 1] : 0; };
  int lam1 = k >= 1 ? lam[0] : 0;
  auto choice_at = [&](int r, int c) {
    int idx = 0;
    for (int rr = 1; rr < r; ++rr) idx += lam_at(rr);
    return choices[idx + c - 1];
  };
  std::vector<std::vector<int>> south_out(k + 2), east_out(k + 2);
  for (int r = 1; r <= k; ++r) {
    south_out[r].assign(lam_at(r) + 1, 0);
    east_out[r].assign(lam_at(r) + 1, 0);
  }
  for (int r = 1; r <= k; ++r) {
    for (int c = 1; c <= lam_at(r); ++c) {
      int west_in = (c == 1) ? (k + 1 - r) : east_out[r][c - 1];
      int north_in = (r == 1) ? (k + c) : south_out[r - 1][c];
      if (choice_at(r, c) == Box::crossing) {
        east_out[r][c] = west_in;
        south_out[r][c] = north_in;
      } else {
        if (west_in > north_in) res.distinguished = false;
        south_out[r][c] = west_in;
        east_out[r][c] = north_in;
      }
    }
  }
  // u(southeast entry position) = northwest exit label, read off along the
  // staircase from the southwest corner
  std::vector<int> img(n, 0);
  int pos = 0;
  for (int r = k; r >= 1; --r) {
    for (int c = lam_at(r + 1) + 1; c <= lam_at(r); ++c)
      img[pos++] = south_out[r][c];
    img[pos++] = lam_at(r) >= 1 ? east_out[r][lam_at(r)] : (k + 1 - r);
  }
  for (int c = lam1 + 1; c <= n - k; ++c) img[pos++] = k + c;
  res.u = Perm(std::move(img));
  return res;
}

namespace {

void deogram_dfs(const GridWord& word, const Perm& v, size_t pos, Perm& pi,
                 std::vector<Box>& choices,
                 const std::function<void(const std::vector<Box>&)>& emit) {
  size_t len = word.word.size();
  // reachability: at least l(pi^{-1} v) more crossings are needed
  if ((pi.inverse() * v).length() > static_cast<int>(len - pos)) return;
  if (pos == len) {
    if (pi == v) emit(choices);
    return;
  }
  int s = word.word[pos];
  Perm ps = pi.mul_gen_right(s);
  bool ascent = ps.length() > pi.length();
  // crossing branch
  choices[pos] = Box::crossing;
  std::swap(pi, ps);
  deogram_dfs(word, v, pos + 1, pi, choices, emit);
  std::swap(pi, ps);
  // elbow branch, only at an ascent
  if (ascent) {
    choices[pos] = Box::elbow;
    deogram_dfs(word, v, pos + 1, pi, choices, emit);
  }
}

}  // namespace

void for_each_deogram(const GridWord& word, const Perm& v,
                      const std::function<void(const std::vector<Box>&)>& emit) {
  if (word.length() > 22)
    throw std::invalid_argument("for_each_deogram: word length bound (22) exceeded");
  if (v.n() != word.n) throw std::invalid_argument("for_each_deogram: mismatched n");
  std::vector<Box> choices(word.word.size(), Box::crossing);
  Perm pi = Perm::identity(word.n);
  deogram_dfs(word, v, 0, pi, choices, emit);
}

std::vector<Deogram> enumerate_deograms(const GridWord& word, const Perm& v) {
  std::vector<Deogram> out;
  for_each_deogram(word, v,
                   [&](const std::vector<Box>& ch) { out.push_back(Deogram{word, ch}); });
  return out;
}

Laurent deodhar_point_count(const BoundedAffinePerm& f) {
  auto [v, w] = f_to_pair(f);
  GridWord g = grid_word(f.k(), f.n(), shape_of_grassmannian(w, f.k()));
  int lv = v.length();
  Laurent total;
  const Laurent qm1 = L_q() - Laurent(1);
  for_each_deogram(g, v, [&](const std::vector<Box>& ch) {
    int xing = static_cast<int>(std::count(ch.begin(), ch.end(), Box::crossing));
    int elb = static_cast<int>(ch.size()) - xing;
    if ((xing - lv) % 2 != 0 || xing < lv)
      throw std::logic_error("deodhar_point_count: xing - l(v) not even nonnegative");
    total += qm1.pow(elb) * L_q((xing - lv) / 2);
  });
  return total;
}

MaximalDeograms maximal_deograms(const BoundedAffinePerm& f) {
  auto [v, w] = f_to_pair(f);
  GridWord g = grid_word(f.k(), f.n(), shape_of_grassmannian(w, f.k()));
  MaximalDeograms res;
  int best = -1;
  for_each_deogram(g, v, [&](const std::vector<Box>& ch) {
    int xing = static_cast<int>(std::count(ch.begin(), ch.end(), Box::crossing));
    if (xing > best) {
      best = xing;
      res.list.clear();
      res.count = 0;
    }
    if (xing == best) {
      ++res.count;
      res.list.push_back(Deogram{g, ch});
    }
  });
  res.min_elbows = g.length() - best;
  return res;
}

std::string render_deogram(const Deogram& d) {
  const GridWord& g = d.word;
  if (!g.grid) throw std::invalid_argument("render_deogram: not a grid word");
  int k = g.k, n = g.n;
  auto lam_at = [&](int r) { return (r >= 1 && r <= k) ? g.lambda[r - 1] : 0; };
  // staircase entry labels, as in route_wires
  std::vector<std::vector<int>> bottom_in(k + 2);
  std::vector<int> right_in(k + 2, 0);
  for (int r = 1; r <= k; ++r) bottom_in[r].assign(lam_at(r) + 1, 0);
  int next_label = 0;
  for (int r = k; r >= 1; --r) {
    for (int c = lam_at(r + 1) + 1; c <= lam_at(r); ++c) bottom_in[r][c] = ++next_label;
    right_in[r] = ++next_label;
  }
  std::ostringstream os;
  os << "k=" << k << " n=" << n << " lambda=";
  for (int r = 1; r <= k; ++r) os << (r > 1 ? "," : "") << lam_at(r);
  os << "\n";
  auto center = [](int width, const std::string& s) {
    int pad = width - static_cast<int>(s.size());
    int l = pad / 2;
    return std::string(l > 0 ? l : 0, ' ') + s +
           std::string(pad - l > 0 ? pad - l : 0, ' ');
  };
  // top exit labels k+1 .. k+lambda_1
  os << "    ";
  for (int c = 1; c <= lam_at(1); ++c) os << center(4, std::to_string(k + c));
  os << "\n";
  int idx = 0;
  for (int r = 1; r <= k; ++r) {
    os << "    ";
    for (int c = 1; c <= lam_at(r); ++c) os << "+---";
    if (lam_at(r) > 0) os << "+";
    // exposed bottom labels of the previous row
    for (int c = lam_at(r) + 1; c <= lam_at(r - 1); ++c)
      os << center(4, std::to_string(bottom_in[r - 1][c]));
    os << "\n";
    os << center(3, std::to_string(k + 1 - r)) << " ";
    for (int c = 1; c <= lam_at(r); ++c) {
      os << "| " << (d.choices[idx++] == Box::crossing ? "X" : "O") << " ";
    }
    os << "| " << right_in[r] << "\n";
  }
  os << "    ";
  for (int c = 1; c <= lam_at(k); ++c) os << "+---";
  if (lam_at(k) > 0) os << "+";
  os << "\n";
  os << "    ";
  for (int c = 1; c <= lam_at(k); ++c) os << center(4, std::to_string(bottom_in[k][c]));
  os << "\n";
  return os.str();
}

Deogram parse_deogram(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header))
    throw std::invalid_argument("parse_deogram: empty input");
  int k = 0, n = 0;
  std::vector<int> lambda;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("k=", 0) == 0) k = std::stoi(tok.substr(2));
      else if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
      else if (tok.rfind("lambda=", 0) == 0) {
        std::string body = tok.substr(7);
        std::istringstream ls(body);
        std::string part;
        while (std::getline(ls, part, ',')) lambda.push_back(std::stoi(part));
      }
    }
  }
  if (k <= 0 || n <= 0 || lambda.empty())
    throw std::invalid_argument("parse_deogram: malformed header");
  GridWord g = grid_word(k, n, lambda);
  std::vector<Box> choices;
  std::string line;
  while (std::getline(is, line)) {
    size_t pos = line.find('|');
    while (pos != std::string::npos) {
      size_t next = line.find('|', pos + 1);
      if (next == std::string::npos) break;
      std::string cell = line.substr(pos + 1, next - pos - 1);
      cell.erase(std::remove(cell.begin(), cell.end(), ' '), cell.end());
      if (cell == "X") choices.push_back(Box::crossing);
      else if (cell == "O") choices.push_back(Box::elbow);
      pos = next;
    }
  }
  if (static_cast<int>(choices.size()) != g.length())
    throw std::invalid_argument("parse_deogram: wrong number of boxes");
  return Deogram{g, choices};
}

}  // namespace poscat
