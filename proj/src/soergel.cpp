#include "poscat/soergel.hpp"

#include <algorithm>
#include <stdexcept>

namespace poscat {

void GradedBimodule2::check_grading() const {
  int m = rank();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!right_y[i][j].is_homogeneous(gen_degrees[j] + 2 - gen_degrees[i]))
        throw std::logic_error("GradedBimodule2: right_y entry not homogeneous");
}

GradedBimodule2 bimodule_R() {
  GradedBimodule2 b;
  b.gen_degrees = {0};
  b.right_y = {{UniPoly::y()}};
  return b;
}

GradedBimodule2 bimodule_B_s() {
  GradedBimodule2 b;
  b.gen_degrees = {0, 2};
  b.right_y = pm_zero(2, 2);
  b.right_y[1][0] = UniPoly(1);      // (1x1).y = 1xy
  b.right_y[0][1] = UniPoly::y(2);   // (1xy).y = y^2 (1x1)
  return b;
}

GradedBimodule2 tensor(const GradedBimodule2& b, const GradedBimodule2& c) {
  GradedBimodule2 r;
  int rb = b.rank(), rc = c.rank();
  r.gen_degrees.resize(rb * rc);
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < rc; ++j)
      r.gen_degrees[i * rc + j] = b.gen_degrees[i] + c.gen_degrees[j];
  r.right_y = pm_zero(rb * rc, rb * rc);
  // (e_i x f_j).y = sum_l (e_i . C[l][j]) x f_l; the coefficient crosses the
  // middle tensor as a right action on the left factor
  for (int l = 0; l < rc; ++l)
    for (int j = 0; j < rc; ++j) {
      if (c.right_y[l][j].is_zero()) continue;
      PolyMatrix p = pm_poly_eval(c.right_y[l][j], b.right_y);
      for (int a = 0; a < rb; ++a)
        for (int i = 0; i < rb; ++i)
          if (!p[a][i].is_zero()) r.right_y[a * rc + l][i * rc + j] += p[a][i];
    }
  return r;
}

GradedBimodule2 shift(const GradedBimodule2& b, int degree_shift) {
  GradedBimodule2 r = b;
  for (int& g : r.gen_degrees) g += degree_shift;
  return r;
}

void BimoduleComplex::check() const {
  for (const auto& obj : objects) obj.check_grading();
  for (size_t t = 0; t + 1 < diff.size(); ++t)
    if (!pm_is_zero(pm_mul(diff[t + 1], diff[t])))
      throw std::logic_error("BimoduleComplex: d.d != 0");
  // bimodule map: D . right_y(src) = right_y(tgt) . D
  for (size_t t = 0; t < diff.size(); ++t) {
    PolyMatrix lhs = pm_mul(diff[t], objects[t].right_y);
    PolyMatrix rhs = pm_mul(objects[t + 1].right_y, diff[t]);
    for (size_t i = 0; i < lhs.size(); ++i)
      for (size_t j = 0; j < lhs[i].size(); ++j)
        if (!(lhs[i][j] == rhs[i][j]))
          throw std::logic_error("BimoduleComplex: differential not a bimodule map");
  }
}

namespace {

BimoduleComplex complex_for_letter(int letter) {
  BimoduleComplex c;
  if (letter > 0) {
    // F(sigma) = (B_s -> R), 1x1 -> 1, 1xy -> y
    c.min_deg = -1;
    c.objects = {bimodule_B_s(), bimodule_R()};
    c.diff = {PolyMatrix{{UniPoly(1), UniPoly::y()}}};
  } else {
    // F(sigma^{-1}) = (R -> B_s<-1>), 1 -> y (1x1) + (1xy)
    c.min_deg = 0;
    c.objects = {bimodule_R(), shift(bimodule_B_s(), -2)};
    c.diff = {PolyMatrix{{UniPoly::y()}, {UniPoly(1)}}};
  }
  return c;
}

BimoduleComplex tensor_complex(const BimoduleComplex& x, const BimoduleComplex& y) {
  BimoduleComplex r;
  r.min_deg = x.min_deg + y.min_deg;
  int nx = static_cast<int>(x.objects.size());
  int ny = static_cast<int>(y.objects.size());
  int nm = nx + ny - 1;
  // block offsets of x-degree i inside total degree m
  std::vector<std::vector<int>> offset(nm);
  std::vector<std::vector<std::pair<int, int>>> blocks(nm);  // (i, j)
  for (int m = 0; m < nm; ++m) {
    int off = 0;
    for (int i = 0; i < nx; ++i) {
      int j = m - i;
      if (j < 0 || j >= ny) continue;
      offset[m].push_back(off);
      blocks[m].emplace_back(i, j);
      off += x.objects[i].rank() * y.objects[j].rank();
    }
  }
  for (int m = 0; m < nm; ++m) {
    GradedBimodule2 total;
    int dim = 0;
    for (auto [i, j] : blocks[m]) dim += x.objects[i].rank() * y.objects[j].rank();
    total.gen_degrees.resize(dim);
    total.right_y = pm_zero(dim, dim);
    for (size_t bidx = 0; bidx < blocks[m].size(); ++bidx) {
      auto [i, j] = blocks[m][bidx];
      GradedBimodule2 piece = tensor(x.objects[i], y.objects[j]);
      int off = offset[m][bidx];
      for (int u = 0; u < piece.rank(); ++u) {
        total.gen_degrees[off + u] = piece.gen_degrees[u];
        for (int v = 0; v < piece.rank(); ++v) total.right_y[off + u][off + v] = piece.right_y[u][v];
      }
    }
    r.objects.push_back(std::move(total));
  }
  for (int m = 0; m + 1 < nm; ++m) {
    PolyMatrix d = pm_zero(r.objects[m + 1].rank(), r.objects[m].rank());
    auto find_block = [&](int m2, int i2, int j2) -> int {
      for (size_t b = 0; b < blocks[m2].size(); ++b)
        if (blocks[m2][b] == std::make_pair(i2, j2)) return offset[m2][b];
      return -1;
    };
    for (size_t bidx = 0; bidx < blocks[m].size(); ++bidx) {
      auto [i, j] = blocks[m][bidx];
      int src_off = offset[m][bidx];
      int rb = x.objects[i].rank(), rc = y.objects[j].rank();
      // horizontal: d_x tensor id
      if (i + 1 < nx) {
        int tgt_off = find_block(m + 1, i + 1, j);
        const PolyMatrix& dx = x.diff[i];
        int rb2 = x.objects[i + 1].rank();
        for (int a = 0; a < rb2; ++a)
          for (int u = 0; u < rb; ++u) {
            if (dx[a][u].is_zero()) continue;
            for (int l = 0; l < rc; ++l)
              d[tgt_off + a * rc + l][src_off + u * rc + l] += dx[a][u];
          }
      }
      // vertical: sign(i) id tensor d_y, coefficients cross as right action
      if (j + 1 < ny) {
        int tgt_off = find_block(m + 1, i, j + 1);
        const PolyMatrix& dy = y.diff[j];
        int rc2 = y.objects[j + 1].rank();
        int abs_i = x.min_deg + i;
        UniPoly sign(((abs_i % 2) + 2) % 2 == 0 ? -1 : 1);
        for (int l = 0; l < rc2; ++l)
          for (int u = 0; u < rc; ++u) {
            if (dy[l][u].is_zero()) continue;
            PolyMatrix p = pm_poly_eval(dy[l][u], x.objects[i].right_y);
            for (int a = 0; a < rb; ++a)
              for (int v = 0; v < rb; ++v)
                if (!p[a][v].is_zero())
                  d[tgt_off + a * rc2 + l][src_off + v * rc + u] += sign * p[a][v];
          }
      }
    }
    r.diff.push_back(std::move(d));
  }
  return r;
}

}  // namespace

BimoduleComplex rouquier_complex(const BraidWord& b) {
  if (b.n != 2)
    throw std::invalid_argument("rouquier_complex: only 2-strand braids supported");
  BimoduleComplex c;
  c.min_deg = 0;
  c.objects = {bimodule_R()};
  if (b.letters.empty()) return c;
  c = complex_for_letter(b.letters[0]);
  for (size_t i = 1; i < b.letters.size(); ++i)
    c = tensor_complex(c, complex_for_letter(b.letters[i]));
  c.check();
  return c;
}

namespace {

using Rat = Rational;
using Mat = std::vector<std::vector<Rat>>;

int mat_rank(Mat m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[rank][col];
      for (int cc = col; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Basis of the nullspace of m (columns are unknowns).
std::vector<std::vector<Rat>> null_space(Mat m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    Rat lead = m[rank][col];
    for (int cc = 0; cc < cols; ++cc) m[rank][cc] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve a x = b for consistent systems; throws if inconsistent.
std::vector<Rat> solve_linear(Mat a, std::vector<Rat> b) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    std::swap(b[rank], b[piv]);
    Rat lead = a[rank][col];
    for (int cc = 0; cc < cols; ++cc) a[rank][cc] /= lead;
    b[rank] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int cc = 0; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
      b[r] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (b[r] != 0) throw std::logic_error("solve_linear: inconsistent system");
  std::vector<Rat> x(cols, 0);
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
  return x;
}

// A homogeneous element of a free graded module: component j carries y^e.
struct SliceBasis {
  std::vector<std::pair<int, int>> elems;  // (gen index, y exponent)
  std::map<std::pair<int, int>, int> index;

  static SliceBasis of_degree(const std::vector<int>& gens, int d) {
    SliceBasis s;
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
      if (d < gens[j] || (d - gens[j]) % 2 != 0) continue;
      s.index[{j, (d - gens[j]) / 2}] = static_cast<int>(s.elems.size());
      s.elems.emplace_back(j, (d - gens[j]) / 2);
    }
    return s;
  }
  int dim() const { return static_cast<int>(s_size()); }
  size_t s_size() const { return elems.size(); }
};

// Matrix of a degree-preserving UniPoly map between slices of free modules.
Mat slice_matrix(const PolyMatrix& d, const std::vector<int>& src_gens,
                 const std::vector<int>& tgt_gens, int degree) {
  SliceBasis src = SliceBasis::of_degree(src_gens, degree);
  SliceBasis tgt = SliceBasis::of_degree(tgt_gens, degree);
  Mat m(tgt.dim(), std::vector<Rat>(src.dim(), 0));
  for (int scol = 0; scol < src.dim(); ++scol) {
    auto [j, e] = src.elems[scol];
    for (int i = 0; i < static_cast<int>(tgt_gens.size()); ++i) {
      const UniPoly& p = d[i][j];
      for (int c = 0; c <= p.deg_y(); ++c) {
        if (p.coeff(c) == 0) continue;
        auto it = tgt.index.find({i, e + c});
        if (it == tgt.index.end())
          throw std::logic_error("slice_matrix: degree bookkeeping broken");
        m[it->second][scol] += p.coeff(c);
      }
    }
  }
  return m;
}

// The slice matrix of (left y - right y) from degree d to degree d+2.
Mat commutator_slice(const GradedBimodule2& b, int d) {
  SliceBasis src = SliceBasis::of_degree(b.gen_degrees, d);
  SliceBasis tgt = SliceBasis::of_degree(b.gen_degrees, d + 2);
  Mat m(tgt.dim(), std::vector<Rat>(src.dim(), 0));
  for (int scol = 0; scol < src.dim(); ++scol) {
    auto [j, e] = src.elems[scol];
    // left multiplication by y
    m[tgt.index.at({j, e + 1})][scol] += 1;
    // right multiplication by y
    for (int i = 0; i < b.rank(); ++i) {
      const UniPoly& p = b.right_y[i][j];
      for (int c = 0; c <= p.deg_y(); ++c)
        if (p.coeff(c) != 0) m[tgt.index.at({i, e + c})][scol] -= p.coeff(c);
    }
  }
  return m;
}

struct KernelModule {
  std::vector<int> gen_degrees;
  // each generator is a polynomial column vector in the ambient left basis
  std::vector<std::vector<UniPoly>> gens;
};

// Graded free kernel of (left y - right y), found slice by slice: new
// generators in degree d are a complement of y * (kernel in degree d-2).
KernelModule hh0_kernel(const GradedBimodule2& b) {
  KernelModule km;
  if (b.rank() == 0) return km;
  int dmin = *std::min_element(b.gen_degrees.begin(), b.gen_degrees.end());
  int dmax = *std::max_element(b.gen_degrees.begin(), b.gen_degrees.end());
  std::map<int, std::vector<std::vector<Rat>>> ker;  // degree -> slice kernel basis
  for (int d = dmin; d <= dmax + 4; d += 1) {
    SliceBasis sb = SliceBasis::of_degree(b.gen_degrees, d);
    if (sb.dim() == 0) continue;
    ker[d] = null_space(commutator_slice(b, d));
    // lift kernel vectors from degree d-2 by multiplying with y
    std::vector<std::vector<Rat>> old_lift;
    SliceBasis sb_prev = SliceBasis::of_degree(b.gen_degrees, d - 2);
    auto it_prev = ker.find(d - 2);
    if (it_prev != ker.end()) {
      for (const auto& v : it_prev->second) {
        std::vector<Rat> lifted(sb.dim(), 0);
        for (int col = 0; col < sb_prev.dim(); ++col) {
          auto [j, e] = sb_prev.elems[col];
          lifted[sb.index.at({j, e + 1})] = v[col];
        }
        old_lift.push_back(std::move(lifted));
      }
    }
    // choose kernel vectors extending the span of old_lift
    int dim = sb.dim();
    Mat work;
    for (const auto& v : old_lift) work.push_back(v);
    int base_rank = mat_rank(work);
    for (const auto& v : ker[d]) {
      work.push_back(v);
      int r = mat_rank(work);
      if (r > base_rank) {
        base_rank = r;
        if (d > dmax)
          throw std::logic_error("hh0_kernel: generator found above ambient degrees");
        std::vector<UniPoly> gen(b.rank());
        for (int col = 0; col < dim; ++col) {
          auto [j, e] = sb.elems[col];
          gen[j] += UniPoly::y(e, v[col]);
        }
        km.gen_degrees.push_back(d);
        km.gens.push_back(std::move(gen));
      } else {
        work.pop_back();
      }
    }
  }
  return km;
}

}  // namespace

ModuleComplex hh0(const BimoduleComplex& c) {
  ModuleComplex mc;
  mc.min_deg = c.min_deg;
  std::vector<KernelModule> kernels;
  for (const auto& obj : c.objects) {
    KernelModule km = hh0_kernel(obj);
    mc.gen_degrees.push_back(km.gen_degrees);
    kernels.push_back(std::move(km));
  }
  for (size_t t = 0; t + 1 < c.objects.size(); ++t) {
    const KernelModule& src = kernels[t];
    const KernelModule& tgt = kernels[t + 1];
    int ns = static_cast<int>(src.gens.size());
    int nt = static_cast<int>(tgt.gens.size());
    PolyMatrix d = pm_zero(nt, ns);
    int ambient = c.objects[t + 1].rank();
    for (int s = 0; s < ns; ++s) {
      // image of the s-th kernel generator under the differential
      std::vector<UniPoly> img(ambient);
      for (int i = 0; i < ambient; ++i)
        for (int j = 0; j < c.objects[t].rank(); ++j)
          img[i] += c.diff[t][i][j] * src.gens[s][j];
      bool img_zero = true;
      for (const auto& p : img)
        if (!p.is_zero()) img_zero = false;
      if (img_zero) continue;
      // solve img = sum_j xi_j y^{m_j} tgt_j with m_j = (deg_s - deg_j)/2
      std::vector<int> usable;
      for (int j = 0; j < nt; ++j) {
        int delta = src.gen_degrees[s] - tgt.gen_degrees[j];
        if (delta >= 0 && delta % 2 == 0) usable.push_back(j);
      }
      // linear system over Q: rows indexed by (ambient component, y power)
      int max_pow = 0;
      for (const auto& p : img) max_pow = std::max(max_pow, p.deg_y());
      for (int j : usable) {
        int m = (src.gen_degrees[s] - tgt.gen_degrees[j]) / 2;
        for (const auto& p : tgt.gens[j]) max_pow = std::max(max_pow, p.deg_y() + m);
      }
      Mat a(ambient * (max_pow + 1), std::vector<Rat>(usable.size(), 0));
      std::vector<Rat> rhs(ambient * (max_pow + 1), 0);
      for (int i = 0; i < ambient; ++i)
        for (int pw = 0; pw <= max_pow; ++pw) rhs[i * (max_pow + 1) + pw] = img[i].coeff(pw);
      for (size_t col = 0; col < usable.size(); ++col) {
        int j = usable[col];
        int m = (src.gen_degrees[s] - tgt.gen_degrees[j]) / 2;
        for (int i = 0; i < ambient; ++i) {
          const UniPoly& p = tgt.gens[j][i];
          for (int pw = 0; pw <= p.deg_y(); ++pw)
            a[i * (max_pow + 1) + pw + m][col] += p.coeff(pw);
        }
      }
      std::vector<Rat> xi = solve_linear(std::move(a), std::move(rhs));
      for (size_t col = 0; col < usable.size(); ++col) {
        int j = usable[col];
        int m = (src.gen_degrees[s] - tgt.gen_degrees[j]) / 2;
        if (xi[col] != 0) d[j][s] += UniPoly::y(m, xi[col]);
      }
    }
    mc.diff.push_back(std::move(d));
  }
  return mc;
}

DimTable hhh_dims(const BimoduleComplex& c, int cutoff) {
  ModuleComplex mc = hh0(c);
  DimTable table;
  int dmin = 0;
  for (const auto& gens : mc.gen_degrees)
    for (int g : gens) dmin = std::min(dmin, g);
  int nobj = static_cast<int>(mc.gen_degrees.size());
  for (int d = dmin; d <= cutoff; d += 2) {
    for (int t = 0; t < nobj; ++t) {
      int dim_here = SliceBasis::of_degree(mc.gen_degrees[t], d).dim();
      if (dim_here == 0) continue;
      int rank_out = 0, rank_in = 0;
      if (t < nobj - 1)
        rank_out = mat_rank(slice_matrix(mc.diff[t], mc.gen_degrees[t],
                                         mc.gen_degrees[t + 1], d));
      if (t > 0)
        rank_in = mat_rank(slice_matrix(mc.diff[t - 1], mc.gen_degrees[t - 1],
                                        mc.gen_degrees[t], d));
      int h = dim_here - rank_out - rank_in;
      if (h < 0) throw std::logic_error("hhh_dims: negative cohomology dimension");
      if (h > 0) table[{mc.min_deg + t, d / 2}] = h;
    }
  }
  return table;
}

DimTable hhhc_dims(const BimoduleComplex& c, int cutoff) {
  ModuleComplex mc = hh0(c);
  DimTable table;
  int nobj = static_cast<int>(mc.gen_degrees.size());
  // after y -> 0 each generator spans a one-dimensional piece in its own
  // degree; differentials keep only their constant coefficients
  auto zero_matrix = [&](int t) {
    int rows = static_cast<int>(mc.gen_degrees[t + 1].size());
    int cols = static_cast<int>(mc.gen_degrees[t].size());
    Mat m(rows, std::vector<Rat>(cols, 0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m[i][j] = mc.diff[t][i][j].at_zero();
    return m;
  };
  std::map<int, bool> degrees;
  for (const auto& gens : mc.gen_degrees)
    for (int g : gens) degrees[g] = true;
  for (const auto& [d, unused] : degrees) {
    if (d > cutoff) continue;
    for (int t = 0; t < nobj; ++t) {
      std::vector<int> sel;  // generators of degree d
      for (int j = 0; j < static_cast<int>(mc.gen_degrees[t].size()); ++j)
        if (mc.gen_degrees[t][j] == d) sel.push_back(j);
      if (sel.empty()) continue;
      auto restrict_cols = [&](Mat m, const std::vector<int>& cols_sel) {
        Mat r(m.size(), std::vector<Rat>(cols_sel.size(), 0));
        for (size_t i = 0; i < m.size(); ++i)
          for (size_t j = 0; j < cols_sel.size(); ++j) r[i][j] = m[i][cols_sel[j]];
        return r;
      };
      auto restrict_rows = [&](const Mat& m, const std::vector<int>& rows_sel) {
        Mat r(rows_sel.size(), std::vector<Rat>(m.empty() ? 0 : m[0].size(), 0));
        for (size_t i = 0; i < rows_sel.size(); ++i) r[i] = m[rows_sel[i]];
        return r;
      };
      int rank_out = 0, rank_in = 0;
      if (t < nobj - 1) rank_out = mat_rank(restrict_cols(zero_matrix(t), sel));
      if (t > 0) rank_in = mat_rank(restrict_rows(zero_matrix(t - 1), sel));
      int h = static_cast<int>(sel.size()) - rank_out - rank_in;
      if (h < 0) throw std::logic_error("hhhc_dims: negative cohomology dimension");
      if (h > 0) table[{mc.min_deg + t, d / 2}] = h;
    }
  }
  return table;
}

namespace {

Laurent qt_half_mono(int k, int p, int mult) {
  // q^{k/2} t^{p + k/2}
  Mono m;
  m[Var::q] = k;
  m[Var::t] = 2 * p + k;
  return Laurent::monomial(mult, m);
}

}  // namespace

Laurent pkr_top(const BraidWord& b, int cutoff) {
  ClosureStats st = closure_stats(b);
  BimoduleComplex c = rouquier_complex(b);
  DimTable dims = hhh_dims(c, cutoff);
  int pmax = cutoff / 2;
  // detect the stable tail rank r_k for every cohomological degree
  std::map<int, int> tail;
  for (const auto& [kp, dim] : dims) tail[kp.first] = 0;
  for (auto& [k, r] : tail) {
    auto at = [&](int p) {
      auto it = dims.find({k, p});
      return it == dims.end() ? 0 : it->second;
    };
    if (at(pmax) != at(pmax - 1) || at(pmax - 1) != at(pmax - 2))
      throw std::runtime_error("pkr_top: tail dimensions not stabilized; increase cutoff");
    r = at(pmax);
  }
  Laurent trunc;
  for (const auto& [kp, dim] : dims) trunc += qt_half_mono(kp.first, kp.second, dim);
  Laurent result;
  if (st.components == 1) {
    for (auto& [k, r] : tail)
      if (r != 0)
        throw std::runtime_error("pkr_top: infinite tail for a knot closure; increase cutoff");
    result = trunc;
  } else if (st.components == 2) {
    // (1-t) * [truncated sum + geometric tails t^{pmax+1+k/2}/(1-t)]
    result = (Laurent(1) - L_t()) * trunc;
    for (auto& [k, r] : tail)
      if (r != 0) result += qt_half_mono(k, pmax + 1, r);
  } else {
    throw std::logic_error("pkr_top: more than two components on two strands");
  }
  Mono chi_m;
  chi_m[Var::q] = st.chi;
  chi_m[Var::t] = -st.chi;
  return result * Laurent::monomial(1, chi_m);
}

Laurent pkrc_top(const BraidWord& b, int cutoff) {
  ClosureStats st = closure_stats(b);
  BimoduleComplex c = rouquier_complex(b);
  DimTable dims = hhhc_dims(c, cutoff);
  Laurent sum;
  for (const auto& [kp, dim] : dims) sum += qt_half_mono(kp.first, kp.second, dim);
  Mono chi_m;
  chi_m[Var::q] = st.chi;
  chi_m[Var::t] = -st.chi;
  Laurent numer = sum * Laurent::monomial(1, chi_m);
  Mono half;  // q^{-1/2} t^{1/2}
  half[Var::q] = -1;
  half[Var::t] = 1;
  Laurent denom = (Laurent(1) + Laurent::monomial(1, half)).pow(b.n - st.components);
  return numer.divide_exact(denom);
}

}  // namespace poscat
