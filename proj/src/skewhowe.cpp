#include "wb/skewhowe.hpp"

#include <algorithm>
#include <stdexcept>

namespace wb {

namespace {

int bit(unsigned m, int c) { return m >> (c - 1) & 1; }

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

nlohmann::json WedgeTag::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (unsigned m : J) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 1; m >> (c - 1); ++c)
      if (bit(m, c)) row.push_back(c);
    out.push_back(row);
  }
  return out;
}

WedgeTag WedgeTag::from_json(const nlohmann::json& j) {
  WedgeTag t;
  for (const auto& row : j) {
    unsigned m = 0;
    for (const auto& c : row) m |= 1u << (c.get<int>() - 1);
    t.J.push_back(m);
  }
  return t;
}

WedgeVector& add_to(WedgeVector& v, const WedgeTag& t,
                    const LaurentScalar& c) {
  auto it = v.find(t);
  if (it == v.end()) {
    if (!c.is_zero()) v.emplace(t, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
  return v;
}

WedgeVector add(const WedgeVector& x, const WedgeVector& y) {
  WedgeVector r = x;
  for (const auto& [t, c] : y) add_to(r, t, c);
  return r;
}

WedgeVector scale(const WedgeVector& x, const LaurentScalar& c) {
  WedgeVector r;
  if (c.is_zero()) return r;
  for (const auto& [t, v] : x) r.emplace(t, v * c);
  return r;
}

SkewHoweSpace SkewHoweSpace::make(int ell, int n, int p) {
  if (ell < 1 || n < 1 || p < 0 || p > ell * n)
    throw std::domain_error("skew-Howe space parameters out of range");
  SkewHoweSpace sp;
  sp.ell = ell;
  sp.n = n;
  sp.p = p;
  WedgeTag t;
  t.J.assign(ell, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == ell) {
      if (left == 0) sp.tags.push_back(t);
      return;
    }
    for (unsigned m = 0; m < (1u << n); ++m) {
      if (__builtin_popcount(m) > left) continue;
      t.J[i] = m;
      self(self, i + 1, left - __builtin_popcount(m));
    }
    t.J[i] = 0;
  };
  rec(rec, 0, p);
  std::sort(sp.tags.begin(), sp.tags.end());
  return sp;
}

std::vector<int> SkewHoweSpace::gl_n_weight(const WedgeTag& t) const {
  std::vector<int> w(n, 0);
  for (unsigned m : t.J)
    for (int c = 1; c <= n; ++c) w[c - 1] += bit(m, c);
  return w;
}

std::vector<int> SkewHoweSpace::gl_ell_weight(const WedgeTag& t) const {
  std::vector<int> w(ell, 0);
  for (int i = 0; i < ell; ++i) w[i] = __builtin_popcount(t.J[i]);
  return w;
}

WedgeVector gl_n_F(const SkewHoweSpace& sp, int j, const WedgeTag& t) {
  WedgeVector out;
  if (j < 1 || j >= sp.n) return out;
  for (int i = 0; i < sp.ell; ++i) {
    if (!bit(t.J[i], j) || bit(t.J[i], j + 1)) continue;
    int tw = 0;  // K^{-1} on the later factors
    for (int m = i + 1; m < sp.ell; ++m)
      tw -= bit(t.J[m], j) - bit(t.J[m], j + 1);
    WedgeTag u = t;
    u.J[i] ^= (1u << (j - 1)) | (1u << j);
    add_to(out, u, LaurentScalar::monomial(tw));
  }
  return out;
}

WedgeVector gl_n_E(const SkewHoweSpace& sp, int j, const WedgeTag& t) {
  WedgeVector out;
  if (j < 1 || j >= sp.n) return out;
  for (int i = 0; i < sp.ell; ++i) {
    if (!bit(t.J[i], j + 1) || bit(t.J[i], j)) continue;
    int tw = 0;  // K on the earlier factors
    for (int m = 0; m < i; ++m) tw += bit(t.J[m], j) - bit(t.J[m], j + 1);
    WedgeTag u = t;
    u.J[i] ^= (1u << (j - 1)) | (1u << j);
    add_to(out, u, LaurentScalar::monomial(tw));
  }
  return out;
}

LaurentScalar gl_n_K(const SkewHoweSpace& sp, int j, const WedgeTag& t) {
  int w = 0;
  for (unsigned m : t.J) w += bit(m, j) - bit(m, j + 1);
  return LaurentScalar::monomial(w);
}

namespace {

// The two clean per-factor formulas live in different bases of the big
// quantum wedge of C^ell ox C^n: gl_n acts factor-by-factor on the
// row-major basis (the tag basis used throughout), while gl_ell acts
// letter-by-letter on the column-major sorted basis v_A.  The change of
// basis straightens row-major words with the mixed R-matrix rules; the
// gl_ell action on tags is the conjugated one.

// gl_ell moves in the column-major basis v_A (A encoded as a tag).
WedgeVector colmodel_ell(const SkewHoweSpace& sp, RungKind k, int i,
                         const WedgeTag& t) {
  WedgeVector out;
  if (i < 1 || i >= sp.ell) return out;
  unsigned lo = t.J[i - 1], hi = t.J[i];
  for (int c = 1; c <= sp.n; ++c) {
    bool ok = k == RungKind::F ? (bit(lo, c) && !bit(hi, c))
                               : (bit(hi, c) && !bit(lo, c));
    if (!ok) continue;
    int tw = 0;
    if (k == RungKind::F) {  // K^{-1} on the later columns
      for (int cp = c + 1; cp <= sp.n; ++cp)
        tw -= bit(lo, cp) - bit(hi, cp);
    } else {  // K on the earlier columns
      for (int cp = 1; cp < c; ++cp) tw += bit(lo, cp) - bit(hi, cp);
    }
    WedgeTag u = t;
    u.J[i - 1] ^= 1u << (c - 1);
    u.J[i] ^= 1u << (c - 1);
    add_to(out, u, LaurentScalar::monomial(tw));
  }
  return out;
}

// Letters of the big wedge, ordered column-major: L = (c-1)*ell + (r-1).
using Word = std::vector<int>;

struct Straightener {
  int ell, n;
  std::map<Word, std::map<Word, LaurentScalar>> cache;

  int row(int L) const { return L % ell + 1; }
  int col(int L) const { return L / ell + 1; }

  // Normal form in the column-major sorted basis.  Rules (x before y,
  // ord x >= ord y): equal letters vanish; same row or column, and the
  // mixed outer pair, anticommute (with q or 1); the mixed inner pair
  // anticommutes and emits (q^{-1} - q) times the outer pair.
  const std::map<Word, LaurentScalar>& reduce(const Word& w) {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    std::map<Word, LaurentScalar> out;
    size_t p = 0;
    while (p + 1 < w.size() && w[p] < w[p + 1]) ++p;
    if (p + 1 >= w.size()) {
      out[w] = LaurentScalar(1);
      return cache.emplace(w, std::move(out)).first->second;
    }
    int x = w[p], y = w[p + 1];
    if (x != y) {
      Word s = w;
      s[p] = y;
      s[p + 1] = x;
      bool same_line = row(x) == row(y) || col(x) == col(y);
      bool inner = !same_line && row(x) < row(y);  // then col(x) > col(y)
      LaurentScalar swapc =
          same_line ? -LaurentScalar::monomial(1) : LaurentScalar(-1);
      for (const auto& [u, c] : reduce(s)) out[u] += c * swapc;
      if (inner) {
        Word m = w;  // the outer corners (row x, col y), (row y, col x)
        m[p] = (col(y) - 1) * ell + (row(x) - 1);
        m[p + 1] = (col(x) - 1) * ell + (row(y) - 1);
        LaurentScalar extra =
            LaurentScalar::monomial(-1) - LaurentScalar::monomial(1);
        auto sub = reduce(m);  // copy: recursion may grow the cache
        for (const auto& [u, c] : sub) out[u] += c * extra;
      }
      for (auto i2 = out.begin(); i2 != out.end();)
        i2 = i2->second.is_zero() ? out.erase(i2) : std::next(i2);
    }
    return cache.emplace(w, std::move(out)).first->second;
  }
};

std::map<std::pair<int, int>, Straightener> g_straight;

// The class of the row-major word of a tag, in column-major coordinates.
WedgeVector rowmajor_class(const SkewHoweSpace& sp, const WedgeTag& t) {
  Straightener& st = g_straight
                         .try_emplace({sp.ell, sp.n}, Straightener{sp.ell,
                                                                   sp.n})
                         .first->second;
  Word w;
  for (int r = 1; r <= sp.ell; ++r)
    for (int c = 1; c <= sp.n; ++c)
      if (bit(t.J[r - 1], c)) w.push_back((c - 1) * sp.ell + (r - 1));
  WedgeVector out;
  for (const auto& [u, coef] : st.reduce(w)) {
    WedgeTag a;
    a.J.assign(sp.ell, 0);
    for (int L : u) a.J[L % sp.ell] |= 1u << (L / sp.ell);
    add_to(out, a, coef);
  }
  return out;
}

// Laurent fraction, unreduced; fine at these sizes.
struct Frac {
  LaurentScalar num, den = LaurentScalar(1);
  bool is_zero() const { return num.is_zero(); }
};
Frac fmul(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
Frac fsub(const Frac& a, const Frac& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}
Frac fdiv(const Frac& a, const Frac& b) { return {a.num * b.den, a.den * b.num}; }

// Express a column-major-coordinate vector in the tag (row-major) basis,
// by solving against the classes of all tags in the same weight block.
WedgeVector express_in_tags(const SkewHoweSpace& sp, const WedgeVector& big) {
  if (big.empty()) return {};
  std::vector<int> wn = sp.gl_n_weight(big.begin()->first);
  std::vector<int> wl = sp.gl_ell_weight(big.begin()->first);
  std::vector<WedgeTag> block;
  for (const auto& t : sp.tags)
    if (sp.gl_n_weight(t) == wn && sp.gl_ell_weight(t) == wl)
      block.push_back(t);
  std::map<WedgeTag, int> rowidx;
  std::vector<std::vector<Frac>> M;  // rows: v_A coords; cols: tags | rhs
  auto rownum = [&](const WedgeTag& a) {
    auto [it, fresh] = rowidx.try_emplace(a, int(rowidx.size()));
    if (fresh) M.emplace_back(block.size() + 1);
    return it->second;
  };
  for (size_t j = 0; j < block.size(); ++j)
    for (const auto& [a, c] : rowmajor_class(sp, block[j]))
      M[rownum(a)][j] = Frac{c};
  for (const auto& [a, c] : big) M[rownum(a)].back() = Frac{c};
  // Gauss-Jordan over fractions.
  size_t rank = 0;
  std::vector<int> pivot_row(block.size(), -1);
  for (size_t col = 0; col < block.size() && rank < M.size(); ++col) {
    size_t sel = rank;
    while (sel < M.size() && M[sel][col].is_zero()) ++sel;
    if (sel == M.size()) continue;
    std::swap(M[rank], M[sel]);
    for (size_t r = 0; r < M.size(); ++r) {
      if (r == rank || M[r][col].is_zero()) continue;
      Frac f = fdiv(M[r][col], M[rank][col]);
      for (size_t cc = col; cc <= block.size(); ++cc)
        if (!M[rank][cc].is_zero()) M[r][cc] = fsub(M[r][cc], fmul(f, M[rank][cc]));
    }
    pivot_row[col] = int(rank);
    ++rank;
  }
  for (size_t r = rank; r < M.size(); ++r)
    if (!M[r].back().is_zero())
      throw std::logic_error("vector outside the tag-basis span");
  WedgeVector out;
  for (size_t col = 0; col < block.size(); ++col) {
    if (pivot_row[col] < 0) {
      if (std::any_of(M.begin(), M.end(), [&](const auto& row) {
            return !row[col].is_zero();
          }))
        throw std::logic_error("tag classes are linearly dependent");
      continue;
    }
    Frac v = fdiv(M[pivot_row[col]].back(), M[pivot_row[col]][col]);
    if (!v.is_zero()) out[block[col]] = v.num.divide_exact(v.den);
  }
  return out;
}

}  // namespace

WedgeVector gl_ell_F(const SkewHoweSpace& sp, int i, const WedgeTag& t) {
  if (i < 1 || i >= sp.ell) return {};
  WedgeVector big;
  for (const auto& [a, c] : rowmajor_class(sp, t))
    big = add(big, scale(colmodel_ell(sp, RungKind::F, i, a), c));
  return express_in_tags(sp, big);
}

WedgeVector gl_ell_E(const SkewHoweSpace& sp, int i, const WedgeTag& t) {
  if (i < 1 || i >= sp.ell) return {};
  WedgeVector big;
  for (const auto& [a, c] : rowmajor_class(sp, t))
    big = add(big, scale(colmodel_ell(sp, RungKind::E, i, a), c));
  return express_in_tags(sp, big);
}

LaurentScalar gl_ell_K(const SkewHoweSpace& sp, int i, const WedgeTag& t) {
  return LaurentScalar::monomial(__builtin_popcount(t.J[i - 1]) -
                                 __builtin_popcount(t.J[i]));
}

WedgeVector QuantumOperator::apply(const WedgeVector& v) const {
  WedgeVector out;
  for (const auto& [t, c] : v) {
    auto it = cols.find(t);
    if (it == cols.end()) continue;
    for (const auto& [u, e] : it->second) add_to(out, u, e * c);
  }
  return out;
}

bool QuantumOperator::is_zero() const {
  for (const auto& [t, col] : cols)
    if (!col.empty()) return false;
  return true;
}

QuantumOperator operator_gl_n(const SkewHoweSpace& sp, RungKind k, int j) {
  QuantumOperator op;
  op.ell_shift.assign(sp.ell, 0);
  op.n_shift.assign(sp.n, 0);
  if (j >= 1 && j < sp.n) {
    op.n_shift[j - 1] = k == RungKind::E ? 1 : -1;
    op.n_shift[j] = -op.n_shift[j - 1];
  }
  for (const auto& t : sp.tags)
    op.cols[t] = k == RungKind::E ? gl_n_E(sp, j, t) : gl_n_F(sp, j, t);
  return op;
}

QuantumOperator operator_gl_ell(const SkewHoweSpace& sp, RungKind k, int i) {
  QuantumOperator op;
  op.ell_shift.assign(sp.ell, 0);
  op.n_shift.assign(sp.n, 0);
  if (i >= 1 && i < sp.ell) {
    op.ell_shift[i - 1] = k == RungKind::E ? 1 : -1;
    op.ell_shift[i] = -op.ell_shift[i - 1];
  }
  for (const auto& t : sp.tags)
    op.cols[t] = k == RungKind::E ? gl_ell_E(sp, i, t) : gl_ell_F(sp, i, t);
  return op;
}

QuantumOperator compose(const QuantumOperator& a, const QuantumOperator& b) {
  QuantumOperator op;
  for (size_t i = 0; i < a.ell_shift.size(); ++i)
    op.ell_shift.push_back(a.ell_shift[i] + b.ell_shift[i]);
  for (size_t i = 0; i < a.n_shift.size(); ++i)
    op.n_shift.push_back(a.n_shift[i] + b.n_shift[i]);
  for (const auto& [t, col] : b.cols) op.cols[t] = a.apply(col);
  return op;
}

QuantumOperator sub(const QuantumOperator& a, const QuantumOperator& b) {
  QuantumOperator op = a;
  for (const auto& [t, col] : b.cols) {
    WedgeVector& dst = op.cols[t];
    for (const auto& [u, c] : col) add_to(dst, u, -c);
  }
  return op;
}

QuantumOperator rung_operator(const SkewHoweSpace& sp, RungKind k, int i,
                              int c, const std::vector<int>& pvec) {
  if (i < 1 || i >= sp.ell)
    throw std::domain_error("rung_operator: index out of range");
  if (c < 0) throw std::domain_error("rung_operator: negative power");
  QuantumOperator op;
  op.ell_shift.assign(sp.ell, 0);
  op.n_shift.assign(sp.n, 0);
  int d = k == RungKind::E ? 1 : -1;
  op.ell_shift[i - 1] = d * c;
  op.ell_shift[i] = -d * c;
  // Out-of-range target weight: the zero operator on the block.
  int ti = pvec[i - 1] + d * c, tj = pvec[i] - d * c;
  bool in_range = ti >= 0 && ti <= sp.n && tj >= 0 && tj <= sp.n;
  LaurentScalar fact = qfact(c);
  for (const auto& t : sp.tags) {
    if (sp.gl_ell_weight(t) != pvec) continue;
    WedgeVector v;
    if (in_range) {
      v[t] = LaurentScalar(1);
      for (int s = 0; s < c; ++s) {
        WedgeVector next;
        for (const auto& [u, coef] : v) {
          WedgeVector step =
              k == RungKind::E ? gl_ell_E(sp, i, u) : gl_ell_F(sp, i, u);
          next = add(next, scale(step, coef));
        }
        v = std::move(next);
      }
      for (auto& [u, coef] : v) coef = coef.divide_exact(fact);
      if (c == 0) v = WedgeVector{{t, LaurentScalar(1)}};
    }
    op.cols[t] = std::move(v);
  }
  return op;
}

CommuteReport verify_commuting_actions(int ell, int n, int p) {
  SkewHoweSpace sp = SkewHoweSpace::make(ell, n, p);
  CommuteReport rep;
  rep.total_dim = long(sp.tags.size());
  rep.commuting = true;
  for (const auto& t : sp.tags) ++rep.block_dims[sp.gl_ell_weight(t)];
  rep.dims_match = rep.total_dim == binom(long(ell) * n, p);
  for (const auto& [pv, dim] : rep.block_dims) {
    long want = 1;
    for (int pi : pv) want *= binom(n, pi);
    if (dim != want) rep.dims_match = false;
  }
  for (int i = 1; i < ell && rep.commuting; ++i)
    for (auto ki : {RungKind::E, RungKind::F})
      for (int j = 1; j < n; ++j)
        for (auto kj : {RungKind::E, RungKind::F})
          for (const auto& t : sp.tags) {
            WedgeVector a = ki == RungKind::E ? gl_ell_E(sp, i, t)
                                              : gl_ell_F(sp, i, t);
            WedgeVector b = kj == RungKind::E ? gl_n_E(sp, j, t)
                                              : gl_n_F(sp, j, t);
            WedgeVector ab, ba;
            for (const auto& [u, c] : a) {
              WedgeVector s = kj == RungKind::E ? gl_n_E(sp, j, u)
                                                : gl_n_F(sp, j, u);
              ab = add(ab, scale(s, c));
            }
            for (const auto& [u, c] : b) {
              WedgeVector s = ki == RungKind::E ? gl_ell_E(sp, i, u)
                                                : gl_ell_F(sp, i, u);
              ba = add(ba, scale(s, c));
            }
            for (const auto& [u, c] : ab) add_to(ba, u, -c);
            if (!ba.empty()) {
              rep.commuting = false;
              break;
            }
          }
  return rep;
}

WedgeVector highest_weight_vector(int a, int b, int n) {
  int c = a + b;
  if (n < 0) n = c;
  if (a < 0 || b < 0 || c > n)
    throw std::domain_error("highest_weight_vector: need a,b >= 0, a+b <= n");
  SkewHoweSpace sp = SkewHoweSpace::make(2, std::max(n, 1), c);
  // Tags of gl_ell weight (a,b) and gl_n weight (1,...,1,0,...): J_1 and
  // J_2 partition [1,c] with |J_1| = a.
  std::vector<WedgeTag> tags;
  unsigned full = (1u << c) - 1;
  for (unsigned m = 0; m <= full; ++m)
    if ((__builtin_popcount(m) == a))
      tags.push_back(WedgeTag{{m, full ^ m}});
  std::sort(tags.begin(), tags.end());
  WedgeTag lead{{((1u << a) - 1) << b, (1u << b) - 1}};  // v_{[b+1,c]} ox v_{[1,b]}
  // Collect the equations E_j v = 0 as rows over the unknown coefficients.
  std::map<WedgeTag, int> idx;
  for (size_t k = 0; k < tags.size(); ++k) idx[tags[k]] = int(k);
  std::map<WedgeTag, std::vector<LaurentScalar>> rows;
  for (int j = 1; j < n; ++j)
    for (const auto& t : tags)
      for (const auto& [u, coef] : gl_n_E(sp, j, t)) {
        auto& row = rows[u];
        row.resize(tags.size());
        row[idx[t]] += coef;
      }
  // Fraction-free elimination; the kernel is one-dimensional.
  std::vector<std::vector<LaurentScalar>> mat;
  for (auto& [u, row] : rows) {
    row.resize(tags.size());
    mat.push_back(row);
  }
  std::vector<int> pivot_of_col(tags.size(), -1);
  size_t rank = 0;
  for (size_t col = 0; col < tags.size() && rank < mat.size(); ++col) {
    size_t sel = rank;
    while (sel < mat.size() && mat[sel][col].is_zero()) ++sel;
    if (sel == mat.size()) continue;
    std::swap(mat[rank], mat[sel]);
    for (size_t r = 0; r < mat.size(); ++r) {
      if (r == rank || mat[r][col].is_zero()) continue;
      LaurentScalar f = mat[r][col], g = mat[rank][col];
      for (size_t cc = 0; cc < tags.size(); ++cc)
        mat[r][cc] = mat[r][cc] * g - mat[rank][cc] * f;
    }
    pivot_of_col[col] = int(rank);
    ++rank;
  }
  int free_col = -1;
  for (size_t col = 0; col < tags.size(); ++col)
    if (pivot_of_col[col] < 0) {
      if (free_col >= 0)
        throw std::logic_error("highest weight vector is not unique");
      free_col = int(col);
    }
  if (free_col < 0)
    throw std::logic_error("no highest weight vector found");
  // After Gauss-Jordan each pivot row reads
  //   mat[r][col] * sol[col] + mat[r][free_col] * sol[free_col] = 0,
  // so sol[col] = -mat[r][free_col] / mat[r][col] with sol[free_col] = 1.
  std::vector<LaurentScalar> num(tags.size()), den(tags.size());
  num[free_col] = den[free_col] = LaurentScalar(1);
  for (size_t col = 0; col < tags.size(); ++col) {
    int r = pivot_of_col[col];
    if (r < 0) continue;
    num[col] = -mat[r][free_col];
    den[col] = mat[r][col];
  }
  // Normalize so the leading tag has coefficient 1.
  size_t lk = idx[lead];
  if (num[lk].is_zero())
    throw std::logic_error("leading coefficient vanished");
  WedgeVector out;
  for (size_t k = 0; k < tags.size(); ++k) {
    if (num[k].is_zero()) continue;
    out[tags[k]] = (num[k] * den[lk]).divide_exact(den[k] * num[lk]);
  }
  return out;
}

}  // namespace wb
