#include "geomult/groupsym.hpp"

#include <algorithm>
#include <sstream>

namespace geomult {

namespace {

RationalFn rf_const(const VarCtxPtr& ctx, long c) {
  return RationalFn::constant(ctx, Int(c));
}

void require_type_a(const RootDatum& datum, const char* where) {
  int r = datum.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int expect = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (datum.cartan()[i][j] != expect)
        throw std::invalid_argument(std::string(where) +
                                    ": matrix realization is type A only");
    }
}

}  // namespace

SymMatrix::SymMatrix(int n, VarCtxPtr ctx) : n_(n), ctx_(std::move(ctx)) {
  a_.assign(n_, std::vector<RationalFn>(n_, RationalFn::zero(ctx_)));
}

SymMatrix SymMatrix::identity(int n, const VarCtxPtr& ctx) {
  SymMatrix m(n, ctx);
  for (int i = 0; i < n; ++i) m.a_[i][i] = rf_const(ctx, 1);
  return m;
}

SymMatrix SymMatrix::diagonal(std::vector<RationalFn> entries) {
  const int n = static_cast<int>(entries.size());
  if (n == 0) throw std::invalid_argument("diagonal: empty");
  SymMatrix m(n, entries[0].ctx());
  for (int i = 0; i < n; ++i) m.a_[i][i] = std::move(entries[i]);
  return m;
}

SymMatrix SymMatrix::operator*(const SymMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  SymMatrix out(n_, ctx_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      RationalFn s = RationalFn::zero(ctx_);
      for (int k = 0; k < n_; ++k) {
        if (a_[i][k].is_zero() || o.a_[k][j].is_zero()) continue;
        s += a_[i][k] * o.a_[k][j];
      }
      out.a_[i][j] = std::move(s);
    }
  return out;
}

bool SymMatrix::operator==(const SymMatrix& o) const {
  if (n_ != o.n_) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (a_[i][j] != o.a_[i][j]) return false;
  return true;
}

SymMatrix SymMatrix::transpose() const {
  SymMatrix out(n_, ctx_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.a_[j][i] = a_[i][j];
  return out;
}

RationalFn SymMatrix::trace() const {
  RationalFn s = RationalFn::zero(ctx_);
  for (int i = 0; i < n_; ++i) s += a_[i][i];
  return s;
}

namespace {

RationalFn det_of(const std::vector<std::vector<RationalFn>>& m,
                  std::vector<int> rows, std::vector<int> cols,
                  const VarCtxPtr& ctx) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) return RationalFn::constant(ctx, 1);
  if (k == 1) return m[rows[0]][cols[0]];
  RationalFn s = RationalFn::zero(ctx);
  std::vector<int> subrows(rows.begin() + 1, rows.end());
  for (int j = 0; j < k; ++j) {
    if (m[rows[0]][cols[j]].is_zero()) continue;
    std::vector<int> subcols;
    for (int l = 0; l < k; ++l)
      if (l != j) subcols.push_back(cols[l]);
    RationalFn term = m[rows[0]][cols[j]] * det_of(m, subrows, subcols, ctx);
    if (j % 2)
      s -= term;
    else
      s += term;
  }
  return s;
}

}  // namespace

RationalFn SymMatrix::det() const { return leading_minor(n_); }

RationalFn SymMatrix::leading_minor(int i) const {
  std::vector<int> idx(i);
  for (int k = 0; k < i; ++k) idx[k] = k;
  return det_of(a_, idx, idx, ctx_);
}

SymMatrix SymMatrix::inverse() const {
  RationalFn d = det();
  if (d.is_zero()) throw std::invalid_argument("inverse: singular matrix");
  SymMatrix out(n_, ctx_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n_; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      RationalFn cof = det_of(a_, rows, cols, ctx_);
      if ((i + j) % 2) cof = -cof;
      out.a_[i][j] = cof / d;
    }
  return out;
}

std::string SymMatrix::str() const {
  std::vector<std::vector<std::string>> cell(n_, std::vector<std::string>(n_));
  std::vector<std::size_t> width(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      cell[i][j] = a_[i][j].str();
      width[j] = std::max(width[j], cell[i][j].size());
    }
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << "[ ";
    for (int j = 0; j < n_; ++j) {
      os << cell[i][j];
      os << std::string(width[j] - cell[i][j].size(), ' ');
      os << (j + 1 < n_ ? "  " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

SymMatrix elementary(const RootDatum& datum, int j, const RationalFn& t,
                     const VarCtxPtr& ctx) {
  require_type_a(datum, "elementary");
  const int n = datum.rank() + 1;
  int i = std::abs(j);
  if (i < 1 || i > datum.rank())
    throw std::invalid_argument("elementary: index out of range");
  if (j > 0) {
    SymMatrix m = SymMatrix::identity(n, ctx);
    m.at(i - 1, i) = t;
    return m;
  }
  // x_{-i}(t) = y_i(t) t^{-alpha_i^vee}: diagonal (.., t^{-1}, t, ..) with a
  // subdiagonal 1 at (i+1, i).
  SymMatrix m = SymMatrix::identity(n, ctx);
  m.at(i - 1, i - 1) = t.reciprocal();
  m.at(i, i) = t;
  m.at(i, i - 1) = rf_const(ctx, 1);
  return m;
}

SymMatrix elementary_y(const RootDatum& datum, int i, const RationalFn& t,
                       const VarCtxPtr& ctx) {
  require_type_a(datum, "elementary_y");
  const int n = datum.rank() + 1;
  if (i < 1 || i > datum.rank())
    throw std::invalid_argument("elementary_y: index out of range");
  SymMatrix m = SymMatrix::identity(n, ctx);
  m.at(i, i - 1) = t;
  return m;
}

SymMatrix coroot_torus(const RootDatum& datum, int i, const RationalFn& t,
                       const VarCtxPtr& ctx) {
  require_type_a(datum, "coroot_torus");
  const int n = datum.rank() + 1;
  if (i < 1 || i > datum.rank())
    throw std::invalid_argument("coroot_torus: index out of range");
  SymMatrix m = SymMatrix::identity(n, ctx);
  m.at(i - 1, i - 1) = t;
  m.at(i, i) = t.reciprocal();
  return m;
}

SymMatrix sbar(const RootDatum& datum, int i, const VarCtxPtr& ctx) {
  RationalFn one = rf_const(ctx, 1);
  return elementary(datum, i, -one, ctx) *
         elementary_y(datum, i, one, ctx) *
         elementary(datum, i, -one, ctx);
}

SymMatrix weyl_lift(const RootDatum& datum, const WeylElt& w,
                    const VarCtxPtr& ctx) {
  SymMatrix m = SymMatrix::identity(datum.rank() + 1, ctx);
  for (int i : w.word) m = m * sbar(datum, i, ctx);
  return m;
}

GaussParts gauss_parts(const SymMatrix& g) {
  const int n = g.size();
  const VarCtxPtr& ctx = g.ctx();
  SymMatrix work = g;
  SymMatrix lower = SymMatrix::identity(n, ctx);
  for (int k = 0; k < n; ++k) {
    if (work.at(k, k).is_zero())
      throw GaussUndefined("leading principal minor vanishes");
    for (int i = k + 1; i < n; ++i) {
      if (work.at(i, k).is_zero()) continue;
      RationalFn f = work.at(i, k) / work.at(k, k);
      for (int j = k; j < n; ++j)
        work.at(i, j) -= f * work.at(k, j);
      lower.at(i, k) = f;
    }
  }
  SymMatrix diag(n, ctx);
  SymMatrix upper = SymMatrix::identity(n, ctx);
  for (int k = 0; k < n; ++k) {
    diag.at(k, k) = work.at(k, k);
    for (int j = k + 1; j < n; ++j) upper.at(k, j) = work.at(k, j) / work.at(k, k);
  }
  return GaussParts{std::move(lower), std::move(diag), std::move(upper)};
}

RationalFn generalized_minor(const RootDatum& datum, const SymMatrix& g,
                             const WeylElt& u, const WeylElt& v, int i) {
  SymMatrix m = weyl_lift(datum, datum.inverse(u), g.ctx()) * g *
                weyl_lift(datum, v, g.ctx());
  return m.leading_minor(i);
}

SymMatrix x_of_double_word(const RootDatum& datum, const DoubleWord& I,
                           const VarCtxPtr& ctx, int first_var) {
  SymMatrix m = SymMatrix::identity(datum.rank() + 1, ctx);
  for (std::size_t l = 0; l < I.size(); ++l) {
    RationalFn t(LaurentPoly::variable(ctx, first_var + static_cast<int>(l)));
    m = m * elementary(datum, I[l], t, ctx);
  }
  return m;
}

ChartPoint chart(const RootDatum& datum, const DecoratedWord& d) {
  const int n = static_cast<int>(d.word.size());
  std::vector<std::string> names;
  names.reserve(n);
  for (int l = 1; l <= n; ++l) names.push_back("t" + std::to_string(l));
  VarCtxPtr ctx = make_ctx(std::move(names));

  ChartPoint cp;
  cp.d = d;
  cp.I = associated_double_word(d);
  cp.ctx = ctx;
  cp.x = x_of_double_word(datum, cp.I, ctx);
  auto [vK, wK] = vK_wK(datum, d);
  SymMatrix vbar_inv = weyl_lift(datum, vK, ctx).inverse();
  cp.xi = gauss_parts(vbar_inv * cp.x).upper;
  return cp;
}

SymMatrix iota(const SymMatrix& g) {
  const int n = g.size();
  SymMatrix out = g.inverse();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i + j) % 2) out.at(i, j) = -out.at(i, j);
  return out;
}

RationalFn chi_st(const SymMatrix& u) {
  RationalFn s = RationalFn::zero(u.ctx());
  for (int i = 0; i + 1 < u.size(); ++i) s += u.at(i, i + 1);
  return s;
}

}  // namespace geomult
