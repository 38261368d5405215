// Symbolic SL_n / GL_n matrices over the Laurent rational-function field:
// elementary one-parameter subgroups, Weyl-group lifts, Gauss (LDU)
// decomposition, generalized minors, and the toric charts attached to
// decorated reduced words.
//
// Group realizations are type A only; n = rank + 1 throughout.

#pragma once

#include <string>
#include <vector>

#include "geomult/cartan.hpp"
#include "geomult/laurent.hpp"
#include "geomult/words.hpp"

namespace geomult {

struct GaussUndefined : std::runtime_error {
  explicit GaussUndefined(const std::string& what) : std::runtime_error(what) {}
};

class SymMatrix {
 public:
  SymMatrix() = default;
  SymMatrix(int n, VarCtxPtr ctx);  // zero matrix

  static SymMatrix identity(int n, const VarCtxPtr& ctx);
  static SymMatrix diagonal(std::vector<RationalFn> entries);

  int size() const { return n_; }
  const VarCtxPtr& ctx() const { return ctx_; }
  const RationalFn& at(int i, int j) const { return a_[i][j]; }
  RationalFn& at(int i, int j) { return a_[i][j]; }

  SymMatrix operator*(const SymMatrix& o) const;
  bool operator==(const SymMatrix& o) const;

  SymMatrix transpose() const;
  RationalFn det() const;         // cofactor expansion (small n)
  SymMatrix inverse() const;      // adjugate / det
  RationalFn trace() const;

  // Leading principal i x i minor.
  RationalFn leading_minor(int i) const;

  std::string str() const;  // aligned pretty-printer

 private:
  int n_ = 0;
  VarCtxPtr ctx_;
  std::vector<std::vector<RationalFn>> a_;
};

// x_j(t) for j > 0, y_{|j|}(t) for j < 0 written as x_{-i}(t) =
// y_i(t) t^{-alpha_i^vee}; t is an arbitrary rational function.
SymMatrix elementary(const RootDatum& datum, int j, const RationalFn& t,
                     const VarCtxPtr& ctx);
// Plain y_i(t) = I + t E_{i+1,i}.
SymMatrix elementary_y(const RootDatum& datum, int i, const RationalFn& t,
                       const VarCtxPtr& ctx);
// Torus element t^{alpha_i^vee} (diagonal .., t at i, t^{-1} at i+1, ..).
SymMatrix coroot_torus(const RootDatum& datum, int i, const RationalFn& t,
                       const VarCtxPtr& ctx);

// sbar_i = x_i(-1) y_i(1) x_i(-1), and wbar = sbar_{i_1} ... sbar_{i_l} for
// any reduced word of w (braid invariant).
SymMatrix sbar(const RootDatum& datum, int i, const VarCtxPtr& ctx);
SymMatrix weyl_lift(const RootDatum& datum, const WeylElt& w,
                    const VarCtxPtr& ctx);

// Gauss decomposition g = [g]_- [g]_0 [g]_+ (lower unipotent, diagonal,
// upper unipotent); throws GaussUndefined when a leading principal minor
// vanishes identically.
struct GaussParts {
  SymMatrix lower, diag, upper;
};
GaussParts gauss_parts(const SymMatrix& g);

// Generalized minor Delta_{u omega_i, v omega_i}(g) = leading i x i minor of
// ubar^{-1} g vbar.
RationalFn generalized_minor(const RootDatum& datum, const SymMatrix& g,
                             const WeylElt& u, const WeylElt& v, int i);

// x_II(t) = x_{j_1}(t_1) ... x_{j_n}(t_n) and the chart
// xi_II(t) = [vbar_K^{-1} x_II(t)]_+.
struct ChartPoint {
  DecoratedWord d;
  DoubleWord I;
  VarCtxPtr ctx;       // variables t_1..t_n
  SymMatrix x;         // x_II(t)
  SymMatrix xi;        // [vbar_K^{-1} x_II(t)]_+
};
ChartPoint chart(const RootDatum& datum, const DecoratedWord& d);

// The product x_II(t) alone, over the given context whose first n variables
// are the chart coordinates.
SymMatrix x_of_double_word(const RootDatum& datum, const DoubleWord& I,
                           const VarCtxPtr& ctx, int first_var = 0);

// The anti-automorphism iota: fixes x_i(t) and y_i(t), inverts the torus.
// On SL_n it is g -> J g^{-1} J with J = diag(+1, -1, +1, ...).
SymMatrix iota(const SymMatrix& g);

// Standard character chi^st(u) = sum of superdiagonal entries (u unipotent
// upper).
RationalFn chi_st(const SymMatrix& u);

}  // namespace geomult
