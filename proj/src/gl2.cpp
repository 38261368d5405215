#include "geomult/gl2.hpp"

#include <stdexcept>
#include <string>

namespace geomult {

namespace {

RationalFn rf_const(const VarCtxPtr& ctx, long c) {
  return RationalFn::constant(ctx, Int(c));
}

RationalFn var(const VarCtxPtr& ctx, int i) {
  return RationalFn(LaurentPoly::variable(ctx, i));
}

// Substitute each variable by a unit monomial in the target context.
RationalFn subst_rf(const RationalFn& f, const std::vector<LaurentPoly>& images,
                    const VarCtxPtr& target) {
  RationalFn out(f.num().subst_monomials(images, target));
  for (const auto& d : f.den_factors())
    out = out / RationalFn(d.subst_monomials(images, target));
  if (f.den_scalar() != 1)
    out = out / RationalFn::constant(target, f.den_scalar());
  return out;
}

SymMatrix upper_unipotent(const RationalFn& t) {
  SymMatrix m = SymMatrix::identity(2, t.ctx());
  m.at(0, 1) = t;
  return m;
}

SymMatrix diag2(const RationalFn& a, const RationalFn& d) {
  return SymMatrix::diagonal({a, d});
}

// Conjugation by w0bar swaps the entries of a diagonal matrix.
SymMatrix swap_diag(const SymMatrix& h) {
  return diag2(h.at(1, 1), h.at(0, 0));
}

}  // namespace

SymMatrix gl2_w0bar(const VarCtxPtr& ctx) {
  SymMatrix m(2, ctx);
  m.at(0, 1) = rf_const(ctx, -1);
  m.at(1, 0) = rf_const(ctx, 1);
  return m;
}

RationalFn gl2_phi_r(const SymMatrix& g) {
  if (g.size() != 2) throw std::invalid_argument("gl2_phi_r: need 2x2");
  SymMatrix m = gl2_w0bar(g.ctx()).inverse() * g;
  return gauss_parts(m).upper.at(0, 1);
}

RationalFn gl2_phi_l(const SymMatrix& g) {
  if (g.size() != 2) throw std::invalid_argument("gl2_phi_l: need 2x2");
  SymMatrix m = gl2_w0bar(g.ctx()).inverse() * iota(g);
  return gauss_parts(m).upper.at(0, 1);
}

RationalFn gl2_phi_bk(const SymMatrix& g) {
  return gl2_phi_l(g) + gl2_phi_r(g);
}

SymMatrix gl2_hw(const SymMatrix& g) {
  if (g.size() != 2) throw std::invalid_argument("gl2_hw: need 2x2");
  // w0bar^{-1} (u h w0bar u') = (w0bar^{-1} u w0bar) h^{w0} u', so the Gauss
  // diagonal of w0bar^{-1} g is h with its entries swapped.
  SymMatrix d = gauss_parts(gl2_w0bar(g.ctx()).inverse() * g).diag;
  return swap_diag(d);
}

Gl2Chart gl2_F_12_3(const SymMatrix& x1, const SymMatrix& x2,
                    const SymMatrix& x3) {
  Gl2Chart out;
  out.u1 = gl2_phi_r(x1) + gl2_phi_l(x2);
  out.u2 = gl2_phi_r(x1 * x2) + gl2_phi_l(x3);
  out.h = {gl2_hw(x1), gl2_hw(x2), gl2_hw(x3)};
  out.g = x1 * x2 * x3;
  return out;
}

Gl2Chart gl2_F_1_23(const SymMatrix& x1, const SymMatrix& x2,
                    const SymMatrix& x3) {
  Gl2Chart out;
  out.u1 = gl2_phi_r(x2) + gl2_phi_l(x3);
  out.u2 = gl2_phi_r(x1) + gl2_phi_l(x2 * x3);
  out.h = {gl2_hw(x1), gl2_hw(x2), gl2_hw(x3)};
  out.g = x1 * x2 * x3;
  return out;
}

std::vector<SymMatrix> gl2_F_12_3_inverse(const RationalFn& u1,
                                          const RationalFn& u2,
                                          const std::vector<RationalFn>& e,
                                          const std::vector<RationalFn>& f,
                                          const RationalFn& p) {
  if (e.size() != 3 || f.size() != 3)
    throw std::invalid_argument("gl2_F_12_3_inverse: need three torus factors");
  const VarCtxPtr& ctx = u1.ctx();
  RationalFn one = rf_const(ctx, 1);
  RationalFn pinv = p.reciprocal();
  RationalFn c3 = (u1 * e[2] + pinv * f[2] * e[0] * e[1] * e[2]) / (u1 * u2);
  RationalFn a3 = e[2] * f[2] / c3;
  RationalFn b3 = f[2];
  RationalFn c2 = (e[1] / u1) * (one + pinv * e[0] * f[1] * a3);
  RationalFn a2 = e[1] * f[1] / c2;
  RationalFn b2 = f[1];
  RationalFn a1 = (e[0] / u1) * (one + p / (e[0] * f[1] * a3));
  RationalFn c1 = e[0] * f[0] / a1;
  RationalFn b1 = f[0];
  auto lower = [&](const RationalFn& a, const RationalFn& b,
                   const RationalFn& c) {
    SymMatrix m(2, ctx);
    m.at(0, 0) = a;
    m.at(1, 0) = b;
    m.at(1, 1) = c;
    return m;
  };
  return {lower(a1, b1, c1), lower(a2, b2, c2), lower(a3, b3, c3)};
}

std::pair<RationalFn, RationalFn> psi_gl2(const RationalFn& u1,
                                          const RationalFn& u2,
                                          const RationalFn& e2,
                                          const RationalFn& f2) {
  RationalFn u1p = e2 / (u1 * f2) + u2;
  RationalFn u2p = u1 * u2 * f2 / (e2 / u1 + f2 * u2);
  return {u1p, u2p};
}

std::vector<CentralCharge> gl2_central_charges3(const SymMatrix& x1,
                                                const SymMatrix& x2,
                                                const SymMatrix& x3) {
  SymMatrix g12 = x1 * x2;
  SymMatrix g23 = x2 * x3;
  SymMatrix g123 = g12 * x3;
  std::vector<CentralCharge> out;
  out.push_back({"c0*m1", gl2_phi_r(g12) + gl2_phi_l(x3)});
  out.push_back({"c1*m1", gl2_phi_l(g12) - gl2_phi_l(g123)});
  out.push_back({"c2*m1", gl2_phi_r(x3) - gl2_phi_r(g123)});
  out.push_back({"c0*m2", gl2_phi_r(x1) + gl2_phi_l(g23)});
  out.push_back({"c1*m2", gl2_phi_l(x1) - gl2_phi_l(g123)});
  out.push_back({"c2*m2", gl2_phi_r(g23) - gl2_phi_r(g123)});
  out.push_back({"c0*p3", gl2_phi_r(x2) + gl2_phi_l(x3)});
  out.push_back({"c0*q3", gl2_phi_r(x1) + gl2_phi_l(x2)});
  return out;
}

Gl2Charges gl2_charges_bminus() {
  std::vector<std::string> names;
  for (int i = 1; i <= 3; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
    names.push_back("c" + std::to_string(i));
  }
  VarCtxPtr ctx = make_ctx(std::move(names));
  auto lower = [&](int i) {
    SymMatrix m(2, ctx);
    m.at(0, 0) = var(ctx, 3 * i);
    m.at(1, 0) = var(ctx, 3 * i + 1);
    m.at(1, 1) = var(ctx, 3 * i + 2);
    return m;
  };
  Gl2Charges out;
  out.ctx = ctx;
  out.charges = gl2_central_charges3(lower(0), lower(1), lower(2));
  return out;
}

Gl2Charges gl2_charges_m3() {
  VarCtxPtr ctx =
      make_ctx({"u1", "u2", "e1", "e2", "e3", "f1", "f2", "f3"});
  RationalFn u1 = var(ctx, 0), u2 = var(ctx, 1);
  RationalFn e1 = var(ctx, 2), e2 = var(ctx, 3), e3 = var(ctx, 4);
  RationalFn f1 = var(ctx, 5), f2 = var(ctx, 6), f3 = var(ctx, 7);
  auto [u1p, u2p] = psi_gl2(u1, u2, e2, f2);
  Gl2Charges out;
  out.ctx = ctx;
  out.charges.push_back({"c0*m1", u2});
  out.charges.push_back({"c1*m1", (e1 * e2 / (f1 * f2)) / (u1 * u1 * u2)});
  out.charges.push_back({"c2*m1", (e3 / f3) / u2});
  out.charges.push_back({"c0*m2", u2p});
  out.charges.push_back({"c1*m2", (e1 / f1) / u2p});
  out.charges.push_back({"c2*m2", (e2 * e3 / (f2 * f3)) / (u1p * u1p * u2p)});
  out.charges.push_back({"c0*p3", u1p});
  out.charges.push_back({"c0*q3", u1});
  return out;
}

namespace {

// Delta_n-bar from the matrix model on a context whose first n-1 variables
// are u_1..u_{n-1}; h_k is the supplied diagonal.
RationalFn deltan_from_matrices(int n, const VarCtxPtr& ctx,
                                const std::vector<SymMatrix>& h) {
  std::vector<SymMatrix> u;
  for (int i = 0; i < n - 1; ++i) u.push_back(upper_unipotent(var(ctx, i)));
  SymMatrix w0 = gl2_w0bar(ctx);
  RationalFn total = RationalFn::zero(ctx);
  SymMatrix hw_acc = SymMatrix::identity(2, ctx);  // hw_i, updated as i grows
  for (int i = 0; i < n - 1; ++i) {
    hw_acc = hw_acc * h[i];
    total = total + chi_st(u[i]);
    total = total + gl2_phi_bk(h[i + 1] * u[i].transpose() * swap_diag(hw_acc));
    hw_acc = hw_acc * gl2_hw(w0 * u[i] * w0);
  }
  // After the loop hw_acc * h_n is hw_n; not needed for the potential.
  return total;
}

}  // namespace

Gl2Potential gl2_deltan_bar_restricted(int n) {
  if (n < 2) throw std::invalid_argument("gl2_deltan_bar_restricted: n >= 2");
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) names.push_back("u" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  VarCtxPtr ctx = make_ctx(std::move(names));
  std::vector<SymMatrix> h;
  for (int i = 0; i < n; ++i)
    h.push_back(diag2(var(ctx, n - 1 + i), rf_const(ctx, 1)));
  return {ctx, deltan_from_matrices(n, ctx, h)};
}

Gl2Potential gl2_delta2_bar_full() {
  VarCtxPtr ctx = make_ctx({"u1", "e1", "e2", "f1", "f2"});
  std::vector<SymMatrix> h = {diag2(var(ctx, 1), var(ctx, 3)),
                              diag2(var(ctx, 2), var(ctx, 4))};
  return {ctx, deltan_from_matrices(2, ctx, h)};
}

LaurentPoly howe_compare_gl2(int n) {
  if (n < 2) throw std::invalid_argument("howe_compare_gl2: n >= 2");
  Gl2Potential dn = gl2_deltan_bar_restricted(n);
  // Target coordinates x_1..x_n, y_2..y_n (the slice y_1 = 1).
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 2; i <= n; ++i) names.push_back("y" + std::to_string(i));
  VarCtxPtr ctx = make_ctx(std::move(names));
  auto xv = [&](int i) { return LaurentPoly::variable(ctx, i - 1); };
  auto yv = [&](int i) { return LaurentPoly::variable(ctx, n + i - 2); };
  // u_i -> y_{i+1}; e_i -> x_i y_i (with y_1 = 1).
  std::vector<LaurentPoly> images;
  for (int i = 1; i < n; ++i) images.push_back(yv(i + 1));
  images.push_back(xv(1));
  for (int i = 2; i <= n; ++i) images.push_back(xv(i) * yv(i));
  RationalFn composed = subst_rf(dn.value, images, ctx);
  // Phi_n = sum (x_i + y_i) and eps_n = (1/y_1)(1 + sum_{i=1}^{n-1}
  // x_1..x_i / (y_2..y_{i+1})), both on y_1 = 1.
  RationalFn phi = rf_const(ctx, 1);  // the y_1 term
  for (int i = 1; i <= n; ++i) phi = phi + RationalFn(xv(i));
  for (int i = 2; i <= n; ++i) phi = phi + RationalFn(yv(i));
  RationalFn eps = rf_const(ctx, 1);
  LaurentPoly run = LaurentPoly::constant(ctx, 1);
  for (int i = 1; i < n; ++i) {
    run = run * xv(i) * LaurentPoly::variable(ctx, n + i - 1, -1);
    eps = eps + RationalFn(run);
  }
  return (phi + eps - composed).as_laurent();
}

}  // namespace geomult
