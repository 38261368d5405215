// Worked GL_2 machinery on honest 2x2 matrices (determinant unconstrained):
// the chart maps F_{12,3} / F_{1,23} for a triple of lower-triangular
// factors, the associator Psi on M^(3), the n-fold potential Delta_n-bar in
// GL_2 coordinates, the central-charge family C_3 in both coordinate
// systems, and the Howe comparison residual.
//
// Conventions: w0bar = [[0,-1],[1,0]]; a lower-triangular x = [[a,0],[b,c]]
// with b invertible factors as x = x(a/b) * diag(ac/b, b) * w0bar * x(c/b),
// so Phi^l(x) = a/b, Phi^r(x) = c/b and hw(x) = diag(ac/b, b).

#pragma once

#include <utility>
#include <vector>

#include "geomult/groupsym.hpp"
#include "geomult/laurent.hpp"
#include "geomult/potential.hpp"

namespace geomult {

// [[0,-1],[1,0]], the lift of the longest element of GL_2.
SymMatrix gl2_w0bar(const VarCtxPtr& ctx);

// Phi^r(g) = chi^st([w0bar^{-1} g]_+), Phi^l(g) = chi^st([w0bar^{-1}
// g^iota]_+), and Phi_BK = Phi^l + Phi^r on the open piece U H w0bar U.
RationalFn gl2_phi_r(const SymMatrix& g);
RationalFn gl2_phi_l(const SymMatrix& g);
RationalFn gl2_phi_bk(const SymMatrix& g);

// The diagonal h with g = u h w0bar u' (u, u' upper unipotent).
SymMatrix gl2_hw(const SymMatrix& g);

// Value of a trivialization chart on a triple of lower-triangular factors:
// unipotent coordinates u1, u2, the three torus components hw(x_i), and the
// group component g = x1 x2 x3.
struct Gl2Chart {
  RationalFn u1, u2;
  std::vector<SymMatrix> h;
  SymMatrix g;
};
// Bracketing (x1 x2) x3: u1 = Phi^r(x1) + Phi^l(x2),
//                        u2 = Phi^r(x1 x2) + Phi^l(x3).
Gl2Chart gl2_F_12_3(const SymMatrix& x1, const SymMatrix& x2,
                    const SymMatrix& x3);
// Bracketing x1 (x2 x3): u1 = Phi^r(x2) + Phi^l(x3),
//                        u2 = Phi^r(x1) + Phi^l(x2 x3).
Gl2Chart gl2_F_1_23(const SymMatrix& x1, const SymMatrix& x2,
                    const SymMatrix& x3);

// Inverse of F_{12,3}: from (u1, u2, e_i, f_i, p) recover the three
// lower-triangular factors x_i = [[a_i,0],[b_i,c_i]].
std::vector<SymMatrix> gl2_F_12_3_inverse(const RationalFn& u1,
                                          const RationalFn& u2,
                                          const std::vector<RationalFn>& e,
                                          const std::vector<RationalFn>& f,
                                          const RationalFn& p);

// The associator on M^(3): (u1, u2) -> (e2/(u1 f2) + u2,
// u1 u2 f2 / (e2/u1 + f2 u2)); the torus coordinates are unchanged.
std::pair<RationalFn, RationalFn> psi_gl2(const RationalFn& u1,
                                          const RationalFn& u2,
                                          const RationalFn& e2,
                                          const RationalFn& f2);

// A charge family together with the context its values live on.
struct Gl2Charges {
  VarCtxPtr ctx;
  std::vector<CentralCharge> charges;
};

// The eight n = 3 central charges evaluated on a triple of 2x2 matrices
// (labels as in central_charges for n = 3).
std::vector<CentralCharge> gl2_central_charges3(const SymMatrix& x1,
                                                const SymMatrix& x2,
                                                const SymMatrix& x3);

// The same family computed symbolically on the lower-triangular coordinates
// (a1, b1, c1, a2, b2, c2, a3, b3, c3).
Gl2Charges gl2_charges_bminus();

// The family expressed in the M^(3) coordinates (u1, u2, e1..e3, f1..f3):
//   c0*m1 = u2                      c0*m2 = u2'
//   c1*m1 = (e1 e2 / f1 f2) u1^-2 u2^-1
//                                   c1*m2 = (e1/f1) / u2'
//   c2*m1 = (e3/f3) u2^-1           c2*m2 = (e2 e3 / f2 f3) u1'^-2 u2'^-1
//   c0*p3 = u1'                     c0*q3 = u1
// with (u1', u2') = psi_gl2(u1, u2, e2, f2).
Gl2Charges gl2_charges_m3();

// Delta_n-bar for GL_2 on the coordinates (u_1..u_{n-1}, e_1..e_n) with the
// torus restricted to f_i = 1, built from the 2x2 matrix model; the context
// holds u's first, then e's.
struct Gl2Potential {
  VarCtxPtr ctx;
  RationalFn value;
};
Gl2Potential gl2_deltan_bar_restricted(int n);
// Full-torus n = 2 version on (u, e1, e2, f1, f2).
Gl2Potential gl2_delta2_bar_full();

// Howe comparison: Phi_n + eps_n - Delta_n-bar composed with u_i = y_{i+1},
// e_i = x_i y_i on the slice y_1 = 1, as a Laurent polynomial in
// (x_1..x_n, y_2..y_n).  Expected to equal x_1 + 2 for every n.
LaurentPoly howe_compare_gl2(int n);

}  // namespace geomult
