// Potentials and fibration maps on the model spaces M^(n) = U^{n-1} x H^n,
// built symbolically on the toric charts attached to decorated reduced
// words: Phi_BK, the descended central charge Delta_n-bar, the highest
// weight map hw_n and projection pi_n, the central-charge families C_n,
// and the reduction (Levi-branching) potential Phi_L.
//
// Torus bookkeeping: each Cartan factor h_k is represented by rank-many
// chart variables z_{k,j} := h_k^{omega_j} (the fundamental-weight
// characters), so any character h_k^{mu} is the Laurent monomial
// prod_j z_{k,j}^{c_j(mu)}.

#pragma once

#include <string>
#include <vector>

#include "geomult/cartan.hpp"
#include "geomult/groupsym.hpp"
#include "geomult/laurent.hpp"
#include "geomult/words.hpp"

namespace geomult {

// A potential realized as a Laurent polynomial with positive integer
// coefficients on one toric chart of M^(n).  Variables are laid out as the
// chart coordinates of u_1..u_{n-1} (one block per decorated word) followed
// by the torus coordinates z_{k,j} for k = 1..n, j = 1..rank.
struct PotentialOnChart {
  RootDatum datum;
  int n = 2;                      // number of tensor factors
  std::vector<DecoratedWord> ds;  // n-1 decorated words (charts for the u_i)
  VarCtxPtr ctx;
  std::vector<int> t_offset;      // start of each chart's t-block
  std::vector<int> t_count;       // length of each chart's t-block
  int z_offset = 0;               // z_{k,j} at z_offset + (k-1)*rank + (j-1)
  int num_torus = 0;              // number of h-blocks (n, or 1 for Phi_L)
  LaurentPoly value;

  int z_index(int k, int j) const {
    return z_offset + (k - 1) * datum.rank() + (j - 1);
  }
  int total_t() const { return z_offset; }
};

// A coordinatewise-monomial map: one Laurent monomial per labeled
// coordinate (coefficients +-1; signs are lift artifacts and irrelevant
// after tropicalization).
struct MonomialMap {
  VarCtxPtr ctx;
  std::vector<std::string> labels;
  std::vector<LaurentPoly> coords;
};

struct CentralCharge {
  std::string label;
  RationalFn value;  // on the same chart/ctx as the matching potential
};

// Convert a minor ratio to a Laurent polynomial and normalize its sign:
// accepts an all-positive or all-negative result (the latter is negated; a
// global sign is an artifact of the Weyl-lift choices), rejects mixed signs
// with NotPositive.  NotDivisible propagates from the division.
LaurentPoly positive_laurent(const RationalFn& f);

// Phi_BK(g) = sum_i (Delta_{w0 om_i, s_i om_i}(g) + Delta_{w0 s_i om_i,
// om_i}(g)) / Delta_{w0 om_i, om_i}(g) on the big cell.
RationalFn phi_BK(const RootDatum& datum, const SymMatrix& g);

// The descended central charge Delta_n-bar on the chart given by the n-1
// decorated reduced words of w0 (one per U-factor):
//   Delta_n-bar = sum_i chi^st(u_i) + Phi_BK(h_{i+1} u_i^T (hw_i)^{w0}),
// where hw_i = h_1...h_i * prod_{j<i} hw(w0bar u_j w0bar).
PotentialOnChart deltan_bar(const RootDatum& datum,
                            const std::vector<DecoratedWord>& ds);
// n = 2 special case.
PotentialOnChart delta2_bar(const RootDatum& datum, const DecoratedWord& d);

// hw_n and pi_n on the same chart.  hw_n is reported through its
// characters hw_n^{w0 omega_k}; pi_n through h_k^{omega_j} = z_{k,j}.
struct HwPi {
  MonomialMap hw;
  MonomialMap pi;
};
HwPi hw_map(const RootDatum& datum, const std::vector<DecoratedWord>& ds);

// The central-charge family C_n (n in {2,3}) expressed on the same chart
// as deltan_bar(ds): n=2 gives {c0, c1, c2}; n=3 the eight functions
// c0,c1,c2 composed with the partial multiplications m_1, m_2 and the
// truncations p_3, q_3.  Computed from the lift
//   (g_1, g_2)      = (h_1 w0bar u, h_2 w0bar)                  for n = 2,
//   (g_1, g_2, g_3) = (h_1 w0bar u_1, h_2 w0bar,
//                      v_12^{-1} u_2 h_3 w0bar),  v_12 = [w0bar^{-1}g_1g_2]_+
// with Phi^l(g) = chi^st([w0bar^{-1} g^iota]_+), Phi^r(g) =
// chi^st([w0bar^{-1} g]_+).
std::vector<CentralCharge> central_charges(const RootDatum& datum,
                                           const std::vector<DecoratedWord>& ds);

// Reduction potential for the Levi subgroup attached to J, on the
// torus-dressed chart
//   b(t) = prod_k x_{i_k}(t_k) t_k^{alpha_{i_k}^vee}
// for a reduced word (i_1, ..., i_m) of w_P = (w0^J)^{-1} w0:
//   Phi_L(t, h) = sum_i Delta_{w0^J om_i, w0 s_i om_i}(b(t))
//               + sum_k h^{alpha_{i_k}} t_k prod_{l<k}
//                       t_l^{<alpha_{i_l}, alpha_{i_k}^vee>},
//   hw_L = h,  pi_L = h * [b(t)]_0.
// The minors of b(t) expand with one monomial per trail, whose exponent
// vector already carries the half-sum pairings of the trail weights with
// the chart coroots; the second sum encodes the string inequalities of
// the word relative to hw_L.  The single h-block uses z_{1,j}.
struct ReductionPotential {
  PotentialOnChart phi;  // n = 1 torus block
  MonomialMap hw;        // h^{omega_j} = z_{1,j}
  MonomialMap pi;        // (h [b]_0)^{omega_j}
  Word word;             // the reduced word of w_P used for the chart
};
ReductionPotential reduction_potential(const RootDatum& datum,
                                       const std::vector<int>& J,
                                       const Word& word_wP);
// Convenience: canonical (lex-minimal) reduced word of w_P.
Word canonical_wP_word(const RootDatum& datum, const std::vector<int>& J);

// Helpers shared with the tropical module ------------------------------------

// The chart point of a decorated word computed inside an ambient context,
// with the chart's t-variables at [first_var, first_var + len).
ChartPoint chart_in_ctx(const RootDatum& datum, const DecoratedWord& d,
                        const VarCtxPtr& ctx, int first_var);

// h_k^{mu} as a monomial in the z-variables of p's context.
LaurentPoly torus_char(const PotentialOnChart& p, int k, const Weight& mu);

// hw(w0bar u w0bar)^{w0 omega_k} = Delta_{w0 om_k, om_k}(w0bar u w0bar),
// a single Laurent monomial on the chart (NotMonomial otherwise).
LaurentPoly hw_char(const RootDatum& datum, const SymMatrix& u, int k);

}  // namespace geomult
