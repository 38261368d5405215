// Tropicalization of potentials and fibration maps into integer linear
// systems, exact lattice-point enumeration, and the multiplicity front end:
// tensor, n-fold, q-deformed, and Levi-reduction multiplicities.
//
// Conventions. Tensor-type inputs are coweights of the given root datum
// (equivalently dominant weights of its Langlands dual); reduction inputs
// are weights of the given datum. The pairing values <omega_j, lambda>
// entering the linear systems solve A^T e = c over the rationals, so fibers
// over non-coroot-lattice data come out (correctly) empty.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geomult/cartan.hpp"
#include "geomult/laurent.hpp"
#include "geomult/potential.hpp"
#include "geomult/words.hpp"

namespace geomult {

struct Unbounded : std::runtime_error {
  explicit Unbounded(const std::string& what) : std::runtime_error(what) {}
};
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A rational polytope in integer-scaled form: rows (a, c) mean
// <a, t> + c >= 0 (ineqs) or = 0 (eqs).
struct PolytopeSpec {
  int dim = 0;
  std::vector<std::pair<std::vector<Int>, Int>> ineqs;
  std::vector<std::pair<std::vector<Int>, Int>> eqs;
};

struct MultiplicityResult {
  Int count = 0;
  bool points_emitted = false;
  std::vector<std::vector<long>> points;  // lex-sorted when emitted
  std::map<Rat, Int> q_poly;              // only for deformed counts
};

// Exponent vectors of a minor evaluated on a chart, one per monomial (the
// trail vectors); empty when the function vanishes identically (no trails).
// Sign-normalized via positive_laurent; mixed signs abort.
std::vector<std::vector<int>> trail_vectors(const RationalFn& f);

// Pairing coordinates e with A^T e = c (c = fundamental-coordinate vector).
std::vector<Rat> pairing_coords(const RootDatum& datum,
                                const std::vector<long>& c);

// Cap for enumeration; MULT_CAP environment variable overrides the default
// of 10^6.
Int default_cap();

// Exhaustive enumeration by exact Fourier-Motzkin projection plus
// depth-first search. Throws Unbounded if a fiber direction is unbounded
// and CapExceeded past the cap.
MultiplicityResult enumerate_lattice_points(const PolytopeSpec& P,
                                            const Int& cap,
                                            bool emit_points = true);

// --- Tensor and n-fold multiplicities (potential route) ---------------------

// Cached symbolic data for one chart of M^(n): the potential, and the hw/pi
// monomial maps; fibers differ only in the right-hand sides.
struct TensorSystem {
  RootDatum datum;
  int n = 2;
  std::vector<DecoratedWord> ds;
  PotentialOnChart pot;
  HwPi hwpi;
};
TensorSystem build_tensor_system(const RootDatum& datum,
                                 const std::vector<DecoratedWord>& ds);
PolytopeSpec fiber_polytope(const TensorSystem& sys,
                            const std::vector<Coweight>& lambdas,
                            const Coweight& mu);

// --- Tensor multiplicities (explicit trail route) ---------------------------

// The combinatorial system attached to a decorated word: the equality
// Sum t_l r_l alpha_{i_l} = lambda + nu - mu together with three trail
// families (from the chart minors and the minimal-lift minor on u^T) whose
// right-hand sides are 0, <omega_i^v, lambda + s_i nu - mu> and
// <omega_i^v, s_i lambda + nu - mu>.
struct TrailSystem {
  RootDatum datum;
  DecoratedWord d;
  int m = 0;                                   // chart dimension
  std::vector<std::vector<long>> eq_rows;      // r rows of length m
  std::vector<std::vector<std::vector<int>>> family_a;  // per i: >= 0
  std::vector<std::vector<std::vector<int>>> family_b;  // per i: >= rhs_b(i)
  std::vector<std::vector<std::vector<int>>> family_c;  // per i: >= rhs_c(i)
};
TrailSystem build_trail_system(const RootDatum& datum, const DecoratedWord& d);
PolytopeSpec fiber_polytope(const TrailSystem& sys, const Coweight& lambda,
                            const Coweight& nu, const Coweight& mu);

enum class TensorRoute { Potential, Trails };

PolytopeSpec build_tensor_polytope(const RootDatum& datum,
                                   const DecoratedWord& d,
                                   const Coweight& lambda, const Coweight& nu,
                                   const Coweight& mu,
                                   TensorRoute route = TensorRoute::Potential);

MultiplicityResult tensor_multiplicity(const RootDatum& datum,
                                       const DecoratedWord& d,
                                       const Coweight& lambda,
                                       const Coweight& nu, const Coweight& mu,
                                       TensorRoute route = TensorRoute::Potential,
                                       const Int& cap = default_cap(),
                                       bool emit_points = false);

MultiplicityResult n_fold(const RootDatum& datum,
                          const std::vector<DecoratedWord>& ds,
                          const std::vector<Coweight>& lambdas,
                          const Coweight& mu, const Int& cap = default_cap(),
                          bool emit_points = false);

// q-deformation by a central charge: q_poly maps the tropical value of the
// charge at each fiber point to the number of points attaining it.
MultiplicityResult deformed_multiplicity(const RootDatum& datum,
                                         const std::vector<DecoratedWord>& ds,
                                         const std::string& charge_label,
                                         const std::vector<Coweight>& lambdas,
                                         const Coweight& mu,
                                         const Int& cap = default_cap());

// Tropical evaluation at a rational point (exact).
Rat tropical_eval_rat(const TropicalForm& f, const std::vector<Rat>& xi);

// --- Reduction (Levi branching) multiplicities ------------------------------

enum class ReductionRoute { Potential, Inequalities };

PolytopeSpec build_reduction_polytope(const RootDatum& datum,
                                      const std::vector<int>& J,
                                      const Word& word_wP, const Weight& lambda,
                                      const Weight& beta, ReductionRoute route);

// Multiplicity of the Levi highest-weight module V^J_beta in V_lambda; the
// word defaults to the canonical reduced word of w_P when empty.
MultiplicityResult reduction_multiplicity(
    const RootDatum& datum, const std::vector<int>& J, const Weight& lambda,
    const Weight& beta, ReductionRoute route = ReductionRoute::Inequalities,
    const Int& cap = default_cap(), const Word& word_wP = {},
    bool emit_points = false);

}  // namespace geomult
