// Independent, brute-force-grade character-theoretic computations used as
// ground truth: Freudenthal weight multiplicities, Brauer-Klimyk (Racah-
// Speiser) tensor multiplicities, and Levi branching by character
// restriction plus highest-weight peeling.
//
// This module deliberately shares nothing with the chart/potential
// pipeline beyond the cartan plumbing.

#pragma once

#include <map>
#include <vector>

#include "geomult/cartan.hpp"
#include "geomult/laurent.hpp"  // for Int/Rat

namespace geomult {

struct CharacterTable {
  RootDatum datum;
  Weight lambda;
  // Every weight of V_lambda (fundamental coordinates) -> multiplicity.
  std::map<std::vector<long>, long> mult;
  Int dim;  // equals the Weyl dimension formula value (asserted)

  long multiplicity(const Weight& mu) const {
    auto it = mult.find(mu.c);
    return it == mult.end() ? 0 : it->second;
  }
};

// Exact weight multiplicities of the irreducible V_lambda.  Asserts
// dimension consistency against the Weyl dimension formula on every call.
CharacterTable weight_multiplicities(const RootDatum& datum, const Weight& lambda);

// dim Hom(V_mu, V_lambda (x) V_nu) by the signed Weyl-group sum.
long tensor_mult_oracle(const RootDatum& datum, const Weight& lambda,
                        const Weight& nu, const Weight& mu);

// Multiplicities of Levi irreducibles V^J_beta inside V_lambda|_{Levi(J)}.
// Keys are full-rank fundamental coordinates of the J-dominant highest
// weights beta.  Asserts full dimension bookkeeping.
std::map<std::vector<long>, long> branching_oracle(const RootDatum& datum,
                                                   const std::vector<int>& J,
                                                   const Weight& lambda);

// Weyl dimension formula (exact).
Int weyl_dim(const RootDatum& datum, const Weight& lambda);

}  // namespace geomult
