// Reduced words, decorated words (i, K, L), the associated double word
// (shuffle), the simple moves tau1-tau4 and their double-word counterparts
// tau1'-tau4', and enumeration of equivalence classes of decorated reduced
// words.
//
// Positions inside K, L and move positions are 1-based throughout, matching
// the usual combinatorial indexing.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geomult/cartan.hpp"

namespace geomult {

using Word = std::vector<int>;        // letters in [1, r]
using DoubleWord = std::vector<int>;  // nonzero letters in [-r, r]

struct DecoratedWord {
  Word word;
  std::vector<int> K;  // sorted, 1-based positions into word
  std::vector<int> L;  // sorted, 1-based positions into word

  auto operator<=>(const DecoratedWord&) const = default;
  std::string str() const;
};

// The order-preserving bijection sigma~ : K -> L, the order-reversing
// bijection rho~ : K -> L, and the combined permutation of [1, n] that acts
// by rho~ on K and by sigma~ of the complements on the complement of K.
struct SigmaRho {
  std::vector<int> sigma_tilde;  // sigma_tilde[a] = image of K[a] in L
  std::vector<int> rho_tilde;    // rho_tilde[a]   = image of K[a] in L
  std::vector<int> full;         // full[k-1] = sigma_{K,L}(k), k in [1,n]
};
SigmaRho sigma_rho(const std::vector<int>& K, const std::vector<int>& L, int n);

// True iff w_{i_K} * w_{i_Kbar} = w_i in W (the subset K is compatible with
// the reduced word i).
bool is_compatible(const RootDatum& datum, const Word& word,
                   const std::vector<int>& K);

// All compatible subsets K of [1, len(word)], in lexicographic order.
std::vector<std::vector<int>> all_compatible_K(const RootDatum& datum,
                                               const Word& word);

// The shuffle II(i,K,L) = (-i_K^op) placed at positions L, with i_{Kbar}
// filling the remaining positions in order.
DoubleWord associated_double_word(const DecoratedWord& d);

// v_K = w_{i_K}^{-1} and w_K = w_{i_Kbar}; requires K compatible.
std::pair<WeylElt, WeylElt> vK_wK(const RootDatum& datum, const DecoratedWord& d);

enum class Move { tau1, tau2, tau3, tau4 };

// Attempt a move at a (1-based) position; nullopt when not applicable.
//   tau1 at k: swap letters k, k+1 of the word (both sides of K, adjacent
//              sigma images, commuting reflections).
//   tau2 at l: toggle L on {l, l+1} (separated by L, distinct letters).
//   tau3:      position ignored; requires 1 in L and K an initial segment
//              [1,|K|]; drops the last element of K and 1 from L.  The
//              initial-segment requirement makes the double-word move tau3'
//              (flip the sign of the first entry) match exactly.
//   tau4 at l: toggle L on {l, l+1} (separated by L, equal letters).
std::optional<DecoratedWord> try_move(const RootDatum& datum,
                                      const DecoratedWord& d, Move move,
                                      int pos);
// Inverse of the guarded tau3: extend K = [1,m] to [1,m+1], insert 1 into L.
std::optional<DecoratedWord> try_move_tau3_inverse(const RootDatum& datum,
                                                   const DecoratedWord& d);
// Throwing wrapper around try_move.
DecoratedWord apply_move(const RootDatum& datum, const DecoratedWord& d,
                         Move move, int pos);

enum class DoubleMove { tau1p, tau2p, tau3p, tau4p };

// The corresponding move on the double word; nullopt when not applicable.
std::optional<DoubleWord> double_word_move(const RootDatum& datum,
                                           const DoubleWord& I, DoubleMove move,
                                           int pos);

// All decorated reduced words of w: every reduced word, every compatible K,
// every L of matching size.
std::vector<DecoratedWord> all_decorated_words(const RootDatum& datum,
                                               const WeylElt& w);

struct EquivalenceClasses {
  std::vector<DecoratedWord> reps;       // lex-minimal class representatives
  std::vector<int> class_of;             // index into reps, per input word
  std::vector<DecoratedWord> all_words;  // the enumerated decorated words
  std::vector<std::pair<int, int>> tau4_edges;  // inter-class edges (rep ids)
  bool capped = false;
};

// Partition all decorated reduced words of w into tau1-tau3 orbits; tau4
// transitions are recorded as edges between classes.  If the number of
// decorated words exceeds the cap, enumeration stops with capped = true.
EquivalenceClasses enumerate_equivalence_classes(const RootDatum& datum,
                                                 const WeylElt& w,
                                                 std::size_t cap = 1000000);

// r_l = product over k > l with j_k > 0 of s_{j_k}, factors in decreasing
// order of k.  Returns r_1..r_n (r_n = identity).
std::vector<WeylElt> r_factors(const RootDatum& datum, const DoubleWord& I);

}  // namespace geomult
