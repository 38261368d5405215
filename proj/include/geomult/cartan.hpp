// Root data, Weyl groups, weights/coweights, and Langlands-dual
// bookkeeping for all finite types, with exact integer arithmetic.
//
// Conventions: weights are stored in the fundamental-weight basis, so the
// pairing <lambda, alpha_i^vee> is coordinate i.  The Cartan matrix entry
// A[i][j] = <alpha_j, alpha_i^vee>, hence simple root alpha_j has
// fundamental coordinates given by COLUMN j of A, and simple coroot
// alpha_i^vee has fundamental-coweight coordinates given by ROW i.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace geomult {

struct Weight {
  std::vector<long> c;  // coordinates in the fundamental-weight basis
  bool operator==(const Weight&) const = default;
  bool is_dominant() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  std::string str() const;
};

// Coweights share the representation (coordinates along fundamental
// coweights); the distinct type keeps omega vs omega-vee bookkeeping honest.
struct Coweight {
  std::vector<long> c;
  bool operator==(const Coweight&) const = default;
  bool is_dominant() const;
  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;
  std::string str() const;
};

class RootDatum;

// A Weyl group element: canonical form is the r x r matrix of its action
// on weight coordinates, plus one stored reduced word (lexicographically
// minimal, built greedily from the matrix).
struct WeylElt {
  std::vector<std::vector<long>> mat;  // weight coords -> weight coords
  std::vector<int> word;               // a reduced word (1-based letters)

  bool operator==(const WeylElt& o) const { return mat == o.mat; }
  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const;
};

class RootDatum {
 public:
  static RootDatum make(const std::string& series, int rank);
  static RootDatum from_cartan(std::vector<std::vector<int>> cartan);

  const std::string& series() const { return series_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return A_; }

  // alpha_j in fundamental-weight coordinates (column j of A); 1-based j.
  Weight simple_root(int j) const;
  // alpha_i^vee in fundamental-coweight coordinates (row i of A); 1-based i.
  Coweight simple_coroot(int i) const;
  Weight rho() const;  // sum of fundamental weights

  Weight simple_reflection(int i, const Weight& w) const;
  Coweight simple_reflection(int i, const Coweight& w) const;

  Weight weyl_act(const WeylElt& w, const Weight& lam) const;
  Coweight weyl_act(const WeylElt& w, const Coweight& xi) const;

  WeylElt identity_elt() const;
  WeylElt simple_elt(int i) const;
  // Right/left multiplication by a simple reflection or another element.
  WeylElt multiply(const WeylElt& a, const WeylElt& b) const;
  WeylElt inverse(const WeylElt& w) const;
  WeylElt from_word(const std::vector<int>& word) const;

  // Coxeter length, computed as the number of positive roots sent negative.
  int length(const WeylElt& w) const;
  bool is_reduced(const std::vector<int>& word) const;
  // Lexicographically minimal reduced word, from the left-descent greedy
  // algorithm.
  std::vector<int> canonical_word(const WeylElt& w) const;

  WeylElt longest_element() const;
  // Longest element of the parabolic W_J (J is a 1-based index subset).
  WeylElt longest_element(const std::vector<int>& J) const;

  // Bipartite presentation w0 = (ab)^n a^eps over a 2-coloring of the
  // Dynkin diagram; a and b are products of commuting simple reflections.
  struct Bipartite {
    WeylElt a, b;
    std::vector<int> a_set, b_set;
    int n;
    int eps;
  };
  Bipartite bipartite_w0() const;

  RootDatum langlands_dual() const;

  // Minimal-lift weight lambda_i = omega_i + s_i omega_i.
  Weight minimal_lift_weight(int i) const;

  // All positive roots, in fundamental-weight coordinates.
  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }

  // True iff the weight (in fundamental coordinates) is a positive root.
  bool is_positive_root(const Weight& w) const;

  // All reduced words of w (DFS over left descents).
  std::vector<std::vector<int>> all_reduced_words(const WeylElt& w) const;

  // Full Weyl group enumeration (guarded; throws beyond 10^6 elements).
  std::vector<WeylElt> all_elements() const;

  // The Dynkin-diagram involution i -> i* defined by w0(alpha_i) = -alpha_{i*}.
  int star(int i) const;

  // Symmetrized bilinear form B[i][j] = d_i * A[i][j] = (alpha_i, alpha_j),
  // where d_i are the minimal symmetrizers; used by the oracle.
  std::vector<std::vector<long>> symmetrized_form() const;

 private:
  void build_roots();

  std::string series_;
  int rank_ = 0;
  std::vector<std::vector<int>> A_;
  std::vector<Weight> pos_roots_;
};

}  // namespace geomult
