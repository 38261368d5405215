// Exact sparse multivariate Laurent-polynomial and rational-function
// arithmetic, positivity detection, and min-plus tropicalization.
//
// Coefficients are arbitrary-precision integers (GMP); rationals appear
// only in numeric evaluation helpers.  Terms are kept in graded
// lexicographic order so serialization and hashing are deterministic.

#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace geomult {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Errors

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};
struct NotPositive : std::runtime_error {
  explicit NotPositive(const std::string& what) : std::runtime_error(what) {}
};
struct NotMonomial : std::runtime_error {
  explicit NotMonomial(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Variable context: an ordered list of variable names shared by all
// polynomials of one computation.

struct VarCtx {
  std::vector<std::string> names;
  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;  // -1 if absent
};
using VarCtxPtr = std::shared_ptr<const VarCtx>;

VarCtxPtr make_ctx(std::vector<std::string> names);

// Graded lexicographic order on exponent vectors: compare total degree,
// then lexicographically.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// ---------------------------------------------------------------------------
// LaurentPoly

class LaurentPoly {
 public:
  using TermMap = std::map<std::vector<int>, Int, GrlexLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarCtxPtr ctx) : ctx_(std::move(ctx)) {}

  static LaurentPoly zero(VarCtxPtr ctx) { return LaurentPoly(std::move(ctx)); }
  static LaurentPoly constant(VarCtxPtr ctx, Int c);
  static LaurentPoly variable(VarCtxPtr ctx, int index, int exp = 1);
  static LaurentPoly monomial(VarCtxPtr ctx, std::vector<int> exps, Int c);

  const VarCtxPtr& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  int nvars() const { return ctx_ ? ctx_->size() : 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // True iff every stored coefficient is > 0 (vacuously true for 0).
  bool is_positive() const;

  // Leading term in graded-lex order.
  const std::vector<int>& lead_exp() const;
  const Int& lead_coef() const;

  // Coordinatewise minimum of all exponent vectors (0 for the zero poly).
  std::vector<int> min_exponents() const;
  // Content: gcd of coefficients (0 for the zero poly).
  Int content() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly scaled(const Int& c) const;
  // Multiply by the monomial with the given exponent vector.
  LaurentPoly shifted(const std::vector<int>& exps) const;
  LaurentPoly pow(int k) const;  // k >= 0

  // Divide by an integer constant; throws NotDivisible on remainder.
  LaurentPoly divided_by_int(const Int& c) const;

  // Exact division; throws NotDivisible if g does not divide f.
  static LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

  // Substitute variable i by the monomial images[i] (a one-term Laurent
  // polynomial with coefficient +1, possibly over a different context).
  LaurentPoly subst_monomials(const std::vector<LaurentPoly>& images,
                              const VarCtxPtr& target) const;

  // Embed into a context whose name list contains this one's names.
  LaurentPoly embedded(const VarCtxPtr& target) const;

  // Exact evaluation at a rational point (all coordinates nonzero if any
  // exponent is negative).
  Rat eval(const std::vector<Rat>& point) const;

  std::string str() const;

 private:
  void insert_term(std::vector<int> exps, Int c);
  friend class RationalFn;

  VarCtxPtr ctx_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// TropicalForm: value at xi is  min over num_forms <chi,xi>  minus
// min over den_forms <chi,xi>.

struct TropicalForm {
  std::vector<std::vector<int>> num_forms;
  std::vector<std::vector<int>> den_forms;  // may be empty (denominator 1)

  long eval(const std::vector<long>& xi) const;
};

// ---------------------------------------------------------------------------
// RationalFn: num / (den_scalar * prod(den_factors)).  The factored
// denominator keeps the common "product of minors" denominators small and
// lets exact_div cancel them one at a time.

class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(LaurentPoly num) : num_(std::move(num)) { normalize(); }
  RationalFn(LaurentPoly num, LaurentPoly den);

  static RationalFn zero(const VarCtxPtr& ctx) {
    return RationalFn(LaurentPoly::zero(ctx));
  }
  static RationalFn constant(const VarCtxPtr& ctx, Int c) {
    return RationalFn(LaurentPoly::constant(ctx, std::move(c)));
  }

  const LaurentPoly& num() const { return num_; }
  const std::vector<LaurentPoly>& den_factors() const { return den_; }
  const Int& den_scalar() const { return den_scalar_; }
  const VarCtxPtr& ctx() const { return num_.ctx(); }

  bool is_zero() const { return num_.is_zero(); }
  // True iff the denominator is trivial (1) after normalization.
  bool is_laurent() const { return den_.empty() && den_scalar_ == 1; }

  // Force conversion to a Laurent polynomial; throws NotDivisible.
  LaurentPoly as_laurent() const;

  RationalFn operator-() const;
  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }
  RationalFn reciprocal() const;

  // Mathematical equality (cross multiplication).
  bool operator==(const RationalFn& o) const;
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  // Positive presentation: numerator and all denominator factors have
  // positive coefficients and den_scalar > 0.
  bool is_positive() const;

  Rat eval(const std::vector<Rat>& point) const;

  std::string str() const;

 private:
  void normalize();

  LaurentPoly num_;
  std::vector<LaurentPoly> den_;
  Int den_scalar_ = 1;
};

// Tropicalization of a positively-presented rational function.
TropicalForm tropicalize(const RationalFn& f);

long tropical_eval(const TropicalForm& t, const std::vector<long>& xi);

}  // namespace geomult
