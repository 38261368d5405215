#include "geomult/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace geomult {

int VarCtx::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

VarCtxPtr make_ctx(std::vector<std::string> names) {
  auto ctx = std::make_shared<VarCtx>();
  ctx->names = std::move(names);
  return ctx;
}

bool GrlexLess::operator()(const std::vector<int>& a,
                           const std::vector<int>& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(VarCtxPtr ctx, Int c) {
  LaurentPoly p(std::move(ctx));
  if (c != 0) p.terms_.emplace(std::vector<int>(p.nvars(), 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::variable(VarCtxPtr ctx, int index, int exp) {
  std::vector<int> e(ctx->size(), 0);
  e.at(index) = exp;
  return monomial(std::move(ctx), std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(VarCtxPtr ctx, std::vector<int> exps, Int c) {
  LaurentPoly p(std::move(ctx));
  if (static_cast<int>(exps.size()) != p.nvars())
    throw std::invalid_argument("monomial: exponent length mismatch");
  if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int e) { return e == 0; });
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::is_positive() const {
  for (const auto& [e, c] : terms_)
    if (c <= 0) return false;
  return true;
}

const std::vector<int>& LaurentPoly::lead_exp() const {
  if (terms_.empty()) throw std::logic_error("lead_exp of zero polynomial");
  return terms_.rbegin()->first;
}

const Int& LaurentPoly::lead_coef() const {
  if (terms_.empty()) throw std::logic_error("lead_coef of zero polynomial");
  return terms_.rbegin()->second;
}

std::vector<int> LaurentPoly::min_exponents() const {
  std::vector<int> m(nvars(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void LaurentPoly::insert_term(std::vector<int> exps, Int c) {
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(std::move(exps), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static void check_same_ctx(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.ctx() != b.ctx() &&
      (!a.ctx() || !b.ctx() || a.ctx()->names != b.ctx()->names))
    throw std::invalid_argument("LaurentPoly: variable context mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_ctx(*this, o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_same_ctx(*this, o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_ctx(*this, o);
  LaurentPoly r(ctx_);
  std::vector<int> e(nvars());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars(); ++i) e[i] = ea[i] + eb[i];
      r.insert_term(e, ca * cb);
    }
  }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  LaurentPoly r(ctx_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const std::vector<int>& exps) const {
  LaurentPoly r(ctx_);
  std::vector<int> e(nvars());
  for (const auto& [ea, c] : terms_) {
    for (int i = 0; i < nvars(); ++i) e[i] = ea[i] + exps[i];
    r.terms_.emplace(e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  LaurentPoly r = constant(ctx_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

LaurentPoly LaurentPoly::divided_by_int(const Int& c) const {
  if (c == 0) throw std::invalid_argument("division by zero constant");
  LaurentPoly r(ctx_);
  for (const auto& [e, k] : terms_) {
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
    if (rem != 0) throw NotDivisible("coefficient not divisible by constant");
    r.terms_.emplace(e, std::move(q));
  }
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  check_same_ctx(f, g);
  if (g.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  if (f.is_zero()) return f;
  // Shift both operands so every exponent is nonnegative; componentwise
  // minimal exponents are additive over an integral domain, so f = q*g for
  // Laurent polynomials iff the shifted f is an exact polynomial multiple of
  // the shifted g, with the quotient shifted back by min(f) - min(g).
  const int n = f.nvars();
  std::vector<int> fmin = f.min_exponents(), gmin = g.min_exponents();
  std::vector<int> neg(n);
  for (int i = 0; i < n; ++i) neg[i] = -fmin[i];
  LaurentPoly r = f.shifted(neg);
  for (int i = 0; i < n; ++i) neg[i] = -gmin[i];
  LaurentPoly gp = g.shifted(neg);
  // Leading-term division in graded-lex order; on nonnegative exponents the
  // order is a well-order, so the loop terminates.  If f is a multiple of g
  // every leading term of r stays divisible by the leading term of gp; the
  // first failed monomial or coefficient division certifies
  // non-divisibility.
  LaurentPoly q(f.ctx_);
  const std::vector<int>& ge = gp.lead_exp();
  const Int& gc = gp.lead_coef();
  std::vector<int> de(n);
  while (!r.is_zero()) {
    const std::vector<int>& re = r.lead_exp();
    for (int i = 0; i < n; ++i) {
      de[i] = re[i] - ge[i];
      if (de[i] < 0) throw NotDivisible("leading monomial does not divide");
    }
    Int qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.lead_coef().get_mpz_t(),
                gc.get_mpz_t());
    if (rem != 0) throw NotDivisible("leading coefficient does not divide");
    LaurentPoly t = monomial(f.ctx_, de, qc);
    q += t;
    r -= t * gp;
  }
  for (int i = 0; i < n; ++i) de[i] = fmin[i] - gmin[i];
  return q.shifted(de);
}

LaurentPoly LaurentPoly::subst_monomials(const std::vector<LaurentPoly>& images,
                                         const VarCtxPtr& target) const {
  if (static_cast<int>(images.size()) != nvars())
    throw std::invalid_argument("subst_monomials: image count mismatch");
  std::vector<std::vector<int>> img_exp;
  for (const auto& im : images) {
    if (!im.is_monomial() || im.lead_coef() != 1)
      throw NotMonomial("subst_monomials: image must be a unit monomial");
    img_exp.push_back(im.lead_exp());
  }
  LaurentPoly r(target);
  std::vector<int> e(target->size());
  for (const auto& [ea, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < nvars(); ++i)
      for (int j = 0; j < target->size(); ++j) e[j] += ea[i] * img_exp[i][j];
    r.insert_term(e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::embedded(const VarCtxPtr& target) const {
  std::vector<int> where(nvars());
  for (int i = 0; i < nvars(); ++i) {
    where[i] = target->index_of(ctx_->names[i]);
    if (where[i] < 0)
      throw std::invalid_argument("embedded: variable missing in target");
  }
  LaurentPoly r(target);
  std::vector<int> e(target->size());
  for (const auto& [ea, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < nvars(); ++i) e[where[i]] = ea[i];
    r.terms_.emplace(e, c);
  }
  return r;
}

Rat LaurentPoly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars())
    throw std::invalid_argument("eval: point length mismatch");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term(c);
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0) throw std::domain_error("eval: zero at negative power");
      Rat p = point[i];
      int k = e[i];
      if (k < 0) {
        p = 1 / p;
        k = -k;
      }
      for (int j = 0; j < k; ++j) term *= p;
    }
    total += term;
  }
  return total;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest graded-lex terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ctx_->names[i];
      if (e[i] != 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << vars;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// TropicalForm

long TropicalForm::eval(const std::vector<long>& xi) const {
  auto min_form = [&xi](const std::vector<std::vector<int>>& forms) {
    long best = 0;
    bool first = true;
    for (const auto& f : forms) {
      long v = 0;
      for (size_t i = 0; i < f.size(); ++i) v += static_cast<long>(f[i]) * xi[i];
      if (first || v < best) best = v, first = false;
    }
    return best;
  };
  if (num_forms.empty()) throw std::logic_error("TropicalForm: empty numerator");
  long v = min_form(num_forms);
  if (!den_forms.empty()) v -= min_form(den_forms);
  return v;
}

long tropical_eval(const TropicalForm& t, const std::vector<long>& xi) {
  return t.eval(xi);
}

// ---------------------------------------------------------------------------
// RationalFn

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)) {
  if (den.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
  den_.push_back(std::move(den));
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    den_scalar_ = 1;
    return;
  }
  std::vector<LaurentPoly> kept;
  for (auto& f : den_) {
    if (f.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
    if (f.is_monomial()) {
      // Absorb monomial factors: shift exponents into num, coefficient into
      // den_scalar.
      std::vector<int> neg = f.lead_exp();
      for (int& e : neg) e = -e;
      num_ = num_.shifted(neg);
      den_scalar_ *= f.lead_coef();
      continue;
    }
    // Sign-normalize the factor so its graded-lex leading coefficient is
    // positive.
    if (f.lead_coef() < 0) {
      f = -f;
      den_scalar_ = -den_scalar_;
    }
    // Try cancelling the whole factor against the numerator.
    try {
      num_ = LaurentPoly::exact_div(num_, f);
      continue;
    } catch (const NotDivisible&) {
      kept.push_back(std::move(f));
    }
  }
  den_ = std::move(kept);
  if (den_scalar_ < 0) {
    den_scalar_ = -den_scalar_;
    num_ = -num_;
  }
  // Reduce integer content against den_scalar.
  if (den_scalar_ != 1) {
    Int g;
    Int c = num_.content();
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_scalar_.get_mpz_t());
    if (g > 1) {
      num_ = num_.divided_by_int(g);
      den_scalar_ /= g;
    }
  }
}

LaurentPoly RationalFn::as_laurent() const {
  LaurentPoly q = num_;
  for (const auto& f : den_) q = LaurentPoly::exact_div(q, f);
  if (den_scalar_ != 1) q = q.divided_by_int(den_scalar_);
  return q;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

// Multiset difference of denominator factor lists by polynomial equality;
// used to put sums over the least common structure.
static void split_common(const std::vector<LaurentPoly>& a,
                         const std::vector<LaurentPoly>& b,
                         std::vector<LaurentPoly>& common,
                         std::vector<LaurentPoly>& a_only,
                         std::vector<LaurentPoly>& b_only) {
  std::vector<bool> used(b.size(), false);
  for (const auto& fa : a) {
    bool matched = false;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && fa == b[j]) {
        used[j] = true;
        common.push_back(fa);
        matched = true;
        break;
      }
    }
    if (!matched) a_only.push_back(fa);
  }
  for (size_t j = 0; j < b.size(); ++j)
    if (!used[j]) b_only.push_back(b[j]);
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  std::vector<LaurentPoly> common, mine, theirs;
  split_common(den_, o.den_, common, mine, theirs);
  auto prod = [this](const std::vector<LaurentPoly>& fs) {
    LaurentPoly p = LaurentPoly::constant(num_.ctx(), 1);
    for (const auto& f : fs) p *= f;
    return p;
  };
  Int g;
  mpz_gcd(g.get_mpz_t(), den_scalar_.get_mpz_t(), o.den_scalar_.get_mpz_t());
  Int sa = den_scalar_ / g, sb = o.den_scalar_ / g;
  RationalFn r;
  r.num_ = num_.scaled(sb) * prod(theirs) + o.num_.scaled(sa) * prod(mine);
  r.den_ = common;
  r.den_.insert(r.den_.end(), mine.begin(), mine.end());
  r.den_.insert(r.den_.end(), theirs.begin(), theirs.end());
  r.den_scalar_ = g * sa * sb;
  r.normalize();
  return r;
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
  RationalFn r;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
  r.den_scalar_ = den_scalar_ * o.den_scalar_;
  r.normalize();
  return r;
}

RationalFn RationalFn::reciprocal() const {
  if (num_.is_zero()) throw std::invalid_argument("reciprocal of zero");
  RationalFn r;
  r.num_ = LaurentPoly::constant(num_.ctx(), den_scalar_);
  for (const auto& f : den_) r.num_ *= f;
  r.den_.push_back(num_);
  r.normalize();
  return r;
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
  return *this * o.reciprocal();
}

bool RationalFn::operator==(const RationalFn& o) const {
  // a/(s*D) == b/(t*E)  iff  a*t*E == b*s*D.
  LaurentPoly lhs = num_.scaled(o.den_scalar_);
  for (const auto& f : o.den_) lhs *= f;
  LaurentPoly rhs = o.num_.scaled(den_scalar_);
  for (const auto& f : den_) rhs *= f;
  return lhs == rhs;
}

bool RationalFn::is_positive() const {
  if (!num_.is_positive()) return false;
  for (const auto& f : den_)
    if (!f.is_positive()) return false;
  return den_scalar_ > 0;
}

Rat RationalFn::eval(const std::vector<Rat>& point) const {
  Rat v = num_.eval(point);
  Rat d(den_scalar_);
  for (const auto& f : den_) d *= f.eval(point);
  if (d == 0) throw std::domain_error("RationalFn::eval: denominator vanishes");
  return v / d;
}

std::string RationalFn::str() const {
  if (is_laurent()) return num_.str();
  std::string s = "(" + num_.str() + ") / (";
  bool first = true;
  if (den_scalar_ != 1) {
    s += den_scalar_.get_str();
    first = false;
  }
  for (const auto& f : den_) {
    if (!first) s += " * ";
    s += "(" + f.str() + ")";
    first = false;
  }
  return s + ")";
}

TropicalForm tropicalize(const RationalFn& f) {
  if (f.num().is_zero())
    throw NotPositive("tropicalize: zero function has no tropicalization");
  if (!f.is_positive())
    throw NotPositive("tropicalize: no positive presentation");
  TropicalForm t;
  for (const auto& [e, c] : f.num().terms()) t.num_forms.push_back(e);
  if (!f.den_factors().empty()) {
    LaurentPoly d = LaurentPoly::constant(f.ctx(), 1);
    for (const auto& g : f.den_factors()) d *= g;
    for (const auto& [e, c] : d.terms()) t.den_forms.push_back(e);
  }
  return t;
}

}  // namespace geomult
