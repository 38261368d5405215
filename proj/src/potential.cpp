#include "geomult/potential.hpp"

#include <sstream>
#include <stdexcept>

namespace geomult {

namespace {

// Monomial (coefficient +-1) raised to an integer power.
LaurentPoly mono_pow(const LaurentPoly& m, long e) {
  if (!m.is_monomial()) throw NotMonomial("mono_pow: not a monomial");
  const Int& c = m.lead_coef();
  if (c != 1 && c != -1)
    throw NotMonomial("mono_pow: monomial coefficient is not a unit");
  std::vector<int> exps = m.lead_exp();
  for (auto& x : exps) x = static_cast<int>(x * e);
  Int coef = (c == -1 && (e % 2 != 0)) ? Int(-1) : Int(1);
  return LaurentPoly::monomial(m.ctx(), std::move(exps), coef);
}

// z-monomial for h_k^{mu} given the variable layout of p.
LaurentPoly torus_char_raw(const VarCtxPtr& ctx, int z_offset, int rank, int k,
                           const Weight& mu) {
  std::vector<int> exps(ctx->size(), 0);
  for (int j = 1; j <= rank; ++j)
    exps[z_offset + (k - 1) * rank + (j - 1)] = static_cast<int>(mu.c[j - 1]);
  return LaurentPoly::monomial(ctx, std::move(exps), 1);
}

struct Model {
  PotentialOnChart base;               // value left empty
  std::vector<SymMatrix> u;            // chart matrices xi_II (upper unipotent)
  std::vector<std::vector<LaurentPoly>> D;  // D[i][k-1] = hw_char(u_i, k)
};

Model build_model(const RootDatum& datum, const std::vector<DecoratedWord>& ds) {
  const int r = datum.rank();
  const int n = static_cast<int>(ds.size()) + 1;

  std::vector<std::string> names;
  std::vector<int> t_offset, t_count;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    t_offset.push_back(static_cast<int>(names.size()));
    t_count.push_back(static_cast<int>(ds[i].word.size()));
    for (std::size_t l = 1; l <= ds[i].word.size(); ++l) {
      if (ds.size() == 1)
        names.push_back("t" + std::to_string(l));
      else
        names.push_back("u" + std::to_string(i + 1) + "t" + std::to_string(l));
    }
  }
  const int z_offset = static_cast<int>(names.size());
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= r; ++j)
      names.push_back("h" + std::to_string(k) + "w" + std::to_string(j));
  VarCtxPtr ctx = make_ctx(std::move(names));

  Model m;
  m.base.datum = datum;
  m.base.n = n;
  m.base.ds = ds;
  m.base.ctx = ctx;
  m.base.t_offset = t_offset;
  m.base.t_count = t_count;
  m.base.z_offset = z_offset;
  m.base.num_torus = n;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    ChartPoint cp = chart_in_ctx(datum, ds[i], ctx, t_offset[i]);
    m.u.push_back(cp.xi);
    std::vector<LaurentPoly> Di;
    for (int k = 1; k <= r; ++k) Di.push_back(hw_char(datum, cp.xi, k));
    m.D.push_back(std::move(Di));
  }
  return m;
}

// hw_i^{mu} = (h_1...h_i)^{mu} * prod_{j<i} hw(w0bar u_j w0bar)^{mu},
// where the j-th torus factor's mu-character is prod_k D_{j,k}^{c_k(w0 mu)}.
LaurentPoly hw_accum_char(const Model& m, int i, const Weight& mu) {
  const RootDatum& datum = m.base.datum;
  const int r = datum.rank();
  LaurentPoly out = LaurentPoly::constant(m.base.ctx, 1);
  for (int k = 1; k <= i; ++k)
    out *= torus_char_raw(m.base.ctx, m.base.z_offset, r, k, mu);
  Weight w0mu = datum.weyl_act(datum.longest_element(), mu);
  for (int j = 0; j < i - 1; ++j)
    for (int k = 1; k <= r; ++k)
      if (w0mu.c[k - 1] != 0) out *= mono_pow(m.D[j][k - 1], w0mu.c[k - 1]);
  return out;
}

Weight star_root(const RootDatum& datum, int a) {
  return datum.simple_root(datum.star(a));
}

}  // namespace

LaurentPoly positive_laurent(const RationalFn& f) {
  LaurentPoly lp = f.as_laurent();
  if (lp.is_positive()) return lp;
  LaurentPoly neg = -lp;
  if (neg.is_positive()) return neg;
  throw NotPositive("mixed-sign Laurent polynomial: " + lp.str());
}

RationalFn phi_BK(const RootDatum& datum, const SymMatrix& g) {
  WeylElt w0 = datum.longest_element();
  WeylElt e = datum.identity_elt();
  RationalFn s = RationalFn::zero(g.ctx());
  for (int i = 1; i <= datum.rank(); ++i) {
    WeylElt si = datum.simple_elt(i);
    WeylElt w0si = datum.multiply(w0, si);
    RationalFn num = generalized_minor(datum, g, w0, si, i) +
                     generalized_minor(datum, g, w0si, e, i);
    RationalFn den = generalized_minor(datum, g, w0, e, i);
    if (den.is_zero())
      throw GaussUndefined("phi_BK: principal generalized minor vanishes");
    s += num / den;
  }
  return s;
}

ChartPoint chart_in_ctx(const RootDatum& datum, const DecoratedWord& d,
                        const VarCtxPtr& ctx, int first_var) {
  ChartPoint cp;
  cp.d = d;
  cp.I = associated_double_word(d);
  cp.ctx = ctx;
  cp.x = x_of_double_word(datum, cp.I, ctx, first_var);
  auto [vK, wK] = vK_wK(datum, d);
  SymMatrix vbar_inv = weyl_lift(datum, vK, ctx).inverse();
  cp.xi = gauss_parts(vbar_inv * cp.x).upper;
  return cp;
}

LaurentPoly torus_char(const PotentialOnChart& p, int k, const Weight& mu) {
  return torus_char_raw(p.ctx, p.z_offset, p.datum.rank(), k, mu);
}

LaurentPoly hw_char(const RootDatum& datum, const SymMatrix& u, int k) {
  SymMatrix w0bar = weyl_lift(datum, datum.longest_element(), u.ctx());
  LaurentPoly m = (u * w0bar).leading_minor(k).as_laurent();
  if (!m.is_monomial())
    throw NotMonomial("hw_char: Delta_{w0 om_k, om_k}(w0bar u w0bar) = " +
                      m.str());
  return m;
}

PotentialOnChart deltan_bar(const RootDatum& datum,
                            const std::vector<DecoratedWord>& ds) {
  if (ds.empty()) throw std::invalid_argument("deltan_bar: need >= 1 chart");
  Model m = build_model(datum, ds);
  const int r = datum.rank();
  const VarCtxPtr& ctx = m.base.ctx;
  WeylElt w0 = datum.longest_element();
  WeylElt e = datum.identity_elt();

  LaurentPoly value = LaurentPoly::zero(ctx);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    // chi^st(u_i), term by term (each superdiagonal entry is Laurent).
    for (int a = 0; a + 1 < m.u[i].size(); ++a)
      value += positive_laurent(m.u[i].at(a, a + 1));

    SymMatrix uT = m.u[i].transpose();
    for (int a = 1; a <= r; ++a) {
      WeylElt sa = datum.simple_elt(a);
      WeylElt w0sa = datum.multiply(w0, sa);
      RationalFn M1 = generalized_minor(datum, uT, w0, sa, a);
      RationalFn M2 = generalized_minor(datum, uT, w0sa, e, a);
      RationalFn M3 = generalized_minor(datum, uT, w0, e, a);
      if (M3.is_zero())
        throw GaussUndefined("deltan_bar: principal minor vanishes");
      Weight alpha_star = star_root(datum, a);
      // (hw_i)^{w0}-side factor: hw_i^{alpha_{a*}}.
      LaurentPoly hprime =
          hw_accum_char(m, static_cast<int>(i) + 1, alpha_star);
      // h_{i+1}-side factor.
      LaurentPoly hnext = torus_char_raw(ctx, m.base.z_offset, r,
                                         static_cast<int>(i) + 2, alpha_star);
      value += positive_laurent(RationalFn(hprime) * M1 / M3);
      value += positive_laurent(RationalFn(hnext) * M2 / M3);
    }
  }
  if (!value.is_positive())
    throw NotPositive("deltan_bar: potential has nonpositive coefficients");
  PotentialOnChart out = m.base;
  out.value = std::move(value);
  return out;
}

PotentialOnChart delta2_bar(const RootDatum& datum, const DecoratedWord& d) {
  return deltan_bar(datum, {d});
}

HwPi hw_map(const RootDatum& datum, const std::vector<DecoratedWord>& ds) {
  Model m = build_model(datum, ds);
  const int r = datum.rank();
  const int n = m.base.n;
  HwPi out;
  out.hw.ctx = m.base.ctx;
  out.pi.ctx = m.base.ctx;
  for (int k = 1; k <= r; ++k) {
    LaurentPoly mono = LaurentPoly::constant(m.base.ctx, 1);
    for (std::size_t i = 0; i < ds.size(); ++i) mono *= m.D[i][k - 1];
    Weight w0omk = datum.weyl_act(datum.longest_element(), Weight{[&] {
                                    std::vector<long> c(r, 0);
                                    c[k - 1] = 1;
                                    return c;
                                  }()});
    for (int kp = 1; kp <= n; ++kp)
      mono *= torus_char_raw(m.base.ctx, m.base.z_offset, r, kp, w0omk);
    if (!mono.is_monomial())
      throw NotMonomial("hw_map: coordinate " + std::to_string(k));
    out.hw.labels.push_back("hw^(w0 omega_" + std::to_string(k) + ")");
    out.hw.coords.push_back(std::move(mono));
  }
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= r; ++j) {
      out.pi.labels.push_back("h" + std::to_string(k) + "^(omega_" +
                              std::to_string(j) + ")");
      out.pi.coords.push_back(
          LaurentPoly::variable(m.base.ctx, m.base.z_index(k, j)));
    }
  return out;
}

std::vector<CentralCharge> central_charges(
    const RootDatum& datum, const std::vector<DecoratedWord>& ds) {
  const int n = static_cast<int>(ds.size()) + 1;
  if (n != 2 && n != 3)
    throw std::invalid_argument("central_charges: n must be 2 or 3");
  Model m = build_model(datum, ds);
  const int r = datum.rank();
  const int nn = r + 1;  // SL_{r+1}
  const VarCtxPtr& ctx = m.base.ctx;

  // h_k as a matrix: diagonal entries d_a = z_{k,a} / z_{k,a-1}.
  auto torus_matrix = [&](int k) {
    std::vector<RationalFn> diag;
    for (int a = 0; a < nn; ++a) {
      std::vector<int> exps(ctx->size(), 0);
      if (a < nn - 1) exps[m.base.z_index(k, a + 1)] += 1;
      if (a > 0) exps[m.base.z_index(k, a)] -= 1;
      diag.emplace_back(LaurentPoly::monomial(ctx, std::move(exps), 1));
    }
    return SymMatrix::diagonal(std::move(diag));
  };

  SymMatrix w0bar = weyl_lift(datum, datum.longest_element(), ctx);
  SymMatrix w0inv = w0bar.inverse();
  auto phi_r = [&](const SymMatrix& g) {
    return chi_st(gauss_parts(w0inv * g).upper);
  };
  auto phi_l = [&](const SymMatrix& g) {
    return chi_st(gauss_parts(w0inv * iota(g)).upper);
  };

  std::vector<CentralCharge> out;
  if (n == 2) {
    SymMatrix g1 = torus_matrix(1) * w0bar * m.u[0];
    SymMatrix g2 = torus_matrix(2) * w0bar;
    SymMatrix g12 = g1 * g2;
    out.push_back({"c0", phi_r(g1) + phi_l(g2)});
    out.push_back({"c1", phi_l(g1) - phi_l(g12)});
    out.push_back({"c2", phi_r(g2) - phi_r(g12)});
  } else {
    SymMatrix g1 = torus_matrix(1) * w0bar * m.u[0];
    SymMatrix g2 = torus_matrix(2) * w0bar;
    SymMatrix g12 = g1 * g2;
    SymMatrix v12 = gauss_parts(w0inv * g12).upper;
    SymMatrix g3 = v12.inverse() * m.u[1] * torus_matrix(3) * w0bar;
    SymMatrix g23 = g2 * g3;
    SymMatrix g123 = g12 * g3;
    out.push_back({"c0*m1", phi_r(g12) + phi_l(g3)});
    out.push_back({"c1*m1", phi_l(g12) - phi_l(g123)});
    out.push_back({"c2*m1", phi_r(g3) - phi_r(g123)});
    out.push_back({"c0*m2", phi_r(g1) + phi_l(g23)});
    out.push_back({"c1*m2", phi_l(g1) - phi_l(g123)});
    out.push_back({"c2*m2", phi_r(g23) - phi_r(g123)});
    out.push_back({"c0*p3", phi_r(g2) + phi_l(g3)});
    out.push_back({"c0*q3", phi_r(g1) + phi_l(g2)});
  }
  return out;
}

Word canonical_wP_word(const RootDatum& datum, const std::vector<int>& J) {
  WeylElt wP = datum.multiply(datum.inverse(datum.longest_element(J)),
                              datum.longest_element());
  return datum.canonical_word(wP);
}

ReductionPotential reduction_potential(const RootDatum& datum,
                                       const std::vector<int>& J,
                                       const Word& word_wP) {
  const int r = datum.rank();
  if (!datum.is_reduced(word_wP))
    throw std::invalid_argument("reduction_potential: word not reduced");
  WeylElt wP = datum.from_word(word_wP);
  WeylElt expected = datum.multiply(datum.inverse(datum.longest_element(J)),
                                    datum.longest_element());
  if (!(wP == expected))
    throw std::invalid_argument(
        "reduction_potential: word is not a reduced word of (w0^J)^{-1} w0");

  const int nvars = static_cast<int>(word_wP.size());
  std::vector<std::string> names;
  for (int l = 1; l <= nvars; ++l) names.push_back("t" + std::to_string(l));
  for (int j = 1; j <= r; ++j) names.push_back("h1w" + std::to_string(j));
  VarCtxPtr ctx = make_ctx(std::move(names));

  // Torus-dressed chart b(t) = prod_k x_{i_k}(t_k) t_k^{alpha_{i_k}^vee};
  // the minors below then expand with one monomial per trail, carrying the
  // combinatorial exponents d_k directly.
  SymMatrix b = SymMatrix::identity(r + 1, ctx);
  for (int l = 0; l < nvars; ++l) {
    RationalFn t(LaurentPoly::variable(ctx, l));
    b = b * elementary(datum, word_wP[l], t, ctx) *
        coroot_torus(datum, word_wP[l], t, ctx);
  }

  const WeylElt w0 = datum.longest_element();
  const WeylElt w0J = datum.longest_element(J);
  LaurentPoly value = LaurentPoly::zero(ctx);
  for (int i = 1; i <= r; ++i) {
    WeylElt w0si = datum.multiply(w0, datum.simple_elt(i));
    RationalFn minor = generalized_minor(datum, b, w0J, w0si, i);
    if (!minor.is_zero()) value += positive_laurent(minor);
  }
  // String terms h^{alpha_{i_k}} * t_k prod_{l<k} t_l^{<alpha_{i_l},
  // alpha_{i_k}^vee>}, one per chart coordinate.
  for (int k = 0; k < nvars; ++k) {
    std::vector<int> exps(ctx->size(), 0);
    exps[k] = 1;
    for (int l = 0; l < k; ++l)
      exps[l] += datum.cartan()[word_wP[l] - 1][word_wP[k] - 1];
    for (int j = 1; j <= r; ++j)
      exps[nvars + (j - 1)] = datum.cartan()[j - 1][word_wP[k] - 1];
    value += LaurentPoly::monomial(ctx, std::move(exps), 1);
  }
  if (!value.is_positive())
    throw NotPositive("reduction_potential: nonpositive coefficients");

  ReductionPotential out;
  out.word = word_wP;
  out.phi.datum = datum;
  out.phi.n = 1;
  out.phi.ds = {};
  out.phi.ctx = ctx;
  out.phi.t_offset = {0};
  out.phi.t_count = {nvars};
  out.phi.z_offset = nvars;
  out.phi.num_torus = 1;
  out.phi.value = std::move(value);

  out.hw.ctx = ctx;
  out.pi.ctx = ctx;
  for (int j = 1; j <= r; ++j) {
    out.hw.labels.push_back("h^(omega_" + std::to_string(j) + ")");
    out.hw.coords.push_back(LaurentPoly::variable(ctx, nvars + j - 1));
    LaurentPoly dj = b.leading_minor(j).as_laurent();
    if (!dj.is_monomial())
      throw NotMonomial("reduction_potential: [b]_0 character not monomial");
    out.pi.labels.push_back("(h [b]_0)^(omega_" + std::to_string(j) + ")");
    out.pi.coords.push_back(
        LaurentPoly::variable(ctx, nvars + j - 1) * dj);
  }
  return out;
}

}  // namespace geomult
