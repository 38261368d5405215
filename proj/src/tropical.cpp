#include "geomult/tropical.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>

#include "geomult/groupsym.hpp"

namespace geomult {

namespace {

// Scale a rational row to a primitive integer row (positive factor only,
// preserving the inequality direction).
std::pair<std::vector<Int>, Int> scale_row(const std::vector<Rat>& a,
                                           const Rat& c) {
  Int den = 1;
  for (const auto& x : a) den = lcm(den, Int(x.get_den()));
  den = lcm(den, Int(c.get_den()));
  std::vector<Int> ia(a.size());
  Int g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ia[i] = Int(a[i] * den);
    g = gcd(g, ia[i]);
  }
  Int ic = Int(c * den);
  g = gcd(g, ic);
  if (g > 1) {
    for (auto& x : ia) x /= g;
    ic /= g;
  }
  return {std::move(ia), std::move(ic)};
}

Rat floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rat(q);
}
Rat ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rat(q);
}

}  // namespace

std::vector<std::vector<int>> trail_vectors(const RationalFn& f) {
  std::vector<std::vector<int>> out;
  if (f.is_zero()) return out;  // no trails
  LaurentPoly lp = positive_laurent(f);
  for (const auto& [exps, coef] : lp.terms()) out.push_back(exps);
  return out;
}

std::vector<Rat> pairing_coords(const RootDatum& datum,
                                const std::vector<long>& c) {
  const int r = datum.rank();
  // Solve A^T e = c by Gaussian elimination over the rationals.
  std::vector<std::vector<Rat>> M(r, std::vector<Rat>(r + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) M[i][j] = datum.cartan()[j][i];
    M[i][r] = c[i];
  }
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int row = col; row < r; ++row)
      if (M[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::runtime_error("singular Cartan matrix");
    std::swap(M[col], M[piv]);
    for (int row = 0; row < r; ++row) {
      if (row == col || M[row][col] == 0) continue;
      Rat f = M[row][col] / M[col][col];
      for (int j = col; j <= r; ++j) M[row][j] -= f * M[col][j];
    }
  }
  std::vector<Rat> e(r);
  for (int i = 0; i < r; ++i) {
    e[i] = M[i][r] / M[i][i];
    e[i].canonicalize();
  }
  return e;
}

Int default_cap() {
  if (const char* env = std::getenv("MULT_CAP")) return Int(env);
  return Int(1000000);
}

Rat tropical_eval_rat(const TropicalForm& f, const std::vector<Rat>& xi) {
  auto min_of = [&xi](const std::vector<std::vector<int>>& forms) {
    Rat best;
    bool have = false;
    for (const auto& chi : forms) {
      Rat v = 0;
      for (std::size_t i = 0; i < chi.size(); ++i)
        if (chi[i] != 0) v += Rat(chi[i]) * xi[i];
      if (!have || v < best) {
        best = v;
        have = true;
      }
    }
    return best;
  };
  Rat v = min_of(f.num_forms);
  if (!f.den_forms.empty()) v -= min_of(f.den_forms);
  v.canonicalize();
  return v;
}

// ---------------------------------------------------------------------------
// Lattice-point enumeration: exact Fourier-Motzkin projection down to
// per-variable interval bounds, then depth-first search in lex order.

MultiplicityResult enumerate_lattice_points(const PolytopeSpec& P,
                                            const Int& cap, bool emit_points) {
  const int m = P.dim;
  MultiplicityResult res;
  res.points_emitted = emit_points;

  // Collect all rows (equalities as two opposite inequalities).  Rows are
  // kept with primitive integer coefficient vectors; parallel rows collapse
  // to the single tightest constant, which keeps Fourier-Motzkin from
  // compounding translates of the same hyperplane direction.
  std::vector<std::map<std::vector<Int>, Rat>> level(m + 1);
  std::size_t nrows = 0;
  bool infeasible = false;
  auto add_row = [&](std::vector<Int> a, Rat c) {
    int top = -1;
    for (int i = m - 1; i >= 0; --i)
      if (a[i] != 0) {
        top = i;
        break;
      }
    if (top < 0) {
      if (c < 0) infeasible = true;
      return;
    }
    Int g = 0;
    for (const auto& x : a) g = gcd(g, x);
    if (g > 1) {
      for (auto& x : a) x /= g;
      c /= Rat(g);
      c.canonicalize();
    }
    auto [it, fresh] = level[top + 1].try_emplace(std::move(a), c);
    if (fresh) {
      if (++nrows > 500000)
        throw CapExceeded("Fourier-Motzkin projection exceeds row cap");
    } else if (c < it->second) {
      it->second = c;  // tighter translate of the same direction
    }
  };
  for (const auto& row : P.ineqs) add_row(row.first, Rat(row.second));
  for (const auto& row : P.eqs) {
    add_row(row.first, Rat(row.second));
    std::vector<Int> a(m);
    for (int i = 0; i < m; ++i) a[i] = -row.first[i];
    add_row(std::move(a), -Rat(row.second));
  }

  // Eliminate variables from the top down; level[k] ends up holding every
  // derived inequality whose highest variable is t_k.
  for (int k = m; k >= 2 && !infeasible; --k) {
    const int idx = k - 1;
    using Row = std::pair<const std::vector<Int>, Rat>;
    std::vector<const Row*> pos, neg;
    for (const auto& row : level[k])
      (row.first[idx] > 0 ? pos : neg).push_back(&row);
    for (const Row* p : pos) {
      for (const Row* n : neg) {
        const Int cp = p->first[idx], cn = -n->first[idx];
        std::vector<Int> a(m);
        for (int i = 0; i < idx; ++i) a[i] = cn * p->first[i] + cp * n->first[i];
        Rat c = Rat(cn) * p->second + Rat(cp) * n->second;
        c.canonicalize();
        add_row(std::move(a), std::move(c));
      }
    }
  }
  if (infeasible) return res;
  if (m == 0) {
    res.count = 1;
    if (emit_points) res.points.push_back({});
    return res;
  }

  std::vector<Rat> t(m);
  std::vector<long> pt(m);
  auto dfs = [&](auto&& self, int k) -> void {
    if (k > m) {
      ++res.count;
      if (res.count > cap) throw CapExceeded("lattice point cap exceeded");
      if (emit_points) res.points.push_back(pt);
      return;
    }
    const int idx = k - 1;
    Rat lo, hi;
    bool has_lo = false, has_hi = false;
    for (const auto& [a, c] : level[k]) {
      Rat s = c;
      for (int i = 0; i < idx; ++i)
        if (a[i] != 0) s += Rat(a[i]) * t[i];
      if (a[idx] > 0) {
        Rat b = ceil_rat(-s / Rat(a[idx]));
        if (!has_lo || b > lo) {
          lo = b;
          has_lo = true;
        }
      } else {
        Rat b = floor_rat(s / Rat(-a[idx]));
        if (!has_hi || b < hi) {
          hi = b;
          has_hi = true;
        }
      }
    }
    if (!has_lo || !has_hi) throw Unbounded("fiber polytope is unbounded");
    for (Rat v = lo; v <= hi; v += 1) {
      t[idx] = v;
      pt[idx] = static_cast<long>(Int(v.get_num()).get_si());
      self(self, k + 1);
    }
  };
  dfs(dfs, 1);
  return res;
}

// ---------------------------------------------------------------------------
// Tensor / n-fold fibers through the potential route.

TensorSystem build_tensor_system(const RootDatum& datum,
                                 const std::vector<DecoratedWord>& ds) {
  TensorSystem sys;
  sys.datum = datum;
  sys.n = static_cast<int>(ds.size()) + 1;
  sys.ds = ds;
  sys.pot = deltan_bar(datum, ds);
  sys.hwpi = hw_map(datum, ds);
  return sys;
}

PolytopeSpec fiber_polytope(const TensorSystem& sys,
                            const std::vector<Coweight>& lambdas,
                            const Coweight& mu) {
  const RootDatum& datum = sys.datum;
  const int r = datum.rank();
  if (static_cast<int>(lambdas.size()) != sys.n)
    throw std::invalid_argument("expected one highest coweight per factor");
  std::vector<std::vector<Rat>> ev;
  ev.reserve(sys.n);
  for (const auto& lam : lambdas) ev.push_back(pairing_coords(datum, lam.c));
  const std::vector<Rat> emu = pairing_coords(datum, mu.c);

  PolytopeSpec P;
  P.dim = sys.pot.total_t();
  auto split = [&](const std::vector<int>& exps) {
    std::vector<Rat> a(P.dim);
    for (int i = 0; i < P.dim; ++i) a[i] = exps[i];
    Rat c = 0;
    for (int k = 1; k <= sys.n; ++k)
      for (int j = 1; j <= r; ++j) {
        const int e = exps[sys.pot.z_index(k, j)];
        if (e != 0) c += Rat(e) * ev[k - 1][j - 1];
      }
    c.canonicalize();
    return std::make_pair(std::move(a), std::move(c));
  };
  for (const auto& [exps, coef] : sys.pot.value.terms()) {
    auto [a, c] = split(exps);
    P.ineqs.push_back(scale_row(a, c));
  }
  for (int k = 1; k <= r; ++k) {
    const LaurentPoly& mono = sys.hwpi.hw.coords[k - 1];
    auto [a, c] = split(mono.terms().begin()->first);
    c += emu[datum.star(k) - 1];  // <w0 omega_k, mu> = -e_{k*}(mu)
    P.eqs.push_back(scale_row(a, c));
  }
  return P;
}

// ---------------------------------------------------------------------------
// Tensor fibers through the explicit trail systems.

TrailSystem build_trail_system(const RootDatum& datum, const DecoratedWord& d) {
  TrailSystem sys;
  sys.datum = datum;
  sys.d = d;
  sys.m = static_cast<int>(d.word.size());
  const int r = datum.rank();
  const RootDatum dual = datum.langlands_dual();

  // Equality rows: coordinate j of sum_l t_l r_l alpha_{|I_l|} on the dual
  // side (where the input coweights are honest weights).
  const DoubleWord I = associated_double_word(d);
  const std::vector<WeylElt> rfac = r_factors(dual, I);
  sys.eq_rows.assign(r, std::vector<long>(sys.m, 0));
  for (int l = 0; l < sys.m; ++l) {
    const Weight root =
        dual.weyl_act(rfac[l], dual.simple_root(std::abs(I[l])));
    for (int j = 0; j < r; ++j) sys.eq_rows[j][l] = root.c[j];
  }

  // Trail families from the chart minors.
  const ChartPoint cp = chart(datum, d);
  const WeylElt vK = vK_wK(datum, d).first;
  const WeylElt w0 = datum.longest_element();
  const SymMatrix uT = cp.xi.transpose();
  sys.family_a.resize(r);
  sys.family_b.resize(r);
  sys.family_c.resize(r);
  for (int i = 1; i <= r; ++i) {
    const WeylElt si = datum.simple_elt(i);
    const WeylElt w0si = datum.multiply(w0, si);
    sys.family_a[i - 1] =
        trail_vectors(generalized_minor(datum, cp.x, vK, si, i));
    sys.family_b[i - 1] =
        trail_vectors(generalized_minor(datum, cp.x, vK, w0si, i));
    sys.family_c[i - 1] =
        trail_vectors(generalized_minor(datum, uT, w0, si, i));
  }
  return sys;
}

PolytopeSpec fiber_polytope(const TrailSystem& sys, const Coweight& lambda,
                            const Coweight& nu, const Coweight& mu) {
  const RootDatum& datum = sys.datum;
  const RootDatum dual = datum.langlands_dual();
  const int r = datum.rank();
  PolytopeSpec P;
  P.dim = sys.m;

  const Weight lam{lambda.c}, nuw{nu.c}, muw{mu.c};
  for (int j = 0; j < r; ++j) {
    std::vector<Int> a(sys.m);
    for (int l = 0; l < sys.m; ++l) a[l] = sys.eq_rows[j][l];
    P.eqs.push_back({std::move(a), Int(-(lam.c[j] + nuw.c[j] - muw.c[j]))});
  }

  auto add_family = [&](const std::vector<std::vector<int>>& fam,
                        const Rat& rhs) {
    for (const auto& exps : fam) {
      std::vector<Rat> a(sys.m);
      for (int l = 0; l < sys.m; ++l) a[l] = exps[l];
      P.ineqs.push_back(scale_row(a, -rhs));
    }
  };
  for (int i = 1; i <= r; ++i) {
    const Weight wb = lam + dual.simple_reflection(i, nuw) - muw;
    const Weight wc = dual.simple_reflection(i, lam) + nuw - muw;
    add_family(sys.family_a[i - 1], Rat(0));
    add_family(sys.family_b[i - 1], pairing_coords(datum, wb.c)[i - 1]);
    add_family(sys.family_c[i - 1], pairing_coords(datum, wc.c)[i - 1]);
  }
  return P;
}

PolytopeSpec build_tensor_polytope(const RootDatum& datum,
                                   const DecoratedWord& d,
                                   const Coweight& lambda, const Coweight& nu,
                                   const Coweight& mu, TensorRoute route) {
  if (route == TensorRoute::Potential) {
    TensorSystem sys = build_tensor_system(datum, {d});
    return fiber_polytope(sys, {lambda, nu}, mu);
  }
  TrailSystem sys = build_trail_system(datum, d);
  return fiber_polytope(sys, lambda, nu, mu);
}

MultiplicityResult tensor_multiplicity(const RootDatum& datum,
                                       const DecoratedWord& d,
                                       const Coweight& lambda,
                                       const Coweight& nu, const Coweight& mu,
                                       TensorRoute route, const Int& cap,
                                       bool emit_points) {
  return enumerate_lattice_points(
      build_tensor_polytope(datum, d, lambda, nu, mu, route), cap, emit_points);
}

MultiplicityResult n_fold(const RootDatum& datum,
                          const std::vector<DecoratedWord>& ds,
                          const std::vector<Coweight>& lambdas,
                          const Coweight& mu, const Int& cap,
                          bool emit_points) {
  TensorSystem sys = build_tensor_system(datum, ds);
  return enumerate_lattice_points(fiber_polytope(sys, lambdas, mu), cap,
                                  emit_points);
}

MultiplicityResult deformed_multiplicity(const RootDatum& datum,
                                         const std::vector<DecoratedWord>& ds,
                                         const std::string& charge_label,
                                         const std::vector<Coweight>& lambdas,
                                         const Coweight& mu, const Int& cap) {
  TensorSystem sys = build_tensor_system(datum, ds);
  MultiplicityResult res = enumerate_lattice_points(
      fiber_polytope(sys, lambdas, mu), cap, /*emit_points=*/true);

  const std::vector<CentralCharge> charges = central_charges(datum, ds);
  const CentralCharge* charge = nullptr;
  for (const auto& c : charges)
    if (c.label == charge_label) charge = &c;
  if (!charge) {
    std::string known;
    for (const auto& c : charges) known += " " + c.label;
    throw std::invalid_argument("unknown charge label '" + charge_label +
                                "'; available:" + known);
  }
  const TropicalForm tf = tropicalize(charge->value);

  const int r = datum.rank();
  std::vector<Rat> xi(sys.pot.ctx->size());
  for (int k = 1; k <= sys.n; ++k) {
    const std::vector<Rat> ev = pairing_coords(datum, lambdas[k - 1].c);
    for (int j = 1; j <= r; ++j) xi[sys.pot.z_index(k, j)] = ev[j - 1];
  }
  for (const auto& pt : res.points) {
    for (int i = 0; i < sys.pot.total_t(); ++i) xi[i] = pt[i];
    res.q_poly[tropical_eval_rat(tf, xi)] += 1;
  }
  res.points.clear();
  res.points_emitted = false;
  return res;
}

// ---------------------------------------------------------------------------
// Reduction (Levi branching).

PolytopeSpec build_reduction_polytope(const RootDatum& datum,
                                      const std::vector<int>& J,
                                      const Word& word_wP, const Weight& lambda,
                                      const Weight& beta, ReductionRoute route) {
  const int r = datum.rank();
  const RootDatum dual = datum.langlands_dual();
  const int m = static_cast<int>(word_wP.size());
  PolytopeSpec P;
  P.dim = m;

  if (route == ReductionRoute::Inequalities) {
    // Trail inequalities on the dual chart x = x_{i_1}(t_1)...x_{i_m}(t_m).
    // A monomial exponent vector c of a minor records the trail steps
    // c_k = (gamma_{k-1} - gamma_k)(alpha_{i_k}^vee)/2; the inequality uses
    // d_k = (gamma_{k-1} + gamma_k)(alpha_{i_k}^vee)/2
    //     = c_k + <delta, alpha_{i_k}^vee> + sum_{l>k} a_{i_k i_l} c_l,
    // recovered from the trail endpoint delta = w0 s_i omega_i.
    std::vector<std::string> names;
    names.reserve(m);
    for (int l = 1; l <= m; ++l) names.push_back("t" + std::to_string(l));
    const VarCtxPtr ctx = make_ctx(names);
    DoubleWord I(word_wP.begin(), word_wP.end());
    const SymMatrix x = x_of_double_word(dual, I, ctx);
    const WeylElt w0 = dual.longest_element();
    const WeylElt w0J = dual.longest_element(J);
    const auto& Ad = dual.cartan();
    for (int i = 1; i <= r; ++i) {
      const WeylElt w0si = dual.multiply(w0, dual.simple_elt(i));
      Weight omega{std::vector<long>(r, 0)};
      omega.c[i - 1] = 1;
      const Weight delta = dual.weyl_act(w0si, omega);
      for (const auto& exps :
           trail_vectors(generalized_minor(dual, x, w0J, w0si, i))) {
        std::vector<Int> a(m);
        for (int k = 0; k < m; ++k) {
          long d = exps[k] + delta.c[word_wP[k] - 1];
          for (int l = k + 1; l < m; ++l)
            d += Ad[word_wP[k] - 1][word_wP[l] - 1] * exps[l];
          a[k] = d;
        }
        P.ineqs.push_back({std::move(a), Int(0)});
      }
    }
    // String inequalities t_k + sum_{l>k} a_{i_k i_l} t_l <= <lambda,
    // alpha_{i_k}^vee>.
    const auto& A = datum.cartan();
    for (int k = 0; k < m; ++k) {
      std::vector<Int> a(m, 0);
      a[k] = -1;
      for (int l = k + 1; l < m; ++l)
        a[l] -= A[word_wP[k] - 1][word_wP[l] - 1];
      P.ineqs.push_back({std::move(a), Int(lambda.c[word_wP[k] - 1])});
    }
    // Weight equality sum_k t_k alpha_{i_k} = lambda - beta.
    for (int j = 0; j < r; ++j) {
      std::vector<Int> a(m);
      for (int k = 0; k < m; ++k) a[k] = A[j][word_wP[k] - 1];
      P.eqs.push_back({std::move(a), Int(beta.c[j] - lambda.c[j])});
    }
    return P;
  }

  // Potential route: tropicalize Phi_L on the dual chart over the fiber
  // hw_L = beta, pi_L = lambda.
  const ReductionPotential rp = reduction_potential(dual, J, word_wP);
  const std::vector<Rat> eb = pairing_coords(datum, beta.c);
  const std::vector<Rat> el = pairing_coords(datum, lambda.c);
  const int mt = rp.phi.total_t();
  P.dim = mt;
  auto split = [&](const std::vector<int>& exps) {
    std::vector<Rat> a(mt);
    for (int i = 0; i < mt; ++i) a[i] = exps[i];
    Rat c = 0;
    for (int j = 1; j <= r; ++j) {
      const int e = exps[rp.phi.z_index(1, j)];
      if (e != 0) c += Rat(e) * eb[j - 1];
    }
    c.canonicalize();
    return std::make_pair(std::move(a), std::move(c));
  };
  for (const auto& [exps, coef] : rp.phi.value.terms()) {
    auto [a, c] = split(exps);
    P.ineqs.push_back(scale_row(a, c));
  }
  for (int j = 1; j <= r; ++j) {
    auto [a, c] = split(rp.pi.coords[j - 1].terms().begin()->first);
    c -= el[j - 1];
    P.eqs.push_back(scale_row(a, c));
  }
  return P;
}

MultiplicityResult reduction_multiplicity(const RootDatum& datum,
                                          const std::vector<int>& J,
                                          const Weight& lambda,
                                          const Weight& beta,
                                          ReductionRoute route, const Int& cap,
                                          const Word& word_wP,
                                          bool emit_points) {
  Word word = word_wP;
  if (word.empty()) word = canonical_wP_word(datum, J);
  return enumerate_lattice_points(
      build_reduction_polytope(datum, J, word, lambda, beta, route), cap,
      emit_points);
}

}  // namespace geomult
