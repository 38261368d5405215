#include "geomult/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "geomult/cartan.hpp"
#include "geomult/groupsym.hpp"
#include "geomult/oracle.hpp"
#include "geomult/potential.hpp"
#include "geomult/tropical.hpp"
#include "geomult/words.hpp"
#include "json.hpp"

namespace geomult {
namespace {

using nlohmann::json;

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("not an integer list: '" + s + "'");
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (long v : parse_longs(s)) out.push_back(static_cast<int>(v));
  return out;
}

RootDatum parse_datum(const std::string& s) {
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw ValidationError("datum must look like A2, B3, ...: '" + s + "'");
  std::string series(1, static_cast<char>(std::toupper(s[0])));
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(s.substr(1), &pos);
    if (pos + 1 != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw ValidationError("datum must look like A2, B3, ...: '" + s + "'");
  }
  try {
    return RootDatum::make(series, rank);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("bad datum: ") + e.what());
  }
}

void require_type_a(const RootDatum& d, const std::string& cmd) {
  if (d.series() != "A")
    throw ValidationError(cmd + " requires a type A datum (matrix charts)");
}

std::vector<long> parse_weight(const RootDatum& d, const std::string& s,
                               const std::string& flag) {
  std::vector<long> c = parse_longs(s);
  if (static_cast<int>(c.size()) != d.rank())
    throw ValidationError(flag + " needs " + std::to_string(d.rank()) +
                          " comma-separated coordinates");
  return c;
}

void require_dominant(const std::vector<long>& c, const std::string& flag) {
  for (long v : c)
    if (v < 0) throw ValidationError(flag + " must be dominant (coords >= 0)");
}

void check_positions(const std::vector<int>& pos, int n,
                     const std::string& flag) {
  for (size_t a = 0; a < pos.size(); ++a) {
    if (pos[a] < 1 || pos[a] > n)
      throw ValidationError(flag + " positions must lie in [1, " +
                            std::to_string(n) + "]");
    if (a > 0 && pos[a] <= pos[a - 1])
      throw ValidationError(flag + " positions must be strictly increasing");
  }
}

DecoratedWord parse_decorated(const RootDatum& d, const std::string& word_s,
                              const std::string& K_s, const std::string& L_s) {
  DecoratedWord dw;
  if (word_s.empty()) {
    if (!K_s.empty() || !L_s.empty())
      throw ValidationError("--K/--L require an explicit --word");
    dw.word = d.canonical_word(d.longest_element());
    return dw;
  }
  dw.word = parse_ints(word_s);
  for (int i : dw.word)
    if (i < 1 || i > d.rank())
      throw ValidationError("--word letters must lie in [1, " +
                            std::to_string(d.rank()) + "]");
  if (!d.is_reduced(dw.word) || !(d.from_word(dw.word) == d.longest_element()))
    throw ValidationError("--word must be a reduced word of the longest element");
  dw.K = parse_ints(K_s);
  dw.L = parse_ints(L_s);
  const int n = static_cast<int>(dw.word.size());
  check_positions(dw.K, n, "--K");
  check_positions(dw.L, n, "--L");
  if (dw.K.size() != dw.L.size())
    throw ValidationError("--K and --L must have the same size");
  if (!is_compatible(d, dw.word, dw.K))
    throw ValidationError("--K is not compatible with --word");
  return dw;
}

json json_int(const Int& v) {
  if (v.fits_slong_p()) return static_cast<long>(v.get_si());
  return v.get_str();
}

json qpoly_json(const std::map<Rat, Int>& q) {
  json arr = json::array();
  for (const auto& [deg, cnt] : q)
    arr.push_back(json{{"exp", deg.get_str()}, {"count", json_int(cnt)}});
  return arr;
}

json result_json(const MultiplicityResult& res) {
  json j;
  j["count"] = json_int(res.count);
  if (res.points_emitted) {
    json pts = json::array();
    for (const auto& p : res.points) pts.push_back(p);
    j["points"] = pts;
  }
  if (!res.q_poly.empty()) j["q_poly"] = qpoly_json(res.q_poly);
  return j;
}

json matrix_json(const SymMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

// Odometer over [0, max]^r in lexicographic order; returns false when done.
bool next_vec(std::vector<long>& v, long max) {
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] < max) {
      ++v[k];
      return true;
    }
    v[k] = 0;
  }
  return false;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "geomult: exact tensor, n-fold, q-deformed and Levi-branching "
      "multiplicities from tropicalized potentials on decorated toric charts"};
  app.require_subcommand(1);
  app.fallthrough();
  bool compact = false;
  app.add_flag("--json", compact, "compact single-line JSON output");
  int rc = 0;
  auto emit = [&](const json& j) {
    out << (compact ? j.dump() : j.dump(2)) << "\n";
  };

  // Shared option storage (each subcommand binds the subset it uses).
  std::string datum_s, lambda_s, nu_s, mu_s, beta_s, word_s, K_s, L_s, J_s;
  std::string w_s = "longest", route_s, charge;
  std::vector<std::string> lambdas_s, words_s, Ks_s, Ls_s;
  long long cap_ll = 0;
  bool emit_points = false;
  long max_c = 2;
  std::size_t word_cap = 1000000;

  auto cap_of = [&]() {
    return cap_ll > 0 ? Int(std::to_string(cap_ll)) : default_cap();
  };
  auto decorated_list = [&](const RootDatum& d, size_t n) {
    if (words_s.size() > n)
      throw ValidationError("too many --word flags for this fiber");
    std::vector<DecoratedWord> ds;
    for (size_t k = 0; k < n; ++k) {
      const std::string w = k < words_s.size() ? words_s[k] : std::string();
      const std::string K = k < Ks_s.size() ? Ks_s[k] : std::string();
      const std::string L = k < Ls_s.size() ? Ls_s[k] : std::string();
      ds.push_back(parse_decorated(d, w, K, L));
    }
    return ds;
  };

  CLI::App* mult = app.add_subcommand("mult", "multiplicity queries");
  mult->require_subcommand(1);
  mult->fallthrough();

  CLI::App* tensor = mult->add_subcommand(
      "tensor", "tensor multiplicity dim Hom(V_mu, V_lambda (x) V_nu)");
  tensor->add_option("--datum", datum_s, "root datum, e.g. A2")->required();
  tensor->add_option("--lambda", lambda_s, "first highest coweight")->required();
  tensor->add_option("--nu", nu_s, "second highest coweight")->required();
  tensor->add_option("--mu", mu_s, "target coweight")->required();
  tensor->add_option("--word", word_s, "reduced word of w0 (default lex-min)");
  tensor->add_option("--K", K_s, "decoration K (1-based positions)");
  tensor->add_option("--L", L_s, "decoration L (1-based positions)");
  tensor->add_option("--route", route_s, "potential (default) or trails");
  tensor->add_option("--cap", cap_ll, "enumeration cap (default 10^6)");
  tensor->add_flag("--emit-points", emit_points, "list the lattice points");
  tensor->add_option("--q-charge", charge,
                     "central-charge label for a q-deformed count");
  tensor->callback([&]() {
    RootDatum d = parse_datum(datum_s);
    require_type_a(d, "mult tensor");
    Coweight la{parse_weight(d, lambda_s, "--lambda")};
    Coweight nu{parse_weight(d, nu_s, "--nu")};
    Coweight mu{parse_weight(d, mu_s, "--mu")};
    require_dominant(la.c, "--lambda");
    require_dominant(nu.c, "--nu");
    require_dominant(mu.c, "--mu");
    DecoratedWord dw = parse_decorated(d, word_s, K_s, L_s);
    if (!charge.empty()) {
      emit(result_json(
          deformed_multiplicity(d, {dw}, charge, {la, nu}, mu, cap_of())));
      return;
    }
    TensorRoute route = TensorRoute::Potential;
    if (route_s == "trails")
      route = TensorRoute::Trails;
    else if (!route_s.empty() && route_s != "potential")
      throw ValidationError("--route must be 'potential' or 'trails'");
    emit(result_json(tensor_multiplicity(d, dw, la, nu, mu, route, cap_of(),
                                         emit_points)));
  });

  CLI::App* nfold = mult->add_subcommand(
      "nfold", "n-fold multiplicity of V_mu in V_lambda1 (x) ... (x) V_lambdan");
  nfold->add_option("--datum", datum_s, "root datum, e.g. A2")->required();
  nfold->add_option("--lambda", lambdas_s, "highest coweight (repeat n times)")
      ->required();
  nfold->add_option("--mu", mu_s, "target coweight")->required();
  nfold->add_option("--word", words_s, "reduced word of w0 (repeat up to n-1)");
  nfold->add_option("--K", Ks_s, "decoration K per word");
  nfold->add_option("--L", Ls_s, "decoration L per word");
  nfold->add_option("--cap", cap_ll, "enumeration cap (default 10^6)");
  nfold->add_flag("--emit-points", emit_points, "list the lattice points");
  nfold->callback([&]() {
    RootDatum d = parse_datum(datum_s);
    require_type_a(d, "mult nfold");
    if (lambdas_s.size() < 2)
      throw ValidationError("mult nfold needs at least two --lambda flags");
    std::vector<Coweight> las;
    for (const auto& s : lambdas_s) {
      las.push_back(Coweight{parse_weight(d, s, "--lambda")});
      require_dominant(las.back().c, "--lambda");
    }
    Coweight mu{parse_weight(d, mu_s, "--mu")};
    require_dominant(mu.c, "--mu");
    emit(result_json(n_fold(d, decorated_list(d, las.size() - 1), las, mu,
                            cap_of(), emit_points)));
  });

  CLI::App* deform = mult->add_subcommand(
      "deform", "q-deformed n-fold multiplicity by a central charge");
  deform->add_option("--datum", datum_s, "root datum, e.g. A1")->required();
  deform->add_option("--q-charge", charge, "central-charge label, e.g. c0*q3")
      ->required();
  deform->add_option("--lambda", lambdas_s, "highest coweight (repeat n times)")
      ->required();
  deform->add_option("--mu", mu_s, "target coweight")->required();
  deform->add_option("--word", words_s, "reduced word of w0 (repeat up to n-1)");
  deform->add_option("--K", Ks_s, "decoration K per word");
  deform->add_option("--L", Ls_s, "decoration L per word");
  deform->add_option("--cap", cap_ll, "enumeration cap (default 10^6)");
  deform->callback([&]() {
    RootDatum d = parse_datum(datum_s);
    require_type_a(d, "mult deform");
    if (lambdas_s.size() < 2 || lambdas_s.size() > 3)
      throw ValidationError("mult deform supports n in {2, 3} --lambda flags");
    std::vector<Coweight> las;
    for (const auto& s : lambdas_s) {
      las.push_back(Coweight{parse_weight(d, s, "--lambda")});
      require_dominant(las.back().c, "--lambda");
    }
    Coweight mu{parse_weight(d, mu_s, "--mu")};
    require_dominant(mu.c, "--mu");
    emit(result_json(deformed_multiplicity(
        d, decorated_list(d, las.size() - 1), charge, las, mu, cap_of())));
  });

  CLI::App* reduce = mult->add_subcommand(
      "reduce", "multiplicity of the Levi module V^J_beta in V_lambda");
  reduce->add_option("--datum", datum_s, "root datum, e.g. A2")->required();
  reduce->add_option("--J", J_s, "Levi node subset, e.g. 1,3 (default empty)");
  reduce->add_option("--lambda", lambda_s, "dominant highest weight")->required();
  reduce->add_option("--beta", beta_s, "J-dominant target weight")->required();
  reduce->add_option("--route", route_s, "inequalities (default) or potential");
  reduce->add_option("--word", word_s, "reduced word of w_P = (w0^J)^{-1} w0");
  reduce->add_option("--cap", cap_ll, "enumeration cap (default 10^6)");
  reduce->add_flag("--emit-points", emit_points, "list the lattice points");
  reduce->callback([&]() {
    RootDatum d = parse_datum(datum_s);
    require_type_a(d, "mult reduce");
    std::vector<int> J = parse_ints(J_s);
    std::sort(J.begin(), J.end());
    for (size_t a = 0; a < J.size(); ++a) {
      if (J[a] < 1 || J[a] > d.rank())
        throw ValidationError("--J entries must lie in [1, " +
                              std::to_string(d.rank()) + "]");
      if (a > 0 && J[a] == J[a - 1])
        throw ValidationError("--J entries must be distinct");
    }
    Weight la{parse_weight(d, lambda_s, "--lambda")};
    Weight beta{parse_weight(d, beta_s, "--beta")};
    require_dominant(la.c, "--lambda");
    for (int j : J)
      if (beta.c[j - 1] < 0)
        throw ValidationError("--beta must be dominant on the --J nodes");
    Word w = parse_ints(word_s);
    if (!w.empty()) {
      const WeylElt wP =
          d.multiply(d.inverse(d.longest_element(J)), d.longest_element());
      if (!d.is_reduced(w) || !(d.from_word(w) == wP))
        throw ValidationError("--word must be a reduced word of (w0^J)^{-1} w0");
    }
    ReductionRoute route = ReductionRoute::Inequalities;
    if (route_s == "potential")
      route = ReductionRoute::Potential;
    else if (!route_s.empty() && route_s != "inequalities")
      throw ValidationError("--route must be 'inequalities' or 'potential'");
    emit(result_json(reduction_multiplicity(d, J, la, beta, route, cap_of(), w,
                                            emit_points)));
  });

  CLI::App* words = app.add_subcommand("words", "decorated-word combinatorics");
  words->require_subcommand(1);
  words->fallthrough();
  CLI::App* wenum = words->add_subcommand(
      "enumerate", "decorated reduced words and their move classes");
  wenum->add_option("--datum", datum_s, "root datum, e.g. A2")->required();
  wenum->add_option("--w", w_s, "'longest' (default) or a comma word");
  wenum->add_option("--cap", word_cap, "enumeration cap (default 10^6)");
  wenum->callback([&]() {
    RootDatum d = parse_datum(datum_s);
    WeylElt w;
    if (w_s == "longest") {
      w = d.longest_element();
    } else {
      Word ww = parse_ints(w_s);
      for (int i : ww)
        if (i < 1 || i > d.rank())
          throw ValidationError("--w letters must lie in [1, " +
                                std::to_string(d.rank()) + "]");
      w = d.from_word(ww);
    }
    EquivalenceClasses ec = enumerate_equivalence_classes(d, w, word_cap);
    json j;
    j["decorated_words"] = ec.all_words.size();
    j["classes"] = ec.reps.size();
    j["capped"] = ec.capped;
    json reps = json::array();
    for (const auto& r : ec.reps) reps.push_back(r.str());
    j["class_reps"] = reps;
    json edges = json::array();
    for (const auto& [a, b] : ec.tau4_edges) edges.push_back(json::array({a, b}));
    j["tau4_edges"] = edges;
    emit(j);
  });

  CLI::App* charts = app.add_subcommand("charts", "toric chart inspection");
  charts->require_subcommand(1);
  charts->fallthrough();
  CLI::App* cshow = charts->add_subcommand(
      "show", "the matrices x_II(t) and xi_II(t) of a decorated word");
  cshow->add_option("--datum", datum_s, "root datum, e.g. A3")->required();
  cshow->add_option("--word", word_s, "reduced word of w0")->required();
  cshow->add_option("--K", K_s, "decoration K (1-based positions)");
  cshow->add_option("--L", L_s, "decoration L (1-based positions)");
  cshow->callback([&]() {
    RootDatum d = parse_datum(datum_s);
    require_type_a(d, "charts show");
    DecoratedWord dw = parse_decorated(d, word_s, K_s, L_s);
    ChartPoint cp = chart(d, dw);
    if (compact) {
      json j;
      json dwj;
      dwj["word"] = dw.word;
      dwj["K"] = dw.K;
      dwj["L"] = dw.L;
      j["decorated_word"] = dwj;
      json iv = json::array();
      for (int v : cp.I) iv.push_back(v);
      j["double_word"] = iv;
      j["x"] = matrix_json(cp.x);
      j["xi"] = matrix_json(cp.xi);
      emit(j);
      return;
    }
    out << "decorated word: " << dw.str() << "\n";
    out << "double word:";
    for (int v : cp.I) out << " " << v;
    out << "\n\nx_II(t) =\n" << cp.x.str();
    out << "\nxi_II(t) =\n" << cp.xi.str();
  });

  CLI::App* pot = app.add_subcommand("potential", "symbolic potentials");
  pot->require_subcommand(1);
  pot->fallthrough();
  CLI::App* pdump = pot->add_subcommand(
      "dump", "Delta_n-bar on the chart of the given decorated words");
  pdump->add_option("--datum", datum_s, "root datum, e.g. A2")->required();
  pdump->add_option("--word", words_s,
                    "reduced word of w0 (repeat for n > 2; default lex-min)");
  pdump->add_option("--K", Ks_s, "decoration K per word");
  pdump->add_option("--L", Ls_s, "decoration L per word");
  pdump->callback([&]() {
    RootDatum d = parse_datum(datum_s);
    require_type_a(d, "potential dump");
    const size_t nw = words_s.empty() ? 1 : words_s.size();
    std::vector<DecoratedWord> ds = decorated_list(d, nw);
    PotentialOnChart p = deltan_bar(d, ds);
    json j;
    j["n"] = p.n;
    j["variables"] = p.ctx->names;
    j["value"] = p.value.str();
    json mat = json::array();
    for (const auto& [exps, coef] : p.value.terms()) {
      json row;
      row["exps"] = exps;
      row["coef"] = json_int(coef);
      mat.push_back(row);
    }
    j["tropical_exponents"] = mat;
    if (compact) {
      emit(j);
      return;
    }
    out << "Delta_" << p.n << "-bar on chart";
    for (const auto& dw : ds) out << " " << dw.str();
    out << "\nvariables:";
    for (const auto& nm : p.ctx->names) out << " " << nm;
    out << "\nvalue = " << p.value.str() << "\n";
    out << "tropical exponent matrix (one row per monomial):\n";
    for (const auto& [exps, coef] : p.value.terms()) {
      out << "  [";
      for (size_t k = 0; k < exps.size(); ++k)
        out << (k ? " " : "") << exps[k];
      out << "]  x" << coef.get_str() << "\n";
    }
  });

  CLI::App* verify = app.add_subcommand("verify", "oracle cross-validation");
  verify->require_subcommand(1);
  verify->fallthrough();
  CLI::App* voracle = verify->add_subcommand(
      "oracle", "sweep tensor multiplicities against the character oracle");
  voracle->add_option("--datum", datum_s, "root datum, e.g. A2")->required();
  voracle->add_option("--max", max_c, "max fundamental coordinate (default 2)");
  voracle->add_option("--route", route_s, "potential (default) or trails");
  voracle->callback([&]() {
    RootDatum d = parse_datum(datum_s);
    require_type_a(d, "verify oracle");
    if (max_c < 0) throw ValidationError("--max must be >= 0");
    TensorRoute route = TensorRoute::Potential;
    if (route_s == "trails")
      route = TensorRoute::Trails;
    else if (!route_s.empty() && route_s != "potential")
      throw ValidationError("--route must be 'potential' or 'trails'");
    const RootDatum dual = d.langlands_dual();
    DecoratedWord dw = parse_decorated(d, "", "", "");
    TensorSystem sys;
    TrailSystem tsys;
    if (route == TensorRoute::Potential)
      sys = build_tensor_system(d, {dw});
    else
      tsys = build_trail_system(d, dw);
    long checked = 0, mismatches = 0;
    std::vector<long> lv(d.rank(), 0);
    do {
      std::vector<long> nv(d.rank(), 0);
      do {
        long row_checked = 0, row_bad = 0;
        std::vector<long> mv(d.rank(), 0);
        do {
          Coweight la{lv}, nu{nv}, mu{mv};
          PolytopeSpec P = route == TensorRoute::Potential
                               ? fiber_polytope(sys, {la, nu}, mu)
                               : fiber_polytope(tsys, la, nu, mu);
          Int got = enumerate_lattice_points(P, default_cap(), false).count;
          long want =
              tensor_mult_oracle(dual, Weight{lv}, Weight{nv}, Weight{mv});
          ++row_checked;
          if (got != want) ++row_bad;
        } while (next_vec(mv, max_c));
        checked += row_checked;
        mismatches += row_bad;
        if (!compact) {
          out << "lambda=" << Coweight{lv}.str() << " nu=" << Coweight{nv}.str()
              << "  checked=" << row_checked
              << (row_bad ? "  FAIL (" + std::to_string(row_bad) + ")" : "  pass")
              << "\n";
        }
      } while (next_vec(nv, max_c));
    } while (next_vec(lv, max_c));
    emit(json{{"checked", checked}, {"mismatches", mismatches}});
    if (mismatches > 0) rc = 3;
  });

  try {
    app.parse(argc, argv);
    return rc;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump()
        << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << json{{"error", {{"type", "validation"}, {"message", e.what()}}}}
               .dump()
        << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << json{{"error", {{"type", "cap_exceeded"}, {"message", e.what()}}}}
               .dump()
        << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump()
        << "\n";
    return 3;
  }
}

}  // namespace geomult
