#include "geomult/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace geomult {

namespace {

std::vector<int> complement(const std::vector<int>& K, int n) {
  std::vector<int> bar;
  std::set<int> ks(K.begin(), K.end());
  for (int p = 1; p <= n; ++p)
    if (!ks.count(p)) bar.push_back(p);
  return bar;
}

Word subword(const Word& word, const std::vector<int>& pos) {
  Word out;
  out.reserve(pos.size());
  for (int p : pos) out.push_back(word[p - 1]);
  return out;
}

bool commute(const RootDatum& datum, int a, int b) {
  return a == b || datum.cartan()[a - 1][b - 1] == 0;
}

bool is_initial_segment(const std::vector<int>& K) {
  for (std::size_t a = 0; a < K.size(); ++a)
    if (K[a] != static_cast<int>(a) + 1) return false;
  return true;
}

}  // namespace

std::string DecoratedWord::str() const {
  std::ostringstream os;
  auto seq = [&os](const std::vector<int>& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  };
  seq(word);
  os << " K=";
  seq(K);
  os << " L=";
  seq(L);
  return os.str();
}

SigmaRho sigma_rho(const std::vector<int>& K, const std::vector<int>& L, int n) {
  if (K.size() != L.size())
    throw std::invalid_argument("sigma_rho: |K| != |L|");
  const int m = static_cast<int>(K.size());
  SigmaRho out;
  // sigma~ sends the a-th smallest of K to the a-th smallest of L; rho~
  // sends it to the a-th largest of L.
  out.sigma_tilde = L;
  out.rho_tilde.assign(L.rbegin(), L.rend());
  out.full.assign(n, 0);
  for (int a = 0; a < m; ++a) out.full[K[a] - 1] = out.rho_tilde[a];
  std::vector<int> kbar = complement(K, n), lbar = complement(L, n);
  for (std::size_t b = 0; b < kbar.size(); ++b) out.full[kbar[b] - 1] = lbar[b];
  return out;
}

bool is_compatible(const RootDatum& datum, const Word& word,
                   const std::vector<int>& K) {
  const int n = static_cast<int>(word.size());
  if (!datum.is_reduced(word)) throw std::invalid_argument("word not reduced");
  WeylElt wK = datum.from_word(subword(word, K));
  WeylElt wKbar = datum.from_word(subword(word, complement(K, n)));
  return datum.multiply(wK, wKbar) == datum.from_word(word);
}

std::vector<std::vector<int>> all_compatible_K(const RootDatum& datum,
                                               const Word& word) {
  const int n = static_cast<int>(word.size());
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> K;
    for (int p = 0; p < n; ++p)
      if (mask & (1u << p)) K.push_back(p + 1);
    if (is_compatible(datum, word, K)) out.push_back(std::move(K));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DoubleWord associated_double_word(const DecoratedWord& d) {
  const int n = static_cast<int>(d.word.size());
  const int m = static_cast<int>(d.K.size());
  if (d.K.size() != d.L.size())
    throw std::invalid_argument("associated_double_word: |K| != |L|");
  DoubleWord I(n, 0);
  // -i_K^op occupies the positions L, in order.
  for (int t = 0; t < m; ++t) I[d.L[t] - 1] = -d.word[d.K[m - 1 - t] - 1];
  // i_{Kbar} fills the remaining positions, in order.
  std::vector<int> kbar = complement(d.K, n), lbar = complement(d.L, n);
  for (std::size_t b = 0; b < kbar.size(); ++b)
    I[lbar[b] - 1] = d.word[kbar[b] - 1];
  return I;
}

std::pair<WeylElt, WeylElt> vK_wK(const RootDatum& datum,
                                  const DecoratedWord& d) {
  if (!is_compatible(datum, d.word, d.K))
    throw std::invalid_argument("vK_wK: K not compatible with the word");
  const int n = static_cast<int>(d.word.size());
  WeylElt vK = datum.inverse(datum.from_word(subword(d.word, d.K)));
  WeylElt wK = datum.from_word(subword(d.word, complement(d.K, n)));
  return {vK, wK};
}

std::optional<DecoratedWord> try_move(const RootDatum& datum,
                                      const DecoratedWord& d, Move move,
                                      int pos) {
  const int n = static_cast<int>(d.word.size());
  auto in = [](const std::vector<int>& v, int p) {
    return std::binary_search(v.begin(), v.end(), p);
  };
  switch (move) {
    case Move::tau1: {
      int k = pos;
      if (k < 1 || k + 1 > n) return std::nullopt;
      bool sep = in(d.K, k) != in(d.K, k + 1);
      if (sep) return std::nullopt;
      auto sr = sigma_rho(d.K, d.L, n);
      if (std::abs(sr.full[k - 1] - sr.full[k]) != 1) return std::nullopt;
      if (!commute(datum, d.word[k - 1], d.word[k])) return std::nullopt;
      DecoratedWord out = d;
      std::swap(out.word[k - 1], out.word[k]);
      return out;
    }
    case Move::tau2:
    case Move::tau4: {
      int l = pos;
      if (l < 1 || l + 1 > n) return std::nullopt;
      bool sep = in(d.L, l) != in(d.L, l + 1);
      if (!sep) return std::nullopt;
      auto sr = sigma_rho(d.L, d.K, n);
      int a = d.word[sr.full[l - 1] - 1];
      int b = d.word[sr.full[l] - 1];
      if ((move == Move::tau2) == (a == b)) return std::nullopt;
      DecoratedWord out = d;
      std::vector<int> newL;
      for (int p : d.L)
        if (p != l && p != l + 1) newL.push_back(p);
      if (!in(d.L, l)) newL.push_back(l);
      if (!in(d.L, l + 1)) newL.push_back(l + 1);
      std::sort(newL.begin(), newL.end());
      out.L = newL;
      return out;
    }
    case Move::tau3: {
      if (d.K.empty() || !in(d.L, 1)) return std::nullopt;
      // Require K to be an initial segment: then the letter leaving K
      // becomes the first letter of i_{Kbar} and the double word changes
      // exactly by flipping the sign of its first entry.
      if (!is_initial_segment(d.K)) return std::nullopt;
      DecoratedWord out = d;
      out.K.pop_back();
      out.L.erase(out.L.begin());
      return out;
    }
  }
  return std::nullopt;
}

std::optional<DecoratedWord> try_move_tau3_inverse(const RootDatum& datum,
                                                   const DecoratedWord& d) {
  (void)datum;
  const int n = static_cast<int>(d.word.size());
  const int m = static_cast<int>(d.K.size());
  if (m + 1 > n || !is_initial_segment(d.K)) return std::nullopt;
  if (std::binary_search(d.L.begin(), d.L.end(), 1)) return std::nullopt;
  DecoratedWord out = d;
  out.K.push_back(m + 1);
  out.L.insert(out.L.begin(), 1);
  return out;
}

DecoratedWord apply_move(const RootDatum& datum, const DecoratedWord& d,
                         Move move, int pos) {
  auto out = try_move(datum, d, move, pos);
  if (!out) throw std::invalid_argument("move not applicable at position");
  return *out;
}

std::optional<DoubleWord> double_word_move(const RootDatum& datum,
                                           const DoubleWord& I, DoubleMove move,
                                           int pos) {
  const int n = static_cast<int>(I.size());
  if (move == DoubleMove::tau3p) {
    if (n == 0 || I[0] >= 0) return std::nullopt;
    DoubleWord out = I;
    out[0] = -out[0];
    return out;
  }
  int k = pos;
  if (k < 1 || k + 1 > n) return std::nullopt;
  long prod = static_cast<long>(I[k - 1]) * I[k];
  int a = std::abs(I[k - 1]), b = std::abs(I[k]);
  bool ok = false;
  switch (move) {
    case DoubleMove::tau1p:
      ok = prod > 0 && commute(datum, a, b);
      break;
    case DoubleMove::tau2p:
      ok = prod < 0 && a != b;
      break;
    case DoubleMove::tau4p:
      ok = prod < 0 && a == b;
      break;
    default:
      break;
  }
  if (!ok) return std::nullopt;
  DoubleWord out = I;
  std::swap(out[k - 1], out[k]);
  return out;
}

std::vector<DecoratedWord> all_decorated_words(const RootDatum& datum,
                                               const WeylElt& w) {
  std::vector<DecoratedWord> out;
  auto words = datum.all_reduced_words(w);
  std::sort(words.begin(), words.end());
  for (const auto& word : words) {
    const int n = static_cast<int>(word.size());
    for (const auto& K : all_compatible_K(datum, word)) {
      const int m = static_cast<int>(K.size());
      // Enumerate all L of size m in lexicographic order.
      std::vector<int> L(m);
      std::iota(L.begin(), L.end(), 1);
      while (true) {
        out.push_back(DecoratedWord{word, K, L});
        // next m-combination of [1, n]
        int i = m - 1;
        while (i >= 0 && L[i] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++L[i];
        for (int j = i + 1; j < m; ++j) L[j] = L[j - 1] + 1;
      }
    }
  }
  return out;
}

EquivalenceClasses enumerate_equivalence_classes(const RootDatum& datum,
                                                 const WeylElt& w,
                                                 std::size_t cap) {
  EquivalenceClasses out;
  out.all_words = all_decorated_words(datum, w);
  if (out.all_words.size() > cap) {
    out.all_words.resize(cap);
    out.capped = true;
  }
  const std::size_t N = out.all_words.size();
  std::map<DecoratedWord, int> index;
  for (std::size_t i = 0; i < N; ++i) index[out.all_words[i]] = static_cast<int>(i);

  // Union-find over tau1-tau3 (with the tau3 inverse for symmetry).
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  const int n = w.length();
  std::vector<std::pair<int, int>> tau4_raw;
  for (std::size_t i = 0; i < N; ++i) {
    const DecoratedWord& d = out.all_words[i];
    auto link = [&](const std::optional<DecoratedWord>& nb, bool is_tau4) {
      if (!nb) return;
      auto it = index.find(*nb);
      if (it == index.end()) {
        if (out.capped) return;
        throw std::logic_error("move left the decorated-word universe");
      }
      if (is_tau4)
        tau4_raw.emplace_back(static_cast<int>(i), it->second);
      else
        unite(static_cast<int>(i), it->second);
    };
    for (int p = 1; p < n; ++p) {
      link(try_move(datum, d, Move::tau1, p), false);
      link(try_move(datum, d, Move::tau2, p), false);
      link(try_move(datum, d, Move::tau4, p), true);
    }
    link(try_move(datum, d, Move::tau3, 0), false);
    link(try_move_tau3_inverse(datum, d), false);
  }

  // Classes, with lex-minimal representatives (all_words is sorted upstream
  // per reduced word; re-pick minima explicitly to be safe).
  std::map<int, int> root_to_class;
  out.class_of.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    int r = find(static_cast<int>(i));
    auto [it, fresh] = root_to_class.try_emplace(r, static_cast<int>(out.reps.size()));
    if (fresh) out.reps.push_back(out.all_words[i]);
    out.class_of[i] = it->second;
    if (out.all_words[i] < out.reps[it->second]) out.reps[it->second] = out.all_words[i];
  }
  std::set<std::pair<int, int>> edges;
  for (auto [a, b] : tau4_raw) {
    int ca = out.class_of[a], cb = out.class_of[b];
    if (ca == cb) continue;
    edges.insert({std::min(ca, cb), std::max(ca, cb)});
  }
  out.tau4_edges.assign(edges.begin(), edges.end());
  return out;
}

std::vector<WeylElt> r_factors(const RootDatum& datum, const DoubleWord& I) {
  const int n = static_cast<int>(I.size());
  std::vector<WeylElt> r(n, datum.identity_elt());
  for (int l = n - 1; l >= 1; --l) {
    // r_l = r_{l+1} * s_{j_{l+1}} when j_{l+1} > 0 (0-based: entry I[l]).
    r[l - 1] = I[l] > 0 ? datum.multiply(r[l], datum.simple_elt(I[l])) : r[l];
  }
  return r;
}

}  // namespace geomult
