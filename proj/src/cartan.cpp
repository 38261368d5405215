#include "geomult/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace geomult {

// ---------------------------------------------------------------------------
// Weight / Coweight

static bool dominant_coords(const std::vector<long>& c) {
  return std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
}
static std::vector<long> add_coords(const std::vector<long>& a,
                                    const std::vector<long>& b, long sign) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
  std::vector<long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sign * b[i];
  return r;
}
static std::string coords_str(const std::vector<long>& c) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

bool Weight::is_dominant() const { return dominant_coords(c); }
Weight Weight::operator+(const Weight& o) const { return {add_coords(c, o.c, 1)}; }
Weight Weight::operator-(const Weight& o) const { return {add_coords(c, o.c, -1)}; }
std::string Weight::str() const { return coords_str(c); }

bool Coweight::is_dominant() const { return dominant_coords(c); }
Coweight Coweight::operator+(const Coweight& o) const { return {add_coords(c, o.c, 1)}; }
Coweight Coweight::operator-(const Coweight& o) const { return {add_coords(c, o.c, -1)}; }
std::string Coweight::str() const { return coords_str(c); }

bool WeylElt::is_identity() const { return word.empty(); }

// ---------------------------------------------------------------------------
// Cartan matrices by series

static std::vector<std::vector<int>> cartan_of(const std::string& series, int r) {
  auto bad = [&] {
    throw std::invalid_argument("unsupported series/rank: " + series + " " +
                                std::to_string(r));
  };
  std::vector<std::vector<int>> A(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) A[i][i] = 2;
  auto chain = [&A](int i, int j) { A[i][j] = A[j][i] = -1; };
  if (series == "A") {
    if (r < 1) bad();
    for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
  } else if (series == "B") {
    // B_r: short root at the end; <alpha_{r-1}, alpha_r^vee> = -2.
    if (r < 2) bad();
    for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
    A[r - 1][r - 2] = -2;
  } else if (series == "C") {
    // C_r: long root at the end; <alpha_r, alpha_{r-1}^vee> = -2.
    if (r < 2) bad();
    for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
    A[r - 2][r - 1] = -2;
  } else if (series == "D") {
    if (r < 3) bad();
    for (int i = 0; i + 2 < r; ++i) chain(i, i + 1);
    chain(r - 3, r - 1);
  } else if (series == "E") {
    if (r < 6 || r > 8) bad();
    // Bourbaki numbering: node 2 attached to node 4.
    for (int i = 2; i + 1 < r; ++i) chain(i, i + 1);
    chain(0, 2);
    chain(1, 3);
  } else if (series == "F") {
    if (r != 4) bad();
    chain(0, 1);
    chain(2, 3);
    A[1][2] = -1;
    A[2][1] = -2;
  } else if (series == "G") {
    if (r != 2) bad();
    A[0][1] = -3;
    A[1][0] = -1;
  } else {
    bad();
  }
  return A;
}

RootDatum RootDatum::make(const std::string& series, int rank) {
  RootDatum d;
  d.series_ = series;
  d.rank_ = rank;
  d.A_ = cartan_of(series, rank);
  d.build_roots();
  return d;
}

RootDatum RootDatum::from_cartan(std::vector<std::vector<int>> cartan) {
  RootDatum d;
  d.series_ = "X";
  d.rank_ = static_cast<int>(cartan.size());
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != d.rank_)
      throw std::invalid_argument("cartan matrix not square");
  for (int i = 0; i < d.rank_; ++i) {
    if (cartan[i][i] != 2) throw std::invalid_argument("diagonal must be 2");
    for (int j = 0; j < d.rank_; ++j)
      if (i != j && (cartan[i][j] > 0 || ((cartan[i][j] == 0) != (cartan[j][i] == 0))))
        throw std::invalid_argument("invalid cartan matrix");
  }
  d.A_ = std::move(cartan);
  d.build_roots();
  return d;
}

// Closure of the simple roots under simple reflections.  Each root is kept
// both in fundamental-weight coordinates and in simple-root coordinates;
// the latter decides positivity.
void RootDatum::build_roots() {
  const int r = rank_;
  struct R {
    std::vector<long> fund, rootc;
  };
  std::set<std::vector<long>> seen;
  std::vector<R> queue_all;
  for (int j = 0; j < r; ++j) {
    R root;
    root.fund.resize(r);
    for (int i = 0; i < r; ++i) root.fund[i] = A_[i][j];
    root.rootc.assign(r, 0);
    root.rootc[j] = 1;
    queue_all.push_back(root);
    seen.insert(root.fund);
  }
  for (size_t q = 0; q < queue_all.size(); ++q) {
    R cur = queue_all[q];
    for (int i = 0; i < r; ++i) {
      R nxt = cur;
      long pairing = cur.fund[i];  // <beta, alpha_i^vee>
      for (int k = 0; k < r; ++k) nxt.fund[k] -= pairing * A_[k][i];
      nxt.rootc[i] -= pairing;
      if (seen.insert(nxt.fund).second) queue_all.push_back(nxt);
      if (queue_all.size() > 10000)
        throw std::runtime_error("root system too large");
    }
  }
  pos_roots_.clear();
  for (const auto& root : queue_all)
    if (dominant_coords(root.rootc)) pos_roots_.push_back(Weight{root.fund});
  std::sort(pos_roots_.begin(), pos_roots_.end(),
            [](const Weight& a, const Weight& b) { return a.c < b.c; });
}

bool RootDatum::is_positive_root(const Weight& w) const {
  return std::binary_search(
      pos_roots_.begin(), pos_roots_.end(), w,
      [](const Weight& a, const Weight& b) { return a.c < b.c; });
}

Weight RootDatum::simple_root(int j) const {
  std::vector<long> c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = A_[i][j - 1];
  return {c};
}

Coweight RootDatum::simple_coroot(int i) const {
  std::vector<long> c(rank_);
  for (int j = 0; j < rank_; ++j) c[j] = A_[i - 1][j];
  return {c};
}

Weight RootDatum::rho() const { return {std::vector<long>(rank_, 1)}; }

Weight RootDatum::simple_reflection(int i, const Weight& w) const {
  if (i < 1 || i > rank_) throw std::out_of_range("simple_reflection index");
  Weight r = w;
  long pairing = w.c[i - 1];
  for (int k = 0; k < rank_; ++k) r.c[k] -= pairing * A_[k][i - 1];
  return r;
}

Coweight RootDatum::simple_reflection(int i, const Coweight& w) const {
  if (i < 1 || i > rank_) throw std::out_of_range("simple_reflection index");
  Coweight r = w;
  long pairing = w.c[i - 1];  // <alpha_i, xi>
  for (int k = 0; k < rank_; ++k) r.c[k] -= pairing * A_[i - 1][k];
  return r;
}

Weight RootDatum::weyl_act(const WeylElt& w, const Weight& lam) const {
  if (static_cast<int>(lam.c.size()) != rank_)
    throw std::invalid_argument("weyl_act: rank mismatch");
  std::vector<long> out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += w.mat[i][j] * lam.c[j];
  return {out};
}

Coweight RootDatum::weyl_act(const WeylElt& w, const Coweight& xi) const {
  // Coweights transform by the same word applied through the dual
  // reflections; apply the stored reduced word right-to-left.
  Coweight v = xi;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    v = simple_reflection(*it, v);
  return v;
}

WeylElt RootDatum::identity_elt() const {
  WeylElt e;
  e.mat.assign(rank_, std::vector<long>(rank_, 0));
  for (int i = 0; i < rank_; ++i) e.mat[i][i] = 1;
  return e;
}

static std::vector<std::vector<long>> mat_mul(
    const std::vector<std::vector<long>>& a,
    const std::vector<std::vector<long>>& b) {
  size_t n = a.size();
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

WeylElt RootDatum::simple_elt(int i) const {
  WeylElt s = identity_elt();
  for (int k = 0; k < rank_; ++k) s.mat[k][i - 1] -= A_[k][i - 1];
  s.word = {i};
  return s;
}

WeylElt RootDatum::multiply(const WeylElt& a, const WeylElt& b) const {
  WeylElt c;
  c.mat = mat_mul(a.mat, b.mat);
  c.word = canonical_word(c);
  return c;
}

WeylElt RootDatum::inverse(const WeylElt& w) const {
  // Order is finite: invert by applying the reversed word.
  WeylElt inv = identity_elt();
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    inv = multiply(inv, simple_elt(*it));
  return inv;
}

WeylElt RootDatum::from_word(const std::vector<int>& word) const {
  WeylElt w = identity_elt();
  for (int i : word) w.mat = mat_mul(w.mat, simple_elt(i).mat);
  w.word = canonical_word(w);
  return w;
}

int RootDatum::length(const WeylElt& w) const {
  int inv = 0;
  for (const auto& beta : pos_roots_)
    if (!is_positive_root(weyl_act(w, beta))) ++inv;
  return inv;
}

bool RootDatum::is_reduced(const std::vector<int>& word) const {
  WeylElt w = identity_elt();
  for (int i : word) w.mat = mat_mul(w.mat, simple_elt(i).mat);
  return length(w) == static_cast<int>(word.size());
}

std::vector<int> RootDatum::canonical_word(const WeylElt& w) const {
  // Greedy left-descent: i is a left descent of w iff w^{-1}(alpha_i) < 0.
  // Maintain the inverse action matrix and peel smallest descents.
  WeylElt cur;
  cur.mat = w.mat;
  // Compute inverse matrix by solving with simple reflections is circular;
  // instead track the action of cur on each alpha_i and test descents via
  // "alpha_i maps under cur^{-1} to a negative root" <=> "cur has a
  // left-descent at i" <=> length(s_i * cur) < length(cur).
  std::vector<int> word;
  int len = length(cur);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= rank_; ++i) {
      WeylElt cand;
      cand.mat = mat_mul(simple_elt(i).mat, cur.mat);
      int cl = length(cand);
      if (cl == len - 1) {
        word.push_back(i);
        cur = cand;
        len = cl;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("canonical_word: no descent found");
  }
  return word;
}

WeylElt RootDatum::longest_element() const {
  std::vector<int> all(rank_);
  std::iota(all.begin(), all.end(), 1);
  return longest_element(all);
}

WeylElt RootDatum::longest_element(const std::vector<int>& J) const {
  // Drive rho_J down to -rho_J by simple reflections in J.
  std::vector<long> v(rank_, 0);
  for (int j : J) v[j - 1] = 1;
  std::vector<int> rev;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int j : J) {
      if (v[j - 1] > 0) {
        Weight wv = simple_reflection(j, Weight{v});
        v = wv.c;
        rev.push_back(j);
        progress = true;
        break;
      }
    }
  }
  std::vector<int> word(rev.rbegin(), rev.rend());
  return from_word(word);
}

RootDatum::Bipartite RootDatum::bipartite_w0() const {
  // 2-color the Dynkin diagram with vertex 1 colored 0.
  std::vector<int> color(rank_, -1);
  for (int start = 0; start < rank_; ++start) {
    if (color[start] != -1) continue;
    color[start] = (start == 0) ? 0 : 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < rank_; ++v) {
        if (v == u || A_[u][v] == 0) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          throw std::logic_error("Dynkin diagram not bipartite");
        }
      }
    }
  }
  Bipartite bp;
  for (int i = 0; i < rank_; ++i)
    (color[i] == 0 ? bp.a_set : bp.b_set).push_back(i + 1);
  bp.a = from_word(bp.a_set);
  bp.b = from_word(bp.b_set);
  WeylElt w0 = longest_element();
  WeylElt ab = multiply(bp.a, bp.b);
  WeylElt acc = identity_elt();
  for (int n = 0; n <= 2 * num_positive_roots() + 2; ++n) {
    if (acc == w0) {
      bp.n = n;
      bp.eps = 0;
      return bp;
    }
    if (multiply(acc, bp.a) == w0) {
      bp.n = n;
      bp.eps = 1;
      return bp;
    }
    acc = multiply(acc, ab);
  }
  throw std::logic_error("bipartite_w0: presentation not found");
}

RootDatum RootDatum::langlands_dual() const {
  std::vector<std::vector<int>> At(rank_, std::vector<int>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) At[i][j] = A_[j][i];
  RootDatum d = from_cartan(At);
  // The dual of a named series is again named (A<->A, B<->C, others self).
  if (series_ == "A" || series_ == "D" || series_ == "E" || series_ == "F" ||
      series_ == "G")
    d.series_ = series_;
  else if (series_ == "B")
    d.series_ = "C";
  else if (series_ == "C")
    d.series_ = "B";
  return d;
}

Weight RootDatum::minimal_lift_weight(int i) const {
  Weight omega{std::vector<long>(rank_, 0)};
  omega.c[i - 1] = 1;
  Weight lam = omega + simple_reflection(i, omega);
  // Sanity: equals -sum_{j != i} a_{ji} omega_j.
  for (int j = 0; j < rank_; ++j) {
    long expect = (j == i - 1) ? 0 : -A_[j][i - 1];
    if (lam.c[j] != expect)
      throw std::logic_error("minimal_lift_weight identity failed");
  }
  return lam;
}

int RootDatum::star(int i) const {
  WeylElt w0 = longest_element();
  Weight image = weyl_act(w0, simple_root(i));
  for (int j = 1; j <= rank_; ++j) {
    Weight neg = simple_root(j);
    for (auto& x : neg.c) x = -x;
    if (image == neg) return j;
  }
  throw std::logic_error("star: image of simple root not -simple");
}

std::vector<std::vector<int>> RootDatum::all_reduced_words(const WeylElt& w) const {
  if (length(w) == 0) return {{}};
  std::vector<std::vector<int>> out;
  int len = length(w);
  for (int i = 1; i <= rank_; ++i) {
    WeylElt rest;
    rest.mat = mat_mul(simple_elt(i).mat, w.mat);
    if (length(rest) == len - 1) {
      rest.word = canonical_word(rest);
      for (auto tail : all_reduced_words(rest)) {
        tail.insert(tail.begin(), i);
        out.push_back(std::move(tail));
      }
    }
  }
  return out;
}

std::vector<WeylElt> RootDatum::all_elements() const {
  std::vector<WeylElt> out;
  std::set<std::vector<std::vector<long>>> seen;
  out.push_back(identity_elt());
  seen.insert(out[0].mat);
  for (size_t q = 0; q < out.size(); ++q) {
    WeylElt cur = out[q];
    for (int i = 1; i <= rank_; ++i) {
      WeylElt nxt;
      nxt.mat = mat_mul(cur.mat, simple_elt(i).mat);
      if (seen.insert(nxt.mat).second) {
        nxt.word = canonical_word(nxt);
        out.push_back(nxt);
        if (out.size() > 1000000) throw std::runtime_error("Weyl group too large");
      }
    }
  }
  return out;
}

std::vector<std::vector<long>> RootDatum::symmetrized_form() const {
  // Find minimal positive integers d_i with d_i A[i][j] = d_j A[j][i].
  std::vector<long> num(rank_, 0), den(rank_, 1);
  auto lcm = [](long a, long b) { return a / std::gcd(a, b) * b; };
  for (int start = 0; start < rank_; ++start) {
    if (num[start] != 0) continue;
    num[start] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < rank_; ++v) {
        if (v == u || A_[u][v] == 0 || num[v] != 0) continue;
        // d_v = d_u * A[u][v] / A[v][u]
        num[v] = num[u] * A_[u][v];
        den[v] = den[u] * A_[v][u];
        if (den[v] < 0) { num[v] = -num[v]; den[v] = -den[v]; }
        long g = std::gcd(std::abs(num[v]), std::abs(den[v]));
        num[v] /= g;
        den[v] /= g;
        q.push(v);
      }
    }
  }
  long l = 1;
  for (int i = 0; i < rank_; ++i) l = lcm(l, den[i]);
  std::vector<long> d(rank_);
  for (int i = 0; i < rank_; ++i) d[i] = num[i] * (l / den[i]);
  std::vector<std::vector<long>> B(rank_, std::vector<long>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) B[i][j] = d[i] * A_[i][j];
  return B;
}

}  // namespace geomult
