#include "geomult/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace geomult {

namespace {

// Rational matrix inverse of the Cartan matrix (for root coordinates).
std::vector<std::vector<Rat>> cartan_inverse(const RootDatum& d) {
  int r = d.rank();
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(2 * r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = d.cartan()[i][j];
    m[i][r + i] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int row = col; row < r; ++row)
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::logic_error("Cartan matrix singular");
    std::swap(m[col], m[piv]);
    Rat p = m[col][col];
    for (auto& x : m[col]) x /= p;
    for (int row = 0; row < r; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col];
      for (int j = 0; j < 2 * r; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) inv[i][j] = m[i][r + j];
  return inv;
}

struct FormData {
  std::vector<std::vector<Rat>> Ainv;
  std::vector<long> d;  // symmetrizers
};

FormData form_data(const RootDatum& datum) {
  FormData f;
  f.Ainv = cartan_inverse(datum);
  auto B = datum.symmetrized_form();
  f.d.resize(datum.rank());
  for (int i = 0; i < datum.rank(); ++i) f.d[i] = B[i][i] / 2;
  return f;
}

// Root coordinates of a weight: x = A^{-1} * fund.
std::vector<Rat> root_coords(const FormData& f, const std::vector<long>& fund) {
  int r = static_cast<int>(fund.size());
  std::vector<Rat> x(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) x[i] += f.Ainv[i][j] * Rat(fund[j]);
  return x;
}

// Invariant form (a, b) = sum_j d_j * a_fund[j] * rootcoords(b)[j],
// using (omega_i, alpha_j) = delta_ij d_j.
Rat inner(const FormData& f, const std::vector<long>& a,
          const std::vector<long>& b) {
  auto x = root_coords(f, b);
  Rat total = 0;
  for (size_t j = 0; j < a.size(); ++j) total += Rat(f.d[j]) * Rat(a[j]) * x[j];
  return total;
}

long rat_to_long(const Rat& q) {
  if (q.get_den() != 1) throw std::logic_error("expected integer rational");
  return static_cast<long>(q.get_num().get_si());
}

}  // namespace

Int weyl_dim(const RootDatum& datum, const Weight& lambda) {
  FormData f = form_data(datum);
  std::vector<long> lr(lambda.c);
  Weight rho = datum.rho();
  Rat prod = 1;
  for (const auto& alpha : datum.positive_roots()) {
    std::vector<long> lpr(datum.rank());
    for (int i = 0; i < datum.rank(); ++i) lpr[i] = lambda.c[i] + rho.c[i];
    prod *= inner(f, lpr, alpha.c) / inner(f, rho.c, alpha.c);
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw std::logic_error("Weyl dim not integral");
  return prod.get_num();
}

CharacterTable weight_multiplicities(const RootDatum& datum, const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("weight_multiplicities: lambda not dominant");
  const int r = datum.rank();
  FormData fd = form_data(datum);

  // Memoized cache over (cartan, lambda).
  struct Key {
    std::vector<std::vector<int>> A;
    std::vector<long> lam;
    bool operator<(const Key& o) const {
      return std::tie(A, lam) < std::tie(o.A, o.lam);
    }
  };
  static std::map<Key, CharacterTable> cache;
  static std::mutex cache_mu;
  Key key{datum.cartan(), lambda.c};
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  // Dominant candidates mu = lambda - sum n_i alpha_i with 0 <= n <= M,
  // where M = root coordinates of lambda - w0(lambda).
  WeylElt w0 = datum.longest_element();
  Weight w0lam = datum.weyl_act(w0, lambda);
  std::vector<long> M(r);
  {
    auto x = root_coords(fd, (lambda - w0lam).c);
    for (int i = 0; i < r; ++i) M[i] = rat_to_long(x[i]);
  }
  std::vector<std::vector<long>> dominant;  // fund coords
  std::vector<long> n(r, 0);
  while (true) {
    std::vector<long> mu(r);
    for (int i = 0; i < r; ++i) {
      mu[i] = lambda.c[i];
      for (int j = 0; j < r; ++j) mu[i] -= n[j] * datum.cartan()[i][j];
    }
    bool dom = std::all_of(mu.begin(), mu.end(), [](long x) { return x >= 0; });
    if (dom) dominant.push_back(mu);
    // advance odometer
    int pos = 0;
    while (pos < r && ++n[pos] > M[pos]) n[pos++] = 0;
    if (pos == r) break;
  }
  // Order dominant candidates by decreasing |mu+rho|^2, so the Freudenthal
  // recursion only consults already-computed values.
  Weight rho = datum.rho();
  auto norm2 = [&](const std::vector<long>& mu) {
    std::vector<long> mpr(r);
    for (int i = 0; i < r; ++i) mpr[i] = mu[i] + rho.c[i];
    return inner(fd, mpr, mpr);
  };
  std::sort(dominant.begin(), dominant.end(),
            [&](const auto& a, const auto& b) { return norm2(a) > norm2(b); });

  std::map<std::vector<long>, long> dom_mult;
  auto mult_of = [&](std::vector<long> mu) -> long {
    // Dominant representative lookup (multiplicities are W-invariant).
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 1; i <= r; ++i) {
        if (mu[i - 1] < 0) {
          Weight w = datum.simple_reflection(i, Weight{mu});
          mu = w.c;
          changed = true;
        }
      }
    }
    auto it = dom_mult.find(mu);
    return it == dom_mult.end() ? 0 : it->second;
  };

  Rat lam_norm = norm2(lambda.c);
  for (const auto& mu : dominant) {
    if (mu == lambda.c) {
      dom_mult[mu] = 1;
      continue;
    }
    Rat denom = lam_norm - norm2(mu);
    if (denom == 0) {
      dom_mult[mu] = 0;  // |mu+rho| = |lambda+rho| only at mu = lambda
      continue;
    }
    Rat rhs = 0;
    for (const auto& alpha : datum.positive_roots()) {
      for (long k = 1;; ++k) {
        std::vector<long> muk(r);
        for (int i = 0; i < r; ++i) muk[i] = mu[i] + k * alpha.c[i];
        long m = mult_of(muk);
        // Stop when mu + k*alpha leaves the weight diagram for good: the
        // support along a root string is contiguous, so the first zero
        // after leaving the hull ends the sum.  We conservatively stop at
        // m == 0 together with |mu+k*alpha+rho|^2 > |lambda+rho|^2.
        if (m == 0) {
          std::vector<long> mkr(r);
          for (int i = 0; i < r; ++i) mkr[i] = muk[i] + rho.c[i];
          if (inner(fd, mkr, mkr) > lam_norm) break;
          continue;
        }
        rhs += Rat(2 * m) * inner(fd, muk, alpha.c);
      }
    }
    Rat m = rhs / denom;
    m.canonicalize();
    if (m.get_den() != 1) throw std::logic_error("Freudenthal non-integral");
    dom_mult[mu] = static_cast<long>(m.get_num().get_si());
  }

  // Expand to the full weight diagram by W-orbits.
  CharacterTable table;
  table.datum = datum;
  table.lambda = lambda;
  Int dim = 0;
  for (const auto& [mu, m] : dom_mult) {
    if (m == 0) continue;
    std::set<std::vector<long>> orbit;
    std::vector<std::vector<long>> queue{mu};
    orbit.insert(mu);
    for (size_t q = 0; q < queue.size(); ++q) {
      for (int i = 1; i <= r; ++i) {
        Weight w = datum.simple_reflection(i, Weight{queue[q]});
        if (orbit.insert(w.c).second) queue.push_back(w.c);
      }
    }
    for (const auto& nu : orbit) {
      table.mult[nu] = m;
      dim += m;
    }
  }
  table.dim = dim;
  if (dim != weyl_dim(datum, lambda))
    throw std::logic_error("character table dimension mismatch");

  std::lock_guard<std::mutex> lock(cache_mu);
  cache[key] = table;
  return table;
}

long tensor_mult_oracle(const RootDatum& datum, const Weight& lambda,
                        const Weight& nu, const Weight& mu) {
  if (!lambda.is_dominant() || !nu.is_dominant() || !mu.is_dominant())
    throw std::invalid_argument("tensor_mult_oracle: weights must be dominant");
  CharacterTable tnu = weight_multiplicities(datum, nu);
  Weight rho = datum.rho();
  long total = 0;
  for (const auto& w : datum.all_elements()) {
    Weight arg = datum.weyl_act(w, mu + rho) - (lambda + rho);
    long m = tnu.multiplicity(arg);
    if (m == 0) continue;
    total += (datum.length(w) % 2 == 0 ? m : -m);
  }
  if (total < 0) throw std::logic_error("negative tensor multiplicity");
  return total;
}

std::map<std::vector<long>, long> branching_oracle(const RootDatum& datum,
                                                   const std::vector<int>& J,
                                                   const Weight& lambda) {
  const int r = datum.rank();
  for (int j : J)
    if (j < 1 || j > r) throw std::invalid_argument("branching_oracle: bad J");
  CharacterTable table = weight_multiplicities(datum, lambda);
  FormData fd = form_data(datum);

  // Remaining character, keyed by depth = height of lambda - mu.
  std::map<std::vector<long>, long> rem = table.mult;
  auto depth_of = [&](const std::vector<long>& mu) {
    auto x = root_coords(fd, (lambda - Weight{mu}).c);
    Rat s = 0;
    for (const auto& xi : x) s += xi;
    return rat_to_long(s);
  };
  std::vector<std::pair<long, std::vector<long>>> order;
  for (const auto& [mu, m] : rem) order.emplace_back(depth_of(mu), mu);
  std::sort(order.begin(), order.end());

  // Levi sub-datum.
  std::vector<std::vector<int>> AJ(J.size(), std::vector<int>(J.size()));
  for (size_t a = 0; a < J.size(); ++a)
    for (size_t b = 0; b < J.size(); ++b)
      AJ[a][b] = datum.cartan()[J[a] - 1][J[b] - 1];
  RootDatum levi =
      J.empty() ? RootDatum() : RootDatum::from_cartan(AJ);

  std::map<std::vector<long>, long> result;
  Int dim_check = 0;
  for (const auto& [depth, beta] : order) {
    long m = rem[beta];
    if (m == 0) continue;
    bool j_dominant = true;
    for (int j : J) j_dominant = j_dominant && beta[j - 1] >= 0;
    if (!j_dominant) continue;  // covered by an earlier Levi head
    result[beta] += m;
    if (J.empty()) {
      rem[beta] = 0;
      dim_check += m;
      continue;
    }
    // Subtract m copies of the Levi character of V^J_beta.
    std::vector<long> lamJ(J.size());
    for (size_t a = 0; a < J.size(); ++a) lamJ[a] = beta[J[a] - 1];
    CharacterTable lt = weight_multiplicities(levi, Weight{lamJ});
    FormData lfd = form_data(levi);
    dim_check += Int(m) * lt.dim;
    for (const auto& [muJ, mJ] : lt.mult) {
      // Offset of muJ from lamJ in the Levi root lattice.
      std::vector<long> off(J.size());
      {
        std::vector<long> diff(J.size());
        for (size_t a = 0; a < J.size(); ++a) diff[a] = lamJ[a] - muJ[a];
        auto x = root_coords(lfd, diff);
        for (size_t a = 0; a < J.size(); ++a) off[a] = rat_to_long(x[a]);
      }
      std::vector<long> full = beta;
      for (size_t a = 0; a < J.size(); ++a) {
        for (int i = 0; i < r; ++i)
          full[i] -= off[a] * datum.cartan()[i][J[a] - 1];
      }
      auto it = rem.find(full);
      if (it == rem.end() || it->second < m * mJ)
        throw std::logic_error("branching peel underflow");
      it->second -= m * mJ;
    }
  }
  for (const auto& [mu, m] : rem)
    if (m != 0) throw std::logic_error("branching left residue");
  if (dim_check != table.dim)
    throw std::logic_error("branching dimension mismatch");
  return result;
}

}  // namespace geomult
