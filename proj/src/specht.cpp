#include "hookzeta/specht.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hookzeta/arith.hpp"
#include "hookzeta/craig.hpp"
#include "hookzeta/error.hpp"

namespace hookzeta {

namespace {

IntMatrix power(const IntMatrix& m, int e) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

int parity(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2;
}

Tabloid make_tabloid(int a, int b, std::vector<int> singles) {
  Tabloid tab;
  tab.row_one = {std::min(a, b), std::max(a, b)};
  tab.singles = std::move(singles);
  return tab;
}

Tabloid swap_values(const Tabloid& tab, int a, int b) {
  auto f = [a, b](int x) { return x == a ? b : x == b ? a : x; };
  std::vector<int> singles(tab.singles.size());
  std::transform(tab.singles.begin(), tab.singles.end(), singles.begin(), f);
  return make_tabloid(f(tab.row_one[0]), f(tab.row_one[1]), std::move(singles));
}

// {T_t}: row one {1, t}, remaining entries in increasing order.
Tabloid leading_tabloid(int n, int t) {
  std::vector<int> singles;
  for (int x = 2; x <= n + 1; ++x)
    if (x != t) singles.push_back(x);
  return make_tabloid(1, t, std::move(singles));
}

void check_n(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be at least 2, got " + std::to_string(n));
}

}  // namespace

RepGenerators craig_generators(int n) {
  check_n(n);
  RepGenerators g{n, {}};
  const auto dim = static_cast<std::size_t>(n);
  for (std::size_t k = 0; k < dim; ++k) {
    IntMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = -1;
    // row k: E^{k,k-1} + 2E^{k,k} + E^{k,k+1} - I
    if (k > 0) m(k, k - 1) = 1;
    m(k, k) = 1;
    if (k + 1 < dim) m(k, k + 1) = 1;
    g.mats.push_back(std::move(m));
  }
  return g;
}

bool verify_coxeter(const RepGenerators& g) {
  if (g.n < 1 || g.mats.size() != static_cast<std::size_t>(g.n)) return false;
  const auto dim = static_cast<std::size_t>(g.n);
  const IntMatrix id = IntMatrix::identity(dim);
  for (const auto& m : g.mats)
    if (m.rows() != dim || m.cols() != dim) return false;
  for (std::size_t k = 0; k < g.mats.size(); ++k) {
    if (g.mats[k] * g.mats[k] != id) return false;
    if (k + 1 < g.mats.size() && power(g.mats[k] * g.mats[k + 1], 3) != id) return false;
    for (std::size_t l = k + 2; l < g.mats.size(); ++l)
      if (g.mats[k] * g.mats[l] != g.mats[l] * g.mats[k]) return false;
  }
  return true;
}

TabloidVector polytabloid(const HookTableau& tab, const Limits& limits) {
  check_n(tab.n);
  if (tab.t < 2 || tab.t > tab.n + 1)
    throw Error(ErrorKind::InvalidInput, "hook tableau entry must lie in 2..n+1");
  if (tab.n > limits.oracle_max_n)
    throw Error(ErrorKind::ScaleExceeded, "oracle-scale-exceeded: n = " + std::to_string(tab.n));

  std::vector<int> column;
  for (int x = 1; x <= tab.n + 1; ++x)
    if (x != tab.t) column.push_back(x);

  // The column stabilizer permutes the first column arbitrarily; the
  // permuted column is the image sigma(column) read top to bottom.
  TabloidVector out;
  std::vector<int> perm = column;
  do {
    const long sign = parity(perm) ? -1 : 1;
    out.emplace(make_tabloid(perm[0], tab.t, std::vector<int>(perm.begin() + 1, perm.end())), sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

RepGenerators specht_generators_oracle(int n, const Limits& limits) {
  check_n(n);
  if (n > limits.oracle_max_n)
    throw Error(ErrorKind::ScaleExceeded, "oracle-scale-exceeded: n = " + std::to_string(n));
  const auto dim = static_cast<std::size_t>(n);

  std::vector<TabloidVector> basis;
  std::vector<Tabloid> leading;
  for (int t = 2; t <= n + 1; ++t) {
    basis.push_back(polytabloid({n, t}, limits));
    leading.push_back(leading_tabloid(n, t));
  }

  RepGenerators g{n, {}};
  for (int k = 1; k <= n; ++k) {
    IntMatrix m(dim, dim);
    for (std::size_t u = 0; u < dim; ++u) {
      TabloidVector image;
      for (const auto& [tab, c] : basis[u]) image[swap_values(tab, k, k + 1)] += c;

      // {T_v} occurs in e_{T_v} with coefficient 1 and in no other basis
      // polytabloid (v is in row one of every tabloid of e_{T_v}), so the
      // coordinates can be read off; the full expansion is compared after.
      TabloidVector rebuilt;
      for (std::size_t v = 0; v < dim; ++v) {
        auto it = image.find(leading[v]);
        const long c = it == image.end() ? 0 : it->second;
        m(v, u) = c;
        if (c == 0) continue;
        for (const auto& [tab, e] : basis[v]) rebuilt[tab] += c * e;
      }
      std::erase_if(image, [](const auto& kv) { return kv.second == 0; });
      std::erase_if(rebuilt, [](const auto& kv) { return kv.second == 0; });
      if (image != rebuilt)
        throw Error(ErrorKind::Internal, "permuted polytabloid is not an integral combination");
    }
    g.mats.push_back(std::move(m));
  }
  return g;
}

RepGenerators specht_generators_closed(int n) {
  check_n(n);
  const auto dim = static_cast<std::size_t>(n);
  // basis index of e_{T_t}
  auto idx = [](int t) { return static_cast<std::size_t>(t - 2); };
  RepGenerators g{n, {}};
  for (int k = 1; k <= n; ++k) {
    IntMatrix m(dim, dim);
    for (int t = 2; t <= n + 1; ++t) {
      if (t != k && t != k + 1) {
        m(idx(t), idx(t)) = -1;
      } else if (k >= 2) {
        const int other = t == k ? k + 1 : k;
        m(idx(other), idx(t)) = 1;
      } else {
        // k = 1, t = 2: straightening of the non-standard image
        m(idx(2), idx(2)) = 1;
        for (int u = 3; u <= n + 1; ++u) m(idx(u), idx(2)) = (u % 2 == 0) ? 1 : -1;
      }
    }
    g.mats.push_back(std::move(m));
  }
  return g;
}

IntMatrix intertwiner(const RepGenerators& a, const RepGenerators& b) {
  if (a.n != b.n || a.mats.size() != b.mats.size())
    throw Error(ErrorKind::InvalidInput, "representations of different dimension");
  const auto n = static_cast<std::size_t>(a.n);
  const std::size_t unknowns = n * n;
  IntMatrix system(a.mats.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < a.mats.size(); ++k) {
    const IntMatrix& ak = a.mats[k];
    const IntMatrix& bk = b.mats[k];
    // (B_k P - P A_k)(i, j) = 0, P(l, j) is unknown l*n + j
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t l = 0; l < n; ++l) {
          system(row, l * n + j) += bk(i, l);
          system(row, i * n + l) -= ak(l, j);
        }
      }
  }
  const auto kernel = rational_kernel(system);
  if (kernel.size() != 1)
    throw Error(ErrorKind::NotEquivalent, "not-equivalent-or-not-irreducible: intertwiner space has dimension " +
                                              std::to_string(kernel.size()));
  IntVector v = kernel.front();
  auto first = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
  if (first != v.end() && *first < 0)
    for (auto& x : v) x = -x;
  IntMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = v[i * n + j];
  return p;
}

LatticeBasis specht_lattice_in_craig_coordinates(int n) {
  return LatticeBasis(intertwiner(specht_generators_closed(n), craig_generators(n)));
}

long identify_specht_lattice(int n) {
  const LatticeBasis specht = specht_lattice_in_craig_coordinates(n);
  for (long d : divisors(n + 1))
    if (is_scalar_multiple(craig_lattice(n, d).basis, specht)) return d;
  throw Error(ErrorKind::Internal, "Specht lattice matches no L(d) with d | n+1");
}

}  // namespace hookzeta
