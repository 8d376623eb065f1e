#include "hookzeta/craig.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "hookzeta/arith.hpp"
#include "hookzeta/error.hpp"
#include "hookzeta/modp.hpp"

namespace hookzeta {

namespace {

std::vector<IntMatrix> gens_in_basis(const LatticeBasis& l, const RepGenerators& g) {
  if (static_cast<std::size_t>(g.n) != l.dim())
    throw Error(ErrorKind::InvalidInput, "dimension mismatch between lattice and generators");
  std::vector<IntMatrix> out;
  for (const auto& gk : g.mats) {
    auto x = solve_integral(l.hnf(), gk * l.hnf());
    if (!x) throw Error(ErrorKind::InvalidInput, "lattice is not G-stable");
    out.push_back(std::move(*x));
  }
  return out;
}

std::int64_t mod_p(const Int& x, long p) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

modp::Module quotient_module(const LatticeBasis& l, const RepGenerators& g, long p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  const std::size_t n = l.dim();
  std::vector<modp::Mat> mats;
  for (const auto& m : gens_in_basis(l, g)) {
    modp::Mat r(n, modp::Vec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = mod_p(m(i, j), p);
    mats.push_back(std::move(r));
  }
  return modp::Module(p, n, std::move(mats));
}

// Image of sub (with pL <= sub <= L) in L/pL.
modp::Subspace reduce(const LatticeBasis& l, const LatticeBasis& sub, const modp::Module& mod) {
  auto coords = solve_integral(l.hnf(), sub.hnf());
  if (!coords) throw Error(ErrorKind::NotSublattice, "not-sublattice");
  modp::Subspace cols;
  for (std::size_t j = 0; j < coords->cols(); ++j) {
    modp::Vec v(l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i) v[i] = mod_p((*coords)(i, j), mod.prime());
    cols.rows.push_back(std::move(v));
  }
  return mod.sum(modp::Subspace{}, cols);
}

LatticeBasis lift(const LatticeBasis& l, const modp::Subspace& s, long p) {
  const std::size_t n = l.dim();
  IntMatrix coords(n, s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) coords(i, j) = static_cast<long>(s.rows[j][i]);
  IntMatrix gens = s.dim() ? (l.hnf() * coords).concat(Int(p) * l.hnf()) : Int(p) * l.hnf();
  return LatticeBasis(hnf(gens));
}

int log_p(Int x, long p) {
  int e = 0;
  while (x > 1) {
    if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)))
      throw Error(ErrorKind::Internal, "index is not a power of p");
    x /= p;
    ++e;
  }
  return e;
}

std::vector<LatticeBasis> sorted(std::vector<LatticeBasis> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

CraigLattice craig_lattice(int n, long d) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be at least 2");
  if (d < 1) throw Error(ErrorKind::InvalidInput, "d must be positive");
  const auto dim = static_cast<std::size_t>(n);
  IntMatrix b(dim, dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    b(i, i) = d;
    // (-1)^{n+1-i} i for the 1-based row index i
    const long row = static_cast<long>(i) + 1;
    b(i, dim - 1) = ((n + 1 - row) % 2 == 0) ? row : -row;
  }
  b(dim - 1, dim - 1) = 1;
  return {n, d, LatticeBasis(std::move(b))};
}

LatticeBasis ScaledCraigLattice::realize(int n) const {
  return craig_lattice(n, ipow(p, b)).basis.scaled(Int(ipow(p, a)));
}

bool is_g_stable(const LatticeBasis& l, const RepGenerators& g) {
  if (static_cast<std::size_t>(g.n) != l.dim())
    throw Error(ErrorKind::InvalidInput, "dimension mismatch between lattice and generators");
  for (const auto& gk : g.mats) {
    const IntMatrix image = gk * l.hnf();
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!l.contains(image.column(j))) return false;
  }
  return true;
}

bool scaled_inclusion(const ScaledCraigLattice& x, const ScaledCraigLattice& y) {
  if (x.p != y.p) throw Error(ErrorKind::InvalidInput, "lattices for different primes");
  return x.a >= y.a && x.a + x.b >= y.a + y.b;
}

ScaledCraigLattice scaled_intersect(const ScaledCraigLattice& x, const ScaledCraigLattice& y) {
  if (x.p != y.p) throw Error(ErrorKind::InvalidInput, "lattices for different primes");
  const int a = std::max(x.a, y.a);
  return {x.p, a, std::max(x.a + x.b, y.a + y.b) - a};
}

int scaled_index(const ScaledCraigLattice& x, const ScaledCraigLattice& y, int n) {
  if (!scaled_inclusion(y, x)) throw Error(ErrorKind::NotSublattice, "not-sublattice");
  return (y.a - x.a) * n + (y.b - x.b) * (n - 1);
}

std::vector<LatticeBasis> maximal_sublattices_p(const LatticeBasis& l, const RepGenerators& g,
                                                long p, const Limits& limits) {
  const auto mod = quotient_module(l, g, p);
  const auto subs = mod.submodules_containing(modp::Subspace{}, limits);
  std::vector<LatticeBasis> out;
  for (const auto& s : subs) {
    if (s.dim() == l.dim()) continue;
    const bool maximal = std::none_of(subs.begin(), subs.end(), [&](const modp::Subspace& t) {
      return t.dim() > s.dim() && t.dim() < l.dim() && mod.contains(t, s);
    });
    if (maximal) out.push_back(lift(l, s, p));
  }
  return sorted(std::move(out));
}

LatticeBasis rad_p(const LatticeBasis& l, const RepGenerators& g, long p, const Limits& limits) {
  LatticeBasis r = l;
  for (const auto& m : maximal_sublattices_p(l, g, p, limits)) r = lattice_intersect(r, m);
  return r;
}

std::vector<LatticeBasis> phi_p(const LatticeBasis& l, const RepGenerators& g, long p,
                                const Limits& limits) {
  const auto mod = quotient_module(l, g, p);
  const auto base = reduce(l, rad_p(l, g, p, limits), mod);
  std::vector<LatticeBasis> out;
  for (const auto& s : mod.submodules_containing(base, limits)) out.push_back(lift(l, s, p));
  return sorted(std::move(out));
}

std::vector<LatticeBasis> phi_p_class(const LatticeBasis& l, const RepGenerators& g, long p, int j,
                                      const Limits& limits) {
  const LatticeBasis model = craig_lattice(g.n, ipow(p, j)).basis;
  std::vector<LatticeBasis> out;
  for (auto& m : phi_p(l, g, p, limits))
    if (is_scalar_multiple(model, m)) out.push_back(std::move(m));
  return out;
}

long mu_p(const LatticeBasis& l, const RepGenerators& g, long p, const LatticeBasis& target,
          const Limits& limits) {
  const auto phi = phi_p(l, g, p, limits);
  if (std::find(phi.begin(), phi.end(), target) == phi.end())
    throw Error(ErrorKind::InvalidInput, "lattice is not in Phi_p(L)");
  const auto maxes = maximal_sublattices_p(l, g, p, limits);
  if (static_cast<int>(maxes.size()) > limits.max_maximal_for_mu)
    throw Error(ErrorKind::ScaleExceeded, "too many maximal sublattices for the Moebius sum");
  long mu = 0;
  const std::size_t subsets = std::size_t{1} << maxes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    LatticeBasis meet = l;
    int size = 0;
    for (std::size_t k = 0; k < maxes.size(); ++k)
      if (mask >> k & 1) {
        meet = lattice_intersect(meet, maxes[k]);
        ++size;
      }
    if (meet == target) mu += (size % 2) ? -1 : 1;
  }
  return mu;
}

std::map<int, std::vector<LatticeBasis>> enumerate_p_sublattices(const LatticeBasis& l,
                                                                 const RepGenerators& g, long p,
                                                                 int max_exp,
                                                                 const Limits& limits) {
  if (max_exp < 0) throw Error(ErrorKind::InvalidInput, "max_exp must be nonnegative");
  std::map<int, std::set<LatticeBasis>> levels;
  levels[0].insert(l);
  // Every proper sublattice of p-power index lies in a p-maximal one, so
  // chains of maximal sublattices reach all of them.
  for (int e = 0; e <= max_exp; ++e) {
    for (const auto& n : levels[e]) {
      for (auto& m : maximal_sublattices_p(n, g, p, limits)) {
        const int k = e + log_p(m.volume() / n.volume(), p);
        if (k <= max_exp) levels[k].insert(std::move(m));
      }
    }
  }
  std::map<int, std::vector<LatticeBasis>> out;
  for (int e = 0; e <= max_exp; ++e) out[e] = {levels[e].begin(), levels[e].end()};
  return out;
}

namespace {

// Depth-first HNF enumeration in int64 arithmetic. H is upper triangular
// in the coordinates of L, so span(h_0..h_j) = N cap W_j with
// W_j = span(e_0..e_j); a generator that maps W_j into itself must then
// stabilize that leading block, which prunes most partial bases early.
class HnfSearch {
public:
  HnfSearch(std::size_t n, std::vector<std::vector<std::vector<long>>> gens)
      : n_(n), gens_(std::move(gens)), h_(n, std::vector<long>(n, 0)) {
    const std::size_t k = gens_.size();
    preserves_.assign(k, std::vector<bool>(n, true));
    for (std::size_t g = 0; g < k; ++g)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j + 1; i < n; ++i)
          for (std::size_t l = 0; l <= j; ++l)
            if (gens_[g][i][l] != 0) preserves_[g][j] = false;
  }

  std::vector<std::vector<std::vector<long>>> run(long m) {
    found_.clear();
    diag_.assign(n_, 1);
    shapes(0, m);
    return std::move(found_);
  }

private:
  void shapes(std::size_t i, long rest) {
    if (i + 1 == n_) {
      diag_[i] = rest;
      fill(0);
      return;
    }
    for (long d = 1; d <= rest; ++d) {
      if (rest % d) continue;
      diag_[i] = d;
      shapes(i + 1, rest / d);
    }
  }

  void fill(std::size_t j) {
    if (j == n_) {
      found_.push_back(h_);
      return;
    }
    for (std::size_t i = 0; i < j; ++i) h_[i][j] = 0;
    h_[j][j] = diag_[j];
    while (true) {
      if (stable_block(j)) fill(j + 1);
      std::size_t i = 0;
      while (i < j && h_[i][j] == diag_[i] - 1) h_[i++][j] = 0;
      if (i == j) break;
      ++h_[i][j];
    }
  }

  bool stable_block(std::size_t j) const {
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      if (!preserves_[g][j]) continue;
      // earlier columns were already checked against a smaller block
      const std::size_t from = (j > 0 && preserves_[g][j - 1]) ? j : 0;
      for (std::size_t c = from; c <= j; ++c)
        if (!image_in_block(g, c, j)) return false;
    }
    return true;
  }

  bool image_in_block(std::size_t g, std::size_t c, std::size_t j) const {
    __int128 w[kMaxDim];
    for (std::size_t i = 0; i <= j; ++i) {
      __int128 acc = 0;
      for (std::size_t l = 0; l <= c; ++l) acc += static_cast<__int128>(gens_[g][i][l]) * h_[l][c];
      w[i] = acc;
    }
    for (std::size_t i = j + 1; i-- > 0;) {
      const __int128 piv = h_[i][i];
      if (w[i] % piv != 0) return false;
      const __int128 q = w[i] / piv;
      if (q == 0) continue;
      for (std::size_t r = 0; r <= i; ++r) w[r] -= q * h_[r][i];
    }
    return true;
  }

public:
  static constexpr std::size_t kMaxDim = 16;

private:
  std::size_t n_;
  std::vector<std::vector<std::vector<long>>> gens_;
  std::vector<std::vector<bool>> preserves_;
  std::vector<std::vector<long>> h_;
  std::vector<long> diag_;
  std::vector<std::vector<std::vector<long>>> found_;
};

}  // namespace

std::vector<LatticeBasis> enumerate_index_sublattices(const LatticeBasis& l,
                                                      const RepGenerators& g, long m,
                                                      const Limits& limits) {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "index must be positive");
  if (static_cast<std::uint64_t>(m) > limits.max_index)
    throw Error(ErrorKind::ScaleExceeded,
                "index " + std::to_string(m) + " exceeds the enumeration bound " +
                    std::to_string(limits.max_index));
  const std::size_t n = l.dim();
  if (n > HnfSearch::kMaxDim) throw Error(ErrorKind::ScaleExceeded, "dimension too large");

  std::vector<std::vector<std::vector<long>>> gens;
  for (const auto& gk : gens_in_basis(l, g)) {
    std::vector<std::vector<long>> r(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto v = to_long(gk(i, j));
        if (!v || *v > (1L << 20) || *v < -(1L << 20))
          throw Error(ErrorKind::ScaleExceeded, "generator entries too large for enumeration");
        r[i][j] = *v;
      }
    gens.push_back(std::move(r));
  }

  std::vector<LatticeBasis> out;
  for (const auto& h : HnfSearch(n, std::move(gens)).run(m)) {
    IntMatrix hm(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) hm(i, j) = h[i][j];
    out.emplace_back(hnf(l.hnf() * hm));
  }
  return sorted(std::move(out));
}

ScaledCraigLattice classify_sublattice(const LatticeBasis& sub, int n, long p) {
  if (sub.dim() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  Int t = content(sub.hnf());
  const int a = log_p(t, p);
  IntMatrix prim = sub.hnf();
  for (std::size_t i = 0; i < prim.rows(); ++i)
    for (std::size_t j = 0; j < prim.cols(); ++j)
      mpz_divexact(prim(i, j).get_mpz_t(), prim(i, j).get_mpz_t(), t.get_mpz_t());
  const int v = valuation(n + 1, p);
  for (int b = 0; b <= v; ++b)
    if (craig_lattice(n, ipow(p, b)).basis.hnf() == prim) return {p, a, b};
  throw Error(ErrorKind::Internal, "sublattice is not of the form p^a L(p^b)");
}

LatticeBasis craig_decomposition(int n, long d, bool only_primes_of_n_plus_1) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be at least 2");
  if (d < 1 || (n + 1) % d != 0) throw Error(ErrorKind::NotALattice, "not-a-lattice: d must divide n+1");
  Int m = 1;
  for (long k = 2; k <= n + 1; ++k) m *= k;
  m /= n;
  std::vector<LatticeBasis> terms;
  // every prime factor of m is at most n+1
  for (long p : primes_up_to(n + 1)) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    if (only_primes_of_n_plus_1 && (n + 1) % p != 0) continue;
    Int mp = m;
    while (mpz_divisible_ui_p(mp.get_mpz_t(), static_cast<unsigned long>(p))) mp /= p;
    terms.push_back(craig_lattice(n, ipow(p, valuation(d, p))).basis.scaled(mp));
  }
  if (terms.empty()) throw Error(ErrorKind::InvalidInput, "n+1 has no prime divisor");
  LatticeBasis sum = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) sum = lattice_sum(sum, terms[k]);
  return sum;
}

}  // namespace hookzeta
