#pragma once

// Craig's lattices L(d) and the sublattice structure of p^a L(p^b):
// closed forms for inclusion, intersection and index, maximal sublattices,
// p-radicals, the Moebius function, and two independent enumerations of
// G-stable sublattices (breadth-first over maximal sublattices, and every
// HNF of a given determinant filtered by stability).

#include <compare>
#include <map>
#include <vector>

#include "hookzeta/exactmat.hpp"
#include "hookzeta/limits.hpp"
#include "hookzeta/specht.hpp"

namespace hookzeta {

struct CraigLattice {
  int n = 0;
  long d = 1;
  LatticeBasis basis;
};

/// Basis columns d e_1, ..., d e_{n-1}, v with
/// v = e_n + sum_i (-1)^{n+1-i} i e_i. Built for every d >= 1; stability
/// (d | n+1) is checked separately.
CraigLattice craig_lattice(int n, long d);

/// p^a L(p^b) as a Z-module. The closed forms below hold for all a, b >= 0;
/// the lattice is G-stable iff b <= v_p(n+1).
struct ScaledCraigLattice {
  long p = 2;
  int a = 0;
  int b = 0;

  LatticeBasis realize(int n) const;
  friend auto operator<=>(const ScaledCraigLattice&, const ScaledCraigLattice&) = default;
};

/// Every generator maps the lattice into itself (B^{-1} g B integral).
bool is_g_stable(const LatticeBasis& l, const RepGenerators& g);

/// x is contained in y.
bool scaled_inclusion(const ScaledCraigLattice& x, const ScaledCraigLattice& y);
ScaledCraigLattice scaled_intersect(const ScaledCraigLattice& x, const ScaledCraigLattice& y);
/// log_p |x : y| for y contained in x. Throws Error(NotSublattice) otherwise.
int scaled_index(const ScaledCraigLattice& x, const ScaledCraigLattice& y, int n);

/// G-stable N with pL <= N < L and L/N simple, sorted by HNF.
std::vector<LatticeBasis> maximal_sublattices_p(const LatticeBasis& l, const RepGenerators& g,
                                                long p, const Limits& limits = default_limits());

LatticeBasis rad_p(const LatticeBasis& l, const RepGenerators& g, long p,
                   const Limits& limits = default_limits());

/// All G-stable lattices between rad_p(L) and L, sorted by HNF.
std::vector<LatticeBasis> phi_p(const LatticeBasis& l, const RepGenerators& g, long p,
                                const Limits& limits = default_limits());

/// Members of phi_p(L) isomorphic (scalar multiple) to L(p^j).
std::vector<LatticeBasis> phi_p_class(const LatticeBasis& l, const RepGenerators& g, long p, int j,
                                      const Limits& limits = default_limits());

/// Sum of (-1)^|J| over sets J of p-maximal sublattices whose intersection
/// is N (the empty intersection being L). N must lie in phi_p(L).
long mu_p(const LatticeBasis& l, const RepGenerators& g, long p, const LatticeBasis& target,
          const Limits& limits = default_limits());

/// G-stable sublattices of index p^j, 0 <= j <= max_exp, keyed by j. Every
/// exponent in range has an entry (possibly empty).
std::map<int, std::vector<LatticeBasis>> enumerate_p_sublattices(
    const LatticeBasis& l, const RepGenerators& g, long p, int max_exp,
    const Limits& limits = default_limits());

/// Every G-stable sublattice of index exactly m, by running through all
/// HNFs of determinant m (in the coordinates of L) with stability checks
/// applied as soon as they are decidable on a leading block.
std::vector<LatticeBasis> enumerate_index_sublattices(const LatticeBasis& l,
                                                      const RepGenerators& g, long m,
                                                      const Limits& limits = default_limits());

/// The unique (a, b) with sub = p^a L(p^b), b <= v_p(n+1).
ScaledCraigLattice classify_sublattice(const LatticeBasis& sub, int n, long p);

/// sum over p | m of m_p L(p^{v_p(d)}), m = (n+1)!/n, m_p = m / p^{v_p(m)}.
/// This equals L(d). Restricting the sum to p | n+1 gives L(d) only when
/// every prime factor of m divides n+1 (n = 2, 3, 5); otherwise the result
/// is a proper sublattice.
LatticeBasis craig_decomposition(int n, long d, bool only_primes_of_n_plus_1 = false);

}  // namespace hookzeta
