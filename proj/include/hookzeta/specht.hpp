#pragma once

// Two integral realizations of the n-dimensional hook representation
// (2,1^{n-1}) of S_{n+1}: Craig's coordinates and the Specht (polytabloid)
// basis, plus the intertwiner between them.

#include <array>
#include <compare>
#include <map>
#include <vector>

#include "hookzeta/exactmat.hpp"
#include "hookzeta/limits.hpp"

namespace hookzeta {

/// Matrices of the adjacent transpositions s_1..s_n acting on column
/// vectors; mats[k-1] is the action of (k k+1).
struct RepGenerators {
  int n = 0;
  std::vector<IntMatrix> mats;
};

/// Standard tableau of hook shape: `t` sits in box (1,2), the first column
/// holds {1..n+1} \ {t} in increasing order.
struct HookTableau {
  int n = 0;
  int t = 2;
};

/// Row one is an unordered pair (stored sorted), rows 2..n are singletons.
struct Tabloid {
  std::array<int, 2> row_one{};
  std::vector<int> singles;

  friend auto operator<=>(const Tabloid&, const Tabloid&) = default;
  friend bool operator==(const Tabloid&, const Tabloid&) = default;
};

using TabloidVector = std::map<Tabloid, long>;

/// s_k = E^{k,k-1} + 2E^{k,k} + E^{k,k+1} - I_n. Requires n >= 2.
RepGenerators craig_generators(int n);

/// Involutions, braid relations (s_k s_{k+1})^3 = 1 and far commutation.
bool verify_coxeter(const RepGenerators& g);

/// Signed tabloid expansion of the polytabloid e_T (n! terms).
TabloidVector polytabloid(const HookTableau& t, const Limits& limits = default_limits());

/// Action matrices in the basis (e_{T_2}, ..., e_{T_{n+1}}) obtained by
/// permuting tabloids and re-expressing the result in the polytabloid basis.
RepGenerators specht_generators_oracle(int n, const Limits& limits = default_limits());

/// Closed-form hook action; agrees with the oracle wherever both run.
RepGenerators specht_generators_closed(int n);

/// Primitive P with b(s_k) P = P a(s_k) for all k, first nonzero entry
/// (row-major) positive. Throws Error(NotEquivalent) unless the solution
/// space is one-dimensional.
IntMatrix intertwiner(const RepGenerators& a, const RepGenerators& b);

/// The divisor d of n+1 for which the Specht lattice, transported into
/// Craig coordinates, is a scalar multiple of L(d).
long identify_specht_lattice(int n);

/// Specht lattice P Z^n in Craig coordinates.
LatticeBasis specht_lattice_in_craig_coordinates(int n);

}  // namespace hookzeta
