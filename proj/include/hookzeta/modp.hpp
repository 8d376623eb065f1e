#pragma once

// Submodules of F_p G-modules given by generator matrices, found by
// spinning vectors under the generators. No meataxe: every submodule is a
// sum of cyclic ones, and the cyclic ones come from spinning one
// representative per projective point of the quotient being searched.

#include <compare>
#include <cstdint>
#include <vector>

#include "hookzeta/limits.hpp"

namespace hookzeta::modp {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;  // row-major, square

/// Subspace of F_p^n in reduced row echelon form (unique per subspace).
struct Subspace {
  std::vector<Vec> rows;

  std::size_t dim() const noexcept { return rows.size(); }
  friend auto operator<=>(const Subspace&, const Subspace&) = default;
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

class Module {
public:
  Module(std::int64_t p, std::size_t n, std::vector<Mat> gens);

  std::int64_t prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return n_; }

  /// Smallest submodule containing `seed` and the vectors `extra`.
  Subspace spin(const Subspace& seed, const std::vector<Vec>& extra) const;

  /// All submodules W with base <= W, sorted. `base` must be a submodule.
  std::vector<Subspace> submodules_containing(const Subspace& base,
                                              const Limits& limits = default_limits()) const;

  /// Subspace span(a) + span(b) (no closure under generators).
  Subspace sum(const Subspace& a, const Subspace& b) const;

  bool contains(const Subspace& big, const Subspace& small) const;

private:
  // Reduces v against s; inserts it (keeping RREF) if it is not in s.
  bool insert(Subspace& s, Vec v) const;
  Vec apply(const Mat& g, const Vec& v) const;

  std::int64_t p_;
  std::size_t n_;
  std::vector<Mat> gens_;
};

}  // namespace hookzeta::modp
