#pragma once

#include <cstdint>

namespace hookzeta {

// Desk-scale bounds. Exceeding one raises Error(ScaleExceeded); nothing is
// ever silently truncated.
struct Limits {
  // polytabloid expansion has n! terms per tableau
  int oracle_max_n = 7;
  // direct enumeration of all HNFs of a given determinant
  std::uint64_t max_index = 500;
  // p^n vectors are spun when enumerating submodules of L/pL
  std::uint64_t max_spin = 1'000'000;
  // subsets of maximal sublattices visited by the Moebius function
  int max_maximal_for_mu = 16;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace hookzeta
