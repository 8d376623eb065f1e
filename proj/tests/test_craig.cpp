#include <doctest.h>

#include <functional>
#include <set>

#include "hookzeta/arith.hpp"
#include "hookzeta/craig.hpp"
#include "hookzeta/error.hpp"

using namespace hookzeta;

namespace {

LatticeBasis L(int n, long d) { return craig_lattice(n, d).basis; }
LatticeBasis scaledL(int n, long p, int a, int b) { return ScaledCraigLattice{p, a, b}.realize(n); }

std::vector<std::size_t> counts(const std::map<int, std::vector<LatticeBasis>>& levels) {
  std::vector<std::size_t> out;
  for (const auto& [e, v] : levels) out.push_back(v.size());
  return out;
}

// Test-only oracle: every upper triangular reduced HNF of determinant m in
// the coordinates of L, kept when stable. No pruning, bignum arithmetic.
std::vector<LatticeBasis> naive_index_sublattices(const LatticeBasis& l, const RepGenerators& g,
                                                  long m) {
  const std::size_t n = l.dim();
  std::vector<LatticeBasis> out;
  std::vector<long> diag(n);
  IntMatrix h(n, n);
  std::function<void(std::size_t, std::size_t)> entries = [&](std::size_t i, std::size_t j) {
    if (j == n) {
      LatticeBasis cand(hnf(l.hnf() * h));
      if (is_g_stable(cand, g)) out.push_back(cand);
      return;
    }
    if (i == j) {
      h(j, j) = diag[j];
      entries(0, j + 1);
      return;
    }
    for (long x = 0; x < diag[i]; ++x) {
      h(i, j) = x;
      entries(i + 1, j);
    }
  };
  std::function<void(std::size_t, long)> shapes = [&](std::size_t i, long rest) {
    if (i + 1 == n) {
      diag[i] = rest;
      h = IntMatrix(n, n);
      entries(0, 0);
      return;
    }
    for (long d = 1; d <= rest; ++d)
      if (rest % d == 0) {
        diag[i] = d;
        shapes(i + 1, rest / d);
      }
  };
  shapes(0, m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Craig lattice bases") {
  CHECK(L(3, 2).basis() == IntMatrix{{2, 0, -1}, {0, 2, 2}, {0, 0, 1}});
  CHECK(L(2, 1).hnf() == IntMatrix::identity(2));
  CHECK(L(2, 3).basis() == IntMatrix{{3, 1}, {0, 1}});
  for (int n = 2; n <= 7; ++n)
    for (long d = 1; d <= 6; ++d) CHECK(det(L(n, d).basis()) == Int(ipow(d, n - 1)));
}

TEST_CASE("stability of L(d) is exactly d | n+1") {
  CHECK(is_g_stable(L(2, 3), craig_generators(2)));
  CHECK_FALSE(is_g_stable(L(2, 2), craig_generators(2)));
  for (int n = 2; n <= 8; ++n) {
    const auto g = craig_generators(n);
    for (long d = 1; d <= 2 * (n + 1); ++d) CHECK(is_g_stable(L(n, d), g) == ((n + 1) % d == 0));
  }
  CHECK(is_g_stable(scaledL(3, 2, 3, 2), craig_generators(3)));
}

TEST_CASE("closed forms for p^a L(p^b)") {
  CHECK(scaled_inclusion({2, 1, 0}, {2, 0, 1}));
  CHECK_FALSE(scaled_inclusion({2, 0, 0}, {2, 1, 0}));
  CHECK_FALSE(scaled_inclusion({2, 0, 2}, {2, 1, 0}));
  CHECK(scaled_intersect({3, 1, 1}, {3, 1, 1}) == ScaledCraigLattice{3, 1, 1});
  CHECK(scaled_intersect({2, 0, 3}, {2, 1, 1}) == ScaledCraigLattice{2, 1, 2});
  CHECK(scaled_intersect({2, 0, 1}, {2, 1, 0}) == ScaledCraigLattice{2, 1, 0});
  CHECK(scaled_index({3, 0, 0}, {3, 0, 1}, 2) == 1);
  CHECK(scaled_index({3, 0, 0}, {3, 1, 0}, 5) == 5);
  CHECK(scaled_index({2, 0, 2}, {2, 1, 1}, 3) == 1);
  CHECK_THROWS_AS(scaled_index({2, 1, 0}, {2, 0, 0}, 3), Error);
}

TEST_CASE("closed forms agree with generic lattice operations") {
  for (int n : {2, 3, 4, 5}) {
    for (long p : prime_divisors(n + 1)) {
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
          for (int a2 = 0; a2 <= 3; ++a2)
            for (int b2 = 0; b2 <= 3; ++b2) {
              const ScaledCraigLattice x{p, a, b}, y{p, a2, b2};
              const auto lx = x.realize(n), ly = y.realize(n);
              CHECK(scaled_inclusion(x, y) == is_sublattice(lx, ly));
              CHECK(scaled_intersect(x, y).realize(n) == lattice_intersect(lx, ly));
              if (scaled_inclusion(x, y))
                CHECK(int_pow(p, static_cast<unsigned long>(scaled_index(y, x, n))) == lattice_index(ly, lx));
            }
    }
  }
}

TEST_CASE("maximal sublattices, radical and Phi_p") {
  // n = 7, p = 2: v = 3, so L(1), L(2), L(4), L(8) cover all three cases
  const int n = 7;
  const long p = 2;
  const auto g = craig_generators(n);
  CHECK(maximal_sublattices_p(L(n, 1), g, p) == std::vector{L(n, 2)});
  CHECK(maximal_sublattices_p(L(n, 8), g, p) == std::vector{scaledL(n, p, 1, 2)});
  auto mid = maximal_sublattices_p(L(n, 4), g, p);
  std::vector<LatticeBasis> expect{L(n, 8), scaledL(n, p, 1, 1)};
  std::sort(expect.begin(), expect.end());
  CHECK(mid == expect);
  CHECK(lattice_index(L(n, 4), L(n, 8)) == Int(ipow(2, n - 1)));
  CHECK(lattice_index(L(n, 4), scaledL(n, p, 1, 1)) == 2);

  CHECK(rad_p(L(n, 1), g, p) == L(n, 2));
  CHECK(rad_p(L(n, 4), g, p) == scaledL(n, p, 1, 2));
  CHECK(rad_p(L(n, 8), g, p) == scaledL(n, p, 1, 2));

  auto sorted = [](std::vector<LatticeBasis> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(phi_p(L(n, 1), g, p) == sorted({L(n, 1), L(n, 2)}));
  CHECK(phi_p(L(n, 2), g, p) ==
        sorted({scaledL(n, p, 1, 0), L(n, 2), scaledL(n, p, 1, 1), L(n, 4)}));
  CHECK(phi_p(L(n, 8), g, p) == sorted({scaledL(n, p, 1, 2), L(n, 8)}));

  CHECK(phi_p_class(L(n, 1), g, p, 1) == std::vector{L(n, 2)});
  CHECK(phi_p_class(L(n, 1), g, p, 2).empty());
  CHECK(phi_p_class(L(n, 2), g, p, 1) == sorted({L(n, 2), scaledL(n, p, 1, 1)}));
  CHECK(phi_p_class(L(n, 2), g, p, 0) == std::vector{scaledL(n, p, 1, 0)});

  CHECK(mu_p(L(n, 2), g, p, L(n, 2)) == 1);
  CHECK(mu_p(L(n, 2), g, p, L(n, 4)) == -1);
  CHECK(mu_p(L(n, 2), g, p, scaledL(n, p, 1, 1)) == 1);
  CHECK_THROWS_AS(mu_p(L(n, 2), g, p, scaledL(n, p, 2, 0)), Error);
}

TEST_CASE("trivial primes have irreducible reductions") {
  for (int n : {2, 3, 4, 6}) {
    const auto g = craig_generators(n);
    for (long p : primes_up_to(n + 1)) {
      if ((n + 1) % p == 0) continue;
      for (long d : divisors(n + 1))
        CHECK(maximal_sublattices_p(L(n, d), g, p) == std::vector{L(n, d).scaled(p)});
    }
  }
}

TEST_CASE("breadth-first p-power enumeration") {
  CHECK(counts(enumerate_p_sublattices(L(2, 1), craig_generators(2), 3, 4)) ==
        std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(counts(enumerate_p_sublattices(L(3, 1), craig_generators(3), 2, 6)) ==
        std::vector<std::size_t>{1, 0, 1, 1, 1, 1, 1});
  CHECK(counts(enumerate_p_sublattices(L(4, 1), craig_generators(4), 2, 4)) ==
        std::vector<std::size_t>{1, 0, 0, 0, 1});
  // completeness: every lattice is some p^a L(p^b), and every such lattice
  // within range shows up
  for (int n : {3, 5, 7}) {
    const auto g = craig_generators(n);
    for (long p : prime_divisors(n + 1)) {
      const int max_exp = 2 * n;
      const auto levels = enumerate_p_sublattices(L(n, 1), g, p, max_exp);
      std::set<ScaledCraigLattice> seen;
      for (const auto& [e, v] : levels)
        for (const auto& lat : v) {
          const auto c = classify_sublattice(lat, n, p);
          CHECK(c.a * n + c.b * (n - 1) == e);
          seen.insert(c);
        }
      const int v = valuation(n + 1, p);
      for (int a = 0; a <= max_exp; ++a)
        for (int b = 0; b <= v; ++b)
          if (a * n + b * (n - 1) <= max_exp) CHECK(seen.count({p, a, b}) == 1);
    }
  }
}

TEST_CASE("direct HNF enumeration") {
  const auto g2 = craig_generators(2);
  CHECK(enumerate_index_sublattices(L(2, 1), g2, 1) == std::vector{L(2, 1)});
  CHECK(enumerate_index_sublattices(L(2, 1), g2, 9) == std::vector{L(2, 1).scaled(3)});
  CHECK(enumerate_index_sublattices(L(2, 1), g2, 2).empty());
  CHECK_THROWS_AS(enumerate_index_sublattices(L(2, 1), g2, 501), Error);
  CHECK_THROWS_AS(enumerate_index_sublattices(L(2, 2), g2, 4), Error);
}

TEST_CASE("pruned HNF enumeration matches unpruned brute force") {
  struct Case {
    int n;
    long max_m;
  };
  for (const auto [n, max_m] : {Case{2, 40}, Case{3, 16}, Case{4, 8}, Case{5, 4}}) {
    const auto g = craig_generators(n);
    for (long d : divisors(n + 1))
      for (long m = 1; m <= max_m; ++m)
        CHECK(enumerate_index_sublattices(L(n, d), g, m) == naive_index_sublattices(L(n, d), g, m));
  }
  // the Specht lattice uses a non-triangular basis
  const auto spe = specht_lattice_in_craig_coordinates(3);
  for (long m = 1; m <= 16; ++m)
    CHECK(enumerate_index_sublattices(spe, craig_generators(3), m) ==
          naive_index_sublattices(spe, craig_generators(3), m));
}

TEST_CASE("the two enumerations agree") {
  for (int n : {2, 3, 4}) {
    const auto g = craig_generators(n);
    for (long p : {2L, 3L}) {
      for (long d : divisors(n + 1)) {
        const int max_exp = p == 2 ? 6 : 4;
        const auto bfs = enumerate_p_sublattices(L(n, d), g, p, max_exp);
        for (const auto& [e, v] : bfs) CHECK(v == enumerate_index_sublattices(L(n, d), g, ipow(p, e)));
      }
    }
  }
}

TEST_CASE("classification of sublattices") {
  CHECK(classify_sublattice(L(2, 1).scaled(3), 2, 3) == ScaledCraigLattice{3, 1, 0});
  CHECK(classify_sublattice(L(2, 3), 2, 3) == ScaledCraigLattice{3, 0, 1});
  CHECK(classify_sublattice(L(3, 2).scaled(2), 3, 2) == ScaledCraigLattice{2, 1, 1});
  CHECK_THROWS_AS(classify_sublattice(L(2, 1).scaled(2), 2, 3), Error);
}

TEST_CASE("L(d) decomposes over the primes dividing n+1") {
  // n = 5: m = 6!/5 = 144, m_2 = 9, m_3 = 16
  CHECK(lattice_sum(L(5, 1).scaled(9), L(5, 1).scaled(16)) == L(5, 1));
  for (int n = 2; n <= 8; ++n)
    for (long d : divisors(n + 1)) CHECK(craig_decomposition(n, d) == L(n, d));
  // over p | n+1 only, the sum is L(d) exactly when m has no other primes
  for (int n = 2; n <= 8; ++n) {
    const bool exact = n == 2 || n == 3 || n == 5;
    for (long d : divisors(n + 1)) {
      const auto partial = craig_decomposition(n, d, true);
      CHECK((partial == L(n, d)) == exact);
      CHECK(is_sublattice(partial, L(n, d)));
    }
  }
  CHECK(craig_decomposition(4, 1, true) == L(4, 1).scaled(6));
  CHECK_THROWS_AS(craig_decomposition(4, 2), Error);
}
