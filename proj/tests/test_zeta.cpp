#include <doctest.h>

#include <random>

#include "hookzeta/arith.hpp"
#include "hookzeta/craig.hpp"
#include "hookzeta/error.hpp"
#include "hookzeta/zeta.hpp"

using namespace hookzeta;

namespace {

const IntPoly X = IntPoly::monomial(1);

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Int> enumerated_counts(int n, long d, long p, int max_exp) {
  std::vector<Int> out;
  for (const auto& [e, v] : enumerate_p_sublattices(craig_lattice(n, d).basis, craig_generators(n), p, max_exp))
    out.emplace_back(static_cast<unsigned long>(v.size()));
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPoly a{1, 1};
  CHECK(a * a == IntPoly{1, 2, 1});
  CHECK(a - a == IntPoly{});
  CHECK(IntPoly{}.degree() == -1);
  CHECK((IntPoly{1} - IntPoly::monomial(3)).to_string() == "1 - X^3");
  CHECK(IntPoly{0, 0, 0}.is_zero());
}

TEST_CASE("the tridiagonal matrix A") {
  const auto a = build_A(2, 3);
  CHECK(a == PolyMatrix{{IntPoly{1}, IntPoly{0, -1}}, {IntPoly{0, -1}, IntPoly{1}}});
  const auto a3 = build_A(3, 2);
  const IntPoly x2 = IntPoly::monomial(2, -1);
  CHECK(a3 == PolyMatrix{{IntPoly{1}, x2, IntPoly{}},
                         {IntPoly{0, -1}, IntPoly{1, 0, 0, 1}, x2},
                         {IntPoly{}, IntPoly{0, -1}, IntPoly{1}}});
  for (int n = 2; n <= 10; ++n)
    for (long p : prime_divisors(n + 1)) {
      if (valuation(n + 1, p) != 1) continue;
      const auto m = build_A(n, p);
      CHECK(m[0][0] * m[1][1] - m[0][1] * m[1][0] == IntPoly{1} - IntPoly::monomial(n));
    }
  CHECK_THROWS_AS(build_A(3, 3), Error);
}

TEST_CASE("the matrix B of partial zeta functions") {
  const auto b = build_B(2, 3);
  CHECK(b == PolyMatrix{{IntPoly{1}, X}, {X, IntPoly{1}}});
  const auto b3 = build_B(3, 2);
  CHECK(b3[0][2] == IntPoly::monomial(4));
  CHECK(b3[2][0] == IntPoly::monomial(2));
  for (std::size_t i = 0; i < b3.size(); ++i) CHECK(b3[i][i] == IntPoly{1});
}

TEST_CASE("A inverts B") {
  CHECK(verify_inverse(build_A(2, 3), build_B(2, 3), 2));
  CHECK(verify_inverse(build_A(5, 2), build_B(5, 2), 5));
  CHECK(verify_inverse(build_A(5, 3), build_B(5, 3), 5));
  auto bad = build_A(5, 2);
  bad[0][1] = IntPoly::monomial(4);
  CHECK_FALSE(verify_inverse(bad, build_B(5, 2), 5));
  for (int n = 2; n <= 10; ++n)
    for (long p : prime_divisors(n + 1)) CHECK(verify_inverse(build_A(n, p), build_B(n, p), n));
}

TEST_CASE("local factors") {
  CHECK(local_factor(3, 2, 1).numerator == IntPoly{1, 1, 1});
  CHECK(local_factor(3, 2, 0).numerator == IntPoly{1, 0, 1, 0, 1});
  CHECK(local_factor(2, 3, 1).numerator == IntPoly{1, 1});
  CHECK_THROWS_AS(local_factor(3, 2, 3), Error);
  // row sums of B
  for (int n = 2; n <= 10; ++n)
    for (long p : prime_divisors(n + 1)) {
      const auto b = build_B(n, p);
      for (std::size_t i = 0; i < b.size(); ++i) {
        IntPoly sum;
        for (const auto& e : b[i]) sum = sum + e;
        CHECK(sum == local_factor(n, p, static_cast<int>(i)).numerator);
      }
    }
}

TEST_CASE("series expansion") {
  CHECK(series_expand({3, IntPoly{1, 1, 1}}, 6) == ints({1, 1, 1, 1, 1, 1, 1}));
  CHECK(series_expand({3, IntPoly{1, 0, 1, 0, 1}}, 6) == ints({1, 0, 1, 1, 1, 1, 1}));
  CHECK(series_expand({4, IntPoly{1}}, 8) == ints({1, 0, 0, 0, 1, 0, 0, 0, 1}));
  for (int n = 2; n <= 10; ++n)
    for (long p : prime_divisors(n + 1))
      for (int i = 0; i <= valuation(n + 1, p); ++i) {
        const auto f = local_factor(n, p, i);
        const auto s = series_expand(f, 30);
        CHECK(s[0] == 1);
        for (const auto& c : s) CHECK(c >= 0);
      }
}

TEST_CASE("theorem factors") {
  CHECK(theorem_factor(3, 2, 1) == IntPoly{1, 0, 1, 0, 1});
  CHECK(theorem_factor(3, 2, 2) == IntPoly{1, 1, 1});
  CHECK(theorem_factor(3, 2, 4) == IntPoly{1, 1, 1});
  for (int n = 2; n <= 10; ++n)
    for (long d : divisors(n + 1))
      for (long p : prime_divisors(n + 1))
        CHECK(theorem_factor(n, p, d) == local_factor(n, p, valuation(d, p)).numerator);
}

TEST_CASE("global zeta functions") {
  const auto z = global_zeta(2, 1);
  CHECK(z.riemann_exponent == 2);
  CHECK(z.local_factors.at(3) == IntPoly{1, 1});
  CHECK(global_zeta(3, 4).local_factors.at(2) == IntPoly{1, 1, 1});
  const auto z5 = global_zeta(5, 1);
  CHECK(z5.local_factors.at(2) == IntPoly{1, 0, 0, 0, 1});
  CHECK(z5.local_factors.at(3) == IntPoly{1, 0, 0, 0, 1});
  CHECK(z5.local_factors.size() == 2);
  CHECK_THROWS_AS(global_zeta(3, 3), Error);
  try {
    global_zeta(3, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotALattice);
  }
  CHECK(zeta_to_latex(global_zeta(3, 4)) == "\\zeta_{\\mathbf{Q}}(3s)\\,(1+2^{-s}+4^{-s})");
  CHECK(zeta_to_text(global_zeta(2, 1)) == "zeta_Q(2s) * (1 + 3^(-s))");
  const auto j = zeta_to_json(global_zeta(2, 1));
  CHECK(j.dump() == R"({"d":1,"local_factors":[{"coeffs":[1,1],"p":3}],"n":2,"riemann_exponent":2})");
}

TEST_CASE("Specht zeta functions") {
  CHECK(specht_zeta(2).local_factors.at(3) == IntPoly{1, 1});
  CHECK(specht_zeta(3).local_factors.at(2) == IntPoly{1, 1, 1});
  CHECK(specht_zeta(4).local_factors.at(5) == IntPoly{1, 1});
  CHECK(specht_zeta(4).riemann_exponent == 4);
}

TEST_CASE("Dirichlet coefficients") {
  const auto z = global_zeta(2, 1);
  CHECK(dirichlet_coeff(z, 1) == 1);
  CHECK(dirichlet_coeff(z, 9) == 1);
  CHECK(dirichlet_coeff(z, 12) == 1);
  CHECK(dirichlet_coeff(z, 2) == 0);
  std::vector<long> nonzero;
  for (long m = 1; m <= 12; ++m)
    if (dirichlet_coeff(z, static_cast<std::uint64_t>(m)) != 0) nonzero.push_back(m);
  CHECK(nonzero == std::vector<long>{1, 3, 4, 9, 12});
  CHECK_THROWS_AS(dirichlet_coeff(z, 0), Error);
}

TEST_CASE("property: Dirichlet coefficients are multiplicative") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> pick(1, 5000);
  int tested = 0;
  while (tested < 100) {
    const std::uint64_t a = pick(rng), b = pick(rng);
    if (std::gcd(a, b) != 1) continue;
    const int n = 2 + tested % 6;
    const auto ds = divisors(n + 1);
    const auto z = global_zeta(n, ds[static_cast<std::size_t>(tested) % ds.size()]);
    CHECK(dirichlet_coeff(z, a * b) == dirichlet_coeff(z, a) * dirichlet_coeff(z, b));
    ++tested;
  }
}

TEST_CASE("Dirichlet coefficients count sublattices") {
  for (int n : {2, 3}) {
    const auto g = craig_generators(n);
    for (long d : divisors(n + 1)) {
      const auto z = global_zeta(n, d);
      for (long m = 1; m <= 40; ++m)
        CHECK(dirichlet_coeff(z, static_cast<std::uint64_t>(m)) ==
              Int(static_cast<unsigned long>(
                  enumerate_index_sublattices(craig_lattice(n, d).basis, g, m).size())));
    }
  }
}

TEST_CASE("local factor series count p-power sublattices") {
  for (int n = 2; n <= 5; ++n)
    for (long p : prime_divisors(n + 1))
      for (int i = 0; i <= valuation(n + 1, p); ++i)
        CHECK(series_expand(local_factor(n, p, i), 8) == enumerated_counts(n, ipow(p, i), p, 8));
}

TEST_CASE("the Specht lattice follows the full local polynomial") {
  for (int n : {2, 3, 5}) {
    for (long p : prime_divisors(n + 1)) {
      const auto counts = enumerated_counts(n, n + 1, p, 2 * n);
      CHECK(series_expand({n, theorem_factor(n, p, n + 1)}, 2 * n) == counts);
      CHECK(series_expand({n, geometric_factor(n, p)}, 2 * n) != counts);
    }
  }
}
