#include "hookzeta/verify.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hookzeta/arith.hpp"
#include "hookzeta/craig.hpp"
#include "hookzeta/error.hpp"
#include "hookzeta/specht.hpp"
#include "hookzeta/zeta.hpp"

namespace hookzeta {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

class Check {
public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    ++failed_;
    if (failures_.size() < kMaxListedFailures) failures_.push_back(what);
  }
  void skip(const std::string& what) { skipped_.push_back(what); }

  nlohmann::json to_json() const {
    nlohmann::json j{{"name", name_}, {"passed", failed_ == 0}, {"cases", cases_},
                     {"failures", failures_}};
    if (!skipped_.empty()) j["skipped"] = skipped_;
    return j;
  }
  bool passed() const { return failed_ == 0; }
  const std::string& name() const { return name_; }

private:
  std::string name_;
  long cases_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> skipped_;
};

std::string tag(int n) { return "n=" + std::to_string(n); }
std::string tag(int n, long p) { return tag(n) + " p=" + std::to_string(p); }
std::string tag(int n, long p, int i) { return tag(n, p) + " i=" + std::to_string(i); }

std::vector<std::size_t> level_counts(const std::map<int, std::vector<LatticeBasis>>& levels) {
  std::vector<std::size_t> out;
  for (const auto& [e, v] : levels) out.push_back(v.size());
  return out;
}

std::vector<std::size_t> to_sizes(const std::vector<Int>& v) {
  std::vector<std::size_t> out;
  for (const auto& c : v) out.push_back(static_cast<std::size_t>(c.get_ui()));
  return out;
}

std::vector<LatticeBasis> sorted(std::vector<LatticeBasis> v) {
  std::sort(v.begin(), v.end());
  return v;
}

class Runner {
public:
  explicit Runner(const VerifyOptions& o) : opt_(o), rng_(o.seed) {}

  nlohmann::json run() {
    for (int n = 2; n <= opt_.n_max; ++n) gens_.push_back(generators(n));
    section("Coxeter relations", [&](Check& c) { coxeter(c); });
    section("Specht action", [&](Check& c) { specht_action(c); });
    section("Specht identification", [&](Check& c) { specht_identification(c); });
    section("unique p-maximal Specht sublattice", [&](Check& c) { specht_maximal(c); });
    section("stability of L(d)", [&](Check& c) { stability(c); });
    section("inclusion, intersection and index formulas", [&](Check& c) { closed_forms(c); });
    section("maximal sublattices", [&](Check& c) { structure(c, Part::Maximal); });
    section("p-radical", [&](Check& c) { structure(c, Part::Radical); });
    section("Phi_p", [&](Check& c) { structure(c, Part::Phi); });
    section("Phi_p isomorphism classes", [&](Check& c) { structure(c, Part::Classes); });
    section("Moebius matrix", [&](Check& c) { moebius(c); });
    section("Solomon inversion", [&](Check& c) { inversion(c); });
    section("local factors vs enumeration", [&](Check& c) { local_series(c); });
    section("classification of p-power sublattices", [&](Check& c) { classification(c); });
    section("trivial primes", [&](Check& c) { trivial_primes(c); });
    section("decomposition over primes", [&](Check& c) { decomposition(c); });
    section("global coefficients vs brute force", [&](Check& c) { coefficients(c); });
    section("multiplicativity", [&](Check& c) { multiplicativity(c); });
    section("HNF invariance", [&](Check& c) { hnf_invariance(c); });
    section("index multiplicativity", [&](Check& c) { index_chains(c); });
    nlohmann::json erratum;
    section("Specht local factor", [&](Check& c) { erratum = specht_local_factor(c); });

    nlohmann::json checks = nlohmann::json::array();
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& c : checks_) {
      checks.push_back(c.to_json());
      if (!c.passed()) failed.push_back(c.name());
    }
    return {{"n_max", opt_.n_max},
            {"max_exp", opt_.max_exp},
            {"coeff_limit", opt_.coeff_limit},
            {"seed", opt_.seed},
            {"checks", std::move(checks)},
            {"erratum", std::move(erratum)},
            {"failed", failed},
            {"passed", failed.empty()}};
  }

private:
  enum class Part { Maximal, Radical, Phi, Classes };

  RepGenerators generators(int n) const {
    auto g = craig_generators(n);
    if (opt_.inject_sign_error) g.mats[0](0, 0) = -g.mats[0](0, 0);
    return g;
  }
  const RepGenerators& g(int n) const { return gens_[static_cast<std::size_t>(n - 2)]; }
  LatticeBasis L(int n, long d) const { return craig_lattice(n, d).basis; }

  void section(const std::string& name, const std::function<void(Check&)>& body) {
    Check c(name);
    try {
      body(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    checks_.push_back(std::move(c));
  }

  bool spin_ok(int n, long p) const {
    Int size = 1;
    for (int k = 0; k < n; ++k) size *= p;
    return size <= Int(std::to_string(opt_.limits.max_spin));
  }

  void coxeter(Check& c) {
    for (int n = 2; n <= std::max(opt_.n_max, 10); ++n) {
      const auto craig = n <= opt_.n_max ? g(n) : generators(n);
      c.expect(verify_coxeter(craig), "Craig generators " + tag(n));
      c.expect(verify_coxeter(specht_generators_closed(n)), "Specht generators " + tag(n));
    }
  }

  void specht_action(Check& c) {
    for (int n = 2; n <= std::min(opt_.n_max, opt_.limits.oracle_max_n); ++n) {
      const auto closed = specht_generators_closed(n);
      const auto oracle = specht_generators_oracle(n, opt_.limits);
      for (std::size_t k = 0; k < closed.mats.size(); ++k)
        c.expect(closed.mats[k] == oracle.mats[k], tag(n) + " s_" + std::to_string(k + 1));
    }
  }

  void specht_identification(Check& c) {
    for (int n = 2; n <= opt_.n_max; ++n) {
      const auto p = intertwiner(specht_generators_closed(n), g(n));
      const LatticeBasis spe(p);
      c.expect(is_g_stable(spe, g(n)), tag(n) + " Specht lattice stable");
      c.expect(static_cast<bool>(is_scalar_multiple(spe, L(n, n + 1))), tag(n) + " Specht lattice ~ L(n+1)");
      c.expect(identify_specht_lattice(n) == n + 1, tag(n) + " identified d = n+1");
    }
  }

  void specht_maximal(Check& c) {
    for (int n = 2; n <= opt_.n_max; ++n) {
      const LatticeBasis spe(intertwiner(specht_generators_closed(n), g(n)));
      for (long p : prime_divisors(n + 1)) {
        if (!spin_ok(n, p)) {
          c.skip(tag(n, p));
          continue;
        }
        const auto maxl = maximal_sublattices_p(spe, g(n), p, opt_.limits);
        c.expect(maxl.size() == 1 && lattice_index(spe, maxl.front()) == p, tag(n, p));
      }
    }
  }

  void stability(Check& c) {
    for (int n = 2; n <= opt_.n_max; ++n)
      for (long d = 1; d <= 2 * (n + 1); ++d)
        c.expect(is_g_stable(L(n, d), g(n)) == ((n + 1) % d == 0), tag(n) + " d=" + std::to_string(d));
  }

  void closed_forms(Check& c) {
    for (int n = 2; n <= opt_.n_max; ++n)
      for (long p : prime_divisors(n + 1))
        for (int a = 0; a <= 2; ++a)
          for (int b = 0; b <= 2; ++b)
            for (int a2 = 0; a2 <= 2; ++a2)
              for (int b2 = 0; b2 <= 2; ++b2) {
                const ScaledCraigLattice x{p, a, b}, y{p, a2, b2};
                const auto lx = x.realize(n), ly = y.realize(n);
                const std::string at = tag(n, p) + " (" + std::to_string(a) + "," + std::to_string(b) +
                                       ") (" + std::to_string(a2) + "," + std::to_string(b2) + ")";
                c.expect(scaled_inclusion(x, y) == is_sublattice(lx, ly), "inclusion " + at);
                c.expect(scaled_intersect(x, y).realize(n) == lattice_intersect(lx, ly), "intersection " + at);
                if (scaled_inclusion(x, y))
                  c.expect(int_pow(p, static_cast<unsigned long>(scaled_index(y, x, n))) == lattice_index(ly, lx), "index " + at);
              }
  }

  LatticeBasis S(int n, long p, int a, int b) const { return ScaledCraigLattice{p, a, b}.realize(n); }

  void structure(Check& c, Part part) {
    for (int n = 2; n <= opt_.n_max; ++n)
      for (long p : prime_divisors(n + 1)) {
        if (!spin_ok(n, p)) {
          c.skip(tag(n, p));
          continue;
        }
        const int v = valuation(n + 1, p);
        for (int i = 0; i <= v; ++i) {
          const auto l = L(n, ipow(p, i));
          const std::string at = tag(n, p, i);
          switch (part) {
            case Part::Maximal: {
              std::vector<LatticeBasis> want;
              if (i < v) want.push_back(S(n, p, 0, i + 1));
              if (i > 0) want.push_back(S(n, p, 1, i - 1));
              c.expect(maximal_sublattices_p(l, g(n), p, opt_.limits) == sorted(want), at);
              break;
            }
            case Part::Radical: {
              const auto want = i == 0 ? S(n, p, 0, 1) : i < v ? S(n, p, 1, i) : S(n, p, 1, v - 1);
              c.expect(rad_p(l, g(n), p, opt_.limits) == want, at);
              break;
            }
            case Part::Phi: {
              std::vector<LatticeBasis> want{l};
              if (i < v) want.push_back(S(n, p, 0, i + 1));
              if (i > 0) want.push_back(S(n, p, 1, i - 1));
              if (i > 0 && i < v) want.push_back(S(n, p, 1, i));
              c.expect(phi_p(l, g(n), p, opt_.limits) == sorted(want), at);
              break;
            }
            case Part::Classes:
              for (int j = 0; j <= v; ++j) {
                std::vector<LatticeBasis> want;
                if (j == i) want.push_back(l);
                if (j == i && i > 0 && i < v) want.push_back(S(n, p, 1, i));
                if (j == i + 1) want.push_back(S(n, p, 0, i + 1));
                if (j == i - 1) want.push_back(S(n, p, 1, i - 1));
                c.expect(phi_p_class(l, g(n), p, j, opt_.limits) == sorted(want), at + " j=" + std::to_string(j));
              }
              break;
          }
        }
      }
  }

  // Row i of A rebuilt from the Moebius function on phi_p(L(p^i)).
  void moebius(Check& c) {
    for (int n = 2; n <= opt_.n_max; ++n)
      for (long p : prime_divisors(n + 1)) {
        if (!spin_ok(n, p)) {
          c.skip(tag(n, p));
          continue;
        }
        const auto a = build_A(n, p);
        const int v = valuation(n + 1, p);
        for (int i = 0; i <= v; ++i) {
          const auto l = L(n, ipow(p, i));
          std::vector<IntPoly> row(static_cast<std::size_t>(v) + 1);
          for (const auto& sub : phi_p(l, g(n), p, opt_.limits)) {
            const auto cls = classify_sublattice(sub, n, p);
            int e = 0;
            for (Int idx = lattice_index(l, sub); idx > 1; idx /= p) ++e;
            const long mu = mu_p(l, g(n), p, sub, opt_.limits);
            row[static_cast<std::size_t>(cls.b)] = row[static_cast<std::size_t>(cls.b)] + IntPoly::monomial(e, mu);
          }
          c.expect(row == a[static_cast<std::size_t>(i)], tag(n, p, i));
        }
      }
  }

  void inversion(Check& c) {
    for (int n = 2; n <= std::max(opt_.n_max, 10); ++n)
      for (long p : prime_divisors(n + 1)) c.expect(verify_inverse(build_A(n, p), build_B(n, p), n), tag(n, p));
  }

  void local_series(Check& c) {
    for (int n = 2; n <= opt_.n_max; ++n)
      for (long p : prime_divisors(n + 1)) {
        if (!spin_ok(n, p)) {
          c.skip(tag(n, p));
          continue;
        }
        for (int i = 0; i <= valuation(n + 1, p); ++i) {
          const int e = opt_.max_exp;
          const auto levels = enumerate_p_sublattices(L(n, ipow(p, i)), g(n), p, e, opt_.limits);
          c.expect(to_sizes(series_expand(local_factor(n, p, i), e)) == level_counts(levels), tag(n, p, i));
        }
      }
  }

  void classification(Check& c) {
    for (int n = 2; n <= opt_.n_max; ++n)
      for (long p : prime_divisors(n + 1)) {
        if (!spin_ok(n, p)) {
          c.skip(tag(n, p));
          continue;
        }
        const auto levels = enumerate_p_sublattices(L(n, 1), g(n), p, opt_.max_exp, opt_.limits);
        for (const auto& [e, v] : levels)
          for (const auto& sub : v) {
            try {
              const auto cls = classify_sublattice(sub, n, p);
              c.expect(cls.a * n + cls.b * (n - 1) == e, tag(n, p) + " exponent " + std::to_string(e));
            } catch (const Error& err) {
              c.expect(false, tag(n, p) + " exponent " + std::to_string(e) + ": " + err.what());
            }
          }
      }
  }

  void trivial_primes(Check& c) {
    for (int n = 2; n <= opt_.n_max; ++n)
      for (long p : primes_up_to(n + 1)) {
        if ((n + 1) % p == 0) continue;
        if (!spin_ok(n, p)) {
          c.skip(tag(n, p));
          continue;
        }
        const int e = std::max(2 * n, opt_.max_exp);
        const auto counts = level_counts(enumerate_p_sublattices(L(n, 1), g(n), p, e, opt_.limits));
        std::vector<std::size_t> want;
        for (int k = 0; k <= e; ++k) want.push_back(k % n == 0 ? 1 : 0);
        c.expect(counts == want, tag(n, p));
      }
  }

  void decomposition(Check& c) {
    for (int n = 2; n <= opt_.n_max; ++n)
      for (long d : divisors(n + 1)) c.expect(craig_decomposition(n, d) == L(n, d), tag(n) + " d=" + std::to_string(d));
  }

  long coeff_bound(int n) const { return n <= 3 ? opt_.coeff_limit : std::min(opt_.coeff_limit, 64L >> (n - 4)); }

  void coefficients(Check& c) {
    for (int n = 2; n <= opt_.n_max; ++n) {
      const long bound = coeff_bound(n);
      for (long d : divisors(n + 1)) {
        const auto z = global_zeta(n, d);
        for (long m = 1; m <= bound; ++m) {
          const auto subs = enumerate_index_sublattices(L(n, d), g(n), m, opt_.limits);
          c.expect(dirichlet_coeff(z, static_cast<std::uint64_t>(m)) == Int(static_cast<unsigned long>(subs.size())),
                   tag(n) + " d=" + std::to_string(d) + " m=" + std::to_string(m));
        }
      }
    }
  }

  void multiplicativity(Check& c) {
    std::uniform_int_distribution<std::uint64_t> pick(1, 100000);
    for (int n = 2; n <= opt_.n_max; ++n)
      for (long d : divisors(n + 1)) {
        const auto z = global_zeta(n, d);
        for (int t = 0; t < 20;) {
          const auto a = pick(rng_), b = pick(rng_);
          if (std::gcd(a, b) != 1) continue;
          ++t;
          c.expect(dirichlet_coeff(z, a * b) == dirichlet_coeff(z, a) * dirichlet_coeff(z, b),
                   tag(n) + " d=" + std::to_string(d) + " " + std::to_string(a) + "*" + std::to_string(b));
        }
      }
  }

  IntMatrix random_matrix(std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> entry(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng_);
    return m;
  }

  LatticeBasis random_lattice(std::size_t n) {
    while (true) {
      auto m = random_matrix(n, -4, 4);
      if (det(m) != 0) return LatticeBasis(m);
    }
  }

  IntMatrix random_unimodular(std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int step = 0; step < 12; ++step) {
      const std::size_t i = pick(rng_), j = pick(rng_);
      if (i == j) {
        for (std::size_t r = 0; r < n; ++r) u(r, i) = -u(r, i);
        continue;
      }
      const long k = coef(rng_);
      for (std::size_t r = 0; r < n; ++r) u(r, j) += k * u(r, i);
    }
    return u;
  }

  void hnf_invariance(Check& c) {
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
      const auto l = random_lattice(n);
      const auto u = random_unimodular(n);
      c.expect(abs(det(u)) == 1 && hnf(l.basis() * u) == l.hnf(), "trial " + std::to_string(t));
    }
  }

  // [L : N] = [L : M][M : N] along L >= M >= N built from random integral
  // transforms.
  void index_chains(Check& c) {
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
      const auto l = random_lattice(n);
      IntMatrix s1, s2;
      do s1 = random_matrix(n, -3, 3); while (det(s1) == 0);
      do s2 = random_matrix(n, -3, 3); while (det(s2) == 0);
      const LatticeBasis m(l.basis() * s1);
      const LatticeBasis sub(m.basis() * s2);
      c.expect(lattice_index(l, sub) == lattice_index(l, m) * lattice_index(m, sub), "trial " + std::to_string(t));
    }
  }

  nlohmann::json specht_local_factor(Check& c) {
    nlohmann::json cases = nlohmann::json::array();
    bool full_ok = true, short_ok = true;
    for (int n : {2, 3, 5}) {
      const auto gen = craig_generators(n);
      const LatticeBasis spe(intertwiner(specht_generators_closed(n), gen));
      for (long p : prime_divisors(n + 1)) {
        const int e = std::max(2 * n, opt_.max_exp);
        const auto counts = level_counts(enumerate_p_sublattices(L(n, n + 1), gen, p, e, opt_.limits));
        const auto specht_counts = level_counts(enumerate_p_sublattices(spe, gen, p, e, opt_.limits));
        const auto implemented = specht_zeta(n).local_factors.at(p);
        const bool full = to_sizes(series_expand({n, theorem_factor(n, p, n + 1)}, e)) == counts;
        const bool shorter = to_sizes(series_expand({n, geometric_factor(n, p)}, e)) == counts;
        const bool impl = to_sizes(series_expand({n, implemented}, e)) == counts;
        c.expect(specht_counts == counts, tag(n, p) + " Specht lattice and L(n+1) counts agree");
        c.expect(impl, tag(n, p) + " implemented Specht factor matches enumeration");
        full_ok = full_ok && full;
        short_ok = short_ok && shorter;
        cases.push_back({{"n", n},
                         {"p", p},
                         {"counts", counts},
                         {"sum_0_to_v", full},
                         {"sum_0_to_v_minus_1", shorter},
                         {"implemented", implemented.to_string()}});
      }
    }
    return {{"question", "local factor of the Specht lattice at p | n+1"},
            {"candidates", {{"sum_0_to_v", "sum_{j=0}^{v} X^j (general formula at d = n+1)"},
                            {"sum_0_to_v_minus_1", "(X^v - 1)/(X - 1) = sum_{j=0}^{v-1} X^j"}}},
            {"sum_0_to_v_consistent", full_ok},
            {"sum_0_to_v_minus_1_consistent", short_ok},
            {"implemented", "sum_0_to_v"},
            {"cases", std::move(cases)}};
  }

  const VerifyOptions& opt_;
  std::mt19937_64 rng_;
  std::vector<RepGenerators> gens_;
  std::vector<Check> checks_;
};

}  // namespace

nlohmann::json run_verification(const VerifyOptions& options) {
  if (options.n_max < 2) throw Error(ErrorKind::InvalidInput, "n_max must be at least 2");
  if (options.max_exp < 0) throw Error(ErrorKind::InvalidInput, "max_exp must be nonnegative");
  if (options.coeff_limit < 1) throw Error(ErrorKind::InvalidInput, "coefficient limit must be positive");
  return Runner(options).run();
}

}  // namespace hookzeta
