#include "hookzeta/zeta.hpp"

#include <sstream>
#include <utility>

#include "hookzeta/arith.hpp"
#include "hookzeta/error.hpp"
#include "hookzeta/specht.hpp"

namespace hookzeta {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(int degree, const Int& c) {
  std::vector<Int> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const Int mag = abs(c);
    if (k == 0 || mag != 1) os << mag;
    if (k > 0) os << 'X';
    if (k > 1) os << '^' << k;
    first = false;
  }
  return os.str();
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b.front().size();
  PolyMatrix c(n, std::vector<IntPoly>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

namespace {

int critical_valuation(int n, long p) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be at least 2");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  const int v = valuation(n + 1, p);
  if (v == 0)
    throw Error(ErrorKind::InvalidInput,
                std::to_string(p) + " does not divide n+1 = " + std::to_string(n + 1));
  return v;
}

}  // namespace

PolyMatrix build_A(int n, long p) {
  const int v = critical_valuation(n, p);
  const auto size = static_cast<std::size_t>(v) + 1;
  PolyMatrix a(size, std::vector<IntPoly>(size));
  for (std::size_t i = 0; i < size; ++i) {
    const bool end = i == 0 || i + 1 == size;
    a[i][i] = end ? IntPoly{1} : IntPoly{1} + IntPoly::monomial(n);
    if (i > 0) a[i][i - 1] = IntPoly::monomial(1, -1);
    if (i + 1 < size) a[i][i + 1] = IntPoly::monomial(n - 1, -1);
  }
  return a;
}

PolyMatrix build_B(int n, long p) {
  const int v = critical_valuation(n, p);
  const auto size = static_cast<std::size_t>(v) + 1;
  PolyMatrix b(size, std::vector<IntPoly>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const int ii = static_cast<int>(i);
      const int jj = static_cast<int>(j);
      b[i][j] = IntPoly::monomial(j >= i ? (jj - ii) * (n - 1) : ii - jj);
    }
  return b;
}

bool verify_inverse(const PolyMatrix& a, const PolyMatrix& b, int n) {
  if (a.size() != b.size()) return false;
  const PolyMatrix prod = a * b;
  const IntPoly diag = IntPoly{1} - IntPoly::monomial(n);
  for (std::size_t i = 0; i < prod.size(); ++i)
    for (std::size_t j = 0; j < prod[i].size(); ++j)
      if (prod[i][j] != (i == j ? diag : IntPoly{})) return false;
  return true;
}

LocalFactor local_factor(int n, long p, int i) {
  const int v = critical_valuation(n, p);
  if (i < 0 || i > v)
    throw Error(ErrorKind::InvalidInput, "local factor index out of range 0.." + std::to_string(v));
  IntPoly num;
  for (int j = 0; j <= i; ++j) num = num + IntPoly::monomial(j);
  for (int j = i + 1; j <= v; ++j) num = num + IntPoly::monomial((j - i) * (n - 1));
  return {n, num};
}

std::vector<Int> series_expand(const LocalFactor& f, int max_exp) {
  if (max_exp < 0) throw Error(ErrorKind::InvalidInput, "max_exp must be nonnegative");
  std::vector<Int> c(static_cast<std::size_t>(max_exp) + 1);
  for (int j = 0; j <= max_exp; ++j) {
    c[static_cast<std::size_t>(j)] = f.numerator[static_cast<std::size_t>(j)];
    if (j >= f.n) c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - f.n)];
  }
  return c;
}

IntPoly theorem_factor(int n, long p, long d) {
  const int v = critical_valuation(n, p);
  if (d < 1 || (n + 1) % d != 0)
    throw Error(ErrorKind::NotALattice, "not-a-lattice: d must divide n+1");
  const int vd = valuation(d, p);
  IntPoly out;
  for (int j = 0; j <= vd; ++j) out = out + IntPoly::monomial(j);
  for (int j = vd + 1; j <= v; ++j) out = out + IntPoly::monomial((j - vd) * (n - 1));
  return out;
}

IntPoly geometric_factor(int n, long p) {
  const int v = critical_valuation(n, p);
  IntPoly out;
  for (int j = 0; j < v; ++j) out = out + IntPoly::monomial(j);
  return out;
}

GlobalZeta global_zeta(int n, long d) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be at least 2");
  if (d < 1 || (n + 1) % d != 0)
    throw Error(ErrorKind::NotALattice,
                "not-a-lattice: L(" + std::to_string(d) + ") is a ZG-lattice only when d divides n+1 = " +
                    std::to_string(n + 1));
  GlobalZeta z{n, d, n, {}};
  for (long p : prime_divisors(n + 1)) z.local_factors.emplace(p, theorem_factor(n, p, d));
  return z;
}

GlobalZeta specht_zeta(int n) { return global_zeta(n, identify_specht_lattice(n)); }

Int dirichlet_coeff(const GlobalZeta& z, std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidInput, "m must be positive");
  // Finitely many terms c * u^{-s} from the local polynomials; the Riemann
  // factor contributes k^{-ns} with coefficient 1.
  std::vector<std::pair<Int, Int>> terms{{Int(1), Int(1)}};
  for (const auto& [p, poly] : z.local_factors) {
    std::vector<std::pair<Int, Int>> next;
    for (const auto& [u, c] : terms) {
      Int pk = 1;
      for (std::size_t k = 0; k < poly.coeffs().size(); ++k, pk *= p)
        if (poly.coeffs()[k] != 0) next.emplace_back(u * pk, c * poly.coeffs()[k]);
    }
    terms = std::move(next);
  }
  const Int mm(std::to_string(m));
  Int total = 0, q, root;
  for (const auto& [u, c] : terms) {
    if (!mpz_divisible_p(mm.get_mpz_t(), u.get_mpz_t())) continue;
    q = mm / u;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(z.riemann_exponent)))
      total += c;
  }
  return total;
}

nlohmann::json zeta_to_json(const GlobalZeta& z) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [p, poly] : z.local_factors) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : poly.coeffs()) {
      if (c.fits_slong_p()) coeffs.push_back(c.get_si());
      else coeffs.push_back(c.get_str());
    }
    factors.push_back({{"p", p}, {"coeffs", std::move(coeffs)}});
  }
  return {{"n", z.n}, {"d", z.d}, {"riemann_exponent", z.riemann_exponent},
          {"local_factors", std::move(factors)}};
}

namespace {

// Terms of phi(p^{-s}) as (coefficient, p^k) pairs, lowest degree first.
std::vector<std::pair<Int, Int>> dirichlet_terms(long p, const IntPoly& poly) {
  std::vector<std::pair<Int, Int>> out;
  Int pk = 1;
  for (std::size_t k = 0; k < poly.coeffs().size(); ++k, pk *= p)
    if (poly.coeffs()[k] != 0) out.emplace_back(poly.coeffs()[k], pk);
  return out;
}

std::string render(const GlobalZeta& z, bool latex) {
  std::ostringstream os;
  if (latex) os << "\\zeta_{\\mathbf{Q}}(" << z.riemann_exponent << "s)";
  else os << "zeta_Q(" << z.riemann_exponent << "s)";
  for (const auto& [p, poly] : z.local_factors) {
    const auto terms = dirichlet_terms(p, poly);
    if (terms.size() == 1 && terms.front().second == 1 && terms.front().first == 1) continue;
    os << (latex ? "\\,(" : " * (");
    bool first = true;
    for (const auto& [c, base] : terms) {
      if (!first) os << (c < 0 ? (latex ? "-" : " - ") : (latex ? "+" : " + "));
      else if (c < 0) os << '-';
      const Int mag = abs(c);
      if (base == 1) {
        os << mag;
      } else {
        if (mag != 1) os << mag << (latex ? "\\cdot " : "*");
        os << base << (latex ? "^{-s}" : "^(-s)");
      }
      first = false;
    }
    os << ')';
  }
  return os.str();
}

}  // namespace

std::string zeta_to_latex(const GlobalZeta& z) { return render(z, true); }
std::string zeta_to_text(const GlobalZeta& z) { return render(z, false); }

}  // namespace hookzeta
