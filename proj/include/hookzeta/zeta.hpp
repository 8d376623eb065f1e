#pragma once

// Polynomials in X = p^{-s}, the tridiagonal matrix A and its inverse B of
// partial zeta functions, local factors, and the global zeta function
//   zeta(L(d), s) = zeta_Q(ns) * prod_{p | n+1} phi_{p,d}(p^{-s}).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookzeta/exactmat.hpp"

namespace hookzeta {

class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(int degree, const Int& c = 1);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Int operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

private:
  void trim();
  std::vector<Int> coeffs_;
};

using PolyMatrix = std::vector<std::vector<IntPoly>>;

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

/// numerator / (1 - X^n)
struct LocalFactor {
  int n = 0;
  IntPoly numerator;
};

struct GlobalZeta {
  int n = 0;
  long d = 1;
  int riemann_exponent = 0;
  std::map<long, IntPoly> local_factors;
};

/// Tridiagonal (v+1)x(v+1) matrix, v = v_p(n+1). Requires p | n+1.
PolyMatrix build_A(int n, long p);
/// Numerators of B over the common denominator 1 - X^n: X^{(j-i)(n-1)}
/// on and above the diagonal, X^{i-j} below.
PolyMatrix build_B(int n, long p);
/// A * numerators(B) == (1 - X^n) I.
bool verify_inverse(const PolyMatrix& a, const PolyMatrix& b, int n);

LocalFactor local_factor(int n, long p, int i);
/// First max_exp + 1 power series coefficients.
std::vector<Int> series_expand(const LocalFactor& f, int max_exp);

/// sum_{j=0}^{v_p(d)} X^j + sum_{j=v_p(d)+1}^{v_p(n+1)} X^{(j-v_p(d))(n-1)}
IntPoly theorem_factor(int n, long p, long d);

/// (X^v - 1)/(X - 1) with v = v_p(n+1): the shorter candidate for the local
/// polynomial of the Specht lattice, kept to test it against enumeration.
IntPoly geometric_factor(int n, long p);

/// Throws Error(NotALattice) unless d | n+1.
GlobalZeta global_zeta(int n, long d);
GlobalZeta specht_zeta(int n);

/// Number of sublattices of index m.
Int dirichlet_coeff(const GlobalZeta& z, std::uint64_t m);

nlohmann::json zeta_to_json(const GlobalZeta& z);
std::string zeta_to_latex(const GlobalZeta& z);
std::string zeta_to_text(const GlobalZeta& z);

}  // namespace hookzeta
