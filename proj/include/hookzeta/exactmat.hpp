#pragma once

// Exact integer/rational linear algebra and full-rank lattices in Z^n.
//
// Every lattice is kept together with its column-style Hermite normal form:
// upper triangular, column j supported in rows 0..j, positive diagonal, and
// 0 <= H(i,j) < H(i,i) for every j > i. Two lattices are equal iff their
// HNFs are identical.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hookzeta {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntVector column(std::size_t j) const;
  void set_column(std::size_t j, const IntVector& v);
  IntMatrix transposed() const;
  // horizontal concatenation [this | other]
  IntMatrix concat(const IntMatrix& other) const;

  IntMatrix& operator*=(const Int& c);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& c, IntMatrix m) { return m *= c; }
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  // lexicographic on (rows, cols, entries in row-major order)
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

  const std::vector<Int>& entries() const noexcept { return entries_; }

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Column-style HNF of the lattice spanned by the columns of `m`. The
/// columns must span a full-rank lattice in Z^rows; the result is
/// rows x rows. Throws Error(Singular) otherwise.
IntMatrix hnf(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant.
Int det(const IntMatrix& m);

/// gcd of all entries (0 for the zero matrix).
Int content(const IntMatrix& m);

/// Solves a * x = b for square nonsingular `a`; nullopt when x is not
/// integral.
std::optional<IntMatrix> solve_integral(const IntMatrix& a, const IntMatrix& b);

/// Basis of the rational kernel {x : m x = 0}, each vector scaled to a
/// primitive integer vector.
std::vector<IntVector> rational_kernel(const IntMatrix& m);

class LatticeBasis {
public:
  LatticeBasis() = default;
  /// `generators` is rows x k with rank rows. When square it is kept as the
  /// stored basis, otherwise the HNF becomes the basis.
  explicit LatticeBasis(IntMatrix generators);

  static LatticeBasis standard(std::size_t n);

  std::size_t dim() const noexcept { return hnf_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  const IntMatrix& hnf() const noexcept { return hnf_; }
  /// |Z^n : L|, positive.
  Int volume() const;

  bool contains(const IntVector& v) const;
  LatticeBasis scaled(const Int& c) const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.hnf_ == b.hnf_;
  }
  friend std::strong_ordering operator<=>(const LatticeBasis& a,
                                          const LatticeBasis& b) {
    return a.hnf_ <=> b.hnf_;
  }

private:
  IntMatrix basis_;
  IntMatrix hnf_;
};

bool is_sublattice(const LatticeBasis& sub, const LatticeBasis& sup);

/// |sup : sub|. Throws Error(NotSublattice) unless sub is contained in sup.
Int lattice_index(const LatticeBasis& sup, const LatticeBasis& sub);

LatticeBasis lattice_intersect(const LatticeBasis& a, const LatticeBasis& b);
LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b);

/// The lattice (1/denominator) * numerator. Rational multiples of integral
/// lattices are stored this way, normalized so that gcd(content(numerator),
/// denominator) = 1.
struct ScaledLattice {
  LatticeBasis numerator;
  Int denominator = 1;

  std::optional<LatticeBasis> integral() const;
};

ScaledLattice scale(const LatticeBasis& l, const Rational& c);

/// c > 0 with b = c * a, if such a rational exists.
std::optional<Rational> is_scalar_multiple(const LatticeBasis& a, const LatticeBasis& b);
std::optional<Rational> is_scalar_multiple(const ScaledLattice& a, const ScaledLattice& b);

inline Int int_pow(long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

std::optional<long> to_long(const Int& x);

}  // namespace hookzeta
