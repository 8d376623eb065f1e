#include "hookzeta/exactmat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "hookzeta/error.hpp"

namespace hookzeta {

namespace {

using RationalRows = std::vector<std::vector<Rational>>;

RationalRows to_rational(const IntMatrix& m) {
  RationalRows r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> rref(RationalRows& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k < a[r].size(); ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

IntVector primitive(const std::vector<Rational>& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, Int(x.get_den()));
  IntVector out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Int(v[i].get_num()) * (den / Int(v[i].get_den()));
    g = gcd(g, out[i]);
  }
  if (g != 0 && g != 1)
    for (auto& x : out) x /= g;
  return out;
}

// Exact inverse of a nonsingular square matrix over Q.
RationalRows rational_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  RationalRows aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) throw Error(ErrorKind::Singular, "singular");
  RationalRows inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

// det(h) * h^{-T}, integral; spans det(h) times the dual lattice.
IntMatrix scaled_dual(const LatticeBasis& l) {
  const Int vol = l.volume();
  const auto inv = rational_inverse(l.hnf());
  const std::size_t n = l.dim();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = inv[j][i] * vol;
      x.canonicalize();
      if (x.get_den() != 1) throw Error(ErrorKind::Internal, "dual not integral");
      out(i, j) = x.get_num();
    }
  return out;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  if (columns.empty()) return {};
  IntMatrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_column(std::size_t j, const IntVector& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::concat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

IntMatrix& IntMatrix::operator*=(const Int& c) {
  for (auto& x : entries_) x *= c;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    const int c = cmp(a.entries_[k], b.entries_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix hnf(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() < n) throw Error(ErrorKind::Singular, "singular");

  std::vector<IntVector> active;
  active.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) active.push_back(m.column(j));
  std::vector<IntVector> out(n);

  // Bottom row first: gcd-combine the row-i entries of the remaining
  // columns into a single pivot column, which then leaves the pool.
  Int g, s, t;
  for (std::size_t i = n; i-- > 0;) {
    std::ptrdiff_t pivot = -1;
    for (std::size_t c = 0; c < active.size(); ++c) {
      if (active[c][i] == 0) continue;
      if (pivot < 0) {
        pivot = static_cast<std::ptrdiff_t>(c);
        continue;
      }
      IntVector& p = active[static_cast<std::size_t>(pivot)];
      IntVector& q = active[c];
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p[i].get_mpz_t(),
                 q[i].get_mpz_t());
      const Int a = p[i] / g;
      const Int b = q[i] / g;
      for (std::size_t r = 0; r <= i; ++r) {
        Int np = s * p[r] + t * q[r];
        q[r] = a * q[r] - b * p[r];
        p[r] = std::move(np);
      }
    }
    if (pivot < 0) throw Error(ErrorKind::Singular, "singular");
    IntVector col = std::move(active[static_cast<std::size_t>(pivot)]);
    active.erase(active.begin() + pivot);
    if (col[i] < 0)
      for (auto& x : col) x = -x;
    out[i] = std::move(col);
  }

  // Reduce entries right of each pivot, bottom row first so that later
  // reductions (which only touch rows above) never undo earlier ones.
  Int q;
  for (std::size_t i = n; i-- > 0;) {
    const Int& piv = out[i][i];
    for (std::size_t j = i + 1; j < n; ++j) {
      mpz_fdiv_q(q.get_mpz_t(), out[j][i].get_mpz_t(), piv.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t r = 0; r <= i; ++r) out[j][r] -= q * out[i][r];
    }
  }
  return IntMatrix::from_columns(out);
}

Int det(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Int content(const IntMatrix& m) {
  Int g = 0;
  for (const auto& x : m.entries()) g = gcd(g, x);
  return g;
}

std::optional<IntMatrix> solve_integral(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows())
    throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  const std::size_t n = a.rows();
  RationalRows aug(n, std::vector<Rational>(n + b.cols()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug[i][n + j] = b(i, j);
  }
  if (rref(aug, n).size() != n) throw Error(ErrorKind::Singular, "singular");
  IntMatrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Rational& v = aug[i][n + j];
      if (v.get_den() != 1) return std::nullopt;
      x(i, j) = v.get_num();
    }
  return x;
}

std::vector<IntVector> rational_kernel(const IntMatrix& m) {
  RationalRows a = to_rational(m);
  const auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(primitive(v));
  }
  return basis;
}

LatticeBasis::LatticeBasis(IntMatrix generators) : hnf_(hookzeta::hnf(generators)) {
  basis_ = generators.is_square() ? std::move(generators) : hnf_;
}

LatticeBasis LatticeBasis::standard(std::size_t n) {
  return LatticeBasis(IntMatrix::identity(n));
}

Int LatticeBasis::volume() const {
  Int v = 1;
  for (std::size_t i = 0; i < dim(); ++i) v *= hnf_(i, i);
  return v;
}

bool LatticeBasis::contains(const IntVector& v) const {
  if (v.size() != dim()) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  IntVector w = v;
  Int q, r;
  for (std::size_t i = dim(); i-- > 0;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[i].get_mpz_t(), hnf_(i, i).get_mpz_t());
    if (r != 0) return false;
    if (q == 0) continue;
    for (std::size_t k = 0; k <= i; ++k) w[k] -= q * hnf_(k, i);
  }
  return true;
}

LatticeBasis LatticeBasis::scaled(const Int& c) const {
  if (c == 0) throw Error(ErrorKind::Singular, "singular");
  LatticeBasis out = *this;
  out.basis_ *= c;
  out.hnf_ *= abs(c);
  return out;
}

bool is_sublattice(const LatticeBasis& sub, const LatticeBasis& sup) {
  if (sub.dim() != sup.dim()) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  for (std::size_t j = 0; j < sub.dim(); ++j)
    if (!sup.contains(sub.hnf().column(j))) return false;
  return true;
}

Int lattice_index(const LatticeBasis& sup, const LatticeBasis& sub) {
  if (!is_sublattice(sub, sup)) throw Error(ErrorKind::NotSublattice, "not-sublattice");
  return sub.volume() / sup.volume();
}

LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  return LatticeBasis(hnf(a.hnf().concat(b.hnf())));
}

LatticeBasis lattice_intersect(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  if (a == b) return a;
  // (A cap B)^# = A^# + B^#; scale both duals by s = vol(A) vol(B) to stay
  // integral, then dualize the sum back.
  const Int va = a.volume();
  const Int vb = b.volume();
  IntMatrix da = scaled_dual(a);
  IntMatrix db = scaled_dual(b);
  da *= vb;
  db *= va;
  const LatticeBasis dual_sum(hnf(da.concat(db)));
  const Int s = va * vb;
  const IntMatrix back = scaled_dual(dual_sum);
  // back spans vol(K) K^{-T} Z^n; the intersection is s K^{-T} Z^n.
  const Int vk = dual_sum.volume();
  IntMatrix out(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Int num = back(i, j) * s;
      if (!mpz_divisible_p(num.get_mpz_t(), vk.get_mpz_t()))
        throw Error(ErrorKind::Internal, "intersection not integral");
      mpz_divexact(out(i, j).get_mpz_t(), num.get_mpz_t(), vk.get_mpz_t());
    }
  return LatticeBasis(hnf(out));
}

std::optional<LatticeBasis> ScaledLattice::integral() const {
  if (denominator == 1) return numerator;
  return std::nullopt;
}

ScaledLattice scale(const LatticeBasis& l, const Rational& c) {
  Rational cc = c;
  cc.canonicalize();
  if (cc == 0) throw Error(ErrorKind::Singular, "singular");
  ScaledLattice out{l.scaled(Int(cc.get_num())), Int(cc.get_den())};
  const Int g = gcd(content(out.numerator.hnf()), out.denominator);
  if (g != 1) {
    IntMatrix h = out.numerator.hnf();
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) mpz_divexact(h(i, j).get_mpz_t(), h(i, j).get_mpz_t(), g.get_mpz_t());
    out.numerator = LatticeBasis(std::move(h));
    out.denominator /= g;
  }
  return out;
}

namespace {

// (primitive part of the HNF, content)
std::pair<IntMatrix, Int> split_content(const LatticeBasis& l) {
  IntMatrix h = l.hnf();
  const Int c = content(h);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      mpz_divexact(h(i, j).get_mpz_t(), h(i, j).get_mpz_t(), c.get_mpz_t());
  return {std::move(h), c};
}

}  // namespace

std::optional<Rational> is_scalar_multiple(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  auto [pa, ca] = split_content(a);
  auto [pb, cb] = split_content(b);
  if (pa != pb) return std::nullopt;
  Rational c(cb, ca);
  c.canonicalize();
  return c;
}

std::optional<Rational> is_scalar_multiple(const ScaledLattice& a, const ScaledLattice& b) {
  auto c = is_scalar_multiple(a.numerator, b.numerator);
  if (!c) return std::nullopt;
  Rational r = *c * Rational(a.denominator, b.denominator);
  r.canonicalize();
  return r;
}

std::optional<long> to_long(const Int& x) {
  if (!x.fits_slong_p()) return std::nullopt;
  return x.get_si();
}

}  // namespace hookzeta
