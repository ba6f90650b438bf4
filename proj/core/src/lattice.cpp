#include "toricmot/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "bigint.hpp"
#include "toricmot/error.hpp"

namespace toricmot {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ToricError(Errc::Overflow, "integer addition overflow");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ToricError(Errc::Overflow, "integer subtraction overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ToricError(Errc::Overflow, "integer multiplication overflow");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int gcd(Int a, Int b) {
  a = a < 0 ? checked_neg(a) : a;
  b = b < 0 ? checked_neg(b) : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = gcd(g, v);
  return g;
}

// ---------------------------------------------------------------------------
// LatticeVector

bool LatticeVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

bool LatticeVector::is_primitive() const { return gcd_of(coords_) == 1; }

LatticeVector LatticeVector::operator-() const {
  std::vector<Int> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = checked_neg(coords_[i]);
  return LatticeVector(std::move(out));
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.rank() != rank()) throw ToricError(Errc::RankMismatch, "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], other.coords_[i]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.rank() != rank()) throw ToricError(Errc::RankMismatch, "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], other.coords_[i]);
  return *this;
}

LatticeVector operator*(Int s, const LatticeVector& v) {
  std::vector<Int> out(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) out[i] = checked_mul(s, v[i]);
  return LatticeVector(std::move(out));
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::string LatticeVector::to_basis_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    Int c = coords_[i];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    Int mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    os << 'e' << (i + 1);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.to_string(); }

LatticeVector primitive(const LatticeVector& v) {
  Int g = gcd_of(v.coords());
  if (g == 0) throw ToricError(Errc::ZeroVector, "primitive() of the zero vector");
  std::vector<Int> out(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) out[i] = v[i] / g;
  return LatticeVector(std::move(out));
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) throw ToricError(Errc::RankMismatch, "dot product of vectors of different rank");
  Int s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Int det2(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != 2 || b.rank() != 2) throw ToricError(Errc::RankMismatch, "det2 needs rank-2 vectors");
  return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != 3 || b.rank() != 3) throw ToricError(Errc::RankMismatch, "cross product needs rank-3 vectors");
  return LatticeVector{checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
                       checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
                       checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
}

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ToricError(Errc::BadParameters, "matrix entry count does not match rows x cols");
  }
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const LatticeVector> rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().rank();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].rank() != cols) throw ToricError(Errc::RankMismatch, "matrix rows of different length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Int SmithForm::nonzero_product() const {
  Int p = 1;
  for (Int d : diag)
    if (d != 0) p = checked_mul(p, d);
  return p;
}

namespace detail {

BigMatrix to_big(const IntegerMatrix& m) {
  BigMatrix out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

namespace {

struct SmithState {
  BigMatrix a;
  BigMatrix p;
  std::size_t rows;
  std::size_t cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(p[i], p[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
  }
  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& c) {
    for (std::size_t k = 0; k < cols; ++k) a[i][k] += c * a[j][k];
    for (std::size_t k = 0; k < rows; ++k) p[i][k] += c * p[j][k];
  }
  void add_col(std::size_t i, std::size_t j, const BigInt& c) {
    for (std::size_t k = 0; k < rows; ++k) a[k][i] += c * a[k][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : p[i]) x = -x;
  }
};

// Floor-free quotient: q with |a - q*b| minimal-ish; plain truncation is
// enough since we only need the remainder to shrink below |b|.
BigInt quotient(const BigInt& a, const BigInt& b) { return a / b; }

}  // namespace

SmithDecomposition smith_decompose(BigMatrix a, std::size_t rows, std::size_t cols) {
  SmithState s{std::move(a), BigMatrix(rows, std::vector<BigInt>(rows)), rows, cols};
  for (std::size_t i = 0; i < rows; ++i) s.p[i][i] = 1;

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block, first in
      // row-major order.
      std::size_t pr = rows, pc = cols;
      BigInt best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (s.a[r][c] != 0 && (pr == rows || abs(s.a[r][c]) < best)) {
            best = abs(s.a[r][c]);
            pr = r;
            pc = c;
          }
      if (pr == rows) break;  // trailing block is zero
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (s.a[r][t] == 0) continue;
        s.add_row(r, t, -quotient(s.a[r][t], s.a[t][t]));
        if (s.a[r][t] != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (s.a[t][c] == 0) continue;
        s.add_col(c, t, -quotient(s.a[t][c], s.a[t][t]));
        if (s.a[t][c] != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility of the rest.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (s.a[r][c] % s.a[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      s.add_row(t, bad, 1);
    }
    if (s.a[t][t] < 0) s.negate_row(t);
  }

  SmithDecomposition out;
  out.diag.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    out.diag[t] = s.a[t][t];
    if (out.diag[t] != 0) ++out.rank;
  }
  out.left = std::move(s.p);
  return out;
}

}  // namespace detail

SmithForm smith_normal_form(const IntegerMatrix& m) {
  auto dec = detail::smith_decompose(detail::to_big(m), m.rows(), m.cols());
  SmithForm out;
  out.rank = dec.rank;
  out.diag.reserve(dec.diag.size());
  for (const auto& d : dec.diag) out.diag.push_back(detail::to_int(d));
  return out;
}

std::size_t matrix_rank(const IntegerMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return detail::smith_decompose(detail::to_big(m), m.rows(), m.cols()).rank;
}

std::size_t span_rank(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return 0;
  return matrix_rank(IntegerMatrix::from_rows(vectors));
}

Int determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw ToricError(Errc::BadParameters, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  auto a = detail::to_big(m);
  detail::BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return detail::to_int(sign * a[n - 1][n - 1]);
}

Int gcd_of_maximal_minors(const IntegerMatrix& m) {
  const std::size_t k = m.rows();
  if (k > m.cols()) throw ToricError(Errc::BadParameters, "maximal minors need rows <= cols");
  std::vector<bool> pick(m.cols(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  Int g = 0;
  do {
    IntegerMatrix minor(k, k);
    std::size_t cc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!pick[c]) continue;
      for (std::size_t r = 0; r < k; ++r) minor(r, cc) = m(r, c);
      ++cc;
    }
    g = gcd(g, determinant(minor));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

std::vector<Int> hj_expand(Int d, Int k) {
  if (d < 2 || k <= 0 || k >= d || gcd(d, k) != 1) {
    throw ToricError(Errc::BadParameters, "hj_expand needs d >= 2, 0 < k < d, gcd(d,k) = 1 (got d=" +
                                              std::to_string(d) + ", k=" + std::to_string(k) + ")");
  }
  std::vector<Int> out;
  Int num = d, den = k;
  while (den != 0) {
    Int a = (num + den - 1) / den;  // ceil
    out.push_back(a);
    Int next = checked_sub(checked_mul(a, den), num);
    num = den;
    den = next;
  }
  return out;
}

}  // namespace toricmot
