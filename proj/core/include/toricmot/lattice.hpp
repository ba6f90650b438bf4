#pragma once

// Exact integer lattice primitives: vectors, matrices, Smith normal form and
// Hirzebruch-Jung continued fractions. All arithmetic is overflow-checked;
// nothing in here ever touches floating point.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace toricmot {

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

/// Nonnegative gcd; gcd(0, 0) = 0.
Int gcd(Int a, Int b);
Int gcd_of(std::span<const Int> values);

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Int> coords) : coords_(coords) {}

  std::size_t rank() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Int>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  /// gcd of the coordinates is 1 (in particular the vector is nonzero).
  bool is_primitive() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(Int s, const LatticeVector& v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  /// "(1,-2,0)"
  std::string to_string() const;
  /// Standard-basis notation, e.g. "e1+e3", "-e1-2e2", "0".
  std::string to_basis_string() const;

 private:
  std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// v / gcd(v). Throws ZeroVector for v = 0.
LatticeVector primitive(const LatticeVector& v);

/// <a, b>. Throws RankMismatch on length mismatch.
Int dot(const LatticeVector& a, const LatticeVector& b);

/// a0*b1 - a1*b0 for rank-2 vectors.
Int det2(const LatticeVector& a, const LatticeVector& b);

/// Cross product of two rank-3 vectors.
LatticeVector cross(const LatticeVector& a, const LatticeVector& b);

class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  /// One row per vector; all vectors must share a length.
  static IntegerMatrix from_rows(std::span<const LatticeVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Int>& entries() const noexcept { return entries_; }

  IntegerMatrix transposed() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> entries_;
};

struct SmithForm {
  /// Invariant factors d1 | d2 | ..., length min(rows, cols), zeros last.
  std::vector<Int> diag;
  std::size_t rank = 0;

  /// Product of the nonzero invariant factors.
  Int nonzero_product() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Rank over Q.
std::size_t matrix_rank(const IntegerMatrix& m);

/// Rank of the span of a set of vectors.
std::size_t span_rank(std::span<const LatticeVector> vectors);

/// Determinant of a square matrix (fraction-free elimination).
Int determinant(const IntegerMatrix& m);

/// gcd of all maximal (k x k, k = rows) minors of a rows <= cols matrix,
/// computed by direct enumeration. Used for fan indices.
Int gcd_of_maximal_minors(const IntegerMatrix& m);

/// Hirzebruch-Jung expansion d/k = a1 - 1/(a2 - 1/(...)), every ai >= 2.
/// Requires d >= 2, 0 < k < d, gcd(d, k) = 1; throws BadParameters otherwise.
std::vector<Int> hj_expand(Int d, Int k);

}  // namespace toricmot
