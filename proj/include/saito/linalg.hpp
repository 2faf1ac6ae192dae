#pragma once

// Exact integer matrix arithmetic over GMP integers: determinants,
// Hermite and Smith normal forms, and full-rank lattice operations.
//
// Hermite normal form convention (used for every lattice in the library):
// lattices are spanned by COLUMNS. For an n x m generator matrix M of rank n,
// hermiteNormalForm returns H = M * U with H = [B | 0], where the n x n block
// B is upper triangular, has positive diagonal, and every entry to the right
// of a pivot satisfies 0 <= B(i, j) < B(i, i).

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace saito {

using Integer = mpz_class;
using Rational = mpq_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix fromRows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix fromColumns(const std::vector<std::vector<Integer>>& cols,
                               std::size_t rows);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Integer> column(std::size_t j) const;
  std::vector<Integer> row(std::size_t i) const;
  const std::vector<Integer>& entries() const { return data_; }

  IntMatrix transpose() const;
  IntMatrix submatrix(std::span<const std::size_t> rowIdx,
                      std::span<const std::size_t> colIdx) const;
  /// Columns of `this` followed by the columns of `other`.
  IntMatrix hconcat(const IntMatrix& other) const;
  /// Leading `count` columns.
  IntMatrix leftColumns(std::size_t count) const;
  IntMatrix rightColumns(std::size_t count) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator*(const Integer& scalar) const;
  std::vector<Integer> operator*(std::span<const Integer> v) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-() const;

  // elementary operations used by the normal form algorithms
  void swapRows(std::size_t a, std::size_t b);
  void swapColumns(std::size_t a, std::size_t b);
  void addRowMultiple(std::size_t target, std::size_t source, const Integer& k);
  void addColumnMultiple(std::size_t target, std::size_t source, const Integer& k);
  void negateRow(std::size_t i);
  void negateColumn(std::size_t j);

  bool operator==(const IntMatrix& other) const = default;
  /// Dimensions first, then row-major lexicographic entries.
  std::strong_ordering operator<=>(const IntMatrix& other) const;

  /// "[[3,1],[0,3]]"
  std::string toString() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// A vector of rationals sharing one positive denominator, kept in lowest
/// terms (gcd of all numerators and the denominator is 1).
class RationalVector {
 public:
  RationalVector() : denominator_(1) {}
  RationalVector(std::vector<Integer> numerators, Integer denominator);

  const std::vector<Integer>& numerators() const { return numerators_; }
  const Integer& denominator() const { return denominator_; }
  std::size_t size() const { return numerators_.size(); }
  Rational operator[](std::size_t i) const;

  /// Every coordinate moved into [0, 1).
  RationalVector reducedModOne() const;

  bool operator==(const RationalVector& other) const = default;
  std::string toString() const;

 private:
  std::vector<Integer> numerators_;
  Integer denominator_;
};

Integer determinant(const IntMatrix& m);

struct HermiteResult {
  IntMatrix H;  ///< M * U = H = [B | 0]
  IntMatrix U;  ///< unimodular, cols x cols
};

/// Column Hermite normal form with transform. Requires rank == rows.
HermiteResult hermiteNormalForm(const IntMatrix& m);

/// The n x n Hermite basis B of the lattice spanned by the columns of `m`
/// (no transform is accumulated). Requires rank == rows.
IntMatrix latticeBasis(const IntMatrix& m);

struct SmithResult {
  IntMatrix S;  ///< U * M * V, diagonal, d_1 | d_2 | ... | d_n, all positive
  IntMatrix U;
  IntMatrix V;
};

SmithResult smithNormalForm(const IntMatrix& m);
std::vector<Integer> invariantFactors(const IntMatrix& m);

struct Adjugate {
  IntMatrix adj;  ///< m * adj = det * I
  Integer det;
};

Adjugate adjugate(const IntMatrix& m);

/// Solve B * y = v for y given an upper triangular (Hermite) basis B.
/// Returns false when v is not in the lattice.
bool solveInLattice(const IntMatrix& hermiteBasis, std::span<const Integer> v,
                    std::vector<Integer>* y = nullptr);
bool latticeContains(const IntMatrix& hermiteBasis, std::span<const Integer> v);
/// True when every column of `sub` lies in the lattice of `hermiteBasis`.
bool latticeContainsAll(const IntMatrix& hermiteBasis, const IntMatrix& sub);

/// Hermite basis of the intersection of two full-rank lattices.
IntMatrix latticeIntersection(const IntMatrix& a, const IntMatrix& b);

Integer floorMod(const Integer& a, const Integer& m);
Integer gcd(std::span<const Integer> values);

}  // namespace saito
