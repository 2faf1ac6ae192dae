#include "saito/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "saito/errors.hpp"

namespace saito {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw DimensionError("matrix dimensions must be positive");
  }
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::fromColumns(const std::vector<std::vector<Integer>>& cols,
                                 std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("column has wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rowIdx,
                               std::span<const std::size_t> colIdx) const {
  IntMatrix s(rowIdx.size(), colIdx.size());
  for (std::size_t i = 0; i < rowIdx.size(); ++i) {
    for (std::size_t j = 0; j < colIdx.size(); ++j) {
      if (rowIdx[i] >= rows_ || colIdx[j] >= cols_) {
        throw BoundsError("submatrix index out of range");
      }
      s(i, j) = (*this)(rowIdx[i], colIdx[j]);
    }
  }
  return s;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw DimensionError("hconcat: row count mismatch");
  IntMatrix r(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) r(i, cols_ + j) = other(i, j);
  }
  return r;
}

IntMatrix IntMatrix::leftColumns(std::size_t count) const {
  IntMatrix r(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::rightColumns(std::size_t count) const {
  IntMatrix r(rows_, count);
  const std::size_t offset = cols_ - count;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, offset + j);
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product: inner dimensions differ");
  IntMatrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) r(i, j) += a * rhs(k, j);
    }
  }
  return r;
}

IntMatrix IntMatrix::operator*(const Integer& scalar) const {
  IntMatrix r = *this;
  for (auto& v : r.data_) v *= scalar;
  return r;
}

std::vector<Integer> IntMatrix::operator*(std::span<const Integer> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector product: size mismatch");
  std::vector<Integer> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("sum: shape mismatch");
  IntMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += rhs.data_[k];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& v : r.data_) v = -v;
  return r;
}

void IntMatrix::swapRows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swapColumns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::addRowMultiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += k * (*this)(source, j);
}

void IntMatrix::addColumnMultiple(std::size_t target, std::size_t source,
                                  const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += k * (*this)(i, source);
}

void IntMatrix::negateRow(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negateColumn(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::strong_ordering IntMatrix::operator<=>(const IntMatrix& other) const {
  if (auto c = rows_ <=> other.rows_; c != 0) return c;
  if (auto c = cols_ <=> other.cols_; c != 0) return c;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    const int c = cmp(data_[k], other.data_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string IntMatrix::toString() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

RationalVector::RationalVector(std::vector<Integer> numerators, Integer denominator)
    : numerators_(std::move(numerators)), denominator_(std::move(denominator)) {
  if (denominator_ == 0) throw DimensionError("rational vector with zero denominator");
  if (denominator_ < 0) {
    denominator_ = -denominator_;
    for (auto& v : numerators_) v = -v;
  }
  Integer g = denominator_;
  for (const auto& v : numerators_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1) {
    denominator_ /= g;
    for (auto& v : numerators_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

Rational RationalVector::operator[](std::size_t i) const {
  Rational q(numerators_.at(i), denominator_);
  q.canonicalize();
  return q;
}

RationalVector RationalVector::reducedModOne() const {
  std::vector<Integer> r(numerators_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floorMod(numerators_[i], denominator_);
  return {std::move(r), denominator_};
}

std::string RationalVector::toString() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (i) os << ", ";
    os << (*this)[i];
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

Integer floorMod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

Integer gcd(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

Integer determinant(const IntMatrix& m) {
  if (!m.isSquare()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swapRows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Replace columns p and j (row i entries a, b) by a unimodular combination
// leaving gcd(a, b) in column p and 0 in column j.
void gcdColumns(IntMatrix& a, IntMatrix* u, std::size_t i, std::size_t p, std::size_t j) {
  const Integer x0 = a(i, p);
  const Integer y0 = a(i, j);
  if (y0 == 0) return;
  if (x0 != 0 && mpz_divisible_p(y0.get_mpz_t(), x0.get_mpz_t())) {
    const Integer q = -(y0 / x0);
    a.addColumnMultiple(j, p, q);
    if (u) u->addColumnMultiple(j, p, q);
    return;
  }
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x0.get_mpz_t(), y0.get_mpz_t());
  const Integer bp = -(y0 / g);
  const Integer bj = x0 / g;
  auto mix = [&](IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Integer cp = s * m(r, p) + t * m(r, j);
      Integer cj = bp * m(r, p) + bj * m(r, j);
      m(r, p) = std::move(cp);
      m(r, j) = std::move(cj);
    }
  };
  mix(a);
  if (u) mix(*u);
}

IntMatrix hermiteCore(IntMatrix a, IntMatrix* u) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  if (m < n) throw RankError("Hermite form: fewer generators than rows");
  std::size_t active = m;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = n - 1 - step;
    const std::size_t p = active - 1;
    for (std::size_t j = 0; j < p; ++j) {
      if (a(i, j) != 0) gcdColumns(a, u, i, p, j);
    }
    if (a(i, p) == 0) throw RankError("Hermite form: generator matrix is rank deficient");
    if (a(i, p) < 0) {
      a.negateColumn(p);
      if (u) u->negateColumn(p);
    }
    --active;
  }
  const std::size_t offset = m - n;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = n - 1 - step;
    const std::size_t pc = offset + i;
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t c = offset + j;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(i, pc).get_mpz_t());
      if (q != 0) {
        a.addColumnMultiple(c, pc, -q);
        if (u) u->addColumnMultiple(c, pc, -q);
      }
    }
  }
  if (offset == 0) return a;
  // move the pivot block to the front
  IntMatrix r(n, m);
  IntMatrix ur = u ? IntMatrix(m, m) : IntMatrix();
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t src = j < n ? offset + j : j - n;
    for (std::size_t k = 0; k < n; ++k) r(k, j) = a(k, src);
    if (u)
      for (std::size_t k = 0; k < m; ++k) ur(k, j) = (*u)(k, src);
  }
  if (u) *u = std::move(ur);
  return r;
}

}  // namespace

HermiteResult hermiteNormalForm(const IntMatrix& m) {
  IntMatrix u = IntMatrix::identity(m.cols());
  IntMatrix h = hermiteCore(m, &u);
  return {std::move(h), std::move(u)};
}

IntMatrix latticeBasis(const IntMatrix& m) {
  IntMatrix h = hermiteCore(m, nullptr);
  return h.cols() == h.rows() ? h : h.leftColumns(h.rows());
}

SmithResult smithNormalForm(const IntMatrix& m) {
  if (!m.isSquare()) throw DimensionError("Smith form: matrix must be square");
  if (determinant(m) == 0) throw SingularMatrixError("Smith form: matrix is singular");
  const std::size_t n = m.rows();
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (s(i, j) == 0) continue;
          if (pi == n || abs(s(i, j)) < abs(s(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      s.swapRows(t, pi);
      u.swapRows(t, pi);
      s.swapColumns(t, pj);
      v.swapColumns(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        s.addRowMultiple(i, t, -q);
        u.addRowMultiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        s.addColumnMultiple(j, t, -q);
        v.addColumnMultiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == n) break;
      s.addRowMultiple(t, bad, 1);
      u.addRowMultiple(t, bad, 1);
    }
    if (s(t, t) < 0) {
      s.negateRow(t);
      u.negateRow(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::vector<Integer> invariantFactors(const IntMatrix& m) {
  const SmithResult snf = smithNormalForm(m);
  std::vector<Integer> d(m.rows());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = snf.S(i, i);
  return d;
}

Adjugate adjugate(const IntMatrix& m) {
  if (!m.isSquare()) throw DimensionError("adjugate of a non-square matrix");
  const Integer det = determinant(m);
  if (det == 0) throw SingularMatrixError("adjugate: matrix is singular");
  const std::size_t n = m.rows();
  // Gauss-Jordan over the rationals on [m | I]
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational q = a[i][n + j] * det;
      q.canonicalize();
      adj(i, j) = q.get_num();
    }
  }
  return {std::move(adj), det};
}

bool solveInLattice(const IntMatrix& b, std::span<const Integer> v, std::vector<Integer>* y) {
  const std::size_t n = b.rows();
  if (v.size() != n) throw DimensionError("lattice membership: vector length mismatch");
  std::vector<Integer> sol(n);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = n - 1 - step;
    Integer r = v[i];
    for (std::size_t j = i + 1; j < n; ++j) r -= b(i, j) * sol[j];
    if (!mpz_divisible_p(r.get_mpz_t(), b(i, i).get_mpz_t())) return false;
    mpz_divexact(sol[i].get_mpz_t(), r.get_mpz_t(), b(i, i).get_mpz_t());
  }
  if (y) *y = std::move(sol);
  return true;
}

bool latticeContains(const IntMatrix& hermiteBasis, std::span<const Integer> v) {
  return solveInLattice(hermiteBasis, v, nullptr);
}

bool latticeContainsAll(const IntMatrix& hermiteBasis, const IntMatrix& sub) {
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    if (!latticeContains(hermiteBasis, sub.column(j))) return false;
  }
  return true;
}

IntMatrix latticeIntersection(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("lattice intersection: ambient mismatch");
  const std::size_t n = a.rows();
  // kernel of [a | -b] parametrizes pairs (x, y) with a x = b y
  const HermiteResult h = hermiteNormalForm(a.hconcat(-b));
  const std::size_t k = h.U.cols() - n;
  IntMatrix x(a.cols(), k);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < k; ++j) x(i, j) = h.U(i, n + j);
  return latticeBasis(a * x);
}

}  // namespace saito
