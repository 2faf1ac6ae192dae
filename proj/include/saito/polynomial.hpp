#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "saito/linalg.hpp"

namespace saito {

/// f = sum_i prod_j x_j^{E(i, j)}: rows are monomials, columns are variables.
/// All coefficients are normalized to 1.
class InvertiblePolynomial {
 public:
  /// Validates non-negativity, squareness and det E != 0.
  InvertiblePolynomial(IntMatrix exponents, std::vector<std::string> variables);
  /// Variables named x1, ..., xn.
  explicit InvertiblePolynomial(IntMatrix exponents);

  const IntMatrix& exponents() const { return exponents_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t numVariables() const { return exponents_.cols(); }
  /// det E with its sign (depends on monomial/variable order).
  const Integer& signedDeterminant() const { return det_; }

  /// Berglund-Huebsch transpose: exponent matrix E^T, same variable names.
  InvertiblePolynomial transpose() const;

  /// "x^3*y + y^3"
  std::string toString() const;

  bool operator==(const InvertiblePolynomial& other) const {
    return exponents_ == other.exponents_ && variables_ == other.variables_;
  }

 private:
  IntMatrix exponents_;
  std::vector<std::string> variables_;
  Integer det_;
};

std::vector<std::string> defaultVariableNames(std::size_t n);

struct ParseResult {
  InvertiblePolynomial polynomial;
  std::vector<std::string> warnings;
};

/// Accepts either a sum of monomials (`x^3*y + y^3`, `x^2 y + y^3`) or a
/// JSON matrix literal `{"E": [[3,1],[0,3]], "vars": ["x","y"]}`.
ParseResult parsePolynomial(std::string_view text);

struct WeightSystem {
  std::vector<Integer> canonicalWeights;
  Integer canonicalDegree;  ///< d_f = |det E|
  Integer gcdFactor;        ///< c_f
  std::vector<Integer> reducedWeights;
  Integer reducedDegree;
};

/// w_i = det(E with column i replaced by ones), d_f = det E, normalized so
/// that d_f > 0. Satisfies E w = d_f (1, ..., 1)^T.
WeightSystem canonicalWeights(const InvertiblePolynomial& f);

enum class AtomKind { loop, chain };

struct Atom {
  AtomKind kind;
  /// Variables in successor order: monomial k is x_{v[k]}^{p_k} x_{v[k+1]}
  /// (cyclically for loops; the last chain monomial is a pure power).
  std::vector<std::size_t> variables;
  std::vector<std::size_t> monomials;
  std::vector<Integer> exponents;

  /// Some exponent equals 1; such atoms are accepted but flagged.
  bool degenerateSuspect() const;
  /// Permutation-invariant description, e.g. "chain(3,3)" or "loop(2,3)"
  /// (loops rotated to their lexicographically smallest exponent sequence).
  std::string signature() const;
};

struct AtomicDecomposition {
  std::vector<Atom> atoms;
  bool nonDegenerate = false;
};

AtomicDecomposition decompose(const InvertiblePolynomial& f);

}  // namespace saito
