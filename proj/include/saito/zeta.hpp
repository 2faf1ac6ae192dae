#pragma once

// Equivariant and classical monodromy zeta functions of invertible
// polynomials, computed combinatorially from the torus strata of the Milnor
// fibre, and checkers for the equivariant Saito duality between f and its
// Berglund-Huebsch transpose.

#include <string>
#include <vector>

#include <json.hpp>

#include "saito/burnside.hpp"

namespace saito {

/// One torus stratum (C*)^I that contributes to the zeta function.
struct SubsetTerm {
  std::vector<std::size_t> subset;       ///< I, 0-based variable indices
  std::vector<std::size_t> supportRows;  ///< monomials supported inside I
  Integer coefficient;                   ///< chi of the orbit space: (-1)^{|I|-1}
  SubgroupKey isotropy;                  ///< G^I
  Integer minorDeterminant;              ///< |det E_I| (rows supportRows, columns I)
  Integer torusEulerCharacteristic;      ///< (-1)^{|I|-1} |det E_I|
};

struct ZetaReport {
  InvertiblePolynomial polynomial;
  GroupPtr group;
  BurnsideElement equivariant;  ///< zeta_f^G
  BurnsideElement reduced;      ///< zeta_f^G - [G/G]
  CyclotomicProduct classical;  ///< elementZeta(h_f, zeta_f^G)
  std::vector<SubsetTerm> perSubsetTerms;
};

/// Rows of E whose support lies inside the column set I.
std::vector<std::size_t> rowsSupportedIn(const IntMatrix& e, const std::vector<std::size_t>& cols);

ZetaReport equivariantZeta(const InvertiblePolynomial& f);
/// Same, over a caller-supplied presentation of G_f (it must be equal, as a
/// group, to symmetryGroup(f, Side::direct)).
ZetaReport equivariantZeta(const InvertiblePolynomial& f, const GroupPtr& g);

CyclotomicProduct classicalZeta(const InvertiblePolynomial& f);

/// prod (1 - t^m)^{s_m}  ->  prod (1 - t^{d/m})^{-s_m}, same modulus d.
CyclotomicProduct classicalSaitoDual(const CyclotomicProduct& phi);

enum class VerificationKind { theorem, corollary };

struct VerificationReport {
  VerificationKind kind;
  nlohmann::json lhs;
  nlohmann::json rhs;
  std::string lhsText;
  std::string rhsText;
  bool equal = false;
  /// Empty when equal; otherwise the difference and both audit trails.
  nlohmann::json witness;
};

/// reduced zeta of f~ over G_f~  versus  (-1)^n D_G (reduced zeta of f).
VerificationReport verifyTheorem(const InvertiblePolynomial& f);

/// With geometric roots r_f, r_f~ that generate their groups and d = |det E|:
/// elementZeta(r_f~, reduced zeta of f~) versus
/// classicalSaitoDual(elementZeta(r_f, reduced zeta of f))^{(-1)^{n-1}}.
/// Throws PreconditionError when G_f is not cyclic.
VerificationReport verifyCorollary(const InvertiblePolynomial& f);

/// prod_i (d_f - w_i) / w_i. Throws DegeneracyError when f is not a sum of
/// loops and chains, a weight is non-positive, or the product is not integral.
Integer milnorNumber(const InvertiblePolynomial& f);

std::string toString(VerificationKind k);

}  // namespace saito
