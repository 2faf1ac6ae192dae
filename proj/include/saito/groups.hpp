#pragma once

// Finite abelian groups realized as quotient lattices L / Z^n.
//
// The symmetry group of f with exponent matrix E is
//   G_f  = { beta  in Q^n / Z^n : E beta    integral }   (direct side)
//   G_f~ = { alpha in Q^n / Z^n : E^T alpha integral }   (transposed side)
// Everything attached to one exponent matrix shares the scale d = |det E|:
// an element is stored as the integer numerators of d * beta, and a subgroup
// H = L_H / Z^n is named by the Hermite basis of the integer lattice d * L_H.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "saito/linalg.hpp"
#include "saito/polynomial.hpp"

namespace saito {

enum class Side { direct, transposed };

Side opposite(Side s);
std::string toString(Side s);

/// Canonical name of a subgroup: the Hermite basis of d * L_H together with
/// the subgroup order d^n / det(basis). Orders by (order, basis).
struct SubgroupKey {
  IntMatrix basis;
  Integer order;

  bool operator==(const SubgroupKey& other) const = default;
  std::strong_ordering operator<=>(const SubgroupKey& other) const;
};

class AbelianGroup;
using GroupPtr = std::shared_ptr<const AbelianGroup>;

class GroupElement {
 public:
  GroupElement(GroupPtr owner, std::vector<Integer> numerators);

  const GroupPtr& owner() const { return owner_; }
  /// Numerators over the owner's scale d, each in [0, d).
  const std::vector<Integer>& numerators() const { return numerators_; }
  /// Exponent vector in lowest terms with coordinates in [0, 1).
  RationalVector coords() const;

  Integer order() const;
  bool isIdentity() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement operator*(const Integer& k) const;

  bool operator==(const GroupElement& other) const;
  std::string toString() const { return coords().toString(); }

 private:
  GroupPtr owner_;
  std::vector<Integer> numerators_;
};

/// A GroupPresentation: either a full symmetry group G_f / G_f~ or a subgroup
/// of one (produced by restriction). Immutable once built.
class AbelianGroup : public std::enable_shared_from_this<AbelianGroup> {
 public:
  /// Full group { x : membership * x integral } / Z^n.
  static GroupPtr fromMembership(const IntMatrix& membership, Side side);

  Side side() const { return side_; }
  const IntMatrix& membership() const { return membership_; }
  const Integer& scale() const { return scale_; }
  std::size_t rank() const { return membership_.rows(); }
  const IntMatrix& ambientBasis() const { return ambient_; }
  const Integer& order() const { return order_; }
  /// d_1 | d_2 | ... | d_n from the Smith form; one entry per coordinate.
  const std::vector<Integer>& invariantFactors() const { return invariantFactors_; }
  bool isCyclic() const;
  bool isFull() const { return full_; }

  /// Same lattice, scale and membership matrix. The side tag is only a label:
  /// G_f~ (transposed side of f) equals G_{f~} (direct side of f~).
  bool operator==(const AbelianGroup& other) const;

  GroupElement identity() const;
  /// Throws OwnershipError when d * coords is not in the ambient lattice.
  GroupElement element(std::vector<Integer> numerators) const;
  GroupElement elementFromCoords(const RationalVector& coords) const;
  bool containsNumerators(const std::vector<Integer>& numerators) const;

  /// sigma_j: the columns of membership^{-1}, reduced mod 1 (full groups only).
  std::vector<GroupElement> columnGenerators() const;
  /// Independent generators g_i of order snfOrders()[i].
  std::vector<GroupElement> snfGenerators() const;
  const std::vector<Integer>& snfOrders() const { return invariantFactors_; }
  /// k with g = sum k_i g_i, 0 <= k_i < d_i.
  std::vector<Integer> snfCoordinates(const GroupElement& g) const;
  GroupElement fromSnfCoordinates(const std::vector<Integer>& k) const;
  /// All elements in SNF-coordinate order; throws ResourceError above `bound`.
  std::vector<GroupElement> elements(const Integer& bound) const;

  SubgroupKey fullKey() const;
  SubgroupKey trivialKey() const;
  bool contains(const SubgroupKey& h) const;

  /// Presentation of a subgroup, ambient lattice d * L_H.
  GroupPtr subgroupPresentation(const SubgroupKey& h) const;
  /// The opposite-side full group (character group via the E-pairing).
  GroupPtr dualGroup() const;

  std::string structureString() const;  ///< "Z9", "Z2 x Z2", "trivial"

 private:
  AbelianGroup() = default;
  void finish();

  Side side_ = Side::direct;
  IntMatrix membership_;
  Integer scale_;
  IntMatrix ambient_;
  bool full_ = true;
  Integer order_;
  std::vector<Integer> invariantFactors_;
  IntMatrix toSnf_;  ///< U with SNF coordinates k = U * ambient^{-1} v mod d_i
  IntMatrix snfGeneratorColumns_;  ///< numerators of the g_i
};

GroupPtr symmetryGroup(const InvertiblePolynomial& f, Side side);

/// Key of the lattice spanned by d * Z^n and the given numerator columns.
SubgroupKey keyFromGenerators(const Integer& scale, std::size_t rank,
                              const std::vector<std::vector<Integer>>& generators);

SubgroupKey subgroupGeneratedBy(const AbelianGroup& g, const std::vector<GroupElement>& gens);
SubgroupKey subgroupJoin(const AbelianGroup& g, const SubgroupKey& h, const SubgroupKey& k);
SubgroupKey subgroupIntersection(const AbelianGroup& g, const SubgroupKey& h,
                                 const SubgroupKey& k);
bool isSubgroupOf(const SubgroupKey& h, const SubgroupKey& k);
bool subgroupContains(const SubgroupKey& h, const GroupElement& x);
/// Order of the coset x + H in G / H.
Integer cosetOrder(const GroupElement& x, const SubgroupKey& h);

/// G^I = { g : coordinate i of g is 0 mod 1 for every i in I } (0-based I).
SubgroupKey isotropySubgroup(const AbelianGroup& g, const std::vector<std::size_t>& indices);

/// (alpha, beta)_E mod 1 in [0, 1). Accepts the two elements in either order
/// as long as they come from mutually dual full groups.
Rational pairing(const GroupElement& lambda, const GroupElement& mu);

/// Dual subgroup of H <= G inside G.dualGroup(), by the dual-lattice formula
/// L_{H~} = (A L_H)^#, A the membership matrix of G.
SubgroupKey dualSubgroup(const AbelianGroup& g, const SubgroupKey& h);

/// Default subgroup-enumeration bound: SAITO_MAX_GROUP_ORDER or 10000.
Integer maxGroupOrder();

/// All subgroups, each once, sorted by (order, basis).
std::vector<SubgroupKey> enumerateSubgroups(const AbelianGroup& g);
std::vector<SubgroupKey> enumerateSubgroups(const AbelianGroup& g, const Integer& bound);
/// All subgroups containing `base`, sorted.
std::vector<SubgroupKey> enumerateOvergroups(const AbelianGroup& g, const SubgroupKey& base,
                                             const Integer& bound);

/// h_f with coordinates w_i / d (= reduced w_i / reduced d) in G_f.
GroupElement monodromyElement(const InvertiblePolynomial& f);
GroupElement monodromyElement(const InvertiblePolynomial& f, const GroupPtr& g);

/// All g in G_f with c_f * g = h_f, sorted by numerators.
std::vector<GroupElement> geometricRoots(const InvertiblePolynomial& f);
std::vector<GroupElement> geometricRoots(const InvertiblePolynomial& f, const GroupPtr& g);

}  // namespace saito
