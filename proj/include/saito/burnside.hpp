#pragma once

// Burnside ring K(G) of a finite abelian group, with restriction, induction,
// marks, zeta functions of elements, and the equivariant Saito duality.

#include <map>
#include <string>

#include "saito/groups.hpp"

namespace saito {

/// Rational function prod_{m | d} (1 - t^m)^{s_m} with its modulus d.
class CyclotomicProduct {
 public:
  explicit CyclotomicProduct(Integer modulus = 1);
  /// Throws DimensionError if some m does not divide the modulus; zero
  /// exponents are dropped.
  CyclotomicProduct(Integer modulus, const std::map<Integer, Integer>& factors);

  const Integer& modulus() const { return modulus_; }
  const std::map<Integer, Integer>& factors() const { return factors_; }
  Integer exponent(const Integer& m) const;

  /// Multiply in (1 - t^m)^s; m must divide the modulus.
  void addFactor(const Integer& m, const Integer& s);

  /// Same function, re-expressed over a multiple of the current modulus.
  CyclotomicProduct withModulus(const Integer& modulus) const;
  /// Product; the modulus becomes the lcm of the two moduli.
  CyclotomicProduct operator*(const CyclotomicProduct& other) const;
  /// Every exponent negated (the reciprocal function).
  CyclotomicProduct inverse() const;

  /// sum_m m * s_m (the Euler characteristic of the underlying virtual set).
  Integer degree() const;

  bool operator==(const CyclotomicProduct& other) const = default;

  /// "(1-t^3)(1-t^9)^-1"; the empty product prints as "1".
  std::string toString() const;

 private:
  Integer modulus_;
  std::map<Integer, Integer> factors_;
};

class BurnsideElement {
 public:
  explicit BurnsideElement(GroupPtr owner);

  /// coeff * [G/H]
  static BurnsideElement orbit(GroupPtr owner, const SubgroupKey& h, const Integer& coeff = 1);
  /// The unit [G/G].
  static BurnsideElement one(GroupPtr owner);

  const GroupPtr& owner() const { return owner_; }
  /// Sorted by (subgroup order, basis); no zero coefficients.
  const std::map<SubgroupKey, Integer>& terms() const { return terms_; }
  Integer coefficient(const SubgroupKey& h) const;
  bool isZero() const { return terms_.empty(); }

  void add(const SubgroupKey& h, const Integer& coeff);

  BurnsideElement operator+(const BurnsideElement& other) const;
  BurnsideElement operator-(const BurnsideElement& other) const;
  BurnsideElement operator-() const;
  BurnsideElement operator*(const Integer& k) const;
  /// Ring product (cartesian product of G-sets).
  BurnsideElement operator*(const BurnsideElement& other) const;

  /// Same owner (as a group) and same terms.
  bool operator==(const BurnsideElement& other) const;

  /// e.g. "[G/H(order 3)] - [G/H(order 1)] - [G/H(order 9)]"; zero prints "0".
  std::string toString() const;

 private:
  GroupPtr owner_;
  std::map<SubgroupKey, Integer> terms_;
};

/// [G/H][G/K] = [G : H+K] [G/(H cap K)], extended bilinearly.
BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b);

/// Res^G_K. [G/H] restricts to |G||K cap H| / (|H||K|) copies of [K/(K cap H)].
/// The result is owned by the presentation of K.
BurnsideElement restrict(const BurnsideElement& a, const SubgroupKey& k);

/// Ind^G_K: [K/U] goes to [G/U]. `a` must be owned by a subgroup of `g`.
BurnsideElement induce(const BurnsideElement& a, const GroupPtr& g);

/// Number of K-fixed points: |G/H| if K <= H, else 0, extended linearly.
Integer mark(const BurnsideElement& a, const SubgroupKey& k);

/// D_G: sum s_H [G/H] goes to sum s_H [G*/H~] over the dual group.
BurnsideElement saitoDual(const BurnsideElement& a);

/// Zeta function of the permutation induced by g on the virtual G-set a:
/// c [G/H] contributes (1 - t^r)^{c |G| / (|H| r)}, r the order of g + H.
/// The modulus is the order of g.
CyclotomicProduct elementZeta(const GroupElement& g, const BurnsideElement& a);

/// Inverse of elementZeta at a generator of a cyclic group of order d:
/// s_m goes to s_m [G / (subgroup of order d/m)].
BurnsideElement burnsideFromCyclotomic(const CyclotomicProduct& phi, const GroupPtr& g);

}  // namespace saito
