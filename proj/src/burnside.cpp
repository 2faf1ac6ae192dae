#include "saito/burnside.hpp"

#include <sstream>

#include "saito/errors.hpp"

namespace saito {
namespace {

void requireSameOwner(const BurnsideElement& a, const BurnsideElement& b) {
  if (!(*a.owner() == *b.owner())) {
    throw OwnershipError("Burnside ring elements over different groups");
  }
}

Integer exactQuotient(const Integer& num, const Integer& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error("non-integral orbit count " + num.get_str() + "/" + den.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

BurnsideElement::BurnsideElement(GroupPtr owner) : owner_(std::move(owner)) {
  if (!owner_) throw OwnershipError("Burnside element without an owner group");
}

BurnsideElement BurnsideElement::orbit(GroupPtr owner, const SubgroupKey& h,
                                       const Integer& coeff) {
  BurnsideElement a(std::move(owner));
  a.add(h, coeff);
  return a;
}

BurnsideElement BurnsideElement::one(GroupPtr owner) {
  const SubgroupKey full = owner->fullKey();
  return orbit(std::move(owner), full);
}

Integer BurnsideElement::coefficient(const SubgroupKey& h) const {
  auto it = terms_.find(h);
  return it == terms_.end() ? Integer(0) : it->second;
}

void BurnsideElement::add(const SubgroupKey& h, const Integer& coeff) {
  if (coeff == 0) return;
  if (!owner_->contains(h)) throw OwnershipError("subgroup is not contained in the owner group");
  auto [it, inserted] = terms_.try_emplace(h, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& other) const {
  requireSameOwner(*this, other);
  BurnsideElement r = *this;
  for (const auto& [h, c] : other.terms_) r.add(h, c);
  return r;
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& other) const {
  return *this + (-other);
}

BurnsideElement BurnsideElement::operator-() const { return *this * Integer(-1); }

BurnsideElement BurnsideElement::operator*(const Integer& k) const {
  BurnsideElement r(owner_);
  if (k == 0) return r;
  for (const auto& [h, c] : terms_) r.terms_.emplace(h, c * k);
  return r;
}

BurnsideElement BurnsideElement::operator*(const BurnsideElement& other) const {
  return multiply(*this, other);
}

bool BurnsideElement::operator==(const BurnsideElement& other) const {
  return terms_ == other.terms_ && *owner_ == *other.owner_;
}

std::string BurnsideElement::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (mag != 1) os << mag;
    os << "[G/H(order " << h.order << ")]";
  }
  return os.str();
}

BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) {
  requireSameOwner(a, b);
  const AbelianGroup& g = *a.owner();
  BurnsideElement r(a.owner());
  for (const auto& [h, ch] : a.terms()) {
    for (const auto& [k, ck] : b.terms()) {
      const SubgroupKey join = subgroupJoin(g, h, k);
      const SubgroupKey meet = subgroupIntersection(g, h, k);
      r.add(meet, ch * ck * (g.order() / join.order));
    }
  }
  return r;
}

BurnsideElement restrict(const BurnsideElement& a, const SubgroupKey& k) {
  const AbelianGroup& g = *a.owner();
  GroupPtr sub = g.subgroupPresentation(k);
  BurnsideElement r(sub);
  for (const auto& [h, c] : a.terms()) {
    const SubgroupKey meet = subgroupIntersection(g, h, k);
    r.add(meet, c * exactQuotient(g.order() * meet.order, h.order * k.order));
  }
  return r;
}

BurnsideElement induce(const BurnsideElement& a, const GroupPtr& g) {
  const AbelianGroup& k = *a.owner();
  if (g->scale() != k.scale() || g->membership() != k.membership() ||
      !g->contains(k.fullKey())) {
    throw OwnershipError("induction needs a subgroup of the target group");
  }
  BurnsideElement r(g);
  for (const auto& [u, c] : a.terms()) r.add(u, c);
  return r;
}

Integer mark(const BurnsideElement& a, const SubgroupKey& k) {
  const AbelianGroup& g = *a.owner();
  if (!g.contains(k)) throw OwnershipError("mark: subgroup is not contained in the owner group");
  Integer total = 0;
  for (const auto& [h, c] : a.terms()) {
    if (isSubgroupOf(k, h)) total += c * (g.order() / h.order);
  }
  return total;
}

BurnsideElement saitoDual(const BurnsideElement& a) {
  const AbelianGroup& g = *a.owner();
  BurnsideElement r(g.dualGroup());
  for (const auto& [h, c] : a.terms()) r.add(dualSubgroup(g, h), c);
  return r;
}

CyclotomicProduct elementZeta(const GroupElement& x, const BurnsideElement& a) {
  if (!(*x.owner() == *a.owner())) {
    throw OwnershipError("element and Burnside element belong to different groups");
  }
  const AbelianGroup& g = *a.owner();
  CyclotomicProduct phi(x.order());
  for (const auto& [h, c] : a.terms()) {
    const Integer r = cosetOrder(x, h);
    phi.addFactor(r, c * exactQuotient(g.order(), h.order * r));
  }
  return phi;
}

BurnsideElement burnsideFromCyclotomic(const CyclotomicProduct& phi, const GroupPtr& g) {
  if (!g->isCyclic()) {
    throw StructureError("target group " + g->structureString() + " is not cyclic");
  }
  if (g->order() != phi.modulus()) {
    throw StructureError("target group has order " + g->order().get_str() +
                         " but the product has modulus " + phi.modulus().get_str());
  }
  const GroupElement generator = g->snfGenerators().back();
  BurnsideElement a(g);
  for (const auto& [m, s] : phi.factors()) {
    a.add(subgroupGeneratedBy(*g, {generator * m}), s);
  }
  return a;
}

}  // namespace saito
