#include "saito/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "saito/errors.hpp"

namespace saito {

Side opposite(Side s) { return s == Side::direct ? Side::transposed : Side::direct; }

std::string toString(Side s) { return s == Side::direct ? "direct" : "transposed"; }

std::strong_ordering SubgroupKey::operator<=>(const SubgroupKey& other) const {
  const int c = cmp(order, other.order);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return basis <=> other.basis;
}

namespace {

Integer power(const Integer& base, std::size_t exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer diagonalProduct(const IntMatrix& upper) {
  Integer p = 1;
  for (std::size_t i = 0; i < upper.rows(); ++i) p *= upper(i, i);
  return p;
}

SubgroupKey keyFromBasis(const Integer& scale, IntMatrix basis) {
  SubgroupKey k{std::move(basis), 0};
  k.order = power(scale, k.basis.rows()) / diagonalProduct(k.basis);
  return k;
}

void requireSameScale(const AbelianGroup& g, const SubgroupKey& h) {
  if (h.basis.rows() != g.rank()) throw OwnershipError("subgroup key has the wrong rank");
}

}  // namespace

// ---------------------------------------------------------------------------

GroupElement::GroupElement(GroupPtr owner, std::vector<Integer> numerators)
    : owner_(std::move(owner)), numerators_(std::move(numerators)) {
  if (!owner_) throw OwnershipError("group element without an owner");
  if (numerators_.size() != owner_->rank()) {
    throw DimensionError("group element has the wrong number of coordinates");
  }
  for (auto& v : numerators_) v = floorMod(v, owner_->scale());
}

RationalVector GroupElement::coords() const { return {numerators_, owner_->scale()}; }

Integer GroupElement::order() const {
  std::vector<Integer> all = numerators_;
  all.push_back(owner_->scale());
  return owner_->scale() / gcd(all);
}

bool GroupElement::isIdentity() const {
  return std::all_of(numerators_.begin(), numerators_.end(),
                     [](const Integer& v) { return v == 0; });
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (!(*owner_ == *other.owner_)) throw OwnershipError("adding elements of different groups");
  std::vector<Integer> r(numerators_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = numerators_[i] + other.numerators_[i];
  return {owner_, std::move(r)};
}

GroupElement GroupElement::operator-() const {
  std::vector<Integer> r(numerators_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -numerators_[i];
  return {owner_, std::move(r)};
}

GroupElement GroupElement::operator*(const Integer& k) const {
  std::vector<Integer> r(numerators_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = numerators_[i] * k;
  return {owner_, std::move(r)};
}

bool GroupElement::operator==(const GroupElement& other) const {
  return numerators_ == other.numerators_ && *owner_ == *other.owner_;
}

// ---------------------------------------------------------------------------

GroupPtr AbelianGroup::fromMembership(const IntMatrix& membership, Side side) {
  if (!membership.isSquare()) throw DimensionError("membership matrix must be square");
  const Adjugate adj = adjugate(membership);
  std::shared_ptr<AbelianGroup> g(new AbelianGroup);
  g->side_ = side;
  g->membership_ = membership;
  g->scale_ = abs(adj.det);
  const std::size_t n = membership.rows();
  // d * membership^{-1} = sign(det) * adj, together with d * Z^n
  IntMatrix gens = IntMatrix::identity(n) * g->scale_;
  gens = gens.hconcat(adj.det < 0 ? -adj.adj : adj.adj);
  g->ambient_ = latticeBasis(gens);
  g->full_ = true;
  g->finish();
  return g;
}

void AbelianGroup::finish() {
  const std::size_t n = rank();
  order_ = power(scale_, n) / diagonalProduct(ambient_);
  // group = ambient Z^n / d Z^n = Z^n / R Z^n with R = d * ambient^{-1}
  const Adjugate inv = adjugate(ambient_);
  IntMatrix relations(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer t = scale_ * inv.adj(i, j);
      mpz_divexact(relations(i, j).get_mpz_t(), t.get_mpz_t(), inv.det.get_mpz_t());
    }
  }
  const SmithResult snf = smithNormalForm(relations);
  invariantFactors_.resize(n);
  for (std::size_t i = 0; i < n; ++i) invariantFactors_[i] = snf.S(i, i);
  toSnf_ = snf.U;
  const Adjugate uinv = adjugate(snf.U);  // det = +-1
  snfGeneratorColumns_ = ambient_ * (uinv.det < 0 ? -uinv.adj : uinv.adj);
  for (auto i = 0u; i < n; ++i)
    for (auto j = 0u; j < n; ++j)
      snfGeneratorColumns_(i, j) = floorMod(snfGeneratorColumns_(i, j), scale_);
}

bool AbelianGroup::isCyclic() const {
  return std::count_if(invariantFactors_.begin(), invariantFactors_.end(),
                       [](const Integer& d) { return d > 1; }) <= 1;
}

bool AbelianGroup::operator==(const AbelianGroup& other) const {
  if (this == &other) return true;
  return scale_ == other.scale_ && membership_ == other.membership_ &&
         ambient_ == other.ambient_;
}

GroupElement AbelianGroup::identity() const {
  return {shared_from_this(), std::vector<Integer>(rank())};
}

bool AbelianGroup::containsNumerators(const std::vector<Integer>& numerators) const {
  return latticeContains(ambient_, numerators);
}

GroupElement AbelianGroup::element(std::vector<Integer> numerators) const {
  if (numerators.size() != rank()) {
    throw DimensionError("element has the wrong number of coordinates");
  }
  if (!containsNumerators(numerators)) {
    std::ostringstream os;
    os << "vector (";
    for (std::size_t i = 0; i < numerators.size(); ++i) {
      os << (i ? ", " : "") << numerators[i] << '/' << scale_;
    }
    os << ") is not an element of this group";
    throw OwnershipError(os.str());
  }
  return {shared_from_this(), std::move(numerators)};
}

GroupElement AbelianGroup::elementFromCoords(const RationalVector& coords) const {
  if (!mpz_divisible_p(scale_.get_mpz_t(), coords.denominator().get_mpz_t())) {
    throw OwnershipError("coordinate denominator does not divide the group scale");
  }
  const Integer f = scale_ / coords.denominator();
  std::vector<Integer> v(coords.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coords.numerators()[i] * f;
  return element(std::move(v));
}

std::vector<GroupElement> AbelianGroup::columnGenerators() const {
  if (!full_) throw StructureError("column generators are defined for full symmetry groups");
  const Adjugate adj = adjugate(membership_);
  std::vector<GroupElement> out;
  for (std::size_t j = 0; j < rank(); ++j) {
    std::vector<Integer> col = adj.adj.column(j);
    if (adj.det < 0)
      for (auto& v : col) v = -v;
    out.push_back(element(std::move(col)));
  }
  return out;
}

std::vector<GroupElement> AbelianGroup::snfGenerators() const {
  std::vector<GroupElement> out;
  for (std::size_t j = 0; j < rank(); ++j) {
    out.emplace_back(shared_from_this(), snfGeneratorColumns_.column(j));
  }
  return out;
}

std::vector<Integer> AbelianGroup::snfCoordinates(const GroupElement& g) const {
  if (!(*g.owner() == *this)) throw OwnershipError("element belongs to a different group");
  std::vector<Integer> y;
  if (!solveInLattice(ambient_, g.numerators(), &y)) {
    throw OwnershipError("element is outside the ambient lattice");
  }
  std::vector<Integer> k = toSnf_ * y;
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = floorMod(k[i], invariantFactors_[i]);
  return k;
}

GroupElement AbelianGroup::fromSnfCoordinates(const std::vector<Integer>& k) const {
  if (k.size() != rank()) throw DimensionError("SNF coordinate vector has the wrong length");
  std::vector<Integer> v = snfGeneratorColumns_ * std::span<const Integer>(k);
  return {shared_from_this(), std::move(v)};
}

std::vector<GroupElement> AbelianGroup::elements(const Integer& bound) const {
  if (order_ > bound) {
    throw ResourceError("group of order " + order_.get_str() + " exceeds the bound " +
                        bound.get_str());
  }
  std::vector<GroupElement> out;
  out.reserve(order_.get_ui());
  std::vector<Integer> k(rank());
  while (true) {
    out.push_back(fromSnfCoordinates(k));
    std::size_t i = 0;
    for (; i < k.size(); ++i) {
      if (++k[i] < invariantFactors_[i]) break;
      k[i] = 0;
    }
    if (i == k.size()) break;
  }
  return out;
}

SubgroupKey AbelianGroup::fullKey() const { return {ambient_, order_}; }

SubgroupKey AbelianGroup::trivialKey() const {
  return {IntMatrix::identity(rank()) * scale_, 1};
}

bool AbelianGroup::contains(const SubgroupKey& h) const {
  return h.basis.rows() == rank() && latticeContainsAll(ambient_, h.basis);
}

GroupPtr AbelianGroup::subgroupPresentation(const SubgroupKey& h) const {
  if (!contains(h)) throw OwnershipError("subgroup does not belong to this group");
  std::shared_ptr<AbelianGroup> g(new AbelianGroup);
  g->side_ = side_;
  g->membership_ = membership_;
  g->scale_ = scale_;
  g->ambient_ = h.basis;
  g->full_ = full_ && h.basis == ambient_;
  g->finish();
  return g;
}

GroupPtr AbelianGroup::dualGroup() const {
  if (!full_) throw StructureError("the dual group is defined for full symmetry groups");
  return fromMembership(membership_.transpose(), opposite(side_));
}

std::string AbelianGroup::structureString() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& d : invariantFactors_) {
    if (d == 1) continue;
    os << (first ? "" : " x ") << 'Z' << d;
    first = false;
  }
  return first ? "trivial" : os.str();
}

// ---------------------------------------------------------------------------

GroupPtr symmetryGroup(const InvertiblePolynomial& f, Side side) {
  return AbelianGroup::fromMembership(
      side == Side::direct ? f.exponents() : f.exponents().transpose(), side);
}

SubgroupKey keyFromGenerators(const Integer& scale, std::size_t rank,
                              const std::vector<std::vector<Integer>>& generators) {
  IntMatrix m(rank, rank + generators.size());
  for (std::size_t i = 0; i < rank; ++i) m(i, i) = scale;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != rank) throw DimensionError("generator has the wrong length");
    for (std::size_t i = 0; i < rank; ++i) m(i, rank + j) = floorMod(generators[j][i], scale);
  }
  return keyFromBasis(scale, latticeBasis(m));
}

SubgroupKey subgroupGeneratedBy(const AbelianGroup& g, const std::vector<GroupElement>& gens) {
  std::vector<std::vector<Integer>> cols;
  for (const auto& x : gens) {
    if (!(*x.owner() == g)) throw OwnershipError("generator belongs to a different group");
    cols.push_back(x.numerators());
  }
  return keyFromGenerators(g.scale(), g.rank(), cols);
}

SubgroupKey subgroupJoin(const AbelianGroup& g, const SubgroupKey& h, const SubgroupKey& k) {
  requireSameScale(g, h);
  requireSameScale(g, k);
  return keyFromBasis(g.scale(), latticeBasis(h.basis.hconcat(k.basis)));
}

SubgroupKey subgroupIntersection(const AbelianGroup& g, const SubgroupKey& h,
                                 const SubgroupKey& k) {
  requireSameScale(g, h);
  requireSameScale(g, k);
  return keyFromBasis(g.scale(), latticeIntersection(h.basis, k.basis));
}

bool isSubgroupOf(const SubgroupKey& h, const SubgroupKey& k) {
  if (!mpz_divisible_p(k.order.get_mpz_t(), h.order.get_mpz_t())) return false;
  return latticeContainsAll(k.basis, h.basis);
}

bool subgroupContains(const SubgroupKey& h, const GroupElement& x) {
  return latticeContains(h.basis, x.numerators());
}

Integer cosetOrder(const GroupElement& x, const SubgroupKey& h) {
  const AbelianGroup& g = *x.owner();
  if (subgroupContains(h, x)) return 1;
  std::vector<std::vector<Integer>> cols;
  for (std::size_t j = 0; j < h.basis.cols(); ++j) cols.push_back(h.basis.column(j));
  cols.push_back(x.numerators());
  return keyFromGenerators(g.scale(), g.rank(), cols).order / h.order;
}

SubgroupKey isotropySubgroup(const AbelianGroup& g, const std::vector<std::size_t>& indices) {
  const std::size_t n = g.rank();
  IntMatrix constraint = IntMatrix::identity(n);
  for (std::size_t i : indices) {
    if (i >= n) {
      throw BoundsError("isotropy index " + std::to_string(i) + " out of range for rank " +
                        std::to_string(n));
    }
    constraint(i, i) = g.scale();
  }
  return keyFromBasis(g.scale(), latticeIntersection(g.ambientBasis(), constraint));
}

Rational pairing(const GroupElement& lambda, const GroupElement& mu) {
  const AbelianGroup& gl = *lambda.owner();
  const AbelianGroup& gm = *mu.owner();
  if (!gl.isFull() || !gm.isFull() || gl.scale() != gm.scale() ||
      gl.membership() != gm.membership().transpose()) {
    throw OwnershipError("pairing needs elements of mutually dual symmetry groups");
  }
  // a^T A b / d^2 where A is the membership matrix of mu's group
  const std::vector<Integer> ab = gm.membership() * std::span<const Integer>(mu.numerators());
  Integer s = 0;
  for (std::size_t i = 0; i < ab.size(); ++i) s += lambda.numerators()[i] * ab[i];
  const Integer d2 = gm.scale() * gm.scale();
  Rational r(floorMod(s, d2), d2);
  r.canonicalize();
  return r;
}

SubgroupKey dualSubgroup(const AbelianGroup& g, const SubgroupKey& h) {
  if (!g.isFull()) throw StructureError("dual subgroups are taken inside full symmetry groups");
  if (!g.contains(h)) throw OwnershipError("subgroup does not belong to this group");
  const std::size_t n = g.rank();
  const Integer& d = g.scale();
  // d * (A L_H)^# = d^2 (A B)^{-T}
  const IntMatrix x = (g.membership() * h.basis).transpose();
  const Adjugate inv = adjugate(x);
  const Integer d2 = d * d;
  std::vector<std::vector<Integer>> cols(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer t = d2 * inv.adj(i, j);
      if (!mpz_divisible_p(t.get_mpz_t(), inv.det.get_mpz_t())) {
        throw Error("dual lattice is not integral; subgroup key is malformed");
      }
      mpz_divexact(cols[j][i].get_mpz_t(), t.get_mpz_t(), inv.det.get_mpz_t());
    }
  }
  return keyFromGenerators(d, n, cols);
}

Integer maxGroupOrder() {
  if (const char* env = std::getenv("SAITO_MAX_GROUP_ORDER")) {
    try {
      Integer v(env);
      if (v > 0) return v;
    } catch (const std::invalid_argument&) {
    }
  }
  return 10000;
}

std::vector<SubgroupKey> enumerateOvergroups(const AbelianGroup& g, const SubgroupKey& base,
                                             const Integer& bound) {
  if (g.order() > bound) {
    throw ResourceError("subgroup enumeration: group order " + g.order().get_str() +
                        " exceeds the bound " + bound.get_str());
  }
  std::set<SubgroupKey> cyclic;
  for (const auto& x : g.elements(bound)) {
    if (subgroupContains(base, x)) continue;
    cyclic.insert(subgroupGeneratedBy(g, {x}));
  }
  std::set<SubgroupKey> found{base};
  std::vector<SubgroupKey> frontier{base};
  while (!frontier.empty()) {
    std::vector<SubgroupKey> next;
    for (const auto& h : frontier) {
      for (const auto& c : cyclic) {
        if (isSubgroupOf(c, h)) continue;
        SubgroupKey j = subgroupJoin(g, h, c);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<SubgroupKey> enumerateSubgroups(const AbelianGroup& g, const Integer& bound) {
  return enumerateOvergroups(g, g.trivialKey(), bound);
}

std::vector<SubgroupKey> enumerateSubgroups(const AbelianGroup& g) {
  return enumerateSubgroups(g, maxGroupOrder());
}

GroupElement monodromyElement(const InvertiblePolynomial& f, const GroupPtr& g) {
  if (!g->isFull() || g->membership() != f.exponents()) {
    throw OwnershipError("monodromy lives in the direct-side symmetry group of f");
  }
  const WeightSystem w = canonicalWeights(f);
  // w_i / d_f equals reduced w_i / reduced d
  return g->element(w.canonicalWeights);
}

GroupElement monodromyElement(const InvertiblePolynomial& f) {
  return monodromyElement(f, symmetryGroup(f, Side::direct));
}

std::vector<GroupElement> geometricRoots(const InvertiblePolynomial& f, const GroupPtr& g) {
  const GroupElement h = monodromyElement(f, g);
  const Integer c = canonicalWeights(f).gcdFactor;
  const std::vector<Integer> target = g->snfCoordinates(h);
  const std::vector<Integer>& orders = g->snfOrders();

  // solve c * k_i = target_i (mod d_i) coordinate-wise
  std::vector<std::vector<Integer>> choices(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const Integer& m = orders[i];
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (!mpz_divisible_p(target[i].get_mpz_t(), gg.get_mpz_t())) return {};
    const Integer step = m / gg;
    Integer base = 0;
    if (step > 1) {
      Integer inv;
      const Integer cr = floorMod(c / gg, step);
      mpz_invert(inv.get_mpz_t(), cr.get_mpz_t(), step.get_mpz_t());
      base = floorMod((target[i] / gg) * inv, step);
    }
    for (Integer j = 0; j < gg; ++j) choices[i].push_back(base + j * step);
  }

  std::vector<GroupElement> roots;
  std::vector<std::size_t> pick(orders.size(), 0);
  while (true) {
    std::vector<Integer> k(orders.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = choices[i][pick[i]];
    roots.push_back(g->fromSnfCoordinates(k));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  std::sort(roots.begin(), roots.end(), [](const GroupElement& a, const GroupElement& b) {
    return a.numerators() < b.numerators();
  });
  return roots;
}

std::vector<GroupElement> geometricRoots(const InvertiblePolynomial& f) {
  return geometricRoots(f, symmetryGroup(f, Side::direct));
}

}  // namespace saito
