#include <gtest/gtest.h>

#include "saito/burnside.hpp"
#include "saito/errors.hpp"
#include "support/finite_group.hpp"

using namespace saito;
using oracle::ElementSet;

namespace {

struct Fixture {
  IntMatrix e;
  GroupPtr g;
  oracle::FiniteGroup og;
  std::vector<SubgroupKey> keys;
  std::map<SubgroupKey, ElementSet> sets;

  explicit Fixture(const IntMatrix& m)
      : e(m), g(symmetryGroup(InvertiblePolynomial(m), Side::direct)), og(oracle::toMatrix(m)) {
    keys = enumerateSubgroups(*g);
    for (const auto& k : keys) sets[k] = oracle::elementsOf(og, *g, k);
  }
};

std::vector<Fixture> fixtures(std::uint64_t seed, int count, std::int64_t maxOrder) {
  oracle::MatrixGen gen(seed);
  std::vector<Fixture> out;
  for (int i = 0; i < count; ++i) out.emplace_back(gen.next(1 + i % 3, 4, maxOrder));
  return out;
}

// Explicit G-set: the disjoint union of coset spaces, acted on by translation.
using Point = std::vector<std::size_t>;

struct CosetSpace {
  std::vector<ElementSet> cosets;
  std::map<ElementSet, std::size_t> index;

  CosetSpace(const oracle::FiniteGroup& g, const ElementSet& h) : cosets(oracle::cosets(g, h)) {
    for (std::size_t i = 0; i < cosets.size(); ++i) index[cosets[i]] = i;
  }
  std::size_t act(const oracle::Vec& x, std::size_t i, std::int64_t d) const {
    return index.at(oracle::translate(cosets[i], x, d));
  }
};

// Orbit decomposition of G/H x G/K under the subgroup `acting`.
std::map<ElementSet, std::int64_t> productOrbits(const oracle::FiniteGroup& g, const ElementSet& h,
                                                 const ElementSet& k, const ElementSet& acting) {
  const CosetSpace a(g, h), b(g, k);
  std::vector<Point> points;
  for (std::size_t i = 0; i < a.cosets.size(); ++i)
    for (std::size_t j = 0; j < b.cosets.size(); ++j) points.push_back({i, j});
  return oracle::orbitDecomposition(points, acting, [&](const oracle::Vec& x, const Point& p) {
    return Point{a.act(x, p[0], g.d), b.act(x, p[1], g.d)};
  });
}

std::map<ElementSet, std::int64_t> cosetOrbits(const oracle::FiniteGroup& g, const ElementSet& h,
                                               const ElementSet& acting) {
  const CosetSpace a(g, h);
  std::vector<Point> points;
  for (std::size_t i = 0; i < a.cosets.size(); ++i) points.push_back({i});
  return oracle::orbitDecomposition(points, acting, [&](const oracle::Vec& x, const Point& p) {
    return Point{a.act(x, p[0], g.d)};
  });
}

BurnsideElement fromOrbits(const GroupPtr& owner,
                           const std::map<ElementSet, std::int64_t>& orbits) {
  BurnsideElement out(owner);
  for (const auto& [stab, count] : orbits) out.add(oracle::keyOf(*owner, stab), count);
  return out;
}

BurnsideElement randomElement(const Fixture& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  BurnsideElement a(f.g);
  for (const auto& k : f.keys)
    if (rng() % 3 == 0) a.add(k, coeff(rng));
  return a;
}

}  // namespace

TEST(Cyclotomic, FormattingAndArithmetic) {
  CyclotomicProduct phi(9, {{3, 1}, {9, -1}});
  EXPECT_EQ(phi.toString(), "(1-t^3)(1-t^9)^-1");
  EXPECT_EQ(phi.degree(), -6);
  EXPECT_EQ(CyclotomicProduct(3, {{1, 1}}).toString(), "(1-t)");
  EXPECT_EQ(CyclotomicProduct(3, {{3, -2}}).toString(), "(1-t^3)^-2");
  EXPECT_EQ(CyclotomicProduct(5).toString(), "1");
  EXPECT_EQ(CyclotomicProduct(4, {{2, 0}}), CyclotomicProduct(4));
  EXPECT_THROW(CyclotomicProduct(9, {{2, 1}}), DimensionError);
  EXPECT_EQ(phi.inverse().toString(), "(1-t^3)^-1(1-t^9)");
  EXPECT_EQ(phi.withModulus(18).modulus(), 18);
  EXPECT_EQ(phi.withModulus(18).factors(), phi.factors());
  EXPECT_THROW(phi.withModulus(12), DimensionError);
  const CyclotomicProduct psi(4, {{2, 1}});
  EXPECT_EQ((phi * psi).modulus(), 36);
  EXPECT_EQ((phi * psi).exponent(2), 1);
  EXPECT_EQ(phi * phi.inverse(), CyclotomicProduct(9));
}

TEST(Burnside, BasicsAndFormatting) {
  const auto g = symmetryGroup(InvertiblePolynomial(IntMatrix{{9}}), Side::direct);
  const auto keys = enumerateSubgroups(*g);  // orders 1, 3, 9
  ASSERT_EQ(keys.size(), 3u);
  BurnsideElement a(g);
  EXPECT_EQ(a.toString(), "0");
  a.add(keys[1], 1);
  a.add(keys[0], -1);
  EXPECT_EQ(a.toString(), "-[G/H(order 1)] + [G/H(order 3)]");
  EXPECT_EQ((a - a).toString(), "0");
  EXPECT_EQ(a * Integer(2), a + a);
  EXPECT_EQ(BurnsideElement::one(g).toString(), "[G/H(order 9)]");
  EXPECT_EQ(a * BurnsideElement::one(g), a);
}

TEST(Burnside, ElementZetaExample) {
  // Z9 with a generator: [G/Z3] - [G/e] permutes 3 and 9 cosets cyclically
  const auto f = InvertiblePolynomial(IntMatrix{{3, 1}, {0, 3}});
  const auto g = symmetryGroup(f, Side::direct);
  const auto keys = enumerateSubgroups(*g);
  BurnsideElement a(g);
  a.add(keys[1], 1);
  a.add(keys[0], -1);
  const auto gen = monodromyElement(f, g);
  ASSERT_EQ(gen.order(), 9);
  EXPECT_EQ(elementZeta(gen, a).toString(), "(1-t^3)(1-t^9)^-1");
  EXPECT_EQ(elementZeta(gen, a).modulus(), 9);
}

TEST(Burnside, MultiplyMatchesProductOrbits) {
  for (const auto& f : fixtures(21, 24, 48)) {
    for (const auto& h : f.keys)
      for (const auto& k : f.keys) {
        const auto lib = multiply(BurnsideElement::orbit(f.g, h), BurnsideElement::orbit(f.g, k));
        const auto ref =
            fromOrbits(f.g, productOrbits(f.og, f.sets.at(h), f.sets.at(k), f.og.elements));
        EXPECT_EQ(lib, ref) << f.e.toString();
      }
  }
}

TEST(Burnside, RestrictMatchesSubgroupOrbits) {
  for (const auto& f : fixtures(22, 24, 48)) {
    for (const auto& k : f.keys) {
      const GroupPtr kp = f.g->subgroupPresentation(k);
      for (const auto& h : f.keys) {
        const auto lib = restrict(BurnsideElement::orbit(f.g, h), k);
        ASSERT_TRUE(*lib.owner() == *kp);
        const auto ref = fromOrbits(kp, cosetOrbits(f.og, f.sets.at(h), f.sets.at(k)));
        EXPECT_EQ(lib, ref) << f.e.toString();
      }
    }
  }
}

TEST(Burnside, MarksCountFixedPoints) {
  for (const auto& f : fixtures(23, 20, 48)) {
    for (const auto& h : f.keys) {
      const CosetSpace cs(f.og, f.sets.at(h));
      for (const auto& k : f.keys) {
        std::int64_t fixed = 0;
        for (std::size_t i = 0; i < cs.cosets.size(); ++i) {
          bool all = true;
          for (const auto& x : f.sets.at(k)) all = all && cs.act(x, i, f.og.d) == i;
          fixed += all;
        }
        EXPECT_EQ(mark(BurnsideElement::orbit(f.g, h), k), fixed);
      }
    }
  }
}

TEST(Burnside, MarkIsRingHomomorphism) {
  std::mt19937_64 rng(24);
  for (const auto& f : fixtures(24, 20, 48)) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = randomElement(f, rng), b = randomElement(f, rng);
      for (const auto& k : f.keys) {
        EXPECT_EQ(mark(a * b, k), mark(a, k) * mark(b, k));
        EXPECT_EQ(mark(a + b, k), mark(a, k) + mark(b, k));
        EXPECT_EQ(mark(BurnsideElement::one(f.g), k), 1);
      }
    }
  }
}

TEST(Burnside, RingAxioms) {
  std::mt19937_64 rng(25);
  for (const auto& f : fixtures(25, 15, 40)) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = randomElement(f, rng), b = randomElement(f, rng), c = randomElement(f, rng);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(Burnside, InduceAndRestrictUnit) {
  for (const auto& f : fixtures(26, 15, 48)) {
    for (const auto& k : f.keys) {
      const auto res = restrict(BurnsideElement::one(f.g), k);
      EXPECT_EQ(res, BurnsideElement::one(f.g->subgroupPresentation(k)));
      EXPECT_EQ(induce(res, f.g), BurnsideElement::orbit(f.g, k));
    }
  }
}

TEST(Burnside, ElementZetaMatchesCycleType) {
  for (const auto& f : fixtures(27, 20, 48)) {
    for (const auto& x : f.og.elements) {
      const auto lx = f.g->element(oracle::toNumerators(x));
      for (const auto& h : f.keys) {
        CyclotomicProduct expected(lx.order());
        for (const auto& [len, count] : oracle::cycleType(f.og, f.sets.at(h), x))
          expected.addFactor(len, count);
        EXPECT_EQ(elementZeta(lx, BurnsideElement::orbit(f.g, h)), expected);
      }
    }
  }
}

TEST(Burnside, SaitoDualIsInvolution) {
  std::mt19937_64 rng(28);
  for (const auto& f : fixtures(28, 20, 60)) {
    const auto a = randomElement(f, rng);
    const auto d = saitoDual(a);
    EXPECT_TRUE(*d.owner() == *f.g->dualGroup());
    EXPECT_EQ(saitoDual(d), a);
    EXPECT_EQ(saitoDual(BurnsideElement::one(f.g)),
              BurnsideElement::orbit(f.g->dualGroup(), f.g->dualGroup()->trivialKey()));
  }
}

TEST(Burnside, CyclotomicCorrespondenceRoundTrip) {
  for (long d : {1, 2, 6, 9, 12, 30}) {
    const auto g = symmetryGroup(InvertiblePolynomial(IntMatrix{{d}}), Side::direct);
    const auto gen = g->snfGenerators().back();
    std::mt19937_64 rng(d);
    for (int trial = 0; trial < 20; ++trial) {
      BurnsideElement a(g);
      for (const auto& k : enumerateSubgroups(*g)) a.add(k, static_cast<long>(rng() % 5) - 2);
      EXPECT_EQ(burnsideFromCyclotomic(elementZeta(gen, a), g), a);
    }
  }
  const auto klein = symmetryGroup(InvertiblePolynomial(IntMatrix{{2, 0}, {0, 2}}), Side::direct);
  EXPECT_THROW(burnsideFromCyclotomic(CyclotomicProduct(4, {{2, 1}}), klein), StructureError);
  const auto z6 = symmetryGroup(InvertiblePolynomial(IntMatrix{{6}}), Side::direct);
  EXPECT_THROW(burnsideFromCyclotomic(CyclotomicProduct(3, {{3, 1}}), z6), StructureError);
}
