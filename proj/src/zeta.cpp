#include "saito/zeta.hpp"

#include <sstream>

#include "saito/errors.hpp"
#include "saito/serialize.hpp"

namespace saito {

std::string toString(VerificationKind k) {
  return k == VerificationKind::theorem ? "theorem" : "corollary";
}

std::vector<std::size_t> rowsSupportedIn(const IntMatrix& e,
                                         const std::vector<std::size_t>& cols) {
  std::vector<bool> inside(e.cols(), false);
  for (std::size_t c : cols) inside.at(c) = true;
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    bool ok = true;
    for (std::size_t c = 0; c < e.cols() && ok; ++c) ok = inside[c] || e(r, c) == 0;
    if (ok) rows.push_back(r);
  }
  return rows;
}

ZetaReport equivariantZeta(const InvertiblePolynomial& f, const GroupPtr& g) {
  const IntMatrix& e = f.exponents();
  if (!g->isFull() || g->membership() != e) {
    throw OwnershipError("zeta function needs the symmetry group of the polynomial itself");
  }
  const std::size_t n = f.numVariables();
  if (n >= 8 * sizeof(unsigned long)) throw ResourceError("too many variables");

  ZetaReport report{f, g, BurnsideElement(g), BurnsideElement(g), CyclotomicProduct(), {}};
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) subset.push_back(i);
    std::vector<std::size_t> rows = rowsSupportedIn(e, subset);
    // the stratum has non-zero Euler characteristic iff exactly |I| monomials live on it
    if (rows.size() != subset.size()) continue;

    SubsetTerm term;
    term.coefficient = subset.size() % 2 == 1 ? 1 : -1;
    term.isotropy = isotropySubgroup(*g, subset);
    term.minorDeterminant = abs(determinant(e.submatrix(rows, subset)));
    term.torusEulerCharacteristic = term.coefficient * term.minorDeterminant;
    term.subset = std::move(subset);
    term.supportRows = std::move(rows);
    report.equivariant.add(term.isotropy, term.coefficient);
    report.perSubsetTerms.push_back(std::move(term));
  }
  report.reduced = report.equivariant - BurnsideElement::one(g);
  report.classical = elementZeta(monodromyElement(f, g), report.equivariant);
  return report;
}

ZetaReport equivariantZeta(const InvertiblePolynomial& f) {
  return equivariantZeta(f, symmetryGroup(f, Side::direct));
}

CyclotomicProduct classicalZeta(const InvertiblePolynomial& f) {
  return equivariantZeta(f).classical;
}

CyclotomicProduct classicalSaitoDual(const CyclotomicProduct& phi) {
  CyclotomicProduct r(phi.modulus());
  for (const auto& [m, s] : phi.factors()) r.addFactor(phi.modulus() / m, -s);
  return r;
}

namespace {

nlohmann::json auditTrail(const ZetaReport& z) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : z.perSubsetTerms) terms.push_back(toJson(t));
  return {{"polynomial", z.polynomial.toString()},
          {"E", toJson(z.polynomial.exponents())},
          {"group", toJson(*z.group)},
          {"equivariant", toJson(z.equivariant)},
          {"perSubsetTerms", std::move(terms)}};
}

std::vector<GroupElement> generatingRoots(std::vector<GroupElement> roots) {
  std::erase_if(roots, [](const GroupElement& x) { return x.order() != x.owner()->order(); });
  return roots;
}

}  // namespace

VerificationReport verifyTheorem(const InvertiblePolynomial& f) {
  const GroupPtr g = symmetryGroup(f, Side::direct);
  const GroupPtr gt = g->dualGroup();
  const ZetaReport zf = equivariantZeta(f, g);
  const ZetaReport zt = equivariantZeta(f.transpose(), gt);

  const BurnsideElement lhs = zt.reduced;
  const Integer sign = f.numVariables() % 2 == 0 ? 1 : -1;
  const BurnsideElement rhs = saitoDual(zf.reduced) * sign;

  VerificationReport r{VerificationKind::theorem, toJson(lhs), toJson(rhs),
                       lhs.toString(), rhs.toString(), lhs == rhs, nullptr};
  if (!r.equal) {
    r.witness = {{"lhsMinusRhs", toJson(lhs - rhs)},
                 {"f", auditTrail(zf)},
                 {"transpose", auditTrail(zt)}};
  }
  return r;
}

VerificationReport verifyCorollary(const InvertiblePolynomial& f) {
  const GroupPtr g = symmetryGroup(f, Side::direct);
  if (!g->isCyclic()) {
    std::ostringstream os;
    os << "corollary needs a cyclic symmetry group; invariant factors are (";
    for (std::size_t i = 0; i < g->invariantFactors().size(); ++i) {
      os << (i ? "," : "") << g->invariantFactors()[i];
    }
    os << ')';
    throw PreconditionError(os.str());
  }
  const GroupPtr gt = g->dualGroup();
  const InvertiblePolynomial ft = f.transpose();
  const ZetaReport zf = equivariantZeta(f, g);
  const ZetaReport zt = equivariantZeta(ft, gt);
  // Only roots that generate G_f are used: when c_f shares a factor with the
  // order of h_f, some solutions of g^{c_f} = h_f have smaller order. For a
  // generator the result of elementZeta does not depend on the choice.
  const std::vector<GroupElement> rootsF = generatingRoots(geometricRoots(f, g));
  const std::vector<GroupElement> rootsT = generatingRoots(geometricRoots(ft, gt));

  VerificationReport r{VerificationKind::corollary, nullptr, nullptr, "", "", false, nullptr};
  if (rootsF.empty() || rootsT.empty()) {
    r.witness = {{"error", rootsF.empty() ? "f has no generating geometric root"
                                          : "the transpose has no generating geometric root"},
                 {"f", auditTrail(zf)},
                 {"transpose", auditTrail(zt)}};
    return r;
  }
  const Integer& d = g->order();
  const CyclotomicProduct lhs = elementZeta(rootsT.front(), zt.reduced).withModulus(d);
  CyclotomicProduct rhs =
      classicalSaitoDual(elementZeta(rootsF.front(), zf.reduced).withModulus(d));
  if (f.numVariables() % 2 == 0) rhs = rhs.inverse();

  r.lhs = toJson(lhs);
  r.rhs = toJson(rhs);
  r.lhsText = lhs.toString();
  r.rhsText = rhs.toString();
  r.equal = lhs == rhs;
  if (!r.equal) {
    r.witness = {{"rootF", toJson(rootsF.front())},
                 {"rootTranspose", toJson(rootsT.front())},
                 {"f", auditTrail(zf)},
                 {"transpose", auditTrail(zt)}};
  }
  return r;
}

Integer milnorNumber(const InvertiblePolynomial& f) {
  if (!decompose(f).nonDegenerate) {
    throw DegeneracyError("polynomial " + f.toString() +
                          " is not a sum of loops and chains; no isolated singularity");
  }
  const WeightSystem w = canonicalWeights(f);
  Rational mu = 1;
  for (const auto& wi : w.canonicalWeights) {
    if (wi <= 0) throw DegeneracyError("non-positive canonical weight " + wi.get_str());
    mu *= Rational(w.canonicalDegree - wi, wi);
  }
  mu.canonicalize();
  if (mu.get_den() != 1) {
    throw DegeneracyError("Milnor number formula gives the non-integer " + mu.get_str());
  }
  return mu.get_num();
}

}  // namespace saito
