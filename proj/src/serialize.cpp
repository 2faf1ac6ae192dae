#include "saito/serialize.hpp"

#include "saito/zeta.hpp"

namespace saito {

using nlohmann::json;

json toJson(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json toJson(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(toJson(x));
  return out;
}

json toJson(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(toJson(m.row(i)));
  return out;
}

json toJson(const SubgroupKey& k) {
  return {{"order", toJson(k.order)}, {"basis", toJson(k.basis.entries())}};
}

json toJson(const GroupElement& g) {
  const RationalVector c = g.coords();
  json coords = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) coords.push_back(c[i].get_str());
  return {{"coords", std::move(coords)}, {"order", toJson(g.order())}};
}

json toJson(const BurnsideElement& a) {
  json out = json::array();
  for (const auto& [h, c] : a.terms()) {
    out.push_back({{"subgroup", toJson(h)}, {"coeff", toJson(c)}});
  }
  return out;
}

json toJson(const CyclotomicProduct& phi) {
  // object keys are decimal strings, so they sort as strings ("10" < "3")
  json obj = json::object();
  for (const auto& [m, s] : phi.factors()) obj[m.get_str()] = toJson(s);
  return {{"d", toJson(phi.modulus())}, {"factors", std::move(obj)},
          {"text", phi.toString()}};
}

json toJson(const WeightSystem& w) {
  return {{"canonicalWeights", toJson(w.canonicalWeights)},
          {"canonicalDegree", toJson(w.canonicalDegree)},
          {"gcdFactor", toJson(w.gcdFactor)},
          {"reducedWeights", toJson(w.reducedWeights)},
          {"reducedDegree", toJson(w.reducedDegree)}};
}

json toJson(const AtomicDecomposition& dec) {
  json atoms = json::array();
  for (const auto& a : dec.atoms) {
    atoms.push_back({{"kind", a.kind == AtomKind::loop ? "loop" : "chain"},
                     {"variables", a.variables},
                     {"monomials", a.monomials},
                     {"exponents", toJson(a.exponents)},
                     {"signature", a.signature()},
                     {"degenerateSuspect", a.degenerateSuspect()}});
  }
  return {{"nonDegenerate", dec.nonDegenerate}, {"atoms", std::move(atoms)}};
}

json toJson(const AbelianGroup& g) {
  return {{"side", toString(g.side())},
          {"order", toJson(g.order())},
          {"invariantFactors", toJson(g.invariantFactors())},
          {"cyclic", g.isCyclic()},
          {"structure", g.structureString()}};
}

json toJson(const InvertiblePolynomial& f) {
  return {{"text", f.toString()}, {"vars", f.variables()}, {"E", toJson(f.exponents())}};
}

json toJson(const SubsetTerm& t) {
  return {{"I", t.subset},
          {"supportRows", t.supportRows},
          {"coefficient", toJson(t.coefficient)},
          {"isotropy", toJson(t.isotropy)},
          {"minorDeterminant", toJson(t.minorDeterminant)},
          {"torusEulerCharacteristic", toJson(t.torusEulerCharacteristic)}};
}

json toJson(const ZetaReport& z) {
  json terms = json::array();
  for (const auto& t : z.perSubsetTerms) terms.push_back(toJson(t));
  return {{"polynomial", toJson(z.polynomial)},
          {"group", toJson(*z.group)},
          {"equivariant", toJson(z.equivariant)},
          {"equivariantText", z.equivariant.toString()},
          {"reduced", toJson(z.reduced)},
          {"reducedText", z.reduced.toString()},
          {"classical", toJson(z.classical)},
          {"perSubsetTerms", std::move(terms)}};
}

json toJson(const VerificationReport& r) {
  json out = {{"kind", toString(r.kind)},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"lhsText", r.lhsText},
              {"rhsText", r.rhsText},
              {"equal", r.equal}};
  if (!r.equal) out["witness"] = r.witness;
  return out;
}

}  // namespace saito
