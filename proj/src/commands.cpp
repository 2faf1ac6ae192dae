#include <sstream>

#include "saito/cli.hpp"
#include "saito/errors.hpp"
#include "saito/serialize.hpp"

namespace saito {

std::string toString(Command c) {
  switch (c) {
    case Command::analyze: return "analyze";
    case Command::zeta: return "zeta";
    case Command::dual: return "dual";
    case Command::roots: return "roots";
    case Command::enumerate: return "enumerate";
  }
  return "?";
}

namespace {

std::string joinIntegers(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

std::vector<std::string> atomWarnings(const AtomicDecomposition& dec) {
  std::vector<std::string> out;
  for (const auto& a : dec.atoms) {
    if (a.degenerateSuspect()) out.push_back("degenerate-suspect atom " + a.signature());
  }
  return out;
}

void appendAll(std::vector<std::string>& to, const std::vector<std::string>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace

CommandOutput runAnalyze(const std::string& input) {
  ParseResult parsed = parsePolynomial(input);
  const InvertiblePolynomial& f = parsed.polynomial;
  const InvertiblePolynomial ft = f.transpose();
  const WeightSystem w = canonicalWeights(f);
  const AtomicDecomposition dec = decompose(f);
  const GroupPtr g = symmetryGroup(f, Side::direct);
  const GroupPtr gt = symmetryGroup(ft, Side::direct);

  CommandOutput out;
  out.warnings = parsed.warnings;
  appendAll(out.warnings, atomWarnings(dec));

  nlohmann::json gens = nlohmann::json::array();
  for (const auto& s : g->columnGenerators()) gens.push_back(toJson(s));
  nlohmann::json milnor = nullptr;
  try {
    milnor = toJson(milnorNumber(f));
  } catch (const DegeneracyError&) {
  }

  out.result = {{"polynomial", toJson(f)},
                {"weights", toJson(w)},
                {"decomposition", toJson(dec)},
                {"group", toJson(*g)},
                {"generators", std::move(gens)},
                {"transpose", toJson(ft)},
                {"transposeGroup", toJson(*gt)},
                {"milnorNumber", milnor}};

  std::ostringstream os;
  os << "f = " << f.toString() << '\n';
  os << "E = " << f.exponents().toString() << '\n';
  os << "weights (" << joinIntegers(w.canonicalWeights) << ";" << w.canonicalDegree
     << "), reduced (" << joinIntegers(w.reducedWeights) << ";" << w.reducedDegree
     << "), c_f = " << w.gcdFactor << '\n';
  os << "atoms:";
  for (const auto& a : dec.atoms) {
    os << ' ' << a.signature() << (a.degenerateSuspect() ? " [degenerate-suspect]" : "");
  }
  os << (dec.nonDegenerate ? "" : " (not a sum of loops and chains)") << '\n';
  os << "G_f = " << g->structureString() << ", invariant factors ("
     << joinIntegers(g->invariantFactors()) << ")\n";
  os << "generators:";
  for (const auto& s : g->columnGenerators()) os << ' ' << s.toString();
  os << '\n';
  os << "transpose = " << ft.toString() << '\n';
  os << "G_f~ = " << gt->structureString() << ", invariant factors ("
     << joinIntegers(gt->invariantFactors()) << ")\n";
  if (!milnor.is_null()) os << "Milnor number = " << milnor.dump() << '\n';
  out.text = os.str();
  return out;
}

CommandOutput runZeta(const std::string& input) {
  ParseResult parsed = parsePolynomial(input);
  const ZetaReport z = equivariantZeta(parsed.polynomial);
  CommandOutput out;
  out.warnings = parsed.warnings;
  appendAll(out.warnings, atomWarnings(decompose(parsed.polynomial)));
  out.result = toJson(z);

  std::ostringstream os;
  os << "f = " << z.polynomial.toString() << ", G_f = " << z.group->structureString() << '\n';
  os << "equivariant zeta: " << z.equivariant.toString() << '\n';
  os << "reduced: " << z.reduced.toString() << '\n';
  os << "classical zeta: " << z.classical.toString() << '\n';
  os << "strata:\n";
  for (const auto& t : z.perSubsetTerms) {
    os << "  I = {";
    for (std::size_t i = 0; i < t.subset.size(); ++i) os << (i ? "," : "") << t.subset[i] + 1;
    os << "}  coeff " << t.coefficient << "  |G^I| = " << t.isotropy.order
       << "  |det E_I| = " << t.minorDeterminant << '\n';
  }
  out.text = os.str();
  return out;
}

CommandOutput runDual(const std::string& input) {
  ParseResult parsed = parsePolynomial(input);
  const InvertiblePolynomial& f = parsed.polynomial;
  const VerificationReport theorem = verifyTheorem(f);
  std::optional<VerificationReport> corollary;
  if (symmetryGroup(f, Side::direct)->isCyclic()) corollary = verifyCorollary(f);

  CommandOutput out;
  out.warnings = parsed.warnings;
  appendAll(out.warnings, atomWarnings(decompose(f)));
  out.result = {{"polynomial", toJson(f)},
                {"transpose", toJson(f.transpose())},
                {"theorem", toJson(theorem)},
                {"corollary", corollary ? toJson(*corollary) : nlohmann::json(nullptr)}};
  if (!theorem.equal) out.exitCode |= kExitTheoremFailure;
  if (corollary && !corollary->equal) out.exitCode |= kExitCorollaryFailure;

  std::ostringstream os;
  os << "f = " << f.toString() << ", transpose = " << f.transpose().toString() << '\n';
  os << "theorem: " << (theorem.equal ? "holds" : "FAILS") << '\n';
  os << "  reduced zeta of transpose: " << theorem.lhsText << '\n';
  os << "  (-1)^n D_G (reduced zeta of f): " << theorem.rhsText << '\n';
  if (corollary) {
    os << "corollary: " << (corollary->equal ? "holds" : "FAILS") << '\n';
    os << "  " << corollary->lhsText << "  vs  " << corollary->rhsText << '\n';
  } else {
    os << "corollary: not applicable (G_f is not cyclic)\n";
  }
  out.text = os.str();
  return out;
}

CommandOutput runRoots(const std::string& input) {
  ParseResult parsed = parsePolynomial(input);
  const InvertiblePolynomial& f = parsed.polynomial;
  const GroupPtr g = symmetryGroup(f, Side::direct);
  const GroupElement h = monodromyElement(f, g);
  const std::vector<GroupElement> roots = geometricRoots(f, g);
  const WeightSystem w = canonicalWeights(f);

  CommandOutput out;
  out.warnings = parsed.warnings;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : roots) {
    auto j = toJson(r);
    j["generator"] = r.order() == g->order();
    list.push_back(std::move(j));
  }
  out.result = {{"polynomial", toJson(f)},
                {"group", toJson(*g)},
                {"monodromy", toJson(h)},
                {"gcdFactor", toJson(w.gcdFactor)},
                {"roots", std::move(list)}};

  std::ostringstream os;
  os << "f = " << f.toString() << ", G_f = " << g->structureString() << '\n';
  os << "h = " << h.toString() << ", c_f = " << w.gcdFactor << '\n';
  if (roots.empty()) {
    os << "no geometric roots (G_f is not cyclic)\n";
  } else {
    os << roots.size() << " geometric root" << (roots.size() == 1 ? "" : "s") << ":\n";
    for (const auto& r : roots) {
      os << "  " << r.toString() << (r.order() == g->order() ? "  generator" : "") << '\n';
    }
  }
  out.text = os.str();
  return out;
}

CommandOutput runEnumerate(const EnumerationBounds& b) {
  const BatchSummary s = runEnumeration(b);
  CommandOutput out;
  out.result = toJson(s);
  out.exitCode = exitCode(s);
  if (s.truncated) out.warnings.push_back("corpus truncated at " + std::to_string(b.limit));

  std::ostringstream os;
  os << "polynomials: " << s.total << (s.truncated ? " (truncated)" : "") << '\n';
  os << "theorem: " << s.theoremPass << " pass, " << s.theoremFail << " fail\n";
  os << "corollary: " << s.corollaryChecked << " checked, " << s.corollaryPass << " pass, "
     << s.corollaryFail << " fail\n";
  for (const auto& rec : s.failures) {
    os << "FAIL " << rec["kind"].get<std::string>() << ": " << rec["key"].get<std::string>()
       << "  (" << rec["polynomial"]["text"].get<std::string>() << ")\n";
  }
  out.text = os.str();
  return out;
}

CommandOutput runCommand(const RunConfig& config) {
  switch (config.command) {
    case Command::analyze: return runAnalyze(config.input);
    case Command::zeta: return runZeta(config.input);
    case Command::dual: return runDual(config.input);
    case Command::roots: return runRoots(config.input);
    case Command::enumerate: return runEnumerate(config.bounds);
  }
  throw Error("unknown command");
}

nlohmann::json envelope(const RunConfig& config, const nlohmann::json& result) {
  nlohmann::json input;
  if (config.command == Command::enumerate) {
    const auto& b = config.bounds;
    input = {{"maxVars", b.maxVars},       {"maxExp", b.maxExp},
             {"includeLoops", b.includeLoops}, {"includeChains", b.includeChains},
             {"includeSums", b.includeSums},   {"seed", b.seed},
             {"limit", b.limit}};
    if (b.sample) input["sample"] = *b.sample;
  } else {
    input = config.input;
  }
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", toString(config.command)},
          {"input", std::move(input)},
          {"result", result}};
}

}  // namespace saito
