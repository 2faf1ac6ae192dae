#include <gtest/gtest.h>

#include "saito/cli.hpp"
#include "saito/errors.hpp"

using namespace saito;

namespace {

EnumerationBounds bounds(int maxVars, int maxExp, bool sums) {
  EnumerationBounds b;
  b.maxVars = maxVars;
  b.maxExp = maxExp;
  b.includeSums = sums;
  return b;
}

std::vector<std::string> keys(const Corpus& c) {
  std::vector<std::string> out;
  for (const auto& e : c.entries) out.push_back(e.key);
  return out;
}

// Every square matrix with diagonal in [2, maxExp] and at most one extra 1 per
// row, kept when it decomposes into loops and chains.
std::set<IntMatrix> bruteForceAtomSums(std::size_t n, int maxExp) {
  std::set<IntMatrix> out;
  std::vector<int> diag(n, 2), succ(n, 0);  // succ[i] = 0: none, else column succ[i]-1
  while (true) {
    IntMatrix e(n, n);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      e(i, i) = diag[i];
      if (succ[i]) {
        if (static_cast<std::size_t>(succ[i] - 1) == i) ok = false;
        else e(i, succ[i] - 1) = 1;
      }
    }
    if (ok && determinant(e) != 0 && decompose(InvertiblePolynomial(e)).nonDegenerate) {
      out.insert(canonicalRelabeling(e));
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (succ[i] < static_cast<int>(n)) {
        ++succ[i];
        break;
      }
      succ[i] = 0;
    }
    if (i < n) continue;
    for (i = 0; i < n; ++i) {
      if (diag[i] < maxExp) {
        ++diag[i];
        break;
      }
      diag[i] = 2;
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST(Bounds, Validation) {
  EXPECT_NO_THROW(validateBounds(bounds(1, 2, false)));
  EXPECT_NO_THROW(validateBounds(bounds(8, 9, true)));
  EXPECT_THROW(validateBounds(bounds(0, 5, false)), BoundsError);
  EXPECT_THROW(validateBounds(bounds(9, 5, false)), BoundsError);
  EXPECT_THROW(validateBounds(bounds(4, 1, false)), BoundsError);
  EXPECT_THROW(validateBounds(bounds(4, 10, false)), BoundsError);
  const EnumerationBounds d;
  EXPECT_EQ(d.maxVars, 4);
  EXPECT_EQ(d.maxExp, 5);
}

TEST(Corpus, SmallestFamily) {
  const auto c = generateCorpus(bounds(1, 3, false));
  EXPECT_EQ(keys(c), (std::vector<std::string>{"chain(2)", "chain(3)"}));
  EXPECT_EQ(c.entries[0].polynomial.toString(), "x1^2");
  const auto s = runEnumeration(bounds(1, 3, false));
  EXPECT_EQ(s.total, 2u);
  EXPECT_EQ(s.theoremPass, 2u);
  EXPECT_EQ(s.corollaryPass, 2u);
  EXPECT_EQ(exitCode(s), 0);
}

TEST(Corpus, TwoVariables) {
  const auto c = generateCorpus(bounds(2, 3, true));
  // 2 Fermat, 4 chains, 3 loops up to rotation, 3 Fermat sums
  EXPECT_EQ(c.entries.size(), 12u);
  const auto s = runEnumeration(bounds(2, 3, true));
  EXPECT_EQ(s.theoremFail, 0u);
  EXPECT_EQ(s.corollaryFail, 0u);
  EXPECT_TRUE(s.failures.empty());
}

TEST(Corpus, KindFilters) {
  auto b = bounds(3, 3, false);
  b.includeLoops = false;
  for (const auto& e : generateCorpus(b).entries) EXPECT_EQ(e.key.find("loop"), std::string::npos);
  b.includeLoops = true;
  b.includeChains = false;
  const auto loopsOnly = generateCorpus(b);
  for (const auto& e : loopsOnly.entries) EXPECT_EQ(e.key.find("chain"), std::string::npos);
  // loops of length 2 and 3 over {2,3}: 3 + 4 necklaces
  EXPECT_EQ(loopsOnly.entries.size(), 7u);
}

TEST(Corpus, DedupMatchesExhaustiveRelabeling) {
  for (int n = 1; n <= 3; ++n) {
    const auto c = generateCorpus(bounds(n, 3, true));
    std::set<IntMatrix> canon;
    std::set<IntMatrix> canonTopLayer;
    for (const auto& e : c.entries) {
      canon.insert(canonicalRelabeling(e.polynomial.exponents()));
      if (static_cast<int>(e.polynomial.numVariables()) == n)
        canonTopLayer.insert(canonicalRelabeling(e.polynomial.exponents()));
    }
    EXPECT_EQ(canon.size(), c.entries.size()) << "duplicate up to relabeling";
    EXPECT_EQ(canonTopLayer, bruteForceAtomSums(n, 3)) << n << " variables";
  }
  const auto big = generateCorpus(bounds(4, 3, true));
  std::set<IntMatrix> canon;
  for (const auto& e : big.entries) canon.insert(canonicalRelabeling(e.polynomial.exponents()));
  EXPECT_EQ(canon.size(), big.entries.size());
}

TEST(Corpus, AcceptanceSizeAndOrdering) {
  const auto c = generateCorpus(bounds(4, 5, true));
  EXPECT_GE(c.entries.size(), 500u);
  EXPECT_FALSE(c.truncated);
  for (std::size_t i = 1; i < c.entries.size(); ++i) {
    const auto& a = c.entries[i - 1];
    const auto& b = c.entries[i];
    EXPECT_TRUE(a.polynomial.numVariables() < b.polynomial.numVariables() ||
                (a.polynomial.numVariables() == b.polynomial.numVariables() && a.key < b.key));
  }
}

TEST(Corpus, TruncationAndSampling) {
  auto b = bounds(3, 4, true);
  b.limit = 10;
  const auto c = generateCorpus(b);
  EXPECT_TRUE(c.truncated);
  EXPECT_EQ(c.entries.size(), 10u);
  const auto s = runEnumeration(b);
  EXPECT_TRUE(s.truncated);
  EXPECT_EQ(exitCode(s) & kExitTruncated, kExitTruncated);

  auto sb = bounds(4, 5, true);
  sb.sample = 25;
  sb.seed = 99;
  const auto s1 = generateCorpus(sb);
  const auto s2 = generateCorpus(sb);
  EXPECT_EQ(s1.entries.size(), 25u);
  EXPECT_EQ(keys(s1), keys(s2));
  sb.seed = 100;
  EXPECT_NE(keys(generateCorpus(sb)), keys(s1));
}

TEST(Harness, DeterministicAcrossWorkerCounts) {
  auto b = bounds(3, 4, true);
  b.workers = 1;
  const std::string one = toJson(runEnumeration(b)).dump();
  b.workers = 4;
  const std::string four = toJson(runEnumeration(b)).dump();
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, toJson(runEnumeration(b)).dump());
}

TEST(Harness, ExitCodeBits) {
  BatchSummary s;
  EXPECT_EQ(exitCode(s), 0);
  s.theoremFail = 1;
  EXPECT_EQ(exitCode(s), kExitTheoremFailure);
  s.corollaryFail = 2;
  s.truncated = true;
  EXPECT_EQ(exitCode(s), kExitTheoremFailure | kExitCorollaryFailure | kExitTruncated);
  const auto j = toJson(s);
  for (const char* k : {"total", "theoremPass", "theoremFail", "corollaryChecked",
                        "corollaryPass", "corollaryFail", "failures", "truncated"})
    EXPECT_TRUE(j.contains(k)) << k;
}

TEST(Commands, AnalyzeExamples) {
  const auto a = runAnalyze("x^3*y+y^3");
  EXPECT_EQ(a.result["weights"]["canonicalWeights"], nlohmann::json::array({2, 3}));
  EXPECT_EQ(a.result["weights"]["canonicalDegree"], 9);
  EXPECT_EQ(a.result["decomposition"]["atoms"][0]["signature"], "chain(3,3)");
  EXPECT_EQ(a.result["group"]["structure"], "Z9");
  EXPECT_EQ(a.result["transposeGroup"]["structure"], "Z9");
  EXPECT_EQ(a.result["generators"].size(), 2u);
  EXPECT_NE(a.text.find("weights (2,3;9)"), std::string::npos);

  const auto b = runAnalyze("x^2");
  EXPECT_EQ(b.result["group"]["structure"], "Z2");
  EXPECT_NE(b.text.find("weights (1;2)"), std::string::npos);

  const auto c = runAnalyze("{\"E\":[[3,0],[1,2]]}");
  EXPECT_EQ(c.result["weights"]["canonicalWeights"], nlohmann::json::array({2, 2}));
  EXPECT_EQ(c.result["weights"]["gcdFactor"], 2);
  EXPECT_NE(c.text.find("c_f = 2"), std::string::npos);
}

TEST(Commands, WarningsAndErrors) {
  const auto a = runAnalyze("x^2*y + y");
  ASSERT_FALSE(a.warnings.empty());
  EXPECT_NE(a.warnings.back().find("degenerate-suspect"), std::string::npos);
  EXPECT_NE(a.text.find("[degenerate-suspect]"), std::string::npos);
  EXPECT_EQ(runAnalyze("3*x^2").warnings.size(), 1u);
  EXPECT_THROW(runAnalyze("x^-2"), ParseError);
  EXPECT_THROW(runZeta("x^2 + y^2 + x*y"), ShapeError);
}

TEST(Commands, ZetaDualRoots) {
  const auto z = runZeta("x^3*y + y^3");
  EXPECT_NE(z.text.find("classical zeta: (1-t^3)(1-t^9)^-1"), std::string::npos);
  const auto d = runDual("x^3 + x*y^2");
  EXPECT_EQ(d.exitCode, 0);
  EXPECT_TRUE(d.result["theorem"]["equal"].get<bool>());
  EXPECT_TRUE(d.result["corollary"]["equal"].get<bool>());
  const auto nd = runDual("x^2 + y^2");
  EXPECT_TRUE(nd.result["corollary"].is_null());
  const auto r = runRoots("x^2*y + y^5");
  EXPECT_EQ(r.result["roots"].size(), 2u);
  EXPECT_TRUE(runRoots("x^2 + y^2").result["roots"].empty());
}

TEST(Commands, Envelope) {
  RunConfig cfg;
  cfg.command = Command::zeta;
  cfg.input = "x^2";
  const auto j = envelope(cfg, runCommand(cfg).result);
  EXPECT_EQ(j["tool"], "saito");
  EXPECT_EQ(j["command"], "zeta");
  EXPECT_EQ(j["input"], "x^2");
  EXPECT_TRUE(j.contains("version"));
  EXPECT_EQ(j["result"]["classical"]["text"], "(1-t^2)");

  cfg.command = Command::enumerate;
  cfg.bounds = bounds(1, 2, false);
  const auto e = envelope(cfg, runCommand(cfg).result);
  EXPECT_EQ(e["input"]["maxVars"], 1);
  EXPECT_EQ(e["result"]["total"], 1);
}
