#pragma once

// Command implementations behind the `saito` executable. Each command builds
// a JSON result and a human-readable rendering; the executable only parses
// arguments and prints.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "saito/polynomial.hpp"
#include "saito/zeta.hpp"

namespace saito {

inline constexpr const char* kToolName = "saito";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Command { analyze, zeta, dual, roots, enumerate };
enum class OutputFormat { text, json };

struct EnumerationBounds {
  int maxVars = 4;
  int maxExp = 5;
  bool includeLoops = true;
  bool includeChains = true;
  bool includeSums = false;
  /// Evaluate a random sample of this many polynomials (chosen with `seed`).
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  /// Corpus size cap; larger corpora are cut and marked truncated.
  std::size_t limit = 250000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

struct RunConfig {
  Command command = Command::analyze;
  std::string input;
  OutputFormat outputFormat = OutputFormat::text;
  EnumerationBounds bounds;
};

/// Throws BoundsError unless 1 <= maxVars <= 8 and 2 <= maxExp <= 9.
void validateBounds(const EnumerationBounds& b);

struct CorpusEntry {
  std::string key;  ///< sorted atom signatures, e.g. "chain(2) + loop(2,3)"
  InvertiblePolynomial polynomial;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  bool truncated = false;
};

/// Loops and chains with exponents in [2, maxExp] and, with includeSums,
/// Thom-Sebastiani sums of them in at most maxVars variables, one
/// representative per variable permutation class, sorted by key.
Corpus generateCorpus(const EnumerationBounds& b);

/// Lexicographically smallest matrix obtained by permuting variables and
/// sorting monomials. Exhaustive over column permutations (n <= 8).
IntMatrix canonicalRelabeling(const IntMatrix& e);

struct BatchSummary {
  std::size_t total = 0;
  std::size_t theoremPass = 0;
  std::size_t theoremFail = 0;
  std::size_t corollaryChecked = 0;
  std::size_t corollaryPass = 0;
  std::size_t corollaryFail = 0;
  bool truncated = false;
  nlohmann::json failures = nlohmann::json::array();
};

BatchSummary runEnumeration(const EnumerationBounds& b);
nlohmann::json toJson(const BatchSummary& s);

/// Exit codes: 0 clean; bit 1 theorem failures; bit 2 corollary failures;
/// bit 4 truncated corpus; 64 usage or input error.
inline constexpr int kExitTheoremFailure = 1;
inline constexpr int kExitCorollaryFailure = 2;
inline constexpr int kExitTruncated = 4;
inline constexpr int kExitUsage = 64;
int exitCode(const BatchSummary& s);

struct CommandOutput {
  nlohmann::json result;
  std::string text;
  std::vector<std::string> warnings;
  int exitCode = 0;
};

CommandOutput runAnalyze(const std::string& input);
CommandOutput runZeta(const std::string& input);
CommandOutput runDual(const std::string& input);
CommandOutput runRoots(const std::string& input);
CommandOutput runEnumerate(const EnumerationBounds& b);
CommandOutput runCommand(const RunConfig& config);

/// {tool, version, command, input, result}
nlohmann::json envelope(const RunConfig& config, const nlohmann::json& result);
std::string toString(Command c);

}  // namespace saito
