#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "saito/cli.hpp"
#include "saito/errors.hpp"

using namespace saito;

namespace {

void addPolynomialCommand(CLI::App& app, const char* name, const char* help, Command cmd,
                          RunConfig& config, bool& json) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("polynomial", config.input, "polynomial text or {\"E\": ..., \"vars\": ...}")
      ->required();
  sub->add_flag("--json", json, "emit JSON");
  sub->callback([&config, cmd] { config.command = cmd; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant monodromy zeta functions of invertible polynomials"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  RunConfig config;
  bool json = false;
  std::string outFile;

  addPolynomialCommand(app, "analyze", "weights, atoms and symmetry groups", Command::analyze,
                       config, json);
  addPolynomialCommand(app, "zeta", "equivariant and classical zeta function", Command::zeta,
                       config, json);
  addPolynomialCommand(app, "dual", "check Saito duality against the transpose", Command::dual,
                       config, json);
  addPolynomialCommand(app, "roots", "geometric roots of the monodromy", Command::roots, config,
                       json);

  auto& b = config.bounds;
  std::size_t sample = 0;
  bool noLoops = false, noChains = false;
  auto* en = app.add_subcommand("enumerate", "verify duality on a family of polynomials");
  en->add_option("--max-vars", b.maxVars, "at most this many variables (1..8)")
      ->capture_default_str();
  en->add_option("--max-exp", b.maxExp, "exponents in [2, P] (P in 2..9)")->capture_default_str();
  en->add_flag("--sums", b.includeSums, "include Thom-Sebastiani sums of atoms");
  en->add_flag("--no-loops", noLoops, "skip loop atoms");
  en->add_flag("--no-chains", noChains, "skip chain atoms");
  en->add_option("--limit", b.limit, "truncate the corpus beyond this size")
      ->capture_default_str();
  en->add_option("--sample", sample, "check a random sample of this size");
  en->add_option("--seed", b.seed, "seed for --sample")->capture_default_str();
  en->add_option("--workers", b.workers, "worker threads (0 = all cores)");
  en->add_flag("--json", json, "emit JSON");
  en->add_option("--out", outFile, "write the report to FILE");
  en->callback([&] { config.command = Command::enumerate; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  b.includeLoops = !noLoops;
  b.includeChains = !noChains;
  if (sample) b.sample = sample;
  config.outputFormat = json ? OutputFormat::json : OutputFormat::text;

  CommandOutput out;
  try {
    out = runCommand(config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto& w : out.warnings) std::cerr << "warning: " << w << '\n';
  const std::string body = config.outputFormat == OutputFormat::json
                               ? envelope(config, out.result).dump(2) + "\n"
                               : out.text;
  if (outFile.empty()) {
    std::cout << body;
  } else {
    std::ofstream os(outFile);
    if (!os) {
      std::cerr << "error: cannot write " << outFile << '\n';
      return kExitUsage;
    }
    os << body;
  }
  return out.exitCode;
}
