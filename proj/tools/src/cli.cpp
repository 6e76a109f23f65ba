#include "covlab_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>

#include "covlab/errors.hpp"
#include "covlab/io/json.hpp"
#include "covlab/lab/analyze.hpp"

namespace covlab::cli {

namespace {

struct Options {
  std::string spec;
  std::string output;
  AnalyzeConfig config;
  std::size_t k = 0;
  std::size_t l = 0;
  std::string word;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("spec", o.spec, "system spec JSON file")->required();
  cmd->add_option("--depth", o.config.function_depth, "depth of test functions")->check(CLI::Range(1, 8));
  cmd->add_option("--orbit-depth", o.config.orbit_depth, "preimage depth N of the orbit basis");
  cmd->add_option("--forward-depth", o.config.forward_depth, "forward depth F of the orbit basis");
  cmd->add_option("--window", o.config.window, "layer window W of the psi-tilde basis")->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol", o.config.tolerance, "residual tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--output,-o", o.output, "write the report here instead of stdout");
}

void emit(const io::json& report, const Options& o, std::ostream& out) {
  const std::string text = io::dump(report);
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + o.output);
  file << text;
}

io::json residuals_report(const ShiftSystem& sys, const AnalyzeConfig& config) {
  const auto [psi, tilde] = analyze_residuals(sys, config);
  return io::json{{"schema", io::kSchemaVersion},
                  {"system", io::to_json(sys)},
                  {"config", io::to_json(config)},
                  {"residuals", {{"psi", io::to_json(psi)}, {"psi_tilde", io::to_json(tilde)}}}};
}

io::json witness_report(const ShiftSystem& sys, const Options& o) {
  const Cylinder w(sys, parse_word(o.word, sys.alphabet_size()));
  const WitnessReport report = certify_witness(sys, o.k, o.l, w, o.config);
  return io::json{{"schema", io::kSchemaVersion},
                  {"system", io::to_json(sys)},
                  {"config", io::to_json(o.config)},
                  {"witness", io::to_json(report)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Truncated representations of crossed products by covering-map endomorphisms", "covlab");
  app.require_subcommand(1);
  Options o;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "freeness verdict, residuals, witness or probe");
  add_common(analyze_cmd, o);
  analyze_cmd->add_option("--probe-trials", o.config.probe_trials, "random monomials in the probe");
  analyze_cmd->add_option("--seed", o.config.seed, "probe seed");

  CLI::App* residuals_cmd = app.add_subcommand("residuals", "relation residuals only");
  add_common(residuals_cmd, o);

  CLI::App* witness_cmd = app.add_subcommand("witness", "certificates for the witness f s^k (s*)^l f");
  add_common(witness_cmd, o);
  witness_cmd->add_option("k", o.k, "power of s")->required();
  witness_cmd->add_option("l", o.l, "power of s*")->required();
  witness_cmd->add_option("w", o.word, "cylinder word")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "covlab: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const ShiftSystem sys = io::load_system(o.spec);
    if (analyze_cmd->parsed()) {
      emit(io::to_json(analyze(sys, o.config)), o, out);
    } else if (residuals_cmd->parsed()) {
      emit(residuals_report(sys, o.config), o, out);
    } else {
      emit(witness_report(sys, o), o, out);
    }
  } catch (const WitnessPreconditionError& e) {
    err << "covlab: " << e.what() << "\n";
    return kWitnessPrecondition;
  } catch (const InputError& e) {
    err << "covlab: " << e.what() << "\n";
    return kInvalidSpec;
  } catch (const AmbiguousTruncationError& e) {
    err << "covlab: " << e.what() << "\n";
    return kAmbiguousTruncation;
  } catch (const ResourceError& e) {
    err << "covlab: " << e.what() << "\n";
    return kAmbiguousTruncation;
  }
  return kOk;
}

}  // namespace covlab::cli
