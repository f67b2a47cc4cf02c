#include "commands.hpp"

#include "bellsim/circuit_doc.hpp"

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

using namespace bellsim;
using namespace bellsim::cli;

Complex parse_complex_or_throw(const std::string& text) {
  const auto value = parse_complex_arg(text);
  if (!value)
    throw std::invalid_argument("invalid complex number '" + text +
                                "' (expected RE or RE,IM)");
  return *value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-pair creation, analysis and validation in the "
               "vacuum-superposed pair basis"};
  app.set_version_flag("--version", "bellsim 1.0.0");
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
  };
  const std::vector<std::string> rect_names{"HH", "HV", "VH", "VV"};
  const std::vector<std::string> bell_names{"psi-plus", "psi-minus", "phi-plus",
                                            "phi-minus"};

  std::string create_eps = "0.01";
  std::string create_input = "HH";
  bool create_trace = false;
  CLI::App* create = app.add_subcommand(
      "create", "Run the creator on |0> + eps|pair> and name the Bell output");
  add_format(create);
  create->add_option("--epsilon", create_eps, "down-conversion amplitude (RE or RE,IM)")
      ->capture_default_str();
  create->add_option("--input", create_input, "rectilinear pair class")
      ->check(CLI::IsMember(rect_names))
      ->capture_default_str();
  create->add_flag("--trace", create_trace, "print the state after every element");

  std::string analyze_eps = "0.01";
  std::string analyze_input = "psi-minus";
  bool analyze_trace = false;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Run the analyzer on |0> - eps|Bell> and name the coincidence");
  add_format(analyze);
  analyze
      ->add_option("--epsilon", analyze_eps, "down-conversion amplitude (RE or RE,IM)")
      ->capture_default_str();
  analyze->add_option("--input", analyze_input, "Bell state label")
      ->check(CLI::IsMember(bell_names))
      ->capture_default_str();
  analyze->add_flag("--trace", analyze_trace, "print the state after every element");

  std::string tables_eps = "0.01";
  double tables_tol = 1e-12;
  CLI::App* tables = app.add_subcommand(
      "tables", "Check all creation and detection mappings; nonzero exit on failure");
  add_format(tables);
  tables->add_option("--epsilon", tables_eps, "down-conversion amplitude (RE or RE,IM)")
      ->capture_default_str();
  tables->add_option("--tol", tables_tol, "per-amplitude tolerance")
      ->capture_default_str();

  std::string validate_eps = "0.001";
  std::string validate_mu;
  int validate_nmax = 2;
  double validate_tol = 1e-5;
  std::vector<double> validate_scales{1e-2, 1e-3, 1e-4};
  CLI::App* validate = app.add_subcommand(
      "validate", "Compare the switch model against exact truncated propagation");
  add_format(validate);
  validate
      ->add_option("--epsilon", validate_eps, "pair amplitude at the operating point")
      ->capture_default_str();
  validate->add_option("--mu", validate_mu,
                       "switch injection (default -2*epsilon, the pi setting)");
  validate->add_option("--nmax", validate_nmax, "per-mode photon cutoff")
      ->capture_default_str();
  validate->add_option("--tol", validate_tol, "amplitude tolerance at the point")
      ->capture_default_str();
  validate
      ->add_option("--scales", validate_scales,
                   "comma-separated amplitude scales for the error fit")
      ->delimiter(',');

  std::string sample_eps = "0.1";
  std::string sample_bell = "psi-minus";
  std::uint64_t sample_shots = 1000000;
  std::uint64_t sample_seed = 12345;
  double sample_efficiency = 1.0;
  CLI::App* sample = app.add_subcommand(
      "sample", "Monte Carlo detector counts for an analyzed Bell state");
  add_format(sample);
  sample->add_option("--epsilon", sample_eps, "down-conversion amplitude (RE or RE,IM)")
      ->capture_default_str();
  sample->add_option("--bell", sample_bell, "Bell state fed to the analyzer")
      ->check(CLI::IsMember(bell_names))
      ->capture_default_str();
  sample->add_option("--shots", sample_shots, "number of shots")
      ->capture_default_str();
  sample->add_option("--seed", sample_seed, "RNG seed")->capture_default_str();
  sample->add_option("--efficiency", sample_efficiency, "per-detector efficiency")
      ->capture_default_str();

  std::string run_doc;
  std::string run_emit;
  std::string run_eps = "0.01";
  bool run_trace = false;
  CLI::App* run = app.add_subcommand(
      "run", "Execute a circuit document, or emit one with --emit");
  add_format(run);
  CLI::Option* run_doc_opt =
      run->add_option("--doc", run_doc, "circuit document path, or - for stdin");
  CLI::Option* run_emit_opt =
      run->add_option("--emit", run_emit, "print a device document instead")
          ->check(CLI::IsMember({"creator", "analyzer"}));
  run_doc_opt->excludes(run_emit_opt);
  run->add_option("--epsilon", run_eps, "amplitude for --emit")->capture_default_str();
  run->add_flag("--trace", run_trace, "print the state after every element");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format fmt = format == "machine" ? Format::machine : Format::text;

  try {
    if (create->parsed()) {
      CreateOptions options;
      options.format = fmt;
      options.epsilon = parse_complex_or_throw(create_eps);
      options.input = *parse_rect_label(create_input);
      options.trace = create_trace;
      return cmd_create(options, std::cout);
    }
    if (analyze->parsed()) {
      AnalyzeOptions options;
      options.format = fmt;
      options.epsilon = parse_complex_or_throw(analyze_eps);
      options.input = *parse_bell_label(analyze_input);
      options.trace = analyze_trace;
      return cmd_analyze(options, std::cout);
    }
    if (tables->parsed()) {
      TablesOptions options;
      options.format = fmt;
      options.epsilon = parse_complex_or_throw(tables_eps);
      options.tol = tables_tol;
      return cmd_tables(options, std::cout);
    }
    if (validate->parsed()) {
      ValidateOptions options;
      options.format = fmt;
      options.epsilon = parse_complex_or_throw(validate_eps);
      if (!validate_mu.empty()) options.mu = parse_complex_or_throw(validate_mu);
      options.n_max = validate_nmax;
      options.tol = validate_tol;
      options.scales = validate_scales;
      return cmd_validate(options, std::cout);
    }
    if (sample->parsed()) {
      SampleOptions options;
      options.format = fmt;
      options.epsilon = parse_complex_or_throw(sample_eps);
      options.bell = *parse_bell_label(sample_bell);
      options.shots = sample_shots;
      options.seed = sample_seed;
      options.efficiency = sample_efficiency;
      return cmd_sample(options, std::cout);
    }
    if (run->parsed()) {
      RunOptions options;
      options.format = fmt;
      options.doc_path = run_doc;
      options.emit_device = run_emit;
      options.epsilon = parse_complex_or_throw(run_eps);
      options.trace = run_trace;
      return cmd_run(options, std::cout);
    }
  } catch (const DocError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
