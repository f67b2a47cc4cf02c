#include "commands.hpp"

#include "support/subprocess.hpp"

#include <sstream>

#include <doctest.h>
#include <json.hpp>

using namespace bellsim;
using namespace bellsim::cli;
using testsupport::run_command;

namespace {

const std::string kCli = BELLSIM_CLI_PATH;

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("format_double round trips and stays short for exact values") {
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(-2.0) == "-2");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("format_complex folds a zero imaginary part") {
  CHECK(format_complex(Complex{0.5, 0.0}) == "0.5");
  CHECK(format_complex(Complex{0.5, -0.0}) == "0.5");
  CHECK(format_complex(Complex{1.0, 2.0}) == "1 + 2i");
  CHECK(format_complex(Complex{1.0, -0.5}) == "1 - 0.5i");
}

TEST_CASE("parse_complex_arg accepts RE and RE,IM") {
  CHECK(parse_complex_arg("0.01") == Complex{0.01, 0.0});
  CHECK(parse_complex_arg("-1e-3,2.5") == Complex{-1e-3, 2.5});
  CHECK_FALSE(parse_complex_arg("").has_value());
  CHECK_FALSE(parse_complex_arg("abc").has_value());
  CHECK_FALSE(parse_complex_arg("1.0,x").has_value());
  CHECK_FALSE(parse_complex_arg("1.0,").has_value());
  CHECK_FALSE(parse_complex_arg("1.0 2.0").has_value());
}

TEST_CASE("cmd_create reports the mapped Bell state") {
  std::ostringstream out;
  CreateOptions options;
  CHECK(cmd_create(options, out) == 0);
  CHECK(out.str().find("psi-minus") != std::string::npos);
  CHECK(out.str().find("max deviation") != std::string::npos);
}

TEST_CASE("cmd_tables machine output carries both tables and the note") {
  std::ostringstream out;
  TablesOptions options;
  options.format = Format::machine;
  CHECK(cmd_tables(options, out) == 0);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("creation").at("rows").size() == 4);
  CHECK(j.at("detection").at("rows").size() == 4);
  CHECK(j.at("worked_example").at("stages").size() == 4);
  CHECK(j.at("prefactor_note").get<std::string>().find("factor of 2") !=
        std::string::npos);
  CHECK(j.at("detection").at("rows").at(3).at("coincidence").at(0) == "D2");
}

TEST_CASE("cmd_tables fails an impossible tolerance") {
  std::ostringstream out;
  TablesOptions options;
  options.tol = 1e-300;
  CHECK(cmd_tables(options, out) == 1);
  CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("cmd_validate machine output exposes the fit") {
  std::ostringstream out;
  ValidateOptions options;
  options.format = Format::machine;
  CHECK(cmd_validate(options, out) == 0);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("operating_point").at("max_deviation").get<double>() < 1e-5);
  const double exponent = j.at("scaling").at("exponent").get<double>();
  CHECK(exponent > 1.8);
  CHECK(exponent < 2.2);
}

TEST_CASE("cmd_sample is deterministic in process") {
  SampleOptions options;
  options.shots = 20000;
  options.seed = 31337;
  std::ostringstream a, b;
  CHECK(cmd_sample(options, a) == 0);
  CHECK(cmd_sample(options, b) == 0);
  CHECK(a.str() == b.str());
}

TEST_CASE("binary: canonical invocations succeed") {
  CHECK(run_command(kCli + " create --input VV").exit_code == 0);
  CHECK(run_command(kCli + " analyze --input phi-minus").exit_code == 0);
  CHECK(run_command(kCli + " tables").exit_code == 0);
  CHECK(run_command(kCli + " validate").exit_code == 0);
}

TEST_CASE("binary: usage problems exit 2") {
  CHECK(run_command(kCli).exit_code == 2);
  CHECK(run_command(kCli + " create --input XX").exit_code == 2);
  CHECK(run_command(kCli + " create --epsilon zz").exit_code == 2);
  CHECK(run_command(kCli + " validate --nmax 1").exit_code == 2);
  CHECK(run_command(kCli + " run").exit_code == 2);
  CHECK(run_command(kCli + " nonsense").exit_code == 2);
  CHECK(run_command("echo '{\"version\": 9}' | " + kCli + " run --doc -")
            .exit_code == 2);
}

TEST_CASE("binary: numeric check failures exit 1") {
  CHECK(run_command(kCli + " tables --tol 1e-300").exit_code == 1);
  // Amplitudes far outside the truncation budget trip the n_max guard.
  CHECK(run_command(kCli + " validate --epsilon 0.3 --mu 2.5").exit_code == 1);
}

TEST_CASE("binary: emitted document feeds back through run") {
  const auto emitted = run_command(kCli + " run --emit analyzer --epsilon 0.05");
  REQUIRE(emitted.exit_code == 0);
  const auto executed = run_command(
      kCli + " run --emit analyzer --epsilon 0.05 | " + kCli +
      " run --doc - --format machine");
  REQUIRE(executed.exit_code == 0);
  const auto j = nlohmann::json::parse(executed.output);
  // psi- analyzes to +eps at HH.
  CHECK(j.at("final").at("pairs").at(0).at("re").get<double>() ==
        doctest::Approx(0.05).epsilon(1e-10));
}

TEST_CASE("binary: help text names every subcommand") {
  const auto help = run_command(kCli + " --help");
  CHECK(help.exit_code == 0);
  for (const char* name : {"create", "analyze", "tables", "validate", "sample", "run"})
    CHECK(help.output.find(name) != std::string::npos);
}

}  // TEST_SUITE
