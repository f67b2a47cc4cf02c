#pragma once

#include "bellsim/state.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bellsim::cli {

enum class Format { text, machine };

struct CreateOptions {
  Format format = Format::text;
  Complex epsilon{0.01, 0.0};
  RectLabel input = RectLabel::HH;
  bool trace = false;
};

struct AnalyzeOptions {
  Format format = Format::text;
  Complex epsilon{0.01, 0.0};
  BellLabel input = BellLabel::psi_minus;
  bool trace = false;
};

struct TablesOptions {
  Format format = Format::text;
  Complex epsilon{0.01, 0.0};
  double tol = 1e-12;
};

struct ValidateOptions {
  Format format = Format::text;
  Complex epsilon{1e-3, 0.0};
  /// Switch injection; defaults to -2 * epsilon, the pi-phase setting.
  std::optional<Complex> mu;
  int n_max = 2;
  double tol = 1e-5;
  std::vector<double> scales{1e-2, 1e-3, 1e-4};
};

struct SampleOptions {
  Format format = Format::text;
  Complex epsilon{0.1, 0.0};
  BellLabel bell = BellLabel::psi_minus;
  std::uint64_t shots = 1000000;
  std::uint64_t seed = 12345;
  double efficiency = 1.0;
};

struct RunOptions {
  Format format = Format::text;
  std::string doc_path;     // file to execute; "-" reads stdin
  std::string emit_device;  // "creator" or "analyzer": print a document instead
  Complex epsilon{0.01, 0.0};
  bool trace = false;
};

/// Each command writes a complete, deterministic report to `out` and
/// returns the process exit code: 0 on success / all checks passing,
/// 1 when a numeric check fails. Argument problems surface as
/// std::invalid_argument or DocError and are mapped to 2 by the caller.
int cmd_create(const CreateOptions& options, std::ostream& out);
int cmd_analyze(const AnalyzeOptions& options, std::ostream& out);
int cmd_tables(const TablesOptions& options, std::ostream& out);
int cmd_validate(const ValidateOptions& options, std::ostream& out);
int cmd_sample(const SampleOptions& options, std::ostream& out);
int cmd_run(const RunOptions& options, std::ostream& out);

/// Shortest text that round-trips the double ("%.17g").
std::string format_double(double value);
std::string format_complex(Complex value);

/// Accepts "RE" or "RE,IM" with standard double syntax.
std::optional<Complex> parse_complex_arg(const std::string& text);

}  // namespace bellsim::cli
