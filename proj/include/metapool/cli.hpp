#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "metapool/domain.hpp"

namespace metapool {

struct CliOptions {
  std::filesystem::path input_path;
  double alpha = 0.05;
  EffectSizeKind kind = EffectSizeKind::hedges;
  std::filesystem::path output_dir = "output";
  int verbosity = 0;
  bool pdf = false;
};

// Thrown by parse_args when --help is requested.
struct HelpRequested {
  std::string text;
};

// Recognized flags: --input_fname (required), --alpha, --which_delta
// {Hedges, Cohen}, --output_dir, --pdf, -v/--verbose. Unknown flags are
// rejected with UsageError; bad values raise invalid_alpha / invalid_kind.
CliOptions parse_args(const std::vector<std::string>& args);

// Full pipeline: parse -> enumerate -> analyze -> write. One summary line
// per subgroup on `out` (deterministic order), diagnostics on `err`.
// A subgroup that fails analysis is reported and skipped, not fatal.
int run(const CliOptions& options, std::ostream& out, std::ostream& err);

// parse_args + run with every error mapped to its exit-code family.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace metapool
