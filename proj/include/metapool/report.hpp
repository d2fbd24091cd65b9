#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "metapool/engine.hpp"
#include "metapool/subgrouping.hpp"

namespace metapool {

struct PlotPair {
  std::string svg;  // self-contained vector document
  std::string tex;  // standalone LaTeX source for the same figure
};

// Per-study table (input fields plus computed columns) followed by a
// summary block. Semicolon-separated, 6 significant digits.
std::string emit_data_csv(const MetaResult& result);

// One row per study, sorted by label: square marker at delta with area
// proportional to the normalized weight, whisker over the individual
// confidence interval, value text on the right; pooled diamond at the
// bottom; dashed null line at 0; footer with model, I^2, tau^2, Z, p.
PlotPair emit_forest(const MetaResult& result, const AnalysisConfig& cfg);

// Scatter of (delta, sigma_intra) with the ordinate inverted (0 on top),
// funnel lines x = mu +- q * y and a vertical line at mu.
PlotPair emit_funnel(const MetaResult& result, const AnalysisConfig& cfg);

struct ManifestFolder {
  SubgroupKey key;
  std::string folder;     // "{variable}-{v1|v2|...}"
  std::string directory;  // on-disk name (percent-encoded when needed)
  std::vector<std::string> files;
  std::size_t studies = 0;
  ModelKind model = ModelKind::fixed_effects;
};

struct Manifest {
  std::vector<ManifestFolder> folders;
  std::vector<SkipEntry> skipped;
};

std::string manifest_json(const Manifest& manifest, const AnalysisConfig& cfg);

struct WriteOptions {
  std::filesystem::path root = "output";
  // Run pdflatex on the emitted .tex sources. Off by default; the caller
  // should enable it only when a LaTeX toolchain is actually present.
  bool compile_pdf = false;
};

// Writes root/{folder}/{data.csv, forest_plot.svg, forest_plot.tex,
// funnel_plot.svg, funnel_plot.tex} per result plus root/manifest.json.
// Re-running with identical inputs rewrites identical bytes.
Manifest write_outputs(std::span<const MetaResult> results,
                       std::span<const SkipEntry> skipped,
                       const AnalysisConfig& cfg, const WriteOptions& opts);

// True when pdflatex is reachable through PATH.
bool latex_toolchain_available();

// On-disk directory name for a subgroup folder: '/' (and other bytes no
// filesystem accepts) percent-encoded, '|' kept verbatim.
std::string encode_directory_name(const std::string& folder);

}  // namespace metapool
