#pragma once

#include <span>
#include <string>
#include <vector>

#include "metapool/domain.hpp"
#include "metapool/subgrouping.hpp"

namespace metapool {

// Per-study computed quantities. `weight` is the weight actually used for
// pooling (fixed- or random-effects, depending on the selected model); the
// confidence interval is delta +- sigma_intra * q(1 - alpha/2) in both
// models.
struct StudyEffect {
  std::string study;
  double pooled_sd = 0;
  double delta = 0;
  double sigma_intra = 0;
  double weight = 0;
  double ci_low = 0;
  double ci_high = 0;
};

// Heterogeneity diagnostics. Raw values are kept next to their clipped
// counterparts: tau2 = max(tau2_raw, 0), i2 = clamp(i2_raw, 0, 100).
struct HeterogeneityStats {
  double q = 0;
  double xi = 0;
  double tau2_raw = 0;
  double tau2 = 0;
  double i2_raw = 0;
  double i2 = 0;
};

// Everything computed for one subgroup.
struct MetaResult {
  Subgroup subgroup;
  AnalysisConfig config;
  std::vector<StudyEffect> effects;  // aligned with subgroup.members()
  HeterogeneityStats het;
  ModelKind model = ModelKind::fixed_effects;
  double mu = 0;
  double sigma = 0;
  double ci_low = 0;
  double ci_high = 0;
  double z = 0;
  double p = 1;

  const SubgroupKey& key() const { return subgroup.key(); }
};

// S = sqrt(((n1-1) sd1^2 + (n2-1) sd2^2) / (n1+n2-2)).
double pooled_sd(const GroupStats& g1, const GroupStats& g2);

// Standardized mean difference (mean1 - mean2) / S; the Hedges flavour
// multiplies by the small-sample factor 1 - 3/(4(n1+n2) - 9). Throws
// AnalysisError(zero_pooled_sd) when S = 0.
double effect_size(const GroupStats& g1, const GroupStats& g2,
                   EffectSizeKind kind);

// sqrt((n1+n2)/(n1 n2) + delta^2 / (2(n1+n2))).
double intra_study_sigma(const GroupStats& g1, const GroupStats& g2,
                         double delta);

double fe_weight(double sigma_intra);
double re_weight(double sigma_intra, double tau2);

// Weighted average sum(w d) / sum(w), compensated, in input order.
double pooled_mu(std::span<const double> deltas,
                 std::span<const double> weights);

// Q, xi, tau^2 and I^2 from the fixed-effects weights. I^2 is defined as 0
// when Q = 0. Throws AnalysisError(degenerate_xi) if xi <= 0 (requires at
// least two studies).
HeterogeneityStats heterogeneity(std::span<const double> deltas,
                                 std::span<const double> fe_weights);

// Random effects iff I^2 > 50 (strict).
ModelKind select_model(double i2);

// Full pipeline for one subgroup: per-study effects, heterogeneity on the
// fixed-effects weights, model selection, pooling, intervals, Z and p.
MetaResult analyze_subgroup(const Subgroup& sub, const AnalysisConfig& cfg);

struct AnalysisFailure {
  SubgroupKey key;
  std::string reason;
};

struct AnalysisRun {
  std::vector<MetaResult> results;        // in SubgroupSet order
  std::vector<AnalysisFailure> failures;  // in SubgroupSet order
};

// Analyzes every subgroup of the set. Subgroups are independent, so the
// loop fans out with OpenMP when available; results are identical to the
// serial order either way.
AnalysisRun analyze_all(const SubgroupSet& set, const AnalysisConfig& cfg);

}  // namespace metapool
