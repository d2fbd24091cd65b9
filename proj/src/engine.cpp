#include "metapool/engine.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "metapool/kahan.hpp"
#include "metapool/normal.hpp"

namespace metapool {

double pooled_sd(const GroupStats& g1, const GroupStats& g2) {
  const double n1 = static_cast<double>(g1.n());
  const double n2 = static_cast<double>(g2.n());
  return std::sqrt(((n1 - 1.0) * g1.sd() * g1.sd() +
                    (n2 - 1.0) * g2.sd() * g2.sd()) /
                   (n1 + n2 - 2.0));
}

double effect_size(const GroupStats& g1, const GroupStats& g2,
                   EffectSizeKind kind) {
  const double s = pooled_sd(g1, g2);
  if (s == 0.0) {
    throw AnalysisError(errc::zero_pooled_sd,
                        "both groups have zero standard deviation");
  }
  double delta = (g1.mean() - g2.mean()) / s;
  if (kind == EffectSizeKind::hedges) {
    const double total = static_cast<double>(g1.n() + g2.n());
    delta *= 1.0 - 3.0 / (4.0 * total - 9.0);
  }
  return delta;
}

double intra_study_sigma(const GroupStats& g1, const GroupStats& g2,
                         double delta) {
  const double n1 = static_cast<double>(g1.n());
  const double n2 = static_cast<double>(g2.n());
  return std::sqrt((n1 + n2) / (n1 * n2) +
                   delta * delta / (2.0 * (n1 + n2)));
}

double fe_weight(double sigma_intra) {
  return 1.0 / (sigma_intra * sigma_intra);
}

double re_weight(double sigma_intra, double tau2) {
  return 1.0 / (sigma_intra * sigma_intra + tau2);
}

double pooled_mu(std::span<const double> deltas,
                 std::span<const double> weights) {
  if (deltas.empty() || deltas.size() != weights.size()) {
    throw std::invalid_argument("pooled_mu: lists empty or of unequal size");
  }
  KahanSum sum_w;
  KahanSum sum_wd;
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    sum_w.add(weights[k]);
    sum_wd.add(weights[k] * deltas[k]);
  }
  return sum_wd.value() / sum_w.value();
}

HeterogeneityStats heterogeneity(std::span<const double> deltas,
                                 std::span<const double> fe_weights) {
  if (deltas.size() != fe_weights.size() || deltas.empty()) {
    throw std::invalid_argument("heterogeneity: lists empty or of unequal size");
  }
  const double k = static_cast<double>(deltas.size());
  const double mu_fe = pooled_mu(deltas, fe_weights);

  KahanSum sum_w;
  KahanSum sum_w2;
  KahanSum q_sum;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double w = fe_weights[i];
    const double dev = deltas[i] - mu_fe;
    sum_w.add(w);
    sum_w2.add(w * w);
    q_sum.add(w * dev * dev);
  }

  HeterogeneityStats het;
  het.q = q_sum.value();
  het.xi = sum_w.value() - sum_w2.value() / sum_w.value();
  if (!(het.xi > 0.0)) {
    throw AnalysisError(errc::degenerate_xi,
                        "xi <= 0 (subgroup needs at least 2 studies)");
  }
  het.tau2_raw = (het.q - (k - 1.0)) / het.xi;
  het.tau2 = std::max(het.tau2_raw, 0.0);
  het.i2_raw = het.q > 0.0 ? (het.q - (k - 1.0)) / het.q * 100.0 : 0.0;
  het.i2 = std::clamp(het.i2_raw, 0.0, 100.0);
  return het;
}

ModelKind select_model(double i2) {
  return i2 > 50.0 ? ModelKind::random_effects : ModelKind::fixed_effects;
}

MetaResult analyze_subgroup(const Subgroup& sub, const AnalysisConfig& cfg) {
  const auto& members = sub.members();
  const std::size_t k = members.size();

  std::vector<double> sds(k), deltas(k), sigmas(k), weights(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& m = members[i];
    sds[i] = pooled_sd(m.group1(), m.group2());
    if (sds[i] == 0.0) {
      throw AnalysisError(errc::zero_pooled_sd,
                          "study '" + m.study() +
                              "': both groups have zero standard deviation");
    }
    deltas[i] = effect_size(m.group1(), m.group2(), cfg.kind());
    sigmas[i] = intra_study_sigma(m.group1(), m.group2(), deltas[i]);
    weights[i] = fe_weight(sigmas[i]);
  }

  const HeterogeneityStats het = heterogeneity(deltas, weights);
  const ModelKind model = select_model(het.i2);
  if (model == ModelKind::random_effects) {
    for (std::size_t i = 0; i < k; ++i) {
      weights[i] = re_weight(sigmas[i], het.tau2);
    }
  }

  const double mu = pooled_mu(deltas, weights);
  KahanSum sum_w;
  for (double w : weights) sum_w.add(w);
  const double sigma = 1.0 / std::sqrt(sum_w.value());

  const double q_crit = normal_quantile(1.0 - cfg.alpha() / 2.0);

  std::vector<StudyEffect> effects(k);
  for (std::size_t i = 0; i < k; ++i) {
    effects[i] = StudyEffect{members[i].study(), sds[i],   deltas[i],
                             sigmas[i],          weights[i],
                             deltas[i] - sigmas[i] * q_crit,
                             deltas[i] + sigmas[i] * q_crit};
  }

  const double z = mu / sigma;
  const double p = 2.0 * (1.0 - normal_cdf(std::fabs(z)));
  return MetaResult{sub,
                    cfg,
                    std::move(effects),
                    het,
                    model,
                    mu,
                    sigma,
                    mu - sigma * q_crit,
                    mu + sigma * q_crit,
                    z,
                    p};
}

AnalysisRun analyze_all(const SubgroupSet& set, const AnalysisConfig& cfg) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(set.subgroups.size());
  std::vector<std::optional<MetaResult>> slots(n);
  std::vector<std::string> errors(n);

  // Subgroups are independent: each iteration touches only its own slot,
  // and all sums inside analyze_subgroup run serially in study order, so
  // the outcome does not depend on the schedule.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      slots[i].emplace(analyze_subgroup(set.subgroups[i], cfg));
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  AnalysisRun run;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (slots[i].has_value()) {
      run.results.push_back(std::move(*slots[i]));
    } else {
      run.failures.push_back({set.subgroups[i].key(), errors[i]});
    }
  }
  return run;
}

}  // namespace metapool
