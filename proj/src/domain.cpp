#include "metapool/domain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "metapool/util.hpp"

namespace metapool {

const char* to_string(EffectSizeKind kind) {
  return kind == EffectSizeKind::cohen ? "Cohen" : "Hedges";
}

const char* to_string(ModelKind model) {
  return model == ModelKind::fixed_effects ? "FixedEffects" : "RandomEffects";
}

GroupStats::GroupStats(long long n, double mean, double sd)
    : n_(n), mean_(mean), sd_(sd) {
  if (n < 2) {
    throw ValidationError(errc::non_positive_count,
                          "group size n = " + std::to_string(n) +
                              " (need at least 2 subjects)");
  }
  if (!std::isfinite(mean) || !std::isfinite(sd)) {
    throw ValidationError(errc::non_finite_number,
                          "group mean/sd must be finite");
  }
  if (sd < 0.0) {
    throw ValidationError(errc::negative_sd,
                          "negative standard deviation " + format_shortest(sd));
  }
}

bool operator==(const GroupStats& a, const GroupStats& b) {
  return a.n() == b.n() && a.mean() == b.mean() && a.sd() == b.sd();
}

StudyRecord::StudyRecord(std::string study, std::string variable,
                         GroupStats group1, GroupStats group2,
                         std::vector<std::string> conditions)
    : study_(std::move(study)),
      variable_(std::move(variable)),
      group1_(group1),
      group2_(group2),
      conditions_(std::move(conditions)) {
  if (trim(study_).empty()) {
    throw ValidationError(errc::empty_label, "empty study label");
  }
  if (trim(variable_).empty()) {
    throw ValidationError(errc::empty_label, "empty variable label");
  }
  for (const auto& value : conditions_) {
    if (trim(value).empty()) {
      throw ValidationError(errc::empty_condition_value,
                            "empty condition value in study '" + study_ + "'");
    }
  }
}

bool operator==(const StudyRecord& a, const StudyRecord& b) {
  return a.study() == b.study() && a.variable() == b.variable() &&
         a.group1() == b.group1() && a.group2() == b.group2() &&
         a.conditions() == b.conditions();
}

namespace {

long long checked_count(const std::string& field, std::string_view text) {
  auto value = parse_count(trim(text));
  if (!value) {
    throw ValidationError(errc::non_finite_number,
                          field + ": '" + std::string(trim(text)) +
                              "' is not a whole number");
  }
  if (*value < 2) {
    throw ValidationError(errc::non_positive_count,
                          field + " = " + std::to_string(*value) +
                              " (need at least 2 subjects)");
  }
  return *value;
}

double checked_real(const std::string& field, std::string_view text) {
  auto value = parse_real(trim(text));
  if (!value || !std::isfinite(*value)) {
    throw ValidationError(errc::non_finite_number,
                          field + ": '" + std::string(trim(text)) +
                              "' is not a finite number ('.' decimals)");
  }
  return *value;
}

double checked_sd(const std::string& field, std::string_view text) {
  double value = checked_real(field, text);
  if (value < 0.0) {
    throw ValidationError(errc::negative_sd,
                          field + " = " + format_shortest(value));
  }
  return value;
}

}  // namespace

StudyRecord validate_record(const RawRecord& raw) {
  const std::string study(trim(raw.study));
  const std::string variable(trim(raw.variable));
  if (study.empty()) {
    throw ValidationError(errc::empty_label, "empty study label");
  }
  if (variable.empty()) {
    throw ValidationError(errc::empty_label, "empty variable label");
  }
  GroupStats group1(checked_count("n_1", raw.n1),
                    checked_real("mean_1", raw.mean1),
                    checked_sd("std_1", raw.std1));
  GroupStats group2(checked_count("n_2", raw.n2),
                    checked_real("mean_2", raw.mean2),
                    checked_sd("std_2", raw.std2));
  std::vector<std::string> conditions;
  conditions.reserve(raw.conditions.size());
  for (std::size_t i = 0; i < raw.conditions.size(); ++i) {
    std::string value(trim(raw.conditions[i]));
    if (value.empty()) {
      throw ValidationError(errc::empty_condition_value,
                            "condition_" + std::to_string(i + 1) +
                                " is empty (provide a label)");
    }
    conditions.push_back(std::move(value));
  }
  return StudyRecord(study, variable, group1, group2, std::move(conditions));
}

SubgroupKey::SubgroupKey(std::string variable, Selection selected)
    : variable_(std::move(variable)), selected_(std::move(selected)) {
  if (selected_.empty()) {
    throw std::invalid_argument("SubgroupKey: empty condition selection");
  }
  int previous = 0;
  for (const auto& [column, value] : selected_) {
    if (column < 1 || column <= previous) {
      throw std::invalid_argument(
          "SubgroupKey: column indices must be >= 1 and strictly increasing");
    }
    previous = column;
  }
}

bool operator==(const SubgroupKey& a, const SubgroupKey& b) {
  return a.variable() == b.variable() && a.selected() == b.selected();
}

bool operator<(const SubgroupKey& a, const SubgroupKey& b) {
  if (a.variable() != b.variable()) return a.variable() < b.variable();
  const auto& sa = a.selected();
  const auto& sb = b.selected();
  auto indices = [](const SubgroupKey::Selection& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (const auto& [column, value] : s) out.push_back(column);
    return out;
  };
  const auto ia = indices(sa);
  const auto ib = indices(sb);
  if (ia != ib) return ia < ib;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i].second != sb[i].second) return sa[i].second < sb[i].second;
  }
  return false;
}

Subgroup::Subgroup(SubgroupKey key, std::vector<StudyRecord> members)
    : key_(std::move(key)), members_(std::move(members)) {
  if (members_.size() < 2) {
    throw std::invalid_argument("Subgroup: needs at least 2 member studies");
  }
  std::sort(members_.begin(), members_.end(),
            [](const StudyRecord& a, const StudyRecord& b) {
              return a.study() < b.study();
            });
  std::set<std::string> labels;
  for (const auto& member : members_) {
    if (member.variable() != key_.variable()) {
      throw std::invalid_argument("Subgroup: member variable mismatch");
    }
    for (const auto& [column, value] : key_.selected()) {
      const auto& conditions = member.conditions();
      if (column > static_cast<int>(conditions.size()) ||
          conditions[column - 1] != value) {
        throw std::invalid_argument("Subgroup: member condition mismatch");
      }
    }
    if (!labels.insert(member.study()).second) {
      throw std::invalid_argument("Subgroup: duplicate study '" +
                                  member.study() + "'");
    }
  }
}

AnalysisConfig::AnalysisConfig(double alpha, EffectSizeKind kind)
    : alpha_(alpha), kind_(kind) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("AnalysisConfig: alpha must lie in (0, 1)");
  }
}

}  // namespace metapool
