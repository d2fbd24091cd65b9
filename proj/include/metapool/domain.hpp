#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metapool/errors.hpp"

namespace metapool {

enum class EffectSizeKind { cohen, hedges };
enum class ModelKind { fixed_effects, random_effects };

const char* to_string(EffectSizeKind kind);  // "Cohen" / "Hedges"
const char* to_string(ModelKind model);      // "FixedEffects" / "RandomEffects"

// Sample size, mean and unbiased standard deviation of one group.
// n >= 2 so that pooled-variance denominators stay positive; sd may be 0.
class GroupStats {
public:
  GroupStats(long long n, double mean, double sd);

  long long n() const { return n_; }
  double mean() const { return mean_; }
  double sd() const { return sd_; }

private:
  long long n_;
  double mean_;
  double sd_;
};

bool operator==(const GroupStats& a, const GroupStats& b);

// One input row: a study measuring one variable under a fixed combination
// of experimental conditions, with statistics for both groups.
class StudyRecord {
public:
  StudyRecord(std::string study, std::string variable, GroupStats group1,
              GroupStats group2, std::vector<std::string> conditions);

  const std::string& study() const { return study_; }
  const std::string& variable() const { return variable_; }
  const GroupStats& group1() const { return group1_; }
  const GroupStats& group2() const { return group2_; }
  const std::vector<std::string>& conditions() const { return conditions_; }

private:
  std::string study_;
  std::string variable_;
  GroupStats group1_;
  GroupStats group2_;
  std::vector<std::string> conditions_;
};

bool operator==(const StudyRecord& a, const StudyRecord& b);

// Raw fields of one input line, still unparsed text.
struct RawRecord {
  std::string study;
  std::string variable;
  std::string n1, n2, mean1, std1, mean2, std2;
  std::vector<std::string> conditions;
};

// Total validation of one raw row. Throws ValidationError with the
// offending field named; never returns a record violating an invariant.
StudyRecord validate_record(const RawRecord& raw);

// Variable of interest plus one value for each selected condition column.
// Column indices are 1-based and strictly increasing.
class SubgroupKey {
public:
  using Selection = std::vector<std::pair<int, std::string>>;

  SubgroupKey(std::string variable, Selection selected);

  const std::string& variable() const { return variable_; }
  const Selection& selected() const { return selected_; }

private:
  std::string variable_;
  Selection selected_;
};

bool operator==(const SubgroupKey& a, const SubgroupKey& b);
// Total order: (variable, column-index sequence, value sequence).
bool operator<(const SubgroupKey& a, const SubgroupKey& b);

// The studies matching one key. At least two members, pairwise-distinct
// study labels, kept sorted by label.
class Subgroup {
public:
  Subgroup(SubgroupKey key, std::vector<StudyRecord> members);

  const SubgroupKey& key() const { return key_; }
  const std::vector<StudyRecord>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

private:
  SubgroupKey key_;
  std::vector<StudyRecord> members_;
};

// Confidence level and effect-size flavour shared by a whole run.
class AnalysisConfig {
public:
  AnalysisConfig(double alpha, EffectSizeKind kind);

  double alpha() const { return alpha_; }
  EffectSizeKind kind() const { return kind_; }

private:
  double alpha_;
  EffectSizeKind kind_;
};

}  // namespace metapool
