#include "metapool/subgrouping.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace metapool {

const char* to_string(SkipReason reason) {
  switch (reason) {
    case SkipReason::too_few_studies: return "TooFewStudies";
    case SkipReason::ambiguous_membership: return "AmbiguousMembership";
    case SkipReason::analysis_error: return "AnalysisError";
  }
  return "Unknown";
}

SubgroupSet enumerate_subgroups(const InputTable& table) {
  const int columns = table.condition_column_count;

  std::map<std::string, std::vector<const StudyRecord*>> by_variable;
  for (const auto& record : table.records) {
    by_variable[record.variable()].push_back(&record);
  }

  // Non-empty column subsets as 1-based index sequences, ordered
  // lexicographically ([1] < [1,2] < [2]).
  std::vector<std::vector<int>> subsets;
  for (unsigned long long mask = 1; mask < (1ull << columns); ++mask) {
    std::vector<int> indices;
    for (int c = 0; c < columns; ++c) {
      if (mask & (1ull << c)) indices.push_back(c + 1);
    }
    subsets.push_back(std::move(indices));
  }
  std::sort(subsets.begin(), subsets.end());

  SubgroupSet out;
  for (const auto& [variable, records] : by_variable) {
    for (const auto& indices : subsets) {
      // Bucket by the value tuple observed on the selected columns; value
      // combinations that never co-occur simply produce no bucket.
      std::map<std::vector<std::string>, std::vector<const StudyRecord*>>
          buckets;
      for (const auto* record : records) {
        std::vector<std::string> values;
        values.reserve(indices.size());
        for (int column : indices) {
          values.push_back(record->conditions()[column - 1]);
        }
        buckets[std::move(values)].push_back(record);
      }
      for (const auto& [values, members] : buckets) {
        SubgroupKey::Selection selected;
        selected.reserve(indices.size());
        for (std::size_t i = 0; i < indices.size(); ++i) {
          selected.emplace_back(indices[i], values[i]);
        }
        SubgroupKey key(variable, std::move(selected));

        if (members.size() < 2) {
          out.skipped.push_back({std::move(key), SkipReason::too_few_studies,
                                 "only study '" + members.front()->study() +
                                     "' (need at least 2)"});
          continue;
        }
        std::set<std::string> labels;
        const StudyRecord* repeated = nullptr;
        for (const auto* member : members) {
          if (!labels.insert(member->study()).second) {
            repeated = member;
            break;
          }
        }
        if (repeated) {
          out.skipped.push_back(
              {std::move(key), SkipReason::ambiguous_membership,
               "study '" + repeated->study() +
                   "' appears twice when pooling over the unselected "
                   "columns"});
          continue;
        }
        std::vector<StudyRecord> copies;
        copies.reserve(members.size());
        for (const auto* member : members) copies.push_back(*member);
        out.subgroups.emplace_back(std::move(key), std::move(copies));
      }
    }
  }
  return out;
}

std::string folder_name(const SubgroupKey& key) {
  std::string out = key.variable() + "-";
  bool first = true;
  for (const auto& [column, value] : key.selected()) {
    if (!first) out += '|';
    out += value;
    first = false;
  }
  return out;
}

}  // namespace metapool
