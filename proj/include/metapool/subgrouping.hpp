#pragma once

#include <string>
#include <vector>

#include "metapool/domain.hpp"
#include "metapool/ingest.hpp"

namespace metapool {

enum class SkipReason {
  too_few_studies,       // observed combination with a single record
  ambiguous_membership,  // one study would enter the same pool twice
  analysis_error,        // downstream failure (e.g. zero pooled sd)
};

const char* to_string(SkipReason reason);

struct SkipEntry {
  SubgroupKey key;
  SkipReason reason;
  std::string detail;
};

// Every analyzable combination, in one deterministic order:
// (variable, selected column indices, condition values) ascending.
struct SubgroupSet {
  std::vector<Subgroup> subgroups;
  std::vector<SkipEntry> skipped;
};

// Enumerates, for each variable and each non-empty subset of condition
// columns, every value combination observed in the data. Combinations with
// fewer than two records or with a repeated study land in `skipped`; value
// combinations never seen together are not materialized at all. The empty
// column subset is never analyzed: pooling over a condition would feed the
// same cohort into one analysis twice.
SubgroupSet enumerate_subgroups(const InputTable& table);

// "{variable}-{v1|v2|...}" with values in column-index order.
std::string folder_name(const SubgroupKey& key);

}  // namespace metapool
