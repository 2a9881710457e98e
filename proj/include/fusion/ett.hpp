#pragma once

#include "fusion/graph.hpp"
#include "fusion/table.hpp"

#include <string>
#include <vector>

namespace fusion {

// raised when a hybrid dataset admits no nonnegative extended table, i.e. the
// reconstruction produces a negative entry
struct InconsistentTables : TableError {
  InconsistentTables(const std::string& msg, std::vector<std::string> entries)
      : TableError(msg), negatives(std::move(entries)) {}
  std::vector<std::string> negatives;
};

struct TargetNotBinary : TableError {
  using TableError::TableError;
};
struct SharedChildrenNonEmpty : TableError {
  using TableError::TableError;
};
struct MissingTable : TableError {
  using TableError::TableError;
};

// Reconstruct the extended table Q(observed | marks) on `swig` (the graph
// returned by interrupt()) from observational + post-intervention data.  The
// multi-target version requires the interrupted variables to have pairwise
// disjoint sets of shared children; otherwise the composed map is not defined
// and a TableError is raised.
DataTable ettExtend(const CausalGraph& swig, const HybridDataset& data,
                    const std::string& target);
DataTable multiEttExtend(const CausalGraph& swig, const HybridDataset& data,
                         const std::vector<std::string>& targets);

// Inverse direction: read the observational table and every single-target
// post-intervention table back off an extended table.
HybridDataset projectToHybrid(const CausalGraph& swig, const DataTable& q,
                              const std::vector<std::string>& targets);

} // namespace fusion
