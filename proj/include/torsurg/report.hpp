#pragma once

#include "torsurg/catalog.hpp"

#include <string>
#include <vector>

namespace torsurg {

// Aligned plain-text table of sweep rows, stable across runs.
std::string sweep_text(const SweepTable& t);
// JSON array of records {subset, p, verdict, rank, witness_group}.
std::string sweep_json(const SweepTable& t);

struct SweepComparison {
    std::vector<std::string> mismatches;   // free-abelian verdicts off the published lists
    std::size_t undetermined = 0;          // reported, not failed
    bool ok() const { return mismatches.empty(); }
};

// Compare free-abelian verdicts against the published expectations:
// size 0 -> rank 6, size 3 -> published triples (rank 3), size 4 -> published
// quadruples (rank 2), size 5 -> all (rank 1), sizes 1-2 -> none.
SweepComparison compare_with_published(const SweepTable& t);

std::string pipeline_text(const PipelineReport& r);
std::string pipeline_json(const PipelineReport& r);

std::string invariants_text(const ManifoldModel& m);
std::string model_info_text(const ManifoldModel& m);
std::string groupclass_text(const GroupClass& c);

}  // namespace torsurg
