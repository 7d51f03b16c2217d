#pragma once

#include "torsurg/catalog.hpp"
#include "torsurg/surgery.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

namespace torsurg {

nlohmann::json model_to_json(const ManifoldModel& m);
ManifoldModel model_from_json(const nlohmann::json& j);

ManifoldModel load_model_file(const std::string& path);
void save_model_file(const ManifoldModel& m, const std::string& path);

// A surgery script: base model, ordered operations, requested reports.
struct ScriptOp {
    enum class Kind { Surgery, Stabilize, Reverse } kind = Kind::Surgery;
    SurgerySpec spec;      // Surgery
    std::string core;      // Reverse
};

struct Script {
    std::string base_builtin;               // "M" when file path empty
    std::string base_file;
    std::vector<ScriptOp> operations;
    std::vector<std::string> reports;       // invariants | pi1 | prototype | eqform | pi2 | sw-family
    int sw_pmax = 5;
    std::string catalog = "q8";
};

Script script_from_json(const nlohmann::json& j);
Script load_script_file(const std::string& path);

}  // namespace torsurg
