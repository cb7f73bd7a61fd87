#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "slocc/roots.hpp"
#include "slocc/state.hpp"

namespace slocc {

// State files: {"n": int, "amps": [[re, im], ...]} with qubit 1 as the most
// significant bit of the amplitude index.
nlohmann::json state_to_json(const PureState& state);
PureState state_from_json(const nlohmann::json& j);
PureState read_state_file(const std::string& path);
void write_state_file(const std::string& path, const PureState& state);

// Root reports: {"qubit": k, "h": h, "roots": [{"re","im"} | "inf", ...],
// "bloch": [{"theta","phi"}, ...]} - the interchange consumed by plotting.
nlohmann::json root_report_json(const RootSystem& rs);
RootSystem root_report_from_json(const nlohmann::json& j);

nlohmann::json operators_to_json(const std::vector<Eigen::Matrix2cd>& ops);
std::vector<Eigen::Matrix2cd> operators_from_json(const nlohmann::json& j);

}  // namespace slocc
