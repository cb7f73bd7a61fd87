#include "slocc/json_io.hpp"

#include <fstream>

namespace slocc {

using nlohmann::json;

nlohmann::json state_to_json(const PureState& state) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < state.amps.size(); ++i)
        amps.push_back({state.amps(i).real(), state.amps(i).imag()});
    return json{{"n", state.n}, {"amps", amps}};
}

PureState state_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const auto& amps = j.at("amps");
    if (!amps.is_array()) throw Error("\"amps\" must be an array");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const auto& entry = amps[static_cast<size_t>(i)];
        if (!entry.is_array() || entry.size() != 2)
            throw Error("amplitude entries must be [re, im] pairs");
        v(i) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    return make_state(n, std::move(v));
}

PureState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open state file: " + path);
    json j;
    in >> j;
    return state_from_json(j);
}

void write_state_file(const std::string& path, const PureState& state) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write state file: " + path);
    out << state_to_json(state).dump(2) << "\n";
}

nlohmann::json root_report_json(const RootSystem& rs) {
    json roots = json::array();
    json bloch = json::array();
    for (const auto& z : rs.roots) {
        if (z.infinite)
            roots.push_back("inf");
        else
            roots.push_back({{"re", z.value.real()}, {"im", z.value.imag()}});
        const BlochPoint b = to_bloch(z);
        bloch.push_back({{"theta", b.theta}, {"phi", b.phi}});
    }
    return json{{"qubit", rs.qubit}, {"h", rs.degree}, {"roots", roots}, {"bloch", bloch}};
}

RootSystem root_report_from_json(const json& j) {
    RootSystem rs;
    rs.qubit = j.at("qubit").get<int>();
    rs.degree = j.at("h").get<int>();
    for (const auto& entry : j.at("roots")) {
        if (entry.is_string() && entry.get<std::string>() == "inf")
            rs.roots.push_back(ExtendedComplex::inf());
        else
            rs.roots.emplace_back(
                Complex(entry.at("re").get<double>(), entry.at("im").get<double>()));
    }
    if (static_cast<int>(rs.roots.size()) != rs.degree)
        throw Error("root count does not match the stated degree");
    return rs;
}

nlohmann::json operators_to_json(const std::vector<Eigen::Matrix2cd>& ops) {
    json out = json::array();
    for (const auto& op : ops) {
        json rows = json::array();
        for (int r = 0; r < 2; ++r) {
            json row = json::array();
            for (int c = 0; c < 2; ++c) row.push_back({op(r, c).real(), op(r, c).imag()});
            rows.push_back(row);
        }
        out.push_back(rows);
    }
    return out;
}

std::vector<Eigen::Matrix2cd> operators_from_json(const json& j) {
    std::vector<Eigen::Matrix2cd> ops;
    for (const auto& rows : j) {
        Eigen::Matrix2cd op;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                const auto& entry = rows.at(r).at(c);
                op(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
            }
        ops.push_back(op);
    }
    return ops;
}

}  // namespace slocc
