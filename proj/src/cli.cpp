#include "slocc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "slocc/equivalence.hpp"
#include "slocc/gabcd.hpp"
#include "slocc/json_io.hpp"

namespace slocc {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitIo = 2;
constexpr int kExitNonGeneric = 3;

std::string format_complex(const Complex& z) {
    const double re = z.real() == 0.0 ? 0.0 : z.real();  // drop negative zero
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::ostringstream os;
    os.precision(12);
    os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    return os.str();
}

std::string format_root(const ExtendedComplex& z) {
    return z.infinite ? "inf" : format_complex(z.value);
}

const SlInvariant& measure_by_name(const std::string& name) {
    if (name == "concurrence") return concurrence_measure();
    if (name == "three-tangle") return three_tangle_measure();
    throw Error("unknown measure: " + name);
}

const SlInvariant& pick_measure(const std::string& name, int n) {
    if (!name.empty()) {
        const SlInvariant& m = measure_by_name(name);
        if (m.arity != n - 1)
            throw Error("measure " + m.name + " acts on " + std::to_string(m.arity) +
                        " qubits, state needs arity " + std::to_string(n - 1));
        return m;
    }
    if (n == 3) return concurrence_measure();
    if (n == 4) return three_tangle_measure();
    throw Error("no default measure for " + std::to_string(n) +
                " qubits; pass --measure");
}

struct RootsConfig {
    std::string state_path;
    std::string qubit = "all";
    std::string measure;
    std::string export_bloch;
    double root_tol = 1e-8;
    bool as_json = false;
};

struct EquivConfig {
    std::string path_a, path_b;
    std::string measure;
    double root_tol = 1e-8;
    double prop_tol = 1e-7;
    bool as_json = false;
};

struct NormalFormConfig {
    std::string state_path;
    std::string output;
    double tol = 1e-8;
    bool as_json = false;
};

struct OrbitConfig {
    std::vector<std::string> tuple;
    bool weyl_only = true;
};

struct DemoConfig {
    std::string name;
    std::vector<std::string> params;
    std::string output;
};

int cmd_roots(const RootsConfig& cfg, std::ostream& out) {
    const PureState state = read_state_file(cfg.state_path);
    const SlInvariant& measure = pick_measure(cfg.measure, state.n);

    std::vector<int> qubits;
    if (cfg.qubit == "all")
        for (int k = 1; k <= state.n; ++k) qubits.push_back(k);
    else
        qubits.push_back(std::stoi(cfg.qubit));

    json reports = json::array();
    std::ostringstream text;
    for (int k : qubits) {
        const RootSystem rs = roots_for_qubit(state, k, measure);
        reports.push_back(root_report_json(rs));

        text << "qubit " << k << " (" << measure.name << ", h=" << rs.degree << "):\n";
        std::vector<bool> used(rs.roots.size(), false);
        for (size_t i = 0; i < rs.roots.size(); ++i) {
            if (used[i]) continue;
            int mult = 1;
            for (size_t j = i + 1; j < rs.roots.size(); ++j)
                if (!used[j] && chordal(rs.roots[i], rs.roots[j]) <= cfg.root_tol) {
                    used[j] = true;
                    ++mult;
                }
            const BlochPoint b = to_bloch(rs.roots[i]);
            text << "  " << format_root(rs.roots[i]);
            if (mult > 1) text << " (x" << mult << ")";
            text << "   theta=" << b.theta << " phi=" << b.phi << "\n";
        }
    }

    if (!cfg.export_bloch.empty()) {
        std::ofstream f(cfg.export_bloch);
        if (!f) throw Error("cannot write " + cfg.export_bloch);
        f << reports.dump(2) << "\n";
    }
    if (cfg.as_json)
        out << reports.dump(2) << "\n";
    else
        out << text.str();
    return kExitOk;
}

int cmd_equiv(const EquivConfig& cfg, std::ostream& out, std::ostream& err) {
    const PureState a = read_state_file(cfg.path_a);
    const PureState b = read_state_file(cfg.path_b);
    if (a.n != b.n) throw Error("states differ in qubit count");
    const SlInvariant& measure = pick_measure(cfg.measure, a.n);

    const EquivalenceVerdict verdict =
        equivalence_check(a, b, measure, cfg.prop_tol, cfg.root_tol);

    switch (verdict.outcome) {
        case Outcome::Equivalent: {
            json j{{"outcome", "equivalent"},
                   {"scalar", {verdict.scalar.real(), verdict.scalar.imag()}},
                   {"witness", operators_to_json(verdict.witness)}};
            if (cfg.as_json)
                out << j.dump(2) << "\n";
            else {
                out << "equivalent; witness operators (row-major):\n";
                for (size_t k = 0; k < verdict.witness.size(); ++k) {
                    const auto& op = verdict.witness[k];
                    out << "  qubit " << k + 1 << ": [" << format_complex(op(0, 0)) << ", "
                        << format_complex(op(0, 1)) << "; " << format_complex(op(1, 0))
                        << ", " << format_complex(op(1, 1)) << "]\n";
                }
                out << "  scalar: " << format_complex(verdict.scalar) << "\n";
            }
            return kExitOk;
        }
        case Outcome::NotEquivalent:
            if (cfg.as_json)
                out << json{{"outcome", "not-equivalent"}}.dump(2) << "\n";
            else
                out << "not equivalent\n";
            return kExitNotEquivalent;
        case Outcome::Inconclusive:
        default:
            err << "inconclusive: " << verdict.reason << "\n";
            return kExitNonGeneric;
    }
}

int cmd_normal_form(const NormalFormConfig& cfg, std::ostream& out, std::ostream& err) {
    const PureState state = read_state_file(cfg.state_path);
    NormalFormResult result;
    try {
        result = normal_form(state, cfg.tol);
    } catch (const NonGeneric& e) {
        err << "non-generic input: " << e.what() << "\n";
        return kExitNonGeneric;
    }

    const std::vector<Eigen::Matrix2cd> ops(result.ops.begin(), result.ops.end());
    json j{{"state", state_to_json(result.state)},
           {"operators", operators_to_json(ops)},
           {"max_reduction_deviation", result.reduction_deviation},
           {"polished", result.polished}};
    if (!cfg.output.empty()) {
        std::ofstream f(cfg.output);
        if (!f) throw Error("cannot write " + cfg.output);
        f << j.dump(2) << "\n";
    }
    if (cfg.as_json)
        out << j.dump(2) << "\n";
    else {
        out << "max |rho_k - I/2| = " << result.reduction_deviation
            << (result.polished ? "  (after one balancing pass)" : "") << "\n";
    }
    return kExitOk;
}

int cmd_gabcd_orbit(const OrbitConfig& cfg, std::ostream& out, std::ostream& err) {
    std::array<Complex, 4> t{};
    for (int i = 0; i < 4; ++i) t[i] = parse_complex(cfg.tuple[i]);
    const GabcdParams params{t[0], t[1], t[2], t[3]};
    if (!is_generic(params)) {
        err << "non-generic tuple: coefficient squares must be pairwise distinct\n";
        return kExitNonGeneric;
    }
    const auto orbit = weyl_orbit(params);
    json tuples = json::array();
    for (const auto& tuple : orbit) {
        json entry = json::array();
        for (int i = 0; i < 4; ++i) entry.push_back({tuple(i).real(), tuple(i).imag()});
        tuples.push_back(entry);
    }
    out << json{{"count", orbit.size()}, {"tuples", tuples}}.dump(2) << "\n";
    return kExitOk;
}

int cmd_demo(const DemoConfig& cfg, std::ostream& out) {
    PureState state;
    if (cfg.name == "gabcd") {
        if (cfg.params.size() != 4)
            throw Error("demo gabcd needs four coefficients, e.g. demo gabcd 1 2 3 4");
        std::array<Complex, 4> t{};
        for (int i = 0; i < 4; ++i) t[i] = parse_complex(cfg.params[i]);
        state = named_state("gabcd", t);
    } else {
        if (!cfg.params.empty()) throw Error("demo " + cfg.name + " takes no parameters");
        state = named_state(cfg.name);
    }
    if (!cfg.output.empty()) {
        write_state_file(cfg.output, state);
    } else {
        out << state_to_json(state).dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error("empty complex literal");

    if (s.front() == '(' && s.back() == ')') {
        const auto comma = s.find(',');
        if (comma == std::string::npos) throw Error("expected (re,im): " + text);
        return {std::stod(s.substr(1, comma - 1)),
                std::stod(s.substr(comma + 1, s.size() - comma - 2))};
    }

    auto parse_part = [&](std::string part) -> Complex {
        const bool imag = !part.empty() && (part.back() == 'i' || part.back() == 'I');
        if (imag) {
            part.pop_back();
            if (part.empty() || part == "+") part = "1";
            else if (part == "-") part = "-1";
        }
        size_t used = 0;
        const double v = std::stod(part, &used);
        if (used != part.size()) throw Error("bad complex literal: " + text);
        return imag ? Complex(0.0, v) : Complex(v, 0.0);
    };

    // Split at the last +/- that is not an exponent sign and not leading.
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            return parse_part(s.substr(0, i)) + parse_part(s.substr(i));
    }
    return parse_part(s);
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"SLOCC classification of small qubit states via the roots of a "
                 "polynomial entanglement measure"};
    app.require_subcommand(1);

    RootsConfig roots_cfg;
    auto* roots = app.add_subcommand("roots", "roots of the measure per traced qubit");
    roots->add_option("state", roots_cfg.state_path, "state JSON file")->required();
    roots->add_option("--qubit", roots_cfg.qubit, "qubit index or \"all\"");
    roots->add_option("--measure", roots_cfg.measure, "concurrence | three-tangle");
    roots->add_option("--root-tol", roots_cfg.root_tol, "multiplicity grouping tolerance");
    roots->add_option("--export-bloch", roots_cfg.export_bloch, "write the JSON report here");
    roots->add_flag("--json", roots_cfg.as_json, "print the JSON report");

    EquivConfig equiv_cfg;
    auto* equiv = app.add_subcommand("equiv", "decide SLOCC equivalence of two states");
    equiv->add_option("stateA", equiv_cfg.path_a, "first state JSON file")->required();
    equiv->add_option("stateB", equiv_cfg.path_b, "second state JSON file")->required();
    equiv->add_option("--measure", equiv_cfg.measure, "concurrence | three-tangle");
    equiv->add_option("--root-tol", equiv_cfg.root_tol, "root distinctness tolerance");
    equiv->add_option("--prop-tol", equiv_cfg.prop_tol, "witness proportionality tolerance");
    equiv->add_flag("--json", equiv_cfg.as_json, "print the verdict as JSON");

    NormalFormConfig nf_cfg;
    auto* nf = app.add_subcommand("normal-form",
                                  "non-iterative normal form of a generic 4-qubit state");
    nf->add_option("state", nf_cfg.state_path, "state JSON file")->required();
    nf->add_option("--output", nf_cfg.output, "write state + operators JSON here");
    nf->add_option("--tol", nf_cfg.tol, "reduction deviation tolerance");
    nf->add_flag("--json", nf_cfg.as_json, "print the result as JSON");

    OrbitConfig orbit_cfg;
    auto* orbit = app.add_subcommand("gabcd-orbit",
                                     "coefficient tuples SLOCC-equivalent to a gabcd state");
    orbit->add_option("tuple", orbit_cfg.tuple, "coefficients a b c d")
        ->expected(4)
        ->required();

    DemoConfig demo_cfg;
    auto* demo = app.add_subcommand("demo", "emit a named reference state");
    demo->add_option("name", demo_cfg.name, "ghz3 | w3 | ghzw4 | gabcd")->required();
    demo->add_option("params", demo_cfg.params, "gabcd coefficients a b c d");
    demo->add_option("--output", demo_cfg.output, "write the state here");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitIo;
    }

    try {
        if (roots->parsed()) return cmd_roots(roots_cfg, out);
        if (equiv->parsed()) return cmd_equiv(equiv_cfg, out, err);
        if (nf->parsed()) return cmd_normal_form(nf_cfg, out, err);
        if (orbit->parsed()) return cmd_gabcd_orbit(orbit_cfg, out, err);
        if (demo->parsed()) return cmd_demo(demo_cfg, out);
        err << "no command given\n";
        return kExitIo;
    } catch (const NonGeneric& e) {
        err << "non-generic input: " << e.what() << "\n";
        return kExitNonGeneric;
    } catch (const IdenticallyZero& e) {
        err << "non-generic input: " << e.what() << "\n";
        return kExitNonGeneric;
    } catch (const DegenerateRoots& e) {
        err << "non-generic input: " << e.what() << "\n";
        return kExitNonGeneric;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace slocc
