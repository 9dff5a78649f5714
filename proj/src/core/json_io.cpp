#include "json_io.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "errors.hpp"

namespace rfunc {

namespace {

using nlohmann::json;

json matrix_to_node(const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)},
                {"im", std::move(im)}};
}

ComplexMatrix matrix_from_node(const json& node, const std::string& where) {
    if (!node.is_object()) throw ParseError(where + ": expected a matrix object");
    for (const char* key : {"rows", "cols", "re", "im"}) {
        if (!node.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
    }
    if (!node["rows"].is_number_integer() || !node["cols"].is_number_integer()) {
        throw ParseError(where + ": 'rows'/'cols' must be integers");
    }
    const int rows = node["rows"].get<int>();
    const int cols = node["cols"].get<int>();
    if (rows <= 0 || cols <= 0) throw ParseError(where + ": dimensions must be positive");

    auto read_plane = [&](const char* key) {
        const json& plane = node[key];
        if (!plane.is_array() || static_cast<int>(plane.size()) != rows) {
            throw ParseError(where + ": '" + key + "' must be an array of " +
                             std::to_string(rows) + " rows");
        }
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(rows) * cols);
        for (int i = 0; i < rows; ++i) {
            const json& row = plane[i];
            if (!row.is_array() || static_cast<int>(row.size()) != cols) {
                throw ParseError(where + ": '" + key + "' row " + std::to_string(i) +
                                 " must hold " + std::to_string(cols) + " numbers");
            }
            for (int j = 0; j < cols; ++j) {
                if (!row[j].is_number()) {
                    throw ParseError(where + ": '" + key + "' entry (" + std::to_string(i) +
                                     "," + std::to_string(j) + ") is not a number");
                }
                out.push_back(row[j].get<double>());
            }
        }
        return out;
    };
    const std::vector<double> re = read_plane("re");
    const std::vector<double> im = read_plane("im");

    std::vector<Complex> entries(re.size());
    for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = Complex(re[k], im[k]);
    try {
        return ComplexMatrix(rows, cols, std::move(entries));
    } catch (const ContractError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json parse_text(const std::string& text, const std::string& where) {
    json node = json::parse(text, nullptr, false);
    if (node.is_discarded()) throw ParseError(where + ": invalid JSON");
    return node;
}

std::string dump(const json& node, int indent) { return node.dump(indent); }

json bounds_node(const ComplexMatrix& a, const ComplexMatrix& b, const RReport& rep) {
    const double na2 = frobenius_norm_squared(a);
    const double nb2 = frobenius_norm_squared(b);
    const double prod = na2 * nb2;
    const double eps = 1e-10 * std::max(1.0, prod);
    const int n = a.rows();

    const BoundConstants general = best_constants(n, false);
    json general_node{{"c_minus", general.c_minus},
                      {"c_plus", general.c_plus},
                      {"applies", true},
                      {"holds", rep.value >= general.c_minus * prod - eps &&
                                    rep.value <= general.c_plus * prod + eps}};

    const bool a_traceless = std::abs(trace(a)) <= 1e-12 * std::max(1.0, frobenius_norm(a));
    const BoundConstants restricted = best_constants(n, true);
    json traceless_node{{"c_minus", restricted.c_minus},
                        {"c_plus", restricted.c_plus},
                        {"applies", a_traceless}};
    traceless_node["holds"] =
        !a_traceless || (rep.value >= restricted.c_minus * prod - eps &&
                         rep.value <= restricted.c_plus * prod + eps);

    const bool b_normal = is_normal(b);
    json normal_node{{"bound", 1.0}, {"applies", b_normal}};
    normal_node["holds"] = !b_normal || rep.value <= prod + eps;

    const auto [bw_lhs, bw_rhs] = bw_check(a, b);
    json bw_node{{"lhs", bw_lhs},
                 {"rhs", bw_rhs},
                 {"applies", true},
                 {"holds", bw_lhs <= bw_rhs + 1e-12 * std::max(1.0, bw_rhs)}};

    return json{{"general", std::move(general_node)},
                {"traceless", std::move(traceless_node)},
                {"normal_b", std::move(normal_node)},
                {"commutator_norm", std::move(bw_node)}};
}

} // namespace

std::string matrix_to_json(const ComplexMatrix& m, int indent) {
    return dump(matrix_to_node(m), indent);
}

ComplexMatrix matrix_from_json(const std::string& text) {
    return matrix_from_node(parse_text(text, "matrix"), "matrix");
}

std::string r_report_to_json(const ComplexMatrix& a, const ComplexMatrix& b, int indent) {
    const RReport rep = r_report(a, b);
    json alternates{{"eq1", rep.alternates[kAltDefinition]},
                    {"eq9", rep.alternates[kAltExpandedTrace]},
                    {"eq10", rep.alternates[kAltAnticommutator]},
                    {"eq11", rep.alternates[kAltCommutatorAB]},
                    {"eq12", rep.alternates[kAltCommutatorAdBd]},
                    {"eq13", rep.alternates[kAltCommutatorABd]},
                    {"eq14", rep.alternates[kAltCommutatorAdB]},
                    {"eq15", rep.alternates[kAltSymmetrized]}};
    json node{{"value", rep.value},
              {"alternates", std::move(alternates)},
              {"max_spread", rep.max_spread},
              {"bounds", bounds_node(a, b, rep)}};
    if (rep.ratio) {
        node["ratio"] = *rep.ratio;
    } else {
        node["ratio"] = nullptr;
    }
    return dump(node, indent);
}

std::string witness_to_json(int n, const std::string& kind, const std::string& sign,
                            int indent) {
    Sign s = Sign::upper;
    if (sign == "lower") {
        s = Sign::lower;
    } else if (sign != "upper" && kind != "self") {
        throw ContractError("witness sign must be 'upper' or 'lower'");
    }

    json node;
    json meta{{"n", n}, {"kind", kind}};
    if (kind == "general" || kind == "traceless" || kind == "qubit") {
        if (kind == "qubit" && n != 2) {
            throw ContractError("qubit witness requires n = 2");
        }
        const bool traceless = kind == "traceless";
        std::pair<ComplexMatrix, ComplexMatrix> pair =
            kind == "general"     ? witness_general(n, s)
            : kind == "traceless" ? witness_traceless(n, s)
                                  : witness_qubit(s);
        const BoundConstants bc = best_constants(n, traceless);
        const double target = (s == Sign::upper) ? bc.c_plus : bc.c_minus;
        const double achieved = r_eval(pair.first, pair.second) /
                                (frobenius_norm_squared(pair.first) *
                                 frobenius_norm_squared(pair.second));
        node["A"] = matrix_to_node(pair.first);
        node["B"] = matrix_to_node(pair.second);
        meta["sign"] = (s == Sign::upper) ? "upper" : "lower";
        meta["traceless"] = traceless;
        meta["target_constant"] = target;
        meta["achieved_ratio"] = achieved;
    } else if (kind == "self") {
        const ComplexMatrix a = witness_self(n);
        const double n2 = frobenius_norm_squared(a);
        node["A"] = matrix_to_node(a);
        meta["sign"] = nullptr;
        meta["traceless"] = nullptr;
        meta["target_constant"] = 0.5;
        meta["achieved_ratio"] = r_self(a) / (n2 * n2);
    } else {
        throw ContractError("unknown witness kind: " + kind);
    }
    node["meta"] = std::move(meta);
    return dump(node, indent);
}

std::string extremize_task_to_json(const ExtremizeTask& task) {
    json node{{"n", task.n},
              {"mode", task.maximize ? "maximize" : "minimize"},
              {"traceless", task.traceless_a},
              {"restarts", task.restarts},
              {"seed", task.seed},
              {"max_sweeps", task.max_sweeps},
              {"convergence_tol", task.convergence_tol}};
    return node.dump();
}

ExtremizeTask extremize_task_from_json(const std::string& text) {
    const json node = parse_text(text, "task");
    if (!node.is_object()) throw ParseError("task: expected an object");
    ExtremizeTask task;
    if (node.contains("n")) task.n = node["n"].get<int>();
    if (node.contains("mode")) {
        const std::string mode = node["mode"].get<std::string>();
        if (mode == "maximize") {
            task.maximize = true;
        } else if (mode == "minimize") {
            task.maximize = false;
        } else {
            throw ParseError("task: mode must be 'maximize' or 'minimize'");
        }
    }
    if (node.contains("traceless")) task.traceless_a = node["traceless"].get<bool>();
    if (node.contains("restarts")) task.restarts = node["restarts"].get<int>();
    if (node.contains("seed")) task.seed = node["seed"].get<std::uint64_t>();
    if (node.contains("max_sweeps")) task.max_sweeps = node["max_sweeps"].get<int>();
    if (node.contains("convergence_tol")) {
        task.convergence_tol = node["convergence_tol"].get<double>();
    }
    return task;
}

std::string extremize_result_to_json(const ExtremizeTask& task, const ExtremizeResult& result,
                                     int indent) {
    const BoundConstants bc = best_constants(task.n, task.traceless_a);
    const double target = task.maximize ? bc.c_plus : bc.c_minus;
    json node{{"task", json::parse(extremize_task_to_json(task))},
              {"ratio", result.ratio},
              {"A", matrix_to_node(result.a)},
              {"B", matrix_to_node(result.b)},
              {"sweeps_used", result.sweeps_used},
              {"restart_index", result.restart_index},
              {"trajectory", result.trajectory},
              {"target_constant", target},
              {"gap", std::abs(result.ratio - target)}};
    return dump(node, indent);
}

std::string generator_to_json(const GklsGenerator& gen, int indent) {
    json jumps = json::array();
    for (const ComplexMatrix& jump : gen.jumps) jumps.push_back(matrix_to_node(jump));
    json node{{"n", gen.n}, {"H", matrix_to_node(gen.hamiltonian)}, {"jumps", std::move(jumps)}};
    return dump(node, indent);
}

GklsGenerator generator_from_json(const std::string& text) {
    const json node = parse_text(text, "generator");
    if (!node.is_object()) throw ParseError("generator: expected an object");
    for (const char* key : {"n", "H", "jumps"}) {
        if (!node.contains(key)) {
            throw ParseError(std::string("generator: missing key '") + key + "'");
        }
    }
    const int n = node["n"].get<int>();
    const ComplexMatrix h = matrix_from_node(node["H"], "generator.H");
    if (h.rows() != n) throw ParseError("generator: H has the wrong dimension");
    if (!node["jumps"].is_array()) throw ParseError("generator: 'jumps' must be an array");
    std::vector<ComplexMatrix> jumps;
    jumps.reserve(node["jumps"].size());
    int index = 0;
    for (const json& jn : node["jumps"]) {
        jumps.push_back(matrix_from_node(jn, "generator.jumps[" + std::to_string(index) + "]"));
        ++index;
    }
    try {
        return make_generator(h, std::move(jumps));
    } catch (const ContractError& e) {
        throw ParseError(std::string("generator: ") + e.what());
    } catch (const DimensionError& e) {
        throw ParseError(std::string("generator: ") + e.what());
    }
}

std::string spectral_result_to_json(const SpectralResult& spec, int n, int indent) {
    json values = json::array();
    for (const Complex& z : spec.eigenvalues) {
        values.push_back(json{{"re", z.real()}, {"im", z.imag()}});
    }
    json node{{"n", n},
              {"eigenvalues", std::move(values)},
              {"rates", spec.rates},
              {"zero_index", spec.zero_index},
              {"defective", spec.defective},
              {"diagnostics",
               json{{"max_eigen_residual",
                     *std::max_element(spec.eigen_residuals.begin(), spec.eigen_residuals.end())},
                    {"conjugation_closure_residual", spec.conjugation_residual},
                    {"max_trace_residual", spec.max_trace_residual},
                    {"scale", spec.scale}}}};
    return dump(node, indent);
}

std::string audit_record_to_json(const AuditRecord& rec, int indent) {
    json node{{"id", rec.id},
              {"n", rec.n},
              {"mode", audit_mode_name(rec.mode)},
              {"rates", rec.rates},
              {"sum_rates", rec.sum_rates},
              {"bound_constant", rec.bound_constant},
              {"max_rate", rec.max_rate},
              {"margin", rec.margin},
              {"pass", rec.pass}};
    if (rec.time_relation.applicable) {
        node["time_relation"] = json{{"applicable", true},
                                     {"holds", rec.time_relation.holds},
                                     {"saturated", rec.time_relation.saturated},
                                     {"longitudinal_time", rec.time_relation.longitudinal_time},
                                     {"transverse_time", rec.time_relation.transverse_time}};
    } else {
        node["time_relation"] = json{{"applicable", false}};
    }
    return dump(node, indent);
}

std::string property_results_to_json(const std::vector<PropertyResult>& results, int n,
                                     int samples, std::uint64_t seed, int indent) {
    json props = json::array();
    bool all_pass = true;
    for (const PropertyResult& r : results) {
        all_pass = all_pass && r.pass;
        props.push_back(json{{"property", r.name},
                             {"samples", r.samples},
                             {"max_violation", r.max_violation},
                             {"tolerance", r.tolerance},
                             {"pass", r.pass}});
    }
    json node{{"n", n},
              {"samples", samples},
              {"seed", seed},
              {"properties", std::move(props)},
              {"all_pass", all_pass}};
    return dump(node, indent);
}

} // namespace rfunc
