// Command-line front end for the rfunc shared library. All numerical work
// goes through the C API; this file only parses flags, moves JSON around,
// and formats CSV. stdout carries data, stderr carries diagnostics.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfunc/rfunc.h"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1; // assertion/convergence/verification failure
constexpr int kExitInput = 2;    // bad files, flags, or ranges

int exit_code_for(rf_status status) {
    switch (status) {
        case RF_OK: return kExitOk;
        case RF_ERR_NULL_ARGUMENT:
        case RF_ERR_INVALID_ARGUMENT:
        case RF_ERR_DIMENSION:
        case RF_ERR_PARSE: return kExitInput;
        case RF_ERR_CONVERGENCE:
        case RF_ERR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

/// Prints the library error for a failed call and returns the exit code.
int fail(rf_status status, const std::string& context) {
    std::cerr << "error: " << context << ": " << rf_status_name(status) << ": "
              << rf_last_error() << "\n";
    return exit_code_for(status);
}

std::string take_string(char* owned) {
    std::string out = owned ? owned : "";
    rf_string_free(owned);
    return out;
}

struct MatrixHandle {
    rf_matrix* ptr = nullptr;
    ~MatrixHandle() { rf_matrix_free(ptr); }
};

struct GeneratorHandle {
    rf_generator* ptr = nullptr;
    ~GeneratorHandle() { rf_generator_free(ptr); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data << "\n";
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return kExitInput;
    }
    out << data << "\n";
    return kExitOk;
}

bool parse_seed_env(const char* text, std::uint64_t& value) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(text, &end, 0);
    if (errno != 0 || end == text || *end != '\0') return false;
    value = static_cast<std::uint64_t>(parsed);
    return true;
}

/// Default seed, overridable by RFUNC_SEED; an explicit --seed wins.
int resolve_seed(bool seed_given, std::uint64_t& seed) {
    if (seed_given) return kExitOk;
    if (const char* env = std::getenv("RFUNC_SEED")) {
        if (!parse_seed_env(env, seed)) {
            std::cerr << "error: RFUNC_SEED is not an unsigned integer: " << env << "\n";
            return kExitInput;
        }
        return kExitOk;
    }
    seed = kDefaultSeed;
    return kExitOk;
}

int load_matrix(const std::string& path, MatrixHandle& handle) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitInput;
    }
    const rf_status status = rf_matrix_from_json(text.c_str(), &handle.ptr);
    if (status != RF_OK) return fail(status, path);
    return kExitOk;
}

int cmd_eval(const std::string& a_path, const std::string& b_path,
             const std::string& out_path) {
    MatrixHandle a, b;
    if (int rc = load_matrix(a_path, a); rc != kExitOk) return rc;
    if (int rc = load_matrix(b_path, b); rc != kExitOk) return rc;
    char* report = nullptr;
    const rf_status status = rf_r_report_json(a.ptr, b.ptr, &report);
    if (status != RF_OK) return fail(status, "eval");
    return emit(take_string(report), out_path);
}

int cmd_verify(int n, int samples, std::uint64_t seed, const std::string& out_path) {
    char* result = nullptr;
    const rf_status status = rf_verify_json(n, samples, seed, &result);
    if (status != RF_OK) return fail(status, "verify");
    const std::string text = take_string(result);
    const json node = json::parse(text);
    for (const json& prop : node["properties"]) {
        std::cerr << (prop["pass"].get<bool>() ? "pass" : "FAIL") << "  "
                  << prop["property"].get<std::string>()
                  << "  max_violation=" << prop["max_violation"].get<double>()
                  << "  tolerance=" << prop["tolerance"].get<double>() << "\n";
    }
    if (int rc = emit(text, out_path); rc != kExitOk) return rc;
    return node["all_pass"].get<bool>() ? kExitOk : kExitInternal;
}

int cmd_optimize(int n, bool minimize, bool traceless, int restarts, std::uint64_t seed,
                 int max_sweeps, double tol, const std::string& format,
                 const std::string& out_path) {
    const json task{{"n", n},
                    {"mode", minimize ? "minimize" : "maximize"},
                    {"traceless", traceless},
                    {"restarts", restarts},
                    {"seed", seed},
                    {"max_sweeps", max_sweeps},
                    {"convergence_tol", tol}};
    char* result = nullptr;
    const rf_status status = rf_extremize_json(task.dump().c_str(), &result);
    if (status != RF_OK) return fail(status, "optimize");
    const std::string text = take_string(result);
    const json node = json::parse(text);
    const double gap = node["gap"].get<double>();
    std::cerr << "ratio=" << node["ratio"].get<double>()
              << " target=" << node["target_constant"].get<double>() << " gap=" << gap
              << " sweeps=" << node["sweeps_used"].get<int>()
              << " restart=" << node["restart_index"].get<int>() << "\n";
    int rc;
    if (format == "csv") {
        std::ostringstream csv;
        csv << "sweep,ratio";
        const auto& trajectory = node["trajectory"];
        for (std::size_t i = 0; i < trajectory.size(); ++i) {
            csv << "\n" << (i + 1) << "," << trajectory[i].dump();
        }
        rc = emit(csv.str(), out_path);
    } else {
        rc = emit(text, out_path);
    }
    if (rc != kExitOk) return rc;
    return gap <= 1e-6 ? kExitOk : kExitInternal;
}

int cmd_witness(int n, bool minimize, const std::string& kind, const std::string& out_path) {
    char* result = nullptr;
    const rf_status status =
        rf_witness_json(n, kind.c_str(), minimize ? "lower" : "upper", &result);
    if (status != RF_OK) return fail(status, "witness");
    return emit(take_string(result), out_path);
}

struct GklsOptions {
    std::string action;
    std::string file;
    bool ensemble = false;
    int n = 2;
    int jumps = 1;
    int count = 1;
    std::uint64_t seed = kDefaultSeed;
    std::string mode = "theorem5_traceless";
    std::string format = "json";
    std::string out_path;
};

int gkls_single_source(const GklsOptions& opt, GeneratorHandle& gen, std::string& id) {
    if (!opt.file.empty()) {
        std::string text;
        if (!read_file(opt.file, text)) {
            std::cerr << "error: cannot read " << opt.file << "\n";
            return kExitInput;
        }
        const rf_status status = rf_generator_from_json(text.c_str(), &gen.ptr);
        if (status != RF_OK) return fail(status, opt.file);
        id = opt.file;
        return kExitOk;
    }
    const rf_status status = rf_generator_random(opt.n, opt.jumps, opt.seed, &gen.ptr);
    if (status != RF_OK) return fail(status, "random generator");
    id = "random-" + std::to_string(opt.seed);
    return kExitOk;
}

int cmd_gkls(const GklsOptions& opt) {
    if (opt.action == "spectrum") {
        GeneratorHandle gen;
        std::string id;
        if (int rc = gkls_single_source(opt, gen, id); rc != kExitOk) return rc;
        char* result = nullptr;
        const rf_status status = rf_gkls_spectrum_json(gen.ptr, &result);
        if (status != RF_OK) return fail(status, "spectrum");
        return emit(take_string(result), opt.out_path);
    }

    if (opt.action == "sumrule") {
        GeneratorHandle gen;
        std::string id;
        if (int rc = gkls_single_source(opt, gen, id); rc != kExitOk) return rc;
        double lhs = 0.0, rhs = 0.0;
        const rf_status status = rf_gkls_sum_rule(gen.ptr, &lhs, &rhs);
        if (status != RF_OK) return fail(status, "sumrule");
        const double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
        const json node{{"id", id},
                        {"rate_sum", lhs},
                        {"jump_norm_sum_scaled", rhs},
                        {"relative_error", err},
                        {"pass", err <= 1e-8}};
        if (int rc = emit(node.dump(), opt.out_path); rc != kExitOk) return rc;
        return err <= 1e-8 ? kExitOk : kExitInternal;
    }

    if (opt.action != "audit") {
        std::cerr << "error: unknown gkls action " << opt.action << "\n";
        return kExitInput;
    }

    if (!opt.ensemble) {
        GeneratorHandle gen;
        std::string id;
        if (int rc = gkls_single_source(opt, gen, id); rc != kExitOk) return rc;
        char* result = nullptr;
        const rf_status status =
            rf_gkls_audit_json(gen.ptr, opt.mode.c_str(), id.c_str(), &result);
        if (status != RF_OK) return fail(status, "audit");
        const std::string text = take_string(result);
        const bool pass = json::parse(text)["pass"].get<bool>();
        if (int rc = emit(text, opt.out_path); rc != kExitOk) return rc;
        return pass ? kExitOk : kExitInternal;
    }

    // Ensemble audit: records stream as JSON lines, ordered by index.
    std::ostringstream body;
    int failures = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < opt.count; ++i) {
        GeneratorHandle gen;
        const std::uint64_t seed = opt.seed ^ static_cast<std::uint64_t>(i);
        rf_status status = rf_generator_random(opt.n, opt.jumps, seed, &gen.ptr);
        if (status != RF_OK) return fail(status, "random generator");
        char* result = nullptr;
        const std::string id = "ensemble-" + std::to_string(i);
        status = rf_gkls_audit_json(gen.ptr, opt.mode.c_str(), id.c_str(), &result);
        if (status != RF_OK) return fail(status, id);
        const std::string text = take_string(result);
        const json record = json::parse(text);
        if (!record["pass"].get<bool>()) ++failures;
        min_margin = std::min(min_margin, record["margin"].get<double>());
        if (opt.format == "json") body << text << "\n";
    }
    const json summary{{"n", opt.n},         {"num_jumps", opt.jumps},
                       {"count", opt.count}, {"min_margin", min_margin},
                       {"failures", failures}};
    if (opt.format == "csv") {
        body << "n,num_jumps,count,min_margin,failures\n"
             << opt.n << "," << opt.jumps << "," << opt.count << "," << min_margin << ","
             << failures;
    } else {
        body << summary.dump();
    }
    std::cerr << "ensemble: failures=" << failures << " min_margin=" << min_margin << "\n";
    if (int rc = emit(body.str(), opt.out_path); rc != kExitOk) return rc;
    return failures == 0 ? kExitOk : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-functional toolkit: evaluation, sharp-bound witnesses, numerical "
                 "extremization, and GKLS relaxation-rate audits"};
    app.require_subcommand(1);

    // eval
    std::string eval_a, eval_b, eval_out;
    CLI::App* eval = app.add_subcommand("eval", "evaluate r(A,B) with all equivalent routes");
    eval->add_option("A", eval_a, "matrix JSON file for A")->required();
    eval->add_option("B", eval_b, "matrix JSON file for B")->required();
    eval->add_option("--out", eval_out, "write output to file instead of stdout");

    // verify
    int verify_n = 3, verify_count = 1000;
    std::uint64_t verify_seed = kDefaultSeed;
    bool verify_seed_given = false;
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "randomized identity and bound checks");
    verify->add_option("--n", verify_n, "matrix size (2..8)")->capture_default_str();
    verify->add_option("--count", verify_count, "samples per property")->capture_default_str();
    verify->add_option("--seed", verify_seed, "random seed")
        ->each([&](const std::string&) { verify_seed_given = true; });
    verify->add_option("--out", verify_out, "write output to file instead of stdout");

    // optimize
    int opt_n = 2, opt_restarts = 20, opt_sweeps = 500;
    double opt_tol = 1e-12;
    std::uint64_t opt_seed = kDefaultSeed;
    bool opt_seed_given = false, opt_max = false, opt_min = false, opt_traceless = false;
    std::string opt_format = "json", opt_out;
    CLI::App* optimize = app.add_subcommand("optimize", "extremize r/(...) by alternating "
                                                        "exact eigen-updates");
    optimize->add_option("--n", opt_n, "matrix size (2..8)")->capture_default_str();
    optimize->add_flag("--max", opt_max, "maximize (default)");
    optimize->add_flag("--min", opt_min, "minimize");
    optimize->add_flag("--traceless", opt_traceless, "restrict A to the traceless subspace");
    optimize->add_option("--restarts", opt_restarts, "random restarts")->capture_default_str();
    optimize->add_option("--seed", opt_seed, "random seed")
        ->each([&](const std::string&) { opt_seed_given = true; });
    optimize->add_option("--sweeps", opt_sweeps, "max sweeps per restart")
        ->capture_default_str();
    optimize->add_option("--tol", opt_tol, "convergence tolerance on the ratio")
        ->capture_default_str();
    optimize->add_option("--format", opt_format, "json | csv (trajectory)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    optimize->add_option("--out", opt_out, "write output to file instead of stdout");

    // witness
    int wit_n = 2;
    bool wit_max = false, wit_min = false;
    std::string wit_mode = "general", wit_out;
    CLI::App* witness = app.add_subcommand("witness", "closed-form extremal pairs");
    witness->add_option("--n", wit_n, "matrix size")->capture_default_str();
    witness->add_flag("--max", wit_max, "upper-bound witness (default)");
    witness->add_flag("--min", wit_min, "lower-bound witness");
    witness->add_option("--mode", wit_mode, "general | traceless | qubit | self")
        ->check(CLI::IsMember({"general", "traceless", "qubit", "self"}))
        ->capture_default_str();
    witness->add_option("--out", wit_out, "write output to file instead of stdout");

    // gkls
    GklsOptions gkls;
    bool gkls_seed_given = false;
    CLI::App* gkls_cmd = app.add_subcommand("gkls", "GKLS generator spectra and audits");
    gkls_cmd->require_subcommand(1);
    std::vector<CLI::App*> gkls_actions;
    for (const char* action : {"audit", "spectrum", "sumrule"}) {
        CLI::App* sub = gkls_cmd->add_subcommand(action);
        sub->add_option("file", gkls.file, "generator JSON file");
        sub->add_flag("--ensemble", gkls.ensemble, "draw random generators instead of a file");
        sub->add_option("--n", gkls.n, "level count")->capture_default_str();
        sub->add_option("--jumps", gkls.jumps, "jump operators per generator")
            ->capture_default_str();
        sub->add_option("--count", gkls.count, "ensemble size")->capture_default_str();
        sub->add_option("--seed", gkls.seed, "random seed")
            ->each([&](const std::string&) { gkls_seed_given = true; });
        sub->add_option("--mode", gkls.mode,
                        "theorem5_traceless | theorem5_general | sqrt2_legacy")
            ->check(CLI::IsMember({"theorem5_traceless", "theorem5_general", "sqrt2_legacy"}))
            ->capture_default_str();
        sub->add_option("--format", gkls.format, "json | csv (ensemble summary)")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", gkls.out_path, "write output to file instead of stdout");
        gkls_actions.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_a, eval_b, eval_out);
        if (verify->parsed()) {
            if (int rc = resolve_seed(verify_seed_given, verify_seed); rc != kExitOk) return rc;
            return cmd_verify(verify_n, verify_count, verify_seed, verify_out);
        }
        if (optimize->parsed()) {
            if (opt_max && opt_min) {
                std::cerr << "error: --max and --min are mutually exclusive\n";
                return kExitInput;
            }
            if (int rc = resolve_seed(opt_seed_given, opt_seed); rc != kExitOk) return rc;
            return cmd_optimize(opt_n, opt_min, opt_traceless, opt_restarts, opt_seed,
                                opt_sweeps, opt_tol, opt_format, opt_out);
        }
        if (witness->parsed()) {
            if (wit_max && wit_min) {
                std::cerr << "error: --max and --min are mutually exclusive\n";
                return kExitInput;
            }
            return cmd_witness(wit_n, wit_min, wit_mode, wit_out);
        }
        if (gkls_cmd->parsed()) {
            if (int rc = resolve_seed(gkls_seed_given, gkls.seed); rc != kExitOk) return rc;
            for (std::size_t i = 0; i < gkls_actions.size(); ++i) {
                if (gkls_actions[i]->parsed()) {
                    gkls.action = gkls_actions[i]->get_name();
                    return cmd_gkls(gkls);
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    std::cerr << "error: no subcommand\n";
    return kExitInput;
}
