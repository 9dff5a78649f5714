#include "rfunc/rfunc.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/gkls.hpp"
#include "core/json_io.hpp"
#include "core/optimizer.hpp"
#include "core/rfunctional.hpp"
#include "core/verify.hpp"
#include "core/witness.hpp"

struct rf_matrix {
    rfunc::ComplexMatrix value;
};

struct rf_generator {
    rfunc::GklsGenerator value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Runs fn, translating C++ exceptions into status codes.
template <typename Fn>
rf_status guarded(Fn&& fn) {
    try {
        fn();
        return RF_OK;
    } catch (const rfunc::DimensionError& e) {
        set_error(e.what());
        return RF_ERR_DIMENSION;
    } catch (const rfunc::ParseError& e) {
        set_error(e.what());
        return RF_ERR_PARSE;
    } catch (const rfunc::ContractError& e) {
        set_error(e.what());
        return RF_ERR_INVALID_ARGUMENT;
    } catch (const rfunc::ConvergenceError& e) {
        set_error(e.what());
        return RF_ERR_CONVERGENCE;
    } catch (const rfunc::InternalError& e) {
        set_error(e.what());
        return RF_ERR_INTERNAL;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return RF_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return RF_ERR_INTERNAL;
    }
}

rf_status require(bool present, const char* name) {
    if (present) return RF_OK;
    set_error(std::string("null argument: ") + name);
    return RF_ERR_NULL_ARGUMENT;
}

} // namespace

extern "C" {

const char* rf_version(void) { return "1.0.0"; }

const char* rf_status_name(rf_status status) {
    switch (status) {
        case RF_OK: return "ok";
        case RF_ERR_NULL_ARGUMENT: return "null_argument";
        case RF_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case RF_ERR_DIMENSION: return "dimension";
        case RF_ERR_PARSE: return "parse";
        case RF_ERR_CONVERGENCE: return "convergence";
        case RF_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* rf_last_error(void) { return g_last_error.c_str(); }

rf_status rf_matrix_create(int rows, int cols, const double* re, const double* im,
                           rf_matrix** out) {
    if (rf_status s = require(out && re, out ? "re" : "out"); s != RF_OK) return s;
    return guarded([&] {
        std::vector<rfunc::Complex> entries(static_cast<std::size_t>(rows < 0 ? 0 : rows) *
                                            (cols < 0 ? 0 : cols));
        for (std::size_t k = 0; k < entries.size(); ++k) {
            entries[k] = rfunc::Complex(re[k], im ? im[k] : 0.0);
        }
        *out = new rf_matrix{rfunc::ComplexMatrix(rows, cols, std::move(entries))};
    });
}

rf_status rf_matrix_from_json(const char* json_text, rf_matrix** out) {
    if (rf_status s = require(json_text && out, json_text ? "out" : "json_text"); s != RF_OK)
        return s;
    return guarded([&] { *out = new rf_matrix{rfunc::matrix_from_json(json_text)}; });
}

rf_status rf_matrix_to_json(const rf_matrix* m, char** out_json) {
    if (rf_status s = require(m && out_json, m ? "out_json" : "m"); s != RF_OK) return s;
    return guarded([&] { *out_json = copy_string(rfunc::matrix_to_json(m->value)); });
}

rf_status rf_matrix_shape(const rf_matrix* m, int* rows, int* cols) {
    if (rf_status s = require(m && rows && cols, "m/rows/cols"); s != RF_OK) return s;
    *rows = m->value.rows();
    *cols = m->value.cols();
    return RF_OK;
}

rf_status rf_matrix_get(const rf_matrix* m, int row, int col, double* re, double* im) {
    if (rf_status s = require(m && re && im, "m/re/im"); s != RF_OK) return s;
    if (row < 0 || row >= m->value.rows() || col < 0 || col >= m->value.cols()) {
        set_error("rf_matrix_get: index out of range");
        return RF_ERR_DIMENSION;
    }
    const rfunc::Complex z = m->value(row, col);
    *re = z.real();
    *im = z.imag();
    return RF_OK;
}

void rf_matrix_free(rf_matrix* m) { delete m; }

rf_status rf_r_eval(const rf_matrix* a, const rf_matrix* b, double* out_value) {
    if (rf_status s = require(a && b && out_value, "a/b/out_value"); s != RF_OK) return s;
    return guarded([&] { *out_value = rfunc::r_eval(a->value, b->value); });
}

rf_status rf_r_self(const rf_matrix* a, double* out_value) {
    if (rf_status s = require(a && out_value, "a/out_value"); s != RF_OK) return s;
    return guarded([&] { *out_value = rfunc::r_self(a->value); });
}

rf_status rf_frobenius_norm(const rf_matrix* a, double* out_value) {
    if (rf_status s = require(a && out_value, "a/out_value"); s != RF_OK) return s;
    return guarded([&] { *out_value = rfunc::frobenius_norm(a->value); });
}

rf_status rf_r_report_json(const rf_matrix* a, const rf_matrix* b, char** out_json) {
    if (rf_status s = require(a && b && out_json, "a/b/out_json"); s != RF_OK) return s;
    return guarded([&] { *out_json = copy_string(rfunc::r_report_to_json(a->value, b->value)); });
}

rf_status rf_best_constants(int n, int traceless, double* c_minus, double* c_plus) {
    if (rf_status s = require(c_minus && c_plus, "c_minus/c_plus"); s != RF_OK) return s;
    return guarded([&] {
        const rfunc::BoundConstants c = rfunc::best_constants(n, traceless != 0);
        *c_minus = c.c_minus;
        *c_plus = c.c_plus;
    });
}

rf_status rf_witness_json(int n, const char* kind, const char* sign, char** out_json) {
    if (rf_status s = require(kind && out_json, kind ? "out_json" : "kind"); s != RF_OK) return s;
    return guarded([&] {
        *out_json = copy_string(rfunc::witness_to_json(n, kind, sign ? sign : ""));
    });
}

rf_status rf_extremize_json(const char* task_json, char** out_json) {
    if (rf_status s = require(task_json && out_json, task_json ? "out_json" : "task_json");
        s != RF_OK)
        return s;
    return guarded([&] {
        const rfunc::ExtremizeTask task = rfunc::extremize_task_from_json(task_json);
        const rfunc::ExtremizeResult result = rfunc::alternating_extremize(task);
        *out_json = copy_string(rfunc::extremize_result_to_json(task, result));
    });
}

rf_status rf_verify_json(int n, int samples, uint64_t seed, char** out_json) {
    if (rf_status s = require(out_json, "out_json"); s != RF_OK) return s;
    return guarded([&] {
        const std::vector<rfunc::PropertyResult> results =
            rfunc::run_property_suite(n, samples, seed);
        *out_json = copy_string(rfunc::property_results_to_json(results, n, samples, seed));
    });
}

rf_status rf_generator_from_json(const char* json_text, rf_generator** out) {
    if (rf_status s = require(json_text && out, json_text ? "out" : "json_text"); s != RF_OK)
        return s;
    return guarded([&] { *out = new rf_generator{rfunc::generator_from_json(json_text)}; });
}

rf_status rf_generator_random(int n, int num_jumps, uint64_t seed, rf_generator** out) {
    if (rf_status s = require(out, "out"); s != RF_OK) return s;
    return guarded([&] { *out = new rf_generator{rfunc::random_generator(n, num_jumps, seed)}; });
}

rf_status rf_generator_to_json(const rf_generator* gen, char** out_json) {
    if (rf_status s = require(gen && out_json, gen ? "out_json" : "gen"); s != RF_OK) return s;
    return guarded([&] { *out_json = copy_string(rfunc::generator_to_json(gen->value)); });
}

void rf_generator_free(rf_generator* gen) { delete gen; }

rf_status rf_gkls_spectrum_json(const rf_generator* gen, char** out_json) {
    if (rf_status s = require(gen && out_json, gen ? "out_json" : "gen"); s != RF_OK) return s;
    return guarded([&] {
        const rfunc::SpectralResult spec = rfunc::spectrum(gen->value);
        *out_json = copy_string(rfunc::spectral_result_to_json(spec, gen->value.n));
    });
}

rf_status rf_gkls_sum_rule(const rf_generator* gen, double* lhs, double* rhs) {
    if (rf_status s = require(gen && lhs && rhs, "gen/lhs/rhs"); s != RF_OK) return s;
    return guarded([&] {
        const auto [l, r] = rfunc::sum_rule_check(gen->value);
        *lhs = l;
        *rhs = r;
    });
}

rf_status rf_gkls_audit_json(const rf_generator* gen, const char* mode, const char* id,
                             char** out_json) {
    if (rf_status s = require(gen && mode && out_json, "gen/mode/out_json"); s != RF_OK) return s;
    return guarded([&] {
        const rfunc::AuditRecord rec = rfunc::constraint_audit(
            gen->value, rfunc::audit_mode_from_string(mode), id ? id : "");
        *out_json = copy_string(rfunc::audit_record_to_json(rec));
    });
}

void rf_string_free(char* s) { delete[] s; }

} // extern "C"
