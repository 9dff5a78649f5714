#pragma once

#include <string>
#include <vector>

#include "complex_matrix.hpp"
#include "gkls.hpp"
#include "optimizer.hpp"
#include "rfunctional.hpp"
#include "verify.hpp"
#include "witness.hpp"

namespace rfunc {

/// Shared matrix wire format:
/// {"rows": n, "cols": n, "re": [[...]], "im": [[...]]} with row-major
/// nested arrays. All four keys are required on input and always emitted.
std::string matrix_to_json(const ComplexMatrix& m, int indent = -1);
ComplexMatrix matrix_from_json(const std::string& text);

/// Report with every evaluation route keyed by its wire name (eq1, eq9..eq15)
/// plus a block stating which bounds apply to (A, B) and whether they hold.
std::string r_report_to_json(const ComplexMatrix& a, const ComplexMatrix& b, int indent = -1);

/// Witness pair with {n, kind, sign, traceless, target_constant,
/// achieved_ratio} metadata. kind: general | traceless | qubit | self.
std::string witness_to_json(int n, const std::string& kind, const std::string& sign,
                            int indent = -1);

std::string extremize_task_to_json(const ExtremizeTask& task);
ExtremizeTask extremize_task_from_json(const std::string& text);
std::string extremize_result_to_json(const ExtremizeTask& task, const ExtremizeResult& result,
                                     int indent = -1);

std::string generator_to_json(const GklsGenerator& gen, int indent = -1);
GklsGenerator generator_from_json(const std::string& text);

std::string spectral_result_to_json(const SpectralResult& spec, int n, int indent = -1);
std::string audit_record_to_json(const AuditRecord& rec, int indent = -1);

std::string property_results_to_json(const std::vector<PropertyResult>& results, int n,
                                     int samples, std::uint64_t seed, int indent = -1);

} // namespace rfunc
