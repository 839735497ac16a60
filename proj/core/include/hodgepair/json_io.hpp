#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hodgepair/crosscheck.hpp"
#include "hodgepair/random.hpp"
#include "hodgepair/verifier.hpp"

namespace hodgepair {

/// Key order is part of the report contract (reports must be byte-stable
/// across runs and thread counts), so all serialization uses ordered_json.
using OrderedJson = nlohmann::ordered_json;

std::string to_string(KernelMode mode);
std::optional<KernelMode> parse_kernel_mode(const std::string& name);

/// {"q": ..., "dims": {"H_M": ..., ..., "imageMap": ...}}
OrderedJson degree_dims_json(const DegreeDims& row);

/// {"statement": ..., "q": ..., "hypotheses_met": ..., "lhs": [...],
///  "rhs": [...], "verdict": ...} plus "notes" when any were recorded.
OrderedJson verdict_json(const VerificationResult& result);

/// {"instance_id": ..., "analysis": {...flags...}, "degrees": [...],
///  "verdicts": [...]}
OrderedJson instance_report_json(const InstanceReport& instance);

/// {"options": {...}, "instances": [...], "summary": {...}}
OrderedJson report_json(const Report& report);

/// {"tolerance": ..., "degrees_checked": ..., "agreed": ...,
///  "disagreements": [{"q", "field", "exact", "float"}...]}
OrderedJson agreement_json(const AgreementRecord& record);

/// Parses {"dims": [...], "cohomology": [...], "density": int|"p/q"}.
/// `context` prefixes error messages (a path or synthetic origin).
RandomPairProfile profile_from_json(const nlohmann::json& j,
                                    const std::string& context);

/// Plain-text rendering of one instance: a dimension table, one line per
/// verdict, and the analysis flags.
std::string render_instance_table(const InstanceReport& instance);

std::string render_summary_line(const SuiteSummary& summary);

}  // namespace hodgepair
