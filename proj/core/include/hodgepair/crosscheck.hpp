#pragma once

#include <string>
#include <vector>

#include "hodgepair/pair.hpp"

namespace hodgepair {

/// One dimension whose floating-point recomputation differs from the exact
/// value.
struct DimensionDisagreement {
    int q = 0;
    std::string field;
    int exact_value = 0;
    int float_value = 0;
};

/// Outcome of rerunning the dimension table in floating point.
struct AgreementRecord {
    double tolerance = 0;
    int degrees_checked = 0;
    std::vector<DimensionDisagreement> disagreements;
    bool agreed() const { return disagreements.empty(); }
};

/// Reruns every rank and dimension behind the analysis table in double
/// precision — an independent elimination pipeline where pivots of magnitude
/// at most tolerance times the largest input entry count as zero — and
/// reports each table entry that disagrees with the exact backend. The
/// floating numbers are informational only; they never decide a verdict.
/// Throws Error unless tolerance > 0.
AgreementRecord crosscheck_backend(const ComplexPair& instance,
                                   double tolerance,
                                   KernelMode mode = KernelMode::inclusive);

}  // namespace hodgepair
