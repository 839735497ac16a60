#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgepair/rational.hpp"

namespace hodgepair {

/// The greatest integer strictly less than x: one below x at integers,
/// ordinary floor otherwise. Defined only for x > 0; anything else throws.
long long strict_floor(const Rational& x);

/// Integer-valued function of stratum codimension. The map holds only the
/// codimensions of interest; classical perversities are defined for k >= 2.
struct Perversity {
    std::map<int, long long> values;

    /// The value at codimension k; throws when k is not stored.
    long long at(int k) const;
};

/// The four classical families over k = 2..max_codim.
Perversity zero_perversity(int max_codim);
Perversity top_perversity(int max_codim);     // t(k) = k - 2
Perversity upper_middle_perversity(int max_codim);  // floor((k-1)/2)
Perversity lower_middle_perversity(int max_codim);  // floor((k-2)/2)

/// Result of the growth-condition check; `first_violation` is the smallest
/// codimension where the condition fails.
struct PerversityCheck {
    bool valid = true;
    std::optional<int> first_violation;
    std::string reason;
};

/// Classical-perversity conditions over the stored codimensions:
/// p(2) = 0 (when 2 is stored) and p(k) <= p(k+1) <= p(k)+1 for every
/// consecutive stored pair.
PerversityCheck validate_perversity(const Perversity& p);

/// Codimension-wise dual q(k) = t(k) - p(k) = (k-2) - p(k). An involution.
Perversity dual_perversity(const Perversity& p);

/// The exponent tuple (c_2, ..., c_m) of an iterated conic metric on an
/// m-dimensional space; entries[j] holds c_{j+2}. All entries positive.
struct CExponents {
    std::vector<Rational> entries;

    /// m: the space dimension the tuple is sized for.
    int dimension() const { return static_cast<int>(entries.size()) + 1; }
    /// c_index for index = 2..m; anything else throws (the formula is
    /// silent there, so no value is invented).
    const Rational& at(int index) const;

    static CExponents ones(int m);
};

/// Validating constructor: every exponent must be positive.
CExponents make_exponents(std::vector<Rational> entries);

/// One singular stratum: the dimension l of its link and its depth index i
/// (the stratum lies in X_{m-i} minus X_{m-i-1}, so it has dimension m-i).
struct StratumDatum {
    int link_dim = 0;
    int depth = 0;
};

/// The metric perversity at one stratum:
///   0                                        when l = 0,
///   l/2     + [[ 1/(2 c_{m-i}) ]]            when l is even and nonzero,
///   (l-1)/2 + [[ 1/2 + 1/(2 c_{m-i}) ]]      when l is odd,
/// where [[.]] is strict_floor. Strata with l > 0 need depth >= 2 and an
/// exponent at index m - i; violations throw.
long long metric_perversity(const CExponents& c, const StratumDatum& s);

/// The metric perversity as a codimension-indexed table for a space whose
/// codimension-k strata have (k-1)-dimensional links at depth k, for
/// k = 2..max_codim. Requires max_codim <= m - 2 so every exponent exists.
Perversity metric_perversity_profile(const CExponents& c, int max_codim);

}  // namespace hodgepair
