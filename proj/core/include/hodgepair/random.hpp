#pragma once

#include <cstdint>
#include <vector>

#include "hodgepair/pair.hpp"
#include "hodgepair/rational.hpp"
#include "hodgepair/rng.hpp"

namespace hodgepair {

/// Shape of a generated pair: per-degree space dimensions, per-degree
/// cohomology targets for the big complex, and the expected fraction of
/// basis directions kept in the small complex's domains. density 1 keeps
/// everything and yields the trivial pair.
struct RandomPairProfile {
    std::vector<int> dims;
    std::vector<int> cohomology;
    Rational density = 1;
};

/// Throws Error when no valid complex has these dimensions and cohomology
/// (the required differential ranks would be negative or not close up).
void check_profile(const RandomPairProfile& profile);

/// A valid complex with exactly the profile's cohomology: a direct-sum
/// normal form realising the target dimensions, conjugated degree-wise by
/// seeded unimodular maps, with seeded symmetric-positive-definite Grams.
/// Deterministic per (profile, seed).
HilbertComplex generate_random_complex(const RandomPairProfile& profile,
                                       std::uint64_t seed);

/// A nested pair on top of generate_random_complex: the small complex
/// restricts each domain to a seeded random chain of subspaces mapped into
/// each other by the differentials. Deterministic per (profile, seed).
ComplexPair generate_random_pair(const RandomPairProfile& profile,
                                 std::uint64_t seed);

/// A feasible random profile: degrees <= max_degrees, dimensions in
/// [1, max_dim], cohomology targets filled in so a valid complex exists.
RandomPairProfile random_profile(SplitMix64& rng, int max_degrees, int max_dim,
                                 const Rational& density = 1);

/// A random linear relation between spaces of the given dimensions with
/// seeded positive-definite Grams: its graph is a random subspace of the
/// product, so partial domains and multivalued parts both occur.
LinearRelation random_relation(int from_dim, int to_dim, std::uint64_t seed);

}  // namespace hodgepair
