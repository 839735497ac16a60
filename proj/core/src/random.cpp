#include "hodgepair/random.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hodgepair/error.hpp"

namespace hodgepair {

namespace {

/// An exactly invertible change of basis built from elementary operations,
/// with the inverse maintained alongside so no elimination is ever needed.
struct Unimodular {
    RatMatrix fwd;
    RatMatrix inv;
};

Unimodular random_unimodular(int n, SplitMix64& rng) {
    Unimodular u{RatMatrix::identity(n), RatMatrix::identity(n)};
    if (n < 2) return u;
    const int ops = 2 * n + 4;
    for (int step = 0; step < ops; ++step) {
        const int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
        if (j >= i) ++j;
        const auto kind = rng.next_below(4);
        if (kind == 0) {
            // Swap rows i and j of fwd; swap columns i and j of inv.
            for (int c = 0; c < n; ++c) std::swap(u.fwd.at(i, c), u.fwd.at(j, c));
            for (int r = 0; r < n; ++r) std::swap(u.inv.at(r, i), u.inv.at(r, j));
        } else {
            // Shear: row_i += m * row_j on fwd; col_j -= m * col_i on inv.
            long long m = static_cast<long long>(rng.next_below(4));
            m = (m < 2) ? m - 2 : m - 1;  // one of -2, -1, 1, 2
            const Rational factor(m);
            for (int c = 0; c < n; ++c) {
                u.fwd.at(i, c) += factor * u.fwd.at(j, c);
            }
            for (int r = 0; r < n; ++r) {
                u.inv.at(r, j) -= factor * u.inv.at(r, i);
            }
        }
    }
    return u;
}

/// Seeded symmetric positive definite Gram: L^T D L with L unit lower
/// triangular (small integer entries) and D a positive diagonal.
RatMatrix random_gram(int n, SplitMix64& rng) {
    RatMatrix l = RatMatrix::identity(n);
    for (int r = 1; r < n; ++r) {
        for (int c = 0; c < r; ++c) {
            l.at(r, c) = Rational(static_cast<long long>(rng.next_below(5)) - 2);
        }
    }
    RatMatrix d = RatMatrix::zero(n, n);
    for (int i = 0; i < n; ++i) {
        d.at(i, i) = Rational(1 + static_cast<long long>(rng.next_below(6)),
                              1 + static_cast<long long>(rng.next_below(3)));
    }
    return l.transpose() * d * l;
}

/// Required differential ranks for the profile; throws when infeasible.
std::vector<int> required_ranks(const RandomPairProfile& profile) {
    const int n = static_cast<int>(profile.dims.size()) - 1;
    if (n < 0) throw Error("profile needs at least one degree");
    if (profile.cohomology.size() != profile.dims.size()) {
        throw Error("profile lists " + std::to_string(profile.dims.size()) +
                    " dimensions but " +
                    std::to_string(profile.cohomology.size()) +
                    " cohomology targets");
    }
    std::vector<int> ranks;  // ranks[q] = rank of d_q, q = 0..n
    int below = 0;
    for (int q = 0; q <= n; ++q) {
        const int dim = profile.dims[static_cast<std::size_t>(q)];
        const int target = profile.cohomology[static_cast<std::size_t>(q)];
        if (dim < 0 || dim > 8) {
            throw Error("per-degree dimensions must lie in 0..8, got " +
                        std::to_string(dim));
        }
        if (target < 0 || target > dim) {
            throw Error("cohomology target at degree " + std::to_string(q) +
                        " must lie in 0.." + std::to_string(dim) + ", got " +
                        std::to_string(target));
        }
        const int rank = dim - target - below;
        if (rank < 0) {
            throw Error("profile infeasible at degree " + std::to_string(q) +
                        ": would need differential rank " +
                        std::to_string(rank));
        }
        ranks.push_back(rank);
        below = rank;
    }
    if (ranks.back() != 0) {
        throw Error("profile infeasible: the top differential would need rank " +
                    std::to_string(ranks.back()));
    }
    return ranks;
}

}  // namespace

void check_profile(const RandomPairProfile& profile) {
    required_ranks(profile);
    if (profile.density < 0 || profile.density > 1) {
        throw Error("density must lie in [0,1], got " +
                    format_rational(profile.density));
    }
}

HilbertComplex generate_random_complex(const RandomPairProfile& profile,
                                       std::uint64_t seed) {
    check_profile(profile);
    const std::vector<int> ranks = required_ranks(profile);
    const int n = static_cast<int>(profile.dims.size()) - 1;
    SplitMix64 rng = SplitMix64(seed).fork(1);

    // Normal form at degree q: [target_q harmonic | ranks[q-1] received |
    // ranks[q] sent]; d_q maps the sent block identically onto the received
    // block one degree up. Conjugation hides the block structure.
    std::vector<Unimodular> bases;
    std::vector<InnerProductSpace> spaces;
    for (int q = 0; q <= n; ++q) {
        const int dim = profile.dims[static_cast<std::size_t>(q)];
        bases.push_back(random_unimodular(dim, rng));
        spaces.emplace_back(dim, random_gram(dim, rng));
    }

    std::vector<LinearRelation> diffs;
    for (int q = 0; q < n; ++q) {
        const int dim_here = profile.dims[static_cast<std::size_t>(q)];
        const int dim_up = profile.dims[static_cast<std::size_t>(q + 1)];
        const int sent_offset = dim_here - ranks[static_cast<std::size_t>(q)];
        const int received_offset =
            profile.cohomology[static_cast<std::size_t>(q + 1)];
        RatMatrix normal = RatMatrix::zero(dim_up, dim_here);
        for (int j = 0; j < ranks[static_cast<std::size_t>(q)]; ++j) {
            normal.at(received_offset + j, sent_offset + j) = 1;
        }
        const RatMatrix conjugated =
            bases[static_cast<std::size_t>(q + 1)].fwd * normal *
            bases[static_cast<std::size_t>(q)].inv;
        diffs.push_back(LinearRelation::from_matrix(
            conjugated, spaces[static_cast<std::size_t>(q)],
            spaces[static_cast<std::size_t>(q + 1)]));
    }
    return HilbertComplex(std::move(spaces), std::move(diffs));
}

ComplexPair generate_random_pair(const RandomPairProfile& profile,
                                 std::uint64_t seed) {
    const HilbertComplex big = generate_random_complex(profile, seed);
    const std::vector<int> ranks = required_ranks(profile);
    const int n = big.length();

    // Re-derive the same conjugating bases the big complex used, so the
    // restriction chain can be chosen block-wise in normal coordinates.
    SplitMix64 rng = SplitMix64(seed).fork(1);
    std::vector<Unimodular> bases;
    for (int q = 0; q <= n; ++q) {
        const int dim = profile.dims[static_cast<std::size_t>(q)];
        bases.push_back(random_unimodular(dim, rng));
        random_gram(dim, rng);  // consume the same draws
    }

    // Choose kept coordinates per degree, then force d-invariance: a kept
    // sender drags the matching receiver one degree up into the chain.
    SplitMix64 keep_rng = SplitMix64(seed).fork(2);
    std::vector<std::vector<bool>> kept;
    for (int q = 0; q <= n; ++q) {
        const int dim = profile.dims[static_cast<std::size_t>(q)];
        std::vector<bool> here(static_cast<std::size_t>(dim), false);
        for (int c = 0; c < dim; ++c) {
            const auto draw = keep_rng.next() >> 44;  // 20 bits
            here[static_cast<std::size_t>(c)] =
                Rational(static_cast<long long>(draw), 1 << 20) <
                profile.density;
        }
        kept.push_back(std::move(here));
    }
    for (int q = 0; q < n; ++q) {
        const int dim_here = profile.dims[static_cast<std::size_t>(q)];
        const int sent_offset = dim_here - ranks[static_cast<std::size_t>(q)];
        const int received_offset =
            profile.cohomology[static_cast<std::size_t>(q + 1)];
        for (int j = 0; j < ranks[static_cast<std::size_t>(q)]; ++j) {
            if (kept[static_cast<std::size_t>(q)]
                    [static_cast<std::size_t>(sent_offset + j)]) {
                kept[static_cast<std::size_t>(q + 1)]
                    [static_cast<std::size_t>(received_offset + j)] = true;
            }
        }
    }

    std::vector<LinearRelation> small_diffs;
    for (int q = 0; q < n; ++q) {
        const int dim = profile.dims[static_cast<std::size_t>(q)];
        int count = 0;
        for (bool flag : kept[static_cast<std::size_t>(q)]) count += flag;
        RatMatrix rows(count, dim);
        int r = 0;
        for (int c = 0; c < dim; ++c) {
            if (!kept[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)]) {
                continue;
            }
            // The chain direction is the image of the kept normal-form
            // coordinate: column c of the forward change of basis.
            for (int row = 0; row < dim; ++row) {
                rows.at(r, row) = bases[static_cast<std::size_t>(q)].fwd.at(row, c);
            }
            ++r;
        }
        const Subspace chain = Subspace::from_rows(rows, dim);
        small_diffs.push_back(restrict_domain(big.diff(q), chain));
    }

    std::vector<InnerProductSpace> spaces;
    for (int q = 0; q <= n; ++q) spaces.push_back(big.space(q));
    HilbertComplex small(std::move(spaces), std::move(small_diffs));
    return ComplexPair(big, std::move(small));
}

RandomPairProfile random_profile(SplitMix64& rng, int max_degrees, int max_dim,
                                 const Rational& density) {
    if (max_degrees < 0 || max_dim < 1 || max_dim > 8) {
        throw Error("random_profile needs max_degrees >= 0 and max_dim in 1..8");
    }
    RandomPairProfile profile;
    profile.density = density;
    const int n = static_cast<int>(
        rng.next_below(static_cast<std::uint64_t>(max_degrees) + 1));

    // Draw all dimensions first, then split each degree into a harmonic part
    // and a rank shared with the next degree. Capping each rank by both the
    // remaining room here and the next dimension keeps every split feasible.
    for (int q = 0; q <= n; ++q) {
        profile.dims.push_back(1 + static_cast<int>(rng.next_below(
                                       static_cast<std::uint64_t>(max_dim))));
    }
    int below = 0;
    for (int q = 0; q <= n; ++q) {
        const int dim = profile.dims[static_cast<std::size_t>(q)];
        int rank = 0;
        if (q < n) {
            const int cap =
                std::min(dim - below, profile.dims[static_cast<std::size_t>(q + 1)]);
            rank = static_cast<int>(
                rng.next_below(static_cast<std::uint64_t>(cap) + 1));
        }
        profile.cohomology.push_back(dim - below - rank);
        below = rank;
    }
    return profile;
}

LinearRelation random_relation(int from_dim, int to_dim, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const InnerProductSpace from(from_dim, random_gram(from_dim, rng));
    const InnerProductSpace to(to_dim, random_gram(to_dim, rng));
    const int total = from_dim + to_dim;
    const int k = static_cast<int>(
        rng.next_below(static_cast<std::uint64_t>(total) + 1));
    RatMatrix rows(k, total);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < total; ++c) {
            rows.at(r, c) =
                Rational(static_cast<long long>(rng.next_below(11)) - 5);
        }
    }
    return LinearRelation::from_graph(from, to,
                                      Subspace::from_rows(rows, total));
}

}  // namespace hodgepair
