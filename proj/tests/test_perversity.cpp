#include "hodgepair/perversity.hpp"

#include <doctest.h>

#include "hodgepair/error.hpp"

using namespace hodgepair;

TEST_CASE("strict floor: the greatest integer strictly below") {
    CHECK(strict_floor(Rational(1, 2)) == 0);
    CHECK(strict_floor(Rational(1)) == 0);
    CHECK(strict_floor(Rational(7, 3)) == 2);
    CHECK(strict_floor(Rational(2)) == 1);
    CHECK(strict_floor(Rational(1, 4)) == 0);
    CHECK(strict_floor(Rational(15)) == 14);

    CHECK_THROWS_AS(strict_floor(Rational(0)), Error);
    CHECK_THROWS_AS(strict_floor(Rational(-1, 2)), Error);

    // strict_floor(x) < x <= strict_floor(x) + 1 across a sweep.
    for (int p = 1; p <= 12; ++p) {
        for (int q = 1; q <= 12; ++q) {
            const Rational x(p, q);
            const long long b = strict_floor(x);
            CHECK(Rational(b) < x);
            CHECK(x <= Rational(b + 1));
        }
    }
}

TEST_CASE("classical perversity families") {
    const Perversity zero = zero_perversity(12);
    const Perversity top = top_perversity(12);
    const Perversity upper = upper_middle_perversity(12);
    const Perversity lower = lower_middle_perversity(12);

    CHECK(zero.at(2) == 0);
    CHECK(zero.at(12) == 0);
    CHECK(top.at(2) == 0);
    CHECK(top.at(12) == 10);
    CHECK(upper.at(2) == 0);
    CHECK(upper.at(3) == 1);
    CHECK(upper.at(4) == 1);
    CHECK(upper.at(5) == 2);
    CHECK(lower.at(2) == 0);
    CHECK(lower.at(3) == 0);
    CHECK(lower.at(4) == 1);
    CHECK(lower.at(5) == 1);

    // The two middles agree exactly at even codimension.
    for (int k = 2; k <= 12; ++k) {
        if (k % 2 == 0) {
            CHECK(upper.at(k) == lower.at(k));
        } else {
            CHECK(upper.at(k) == lower.at(k) + 1);
        }
    }

    for (const Perversity& p : {zero, top, upper, lower}) {
        CHECK(validate_perversity(p).valid);
    }

    CHECK_THROWS_AS(zero.at(13), Error);
}

TEST_CASE("growth-condition validation pinpoints the first violation") {
    Perversity bad_base;
    bad_base.values = {{2, 1}, {3, 1}};
    const auto base_check = validate_perversity(bad_base);
    CHECK_FALSE(base_check.valid);
    CHECK(base_check.first_violation == 2);

    Perversity jump;
    jump.values = {{2, 0}, {3, 0}, {4, 2}};
    const auto jump_check = validate_perversity(jump);
    CHECK_FALSE(jump_check.valid);
    CHECK(jump_check.first_violation == 3);

    Perversity drop;
    drop.values = {{2, 0}, {3, 1}, {4, 0}};
    const auto drop_check = validate_perversity(drop);
    CHECK_FALSE(drop_check.valid);
    CHECK(drop_check.first_violation == 3);

    // Gaps in the stored range are not themselves violations.
    Perversity sparse;
    sparse.values = {{2, 0}, {5, 7}};
    CHECK(validate_perversity(sparse).valid);
}

TEST_CASE("duality is the involution q = t - p") {
    const Perversity zero = zero_perversity(12);
    const Perversity top = top_perversity(12);
    CHECK(dual_perversity(zero).values == top.values);
    CHECK(dual_perversity(top).values == zero.values);
    CHECK(dual_perversity(upper_middle_perversity(12)).values ==
          lower_middle_perversity(12).values);

    for (const Perversity& p :
         {zero, top, upper_middle_perversity(12), lower_middle_perversity(12),
          metric_perversity_profile(make_exponents(std::vector<Rational>(
                                        11, Rational(3, 2))),
                                    10)}) {
        CHECK(dual_perversity(dual_perversity(p)).values == p.values);
    }
}

TEST_CASE("metric perversity of an everywhere-unit exponent tuple") {
    const CExponents ones = CExponents::ones(12);

    // Pinned table: link dimensions 0..8 give 0,0,1,1,2,2,3,3,4, matching
    // the upper middle perversity at codimension l+1.
    const std::vector<long long> expected = {0, 0, 1, 1, 2, 2, 3, 3, 4};
    for (int l = 0; l <= 8; ++l) {
        const long long value =
            metric_perversity(ones, StratumDatum{l, l + 1});
        CHECK(value == expected[static_cast<std::size_t>(l)]);
        if (l >= 1) {
            CHECK(value == upper_middle_perversity(12).at(l + 1));
        }
    }

    // Whole-profile statements: p_g = upper middle, q_g = lower middle.
    const Perversity profile = metric_perversity_profile(ones, 10);
    CHECK(profile.values == upper_middle_perversity(10).values);
    CHECK(dual_perversity(profile).values ==
          lower_middle_perversity(10).values);
    CHECK(validate_perversity(profile).valid);
}

TEST_CASE("metric perversity consults the right exponent") {
    // l = 2 at depth i with c_{m-i} = 2: 1 + [[1/4]] = 1.
    CExponents c = CExponents::ones(8);
    c.entries[4] = Rational(2);  // c_6 = 2
    CHECK(metric_perversity(c, StratumDatum{2, 2}) == 1);  // index 8-2 = 6

    // Small exponents raise the value: c -> 0 makes 1/(2c) blow up.
    CExponents tiny = CExponents::ones(8);
    tiny.entries[4] = Rational(1, 10);  // c_6 = 1/10
    CHECK(metric_perversity(tiny, StratumDatum{2, 2}) == 1 + 4);  // [[5]] = 4
    CHECK(metric_perversity(tiny, StratumDatum{3, 2}) == 1 + 5);  // [[11/2]]

    // The l = 0 branch never consults an exponent at all.
    CHECK(metric_perversity(CExponents::ones(2), StratumDatum{0, 7}) == 0);

    CHECK_THROWS_AS(metric_perversity(c, StratumDatum{-1, 2}), Error);
    CHECK_THROWS_AS(metric_perversity(c, StratumDatum{2, 1}), Error);
    // Depth 7 on an 8-dimensional tuple asks for c_1, which does not exist.
    CHECK_THROWS_AS(metric_perversity(c, StratumDatum{2, 7}), Error);
    CHECK_THROWS_AS(metric_perversity_profile(CExponents::ones(5), 10), Error);
    CHECK_THROWS_AS(make_exponents({Rational(1), Rational(0)}), Error);
    CHECK_THROWS_AS(make_exponents({Rational(-1, 2)}), Error);
}
