#include "hodgepair/perversity.hpp"

#include "hodgepair/error.hpp"

namespace hodgepair {

long long strict_floor(const Rational& x) {
    if (x <= 0) {
        throw Error("strict_floor is defined only for positive arguments, got " +
                    format_rational(x));
    }
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    BigInt quotient = num / den;  // exact floor: both operands positive
    if (num % den == 0) quotient -= 1;
    return static_cast<long long>(quotient);
}

long long Perversity::at(int k) const {
    const auto it = values.find(k);
    if (it == values.end()) {
        throw Error("perversity has no value at codimension " +
                    std::to_string(k));
    }
    return it->second;
}

namespace {

Perversity family(int max_codim, long long (*rule)(int)) {
    Perversity p;
    for (int k = 2; k <= max_codim; ++k) p.values[k] = rule(k);
    return p;
}

}  // namespace

Perversity zero_perversity(int max_codim) {
    return family(max_codim, [](int) -> long long { return 0; });
}

Perversity top_perversity(int max_codim) {
    return family(max_codim, [](int k) -> long long { return k - 2; });
}

Perversity upper_middle_perversity(int max_codim) {
    return family(max_codim, [](int k) -> long long { return (k - 1) / 2; });
}

Perversity lower_middle_perversity(int max_codim) {
    return family(max_codim, [](int k) -> long long { return (k - 2) / 2; });
}

PerversityCheck validate_perversity(const Perversity& p) {
    PerversityCheck check;
    const auto fail = [&](int k, const std::string& reason) {
        check.valid = false;
        check.first_violation = k;
        check.reason = reason;
    };
    const auto base = p.values.find(2);
    if (base != p.values.end() && base->second != 0) {
        fail(2, "p(2) must be 0, got " + std::to_string(base->second));
        return check;
    }
    for (auto it = p.values.begin(); it != p.values.end(); ++it) {
        const auto next = p.values.find(it->first + 1);
        if (next == p.values.end()) continue;
        if (next->second < it->second || next->second > it->second + 1) {
            fail(it->first,
                 "growth condition p(k) <= p(k+1) <= p(k)+1 fails between " +
                     std::to_string(it->first) + " and " +
                     std::to_string(it->first + 1));
            return check;
        }
    }
    return check;
}

Perversity dual_perversity(const Perversity& p) {
    Perversity q;
    for (const auto& [k, value] : p.values) {
        q.values[k] = static_cast<long long>(k) - 2 - value;
    }
    return q;
}

const Rational& CExponents::at(int index) const {
    if (index < 2 || index > dimension()) {
        throw Error("no conic exponent at index " + std::to_string(index) +
                    " (tuple covers 2.." + std::to_string(dimension()) + ")");
    }
    return entries[static_cast<std::size_t>(index - 2)];
}

CExponents CExponents::ones(int m) {
    if (m < 1) throw Error("space dimension must be at least 1");
    CExponents c;
    c.entries.assign(static_cast<std::size_t>(m - 1), Rational(1));
    return c;
}

CExponents make_exponents(std::vector<Rational> entries) {
    for (const Rational& e : entries) {
        if (e <= 0) {
            throw Error("conic exponents must be positive, got " +
                        format_rational(e));
        }
    }
    CExponents c;
    c.entries = std::move(entries);
    return c;
}

long long metric_perversity(const CExponents& c, const StratumDatum& s) {
    if (s.link_dim < 0) {
        throw Error("link dimension must be nonnegative");
    }
    if (s.link_dim == 0) return 0;  // first branch never consults an exponent
    if (s.depth < 2) {
        throw Error("a singular stratum with a nonempty link needs depth >= 2");
    }
    const Rational& exponent = c.at(c.dimension() - s.depth);
    if (s.link_dim % 2 == 0) {
        return s.link_dim / 2 + strict_floor(1 / (2 * exponent));
    }
    return (s.link_dim - 1) / 2 +
           strict_floor(Rational(1, 2) + 1 / (2 * exponent));
}

Perversity metric_perversity_profile(const CExponents& c, int max_codim) {
    if (max_codim > c.dimension() - 2) {
        throw Error("profile up to codimension " + std::to_string(max_codim) +
                    " needs exponents up to index " +
                    std::to_string(c.dimension() - 2) +
                    "; enlarge the tuple");
    }
    Perversity p;
    for (int k = 2; k <= max_codim; ++k) {
        p.values[k] = metric_perversity(c, StratumDatum{k - 1, k});
    }
    return p;
}

}  // namespace hodgepair
