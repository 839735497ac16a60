#include "hodgepair/rational.hpp"

namespace hodgepair {

namespace {

/// Decimal integer with optional sign; boost's cpp_int constructor accepts
/// "" and other junk as 0, so validate before handing the string over.
BigInt parse_integer(const std::string& text) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    if (start == text.size()) {
        throw Error("malformed integer literal: '" + text + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw Error("malformed integer literal: '" + text + "'");
        }
    }
    return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(parse_integer(text));
        }
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) {
            throw Error("rational literal has zero denominator: " + text);
        }
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("malformed rational literal: '" + text + "'");
    }
}

std::string format_rational(const Rational& value) {
    if (denominator(value) == 1) {
        return numerator(value).str();
    }
    return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace hodgepair
