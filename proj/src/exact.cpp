#include "entcat/exact.hpp"

#include <cctype>
#include <string>

#include "entcat/error.hpp"

namespace entcat {

namespace {

[[noreturn]] void bad_literal(std::string_view text) {
    throw Error(ErrorCode::ParseError, "not a decimal literal: '" + std::string(text) + "'");
}

using Int = boost::multiprecision::cpp_int;

Int pow10(unsigned k) {
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

Int parse_digits(std::string_view s, std::string_view whole) {
    if (s.empty()) bad_literal(whole);
    Int r = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) bad_literal(whole);
        r = r * 10 + (c - '0');
    }
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) bad_literal(whole);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) bad_literal(whole);
        return num / den;
    }

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (exp_part.size() > 6) bad_literal(whole);
        exponent = static_cast<long>(parse_digits(exp_part, whole));
        if (exp_negative) exponent = -exponent;
        text = text.substr(0, e);
    }

    std::string digits;
    long frac_digits = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        if (ip.empty() && fp.empty()) bad_literal(whole);
        digits = std::string(ip) + std::string(fp);
        frac_digits = static_cast<long>(fp.size());
    } else {
        digits = std::string(text);
    }
    Int mantissa = parse_digits(digits, whole);
    long scale = exponent - frac_digits;
    Rational r = scale >= 0 ? Rational(mantissa * pow10(static_cast<unsigned>(scale)))
                            : Rational(mantissa, pow10(static_cast<unsigned>(-scale)));
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) {
    const Int num = boost::multiprecision::numerator(value);
    const Int den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace entcat
