#include "cyclemeter/rational.hpp"

#include "cyclemeter/error.hpp"

#include <cctype>
#include <cmath>

namespace cyclemeter {

Rational exact_from_double(double x) {
    if (!std::isfinite(x)) {
        throw UsageError("cannot convert a non-finite double to a rational");
    }
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

namespace {

mpz_class pow10(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw UsageError("empty number");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + s + "'");
        return Rational(num / den);
    }

    bool negative = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
        char ch = s[i];
        if (ch == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            if (seen_point) ++frac_digits;
        } else {
            throw UsageError("not a number: '" + s + "'");
        }
    }
    if (digits.empty()) throw UsageError("not a number: '" + s + "'");
    long exponent = 0;
    if (i < s.size()) {
        try {
            std::size_t used = 0;
            exponent = std::stol(s.substr(i + 1), &used);
            if (used != s.size() - i - 1) throw UsageError("bad exponent in '" + s + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad exponent in '" + s + "'");
        }
    }
    mpz_class mantissa(digits, 10);
    long shift = exponent - frac_digits;
    Rational q(mantissa);
    if (shift > 0) {
        q *= Rational(pow10(shift));
    } else if (shift < 0) {
        q /= Rational(pow10(-shift));
    }
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace cyclemeter
