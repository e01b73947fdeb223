#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>

namespace cyclemeter {

using Rational = mpq_class;

enum class ScalarKind { exact_rational, double_precision };

/// Exact binary value of a finite double.
Rational exact_from_double(double x);

/// Parses "3", "-2/7", "0.125", "1e-3" into the rational it denotes
/// (decimal strings are read as exact decimal fractions, not as doubles).
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

std::string to_string(const Rational& q);

/// Converts a rational to T (identity for Rational, nearest double otherwise).
template <class T>
T from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
inline double from_rational<double>(const Rational& q) { return q.get_d(); }

template <class T>
T from_double(double x);

template <>
inline Rational from_double<Rational>(double x) { return exact_from_double(x); }
template <>
inline double from_double<double>(double x) { return x; }

template <class T>
constexpr ScalarKind scalar_kind_of() {
    if constexpr (std::is_same_v<T, Rational>) {
        return ScalarKind::exact_rational;
    } else {
        return ScalarKind::double_precision;
    }
}

} // namespace cyclemeter
