#pragma once

#include "cyclemeter/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace cyclemeter {

/// Finite probability mass function. Support is kept sorted and unique.
/// `tol` bounds |total - 1|; it is zero for exact masses.
template <class Key, class T>
struct Pmf {
    std::vector<Key> support;
    std::vector<T> mass;
    double tol = 0;

    std::size_t size() const { return support.size(); }

    T total() const {
        T acc(0);
        for (const auto& m : mass) acc += m;
        return acc;
    }

    /// Mass at key, zero off the support.
    T at(const Key& key) const {
        auto it = std::lower_bound(support.begin(), support.end(), key);
        if (it == support.end() || *it != key) return T(0);
        return mass[static_cast<std::size_t>(it - support.begin())];
    }

    /// Checks nonnegativity and normalization within tol.
    bool is_normalized() const {
        for (const auto& m : mass) {
            if (m < 0) return false;
        }
        if constexpr (std::is_same_v<T, Rational>) {
            return total() == 1;
        } else {
            double t = to_double(total());
            return t >= 1 - tol && t <= 1 + tol;
        }
    }
};

template <class T>
using IntPmf = Pmf<int, T>;

template <class T>
using TuplePmf = Pmf<std::vector<int>, T>;

template <class Key>
Pmf<Key, double> to_double_pmf(const Pmf<Key, Rational>& p) {
    Pmf<Key, double> out;
    out.support = p.support;
    out.mass.reserve(p.mass.size());
    for (const auto& m : p.mass) out.mass.push_back(m.get_d());
    out.tol = 1e-12;
    return out;
}

template <class Key>
Pmf<Key, double> to_double_pmf(const Pmf<Key, double>& p) {
    return p;
}

} // namespace cyclemeter
