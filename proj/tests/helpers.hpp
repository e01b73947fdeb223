#pragma once

#include "cyclemeter/rational.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace testing_support {

using cyclemeter::Rational;

inline Rational q(const char* text) { return Rational(text); }

// Cycle lengths of a 0-based permutation in one-line notation.
inline std::vector<int> cycle_lengths(const std::vector<int>& perm) {
    std::vector<int> out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

// Calls visit(cycle lengths) for every permutation of n elements.
template <class Visit>
void for_each_permutation(int n, Visit visit) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        visit(cycle_lengths(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Unsigned Stirling numbers of the first kind c(n, k) for n <= N.
inline std::vector<std::vector<mpz_class>> stirling_first(int N) {
    std::vector<std::vector<mpz_class>> c(static_cast<std::size_t>(N) + 1,
                                         std::vector<mpz_class>(static_cast<std::size_t>(N) + 1, 0));
    c[0][0] = 1;
    for (int n = 1; n <= N; ++n) {
        for (int k = 1; k <= n; ++k) {
            c[n][k] = c[n - 1][k - 1] + mpz_class(n - 1) * c[n - 1][k];
        }
    }
    return c;
}

inline mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace testing_support
