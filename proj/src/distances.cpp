#include "cyclemeter/distances.hpp"

#include "cyclemeter/error.hpp"
#include "cyclemeter/special.hpp"

#include <algorithm>
#include <cmath>

namespace cyclemeter {

namespace {

// Walks the union of both supports in ascending order.
template <class Visit>
void merge_supports(const IntPmf<double>& p, const IntPmf<double>& q, Visit visit) {
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
        if (j == q.size() || (i < p.size() && p.support[i] < q.support[j])) {
            visit(p.mass[i], 0.0);
            ++i;
        } else if (i == p.size() || q.support[j] < p.support[i]) {
            visit(0.0, q.mass[j]);
            ++j;
        } else {
            visit(p.mass[i], q.mass[j]);
            ++i;
            ++j;
        }
    }
}

} // namespace

double d_loc(const IntPmf<double>& p, const IntPmf<double>& q) {
    double sup = 0;
    merge_supports(p, q, [&](double a, double b) { sup = std::max(sup, std::abs(a - b)); });
    return sup;
}

double d_K(const IntPmf<double>& p, const IntPmf<double>& q) {
    double cp = 0, cq = 0, sup = 0;
    merge_supports(p, q, [&](double a, double b) {
        cp += a;
        cq += b;
        sup = std::max(sup, std::abs(cp - cq));
    });
    return sup;
}

double total_variation(const IntPmf<double>& p, const IntPmf<double>& q) {
    double sum = 0;
    merge_supports(p, q, [&](double a, double b) { sum += std::abs(a - b); });
    return sum / 2;
}

int poisson_quantile(double lambda, double tail) {
    if (lambda < 0) throw UsageError("Poisson mean must be nonnegative");
    if (lambda == 0) return 0;
    // Upper tail via the complement of the running cdf is too coarse near
    // 1e-15, so sum the tail terms directly from well beyond the mean.
    int k = static_cast<int>(std::ceil(lambda));
    while (true) {
        double upper = 0;
        for (int j = k + 1;; ++j) {
            double term = poisson_pmf(lambda, j);
            upper += term;
            if (term < 1e-3 * tail && j > lambda) break;
        }
        if (upper < tail) return k;
        k += std::max(1, static_cast<int>(std::sqrt(lambda)) / 4);
    }
}

IntPmf<double> poisson_distribution(double lambda, double tail) {
    int k_max = poisson_quantile(lambda, tail);
    IntPmf<double> out;
    for (int k = 0; k <= k_max; ++k) {
        out.support.push_back(k);
        out.mass.push_back(poisson_pmf(lambda, k));
    }
    out.tol = tail;
    return out;
}

} // namespace cyclemeter
