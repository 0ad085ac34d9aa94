#include "lgindex/bounds.hpp"

#include <stdexcept>

namespace lgindex {

int ceil_lg(long long k) { return ceil_lg_ratio(k, 1); }

int ceil_lg_ratio(long long a, long long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("ceil_lg_ratio requires a, b >= 1");
    int m = 0;
    long long p = b;
    while (p < a) {
        p *= 2;
        ++m;
    }
    return m;
}

int ist_bound(int delta, int d_tilde, int ell, int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("ist_bound requires s, t >= 0");
    if (delta <= 2) {
        if (s + t == 0) return ell;
        return d_tilde + 1 + ceil_lg(s + t + 1);
    }
    if (delta <= s + t + 2) return 1 + ceil_lg_ratio(s + t + 1, delta - 2);
    return 1;
}

int hs_bound(int delta, int d_tilde, int ell, int s) {
    if (s < 0) throw std::invalid_argument("hs_bound requires s >= 0");
    return ist_bound(delta, d_tilde, ell, 0, s) + 1;
}

std::vector<PriorComparisonRow> prior_bound_comparison(int delta, int d_tilde, int ell,
                                                       int s_max) {
    std::vector<PriorComparisonRow> rows;
    rows.reserve(s_max + 1);
    for (int s = 0; s <= s_max; ++s) {
        int nb = hs_bound(delta, d_tilde, ell, s);
        int pb = ell + s + 1;
        rows.push_back({s, nb, pb, pb - nb});
    }
    return rows;
}

}  // namespace lgindex
