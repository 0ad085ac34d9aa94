#pragma once

#include <vector>

namespace lgindex {

// ceil(log2(k)) for k >= 1, exactly.
int ceil_lg(long long k);

// ceil(log2(a/b)) for integers a, b >= 1 with a >= b: the least m >= 0 with
// a <= b * 2^m. Integer arithmetic only, so powers of two never round wrong.
int ceil_lg_ratio(long long a, long long b);

// Upper bound on the index at which every deletion pattern of up to s forced
// and t forbidden edges still leaves a spanning closed trail.
int ist_bound(int delta, int d_tilde, int ell, int s, int t);

// Upper bound on the index at which the iterated line graph stays Hamiltonian
// under the removal of any s vertices. Equals ist_bound(delta, d_tilde, ell,
// 0, s) + 1 branch by branch.
int hs_bound(int delta, int d_tilde, int ell, int s);

struct PriorComparisonRow {
    int s;
    int new_bound;    // hs_bound for this profile
    int prior_bound;  // ell + s + 1
    int difference;   // prior - new
};

// Compare the refined bound against ell + s + 1 for s in [0, s_max].
std::vector<PriorComparisonRow> prior_bound_comparison(int delta, int d_tilde, int ell,
                                                       int s_max);

}  // namespace lgindex
