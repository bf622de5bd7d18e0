#pragma once

#include <utility>
#include <vector>

#include "vdc/perm.hpp"
#include "vdc/psi.hpp"

namespace vdc {

/// Generalized two-dimensional Hammersley set in base b with b^m points:
/// {(S(k), k/b^m) : 0 <= k < b^m} where S applies sigma_vec[j] to the j-th
/// digit of k. Only the first m permutations act (higher digits are zero
/// and the schedule fixes sigma_r(0) = 0 for r >= m).
struct HammersleySpec {
    int base = 2;
    int m = 1;
    std::vector<Permutation> sigma_vec;  // length m, all in `base`

    void validate() const;
    long long count() const;  // b^m
};

std::vector<std::pair<Rat, Rat>> hammersley_points(const HammersleySpec& spec);

/// max( max_n sum_j psi^{sigma_{j-1},+}(n/b^j), same with psi^- ) over
/// 1 <= n <= b^m; the star discrepancy equals this plus some c_m in [0,2].
Rat star_formula_term(const HammersleySpec& spec);

/// Unnormalized 2-D star discrepancy sup |A([0,a)x[0,c)) - a*c*N| computed
/// exactly over the critical corner grid, evaluating both one-sided counts.
Rat brute_star_2d(const std::vector<std::pair<Rat, Rat>>& pts);

/// ceil(m/2)-split vectors: (m-1)/2 copies of id then (m+1)/2 copies of tau
/// for odd m; m/2 and m/2 for even m.
std::vector<Permutation> itau_vec(int b, int m);
/// same split with sigma and tau.sigma.
std::vector<Permutation> sigma_sbar_vec(const Permutation& sigma, int m);

struct ItauRow {
    int m;
    Rat term;
    double term_over_mlogb;
};
struct ItauReport {
    int base;
    std::vector<ItauRow> rows;
    double limit;  // (b-1)/(8 log b) odd, b^2/(8(b+1) log b) even
};
ItauReport itau_asymptotic_check(int b, int m_max);

/// Worker cap for the brute-force oracles (0 = hardware concurrency).
void set_max_threads(int n);
int max_threads();

}  // namespace vdc
