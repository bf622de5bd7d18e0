#pragma once

#include <optional>
#include <vector>

#include "vdc/disc.hpp"
#include "vdc/perm.hpp"
#include "vdc/psi.hpp"

namespace vdc {

/// Certified bracket for alpha_b^sigma = inf_n max_x F_n(x)/n.
/// upper: min over computed n of max F_n/n (exact); for shifts/reflections
/// of the identity the proven closed form pins it instead (upper_n = 0).
/// lower: best digit-cycle mean (1/q) F_q(xhat), a valid lower bound since
/// max F_{mq}/(mq) >= F_q(xhat)/q for all m and max F_n/n decreases.
struct AlphaBracket {
    Rat lower, upper;
    int upper_n = 0;                 // n achieving the upper; 0 = closed form
    std::vector<int> lower_cycle;    // digit cycle achieving the lower
    bool closed_form = false;
    bool partial = false;            // budget ran out before n_max
};

struct AlphaOptions {
    long long fn_budget = 50000000;   // exhaustive grid cap per F_n
    long long cycle_budget = 2000000; // max enumerated cycles
    bool use_id_closed_form = true;
    std::vector<std::vector<int>> seed_cycles;  // extra cycles to evaluate
};

AlphaBracket alpha_bracket(const Permutation& sigma, int n_max, int cycle_depth,
                           PsiKind kind = PsiKind::total, const AlphaOptions& opts = {});

std::pair<AlphaBracket, AlphaBracket> alpha_pm_bracket(const Permutation& sigma, int n_max,
                                                       int cycle_depth,
                                                       const AlphaOptions& opts = {});

/// Bracket scaled to an asymptotic constant: [lo, hi] / log(base), with an
/// outward-rounded float rendering.
struct SBracket {
    Rat lo, hi;     // numerators over log(base)
    long log_base;
    FloatInterval render;
};

SBracket s_constant(const Permutation& sigma, int n_max = 4, int cycle_depth = 2,
                    const AlphaOptions& opts = {});
/// s*(S_b^{Sigma_A^sigma}) = (alpha^+ + alpha^-) / (2 log b).
SBracket s_star_swapped(const Permutation& sigma, int n_max = 4, int cycle_depth = 2,
                        const AlphaOptions& opts = {});

/// Closed forms for the identity: s = (b-1)/4 (odd), b^2/(4(b+1)) (even),
/// over log b; the swapped-schedule star constant is half of it.
struct IdClosedForm {
    Rat s_coeff;
    Rat s_star_swapped_coeff;
    long log_base;
};
IdClosedForm id_closed_form(int b);

/// Is sigma a shift or a shift of the reflection of the identity? Such
/// permutations share the identity's discrepancy by the symmetry lemma.
bool is_id_shift_or_reflect(const Permutation& sigma);

/// (alpha_max + 1) / log(alpha_max + 1) from the continued fraction of a0/p.
double affine_bound(long p, long a0);

/// S_m / T_m statistics of a base-2 schedule prefix over {id_2, tau_2}.
struct KlpStats {
    int m = 0;
    int S = 0, T = 0;
};
KlpStats klp_stats(const std::vector<Permutation>& prefix, int m);

struct KlpReport {
    KlpStats stats;
    Rat max_dstar;       // max over 1 <= N <= 2^m of D*_N, exact
    Rat lower, upper;    // S/3 + T/48 - 4   and   S/3 + 2T/9 + 56/9
    bool lower_ok = false, upper_ok = false;
};
KlpReport klp_check(const std::vector<Permutation>& prefix, int m);

/// d_b = max psi_b^omega over one interval B_n = [2^{n-1}, 2^n - 1].
struct Conj1Row {
    int b;
    Rat d;              // max psi_b^omega
    double d_over_log;
};
struct Conj1Result {
    int n;
    std::vector<Conj1Row> rows;
    int argmin_b = 0, argmax_b = 0;
    Rat d_bn;           // at b_n = 2^n - 1
    Rat predicted;      // n/2 - 1/3 (even), n/2 - 1/3 - 1/(6 b_n) (odd)
    bool matches = false;
};
Conj1Result conjecture1_scan(int n);

/// Fibonacci-base evaluation: p = F_n, mu = affine multiplier F_{n-1};
/// lower from the single-digit cycle [z(n-2)], upper from max psi.
struct Conj2Result {
    int n;
    long p;
    Rat lower, upper;                 // alpha bracket pieces
    FloatInterval s_lower, s_upper;   // over log p
    bool argmax_at_z = false;         // max psi attained at z(n-2)/p and z(n-1)/p
};
Conj2Result conjecture2_eval(int n, int reps = 2);

/// max psi over [0,1) for omega_b via the integer breakpoint scan.
Rat omega_max_psi(int b);

}  // namespace vdc
