#pragma once

#include <optional>
#include <vector>

#include "vdc/perm.hpp"
#include "vdc/piecewise.hpp"

namespace vdc {

/// phi_{b,h}^sigma: exactly b pieces with breakpoints k/b. phi_{b,0} == 0.
PiecewiseAffine phi(const Permutation& sigma, int h);

enum class PsiKind { total, plus, minus };

/// psi^+ = max_h phi_h, psi^- = max_h (-phi_h), psi = psi^+ + psi^-.
/// All three are continuous and 1-periodic; near 0 the slopes are
/// b-1-sigma(0) / sigma(0) / b-1, which the discrepancy tail sums rely on.
struct PsiTriple {
    PiecewiseAffine plus, minus, total;
    int base = 2;
    Permutation source;

    const PiecewiseAffine& of(PsiKind k) const {
        switch (k) {
            case PsiKind::plus: return plus;
            case PsiKind::minus: return minus;
            default: return total;
        }
    }
    long slope_near_zero(PsiKind k) const {
        int s0 = source(0);
        switch (k) {
            case PsiKind::plus: return base - 1 - s0;
            case PsiKind::minus: return s0;
            default: return base - 1;
        }
    }
};

PsiTriple psi(const Permutation& sigma);

/// Direct O(b) evaluation of (psi^+, psi^-, psi) at one point, independent
/// of the envelope construction (used as a cross-check and for large bases).
struct PsiPoint {
    Rat plus, minus, total;
};
PsiPoint psi_point(const Permutation& sigma, const Rat& x);

/// psi(k/b)*b for k = 0..b-1 as integers, O(b^2) total. Local maxima of the
/// psi functions sit at the points k/b, so these determine max psi.
std::vector<long long> psi_breakpoints_scaled(const Permutation& sigma, PsiKind kind);

/// max over [0,1) of the selected psi function, via the breakpoint scan.
Rat max_psi(const Permutation& sigma, PsiKind kind = PsiKind::total);

/// psi of any completion of the prefix, on [0, k/b): piece data plus the
/// values at j/b for 1 <= j <= k. The value at k/b depends only on the SET
/// of prefix entries; earlier values depend on their order.
struct PartialPsi {
    std::vector<Rat> values;                       // psi(j/b), j = 1..k
    std::vector<PiecewiseAffine::Piece> pieces;    // domain [0, k/b)
    Rat end;                                       // k/b
};
PartialPsi partial_psi(int b, const std::vector<int>& prefix);

/// F_n(x) = sum_{j<n} psi(x b^j); its max over [0,1] is attained at some
/// k/b^n because psi is convex on every base interval.
enum class FnMode { exhaustive, branch_and_bound, automatic };

struct FnMax {
    Rat value;                  // max F_n (not divided by n)
    std::vector<int> argmax;    // digits d_1..d_n, argmax = sum d_i / b^i
    long long nodes = 0;
};

/// Exhaustive mode scans all b^n grid points (requires b^n <= budget);
/// branch-and-bound prunes with partial + (n-j)*max_psi <= incumbent and
/// returns the same exact max (argmax: deterministic witness).
FnMax f_n_max(const PiecewiseAffine& psi_fn, int base, int n,
              FnMode mode = FnMode::automatic, long long budget = 50000000);
FnMax f_n_max(const Permutation& sigma, int n, FnMode mode = FnMode::automatic,
              PsiKind kind = PsiKind::total, long long budget = 50000000);

/// (1/q) F_q(xhat) for xhat with repeating base-b digit cycle c_1..c_q,
/// i.e. xhat = C/(b^q - 1). Lower-bounds alpha: max F_{mq}/(mq) >=
/// F_{mq}(xhat)/(mq) = F_q(xhat)/q for every m, and max F_n/n decreases
/// to alpha. `reps` additionally checks F_{r q}/(r q) = F_q/q for r <= reps.
Rat f_n_eval_periodic(const Permutation& sigma, const DigitVector& cycle,
                      int reps = 1, PsiKind kind = PsiKind::total);
Rat f_n_eval_periodic(const PiecewiseAffine& psi_fn, int base,
                      const std::vector<int>& cycle, int reps = 1);

}  // namespace vdc
