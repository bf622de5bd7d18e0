#pragma once

#include <optional>
#include <vector>

#include "vdc/perm.hpp"
#include "vdc/psi.hpp"

namespace vdc {

struct SearchConfig {
    int base = 2;
    Rat threshold;                   // keep sigma iff max psi < threshold (strict)
    bool symmetry_reduction = true;  // fix sigma(0)=0, dedup reflections
    bool memoize = true;
    bool use_plus = false;           // prune on psi^+ instead of psi
    long long node_budget = 200000000;
    bool stage2 = false;             // rank survivors by (1/2) max F_2
};

struct Survivor {
    Permutation perm;
    Rat max_psi;
    std::optional<Rat> f2_half_max;
};

struct SearchResult {
    std::vector<Survivor> survivors;  // sorted ascending by score, then perm
    long long nodes = 0, pruned = 0, memo_hits = 0;
    bool complete = true;
};

/// Pruned-tree enumeration of every sigma with max_x psi_b^sigma(x) < T.
/// Pruning is exact: max psi over [0, k/b] equals the running max of the
/// breakpoint values psi(j/b), and psi(k/b) depends only on the set of the
/// first k images, which is what the memo table is keyed on.
SearchResult search(const SearchConfig& cfg);

/// (1/2) max F_2 for each permutation, computed via psi of the
/// self-intrication sigma.sigma in base b^2; stable ascending sort.
std::vector<Survivor> rank_f2(const std::vector<Permutation>& perms);

}  // namespace vdc
