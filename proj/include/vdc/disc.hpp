#pragma once

#include <optional>
#include <set>
#include <vector>

#include "vdc/perm.hpp"
#include "vdc/psi.hpp"

namespace vdc {

/// The digit positions where the base permutation itself (rather than its
/// swap tau_b . sigma) is used.
class SwapSchedule {
   public:
    enum class Kind { faure_a, periodic, explicit_set };

    static SwapSchedule faure_a() { return SwapSchedule(Kind::faure_a); }
    /// pattern[j % len]: true means member.
    static SwapSchedule periodic(std::vector<bool> pattern);
    /// finite membership set; `beyond` applies past max(set).
    static SwapSchedule explicit_set(std::set<long> members, bool beyond);

    Kind kind() const { return kind_; }
    bool member(long j) const;
    const std::vector<bool>& pattern() const { return pattern_; }
    /// for explicit_set: first index past the stored set.
    long settled_from() const { return members_.empty() ? 0 : *members_.rbegin() + 1; }

    /// j in A iff H(H-1) < j <= H^2 for H = ceil(sqrt(j)); integer sqrt only.
    static bool faure_a_member(long j);

   private:
    explicit SwapSchedule(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<bool> pattern_;
    std::set<long> members_;
    bool beyond_ = false;
};

/// A rule producing the permutation sigma_j for every digit position j.
class SigmaSequence {
   public:
    static SigmaSequence constant(Permutation sigma);
    /// sigma_j = sigma for j in the schedule, tau_b . sigma otherwise.
    static SigmaSequence swapped(Permutation sigma, SwapSchedule schedule);
    /// explicit head, then `fallback` for j >= prefix length.
    static SigmaSequence explicit_prefix(std::vector<Permutation> prefix, Permutation fallback);

    int base() const { return base_; }
    const Permutation& sigma_at(long j) const;
    /// smallest j0 with sigma_j constant for j >= j0, or -1 if none exists.
    long constant_from() const;
    bool eventually_constant() const { return constant_from() >= 0; }
    /// true for constant / periodic / explicit rules (exact tails).
    bool tail_exact() const;

    Rat point_tail_coeff(long j) const { return Rat(sigma_at(j)(0)); }

    const Permutation& base_perm() const { return sigma_; }
    const std::optional<SwapSchedule>& schedule() const { return schedule_; }

   private:
    SigmaSequence(int b, Permutation sigma) : base_(b), sigma_(std::move(sigma)), swapped_(sigma_) {}
    enum class Kind { constant, swapped, explicit_prefix } kind_ = Kind::constant;
    int base_;
    Permutation sigma_;                  // the base permutation
    Permutation swapped_;                // tau_b . sigma
    std::optional<SwapSchedule> schedule_;
    std::vector<Permutation> prefix_;
    friend struct SeqAccess;
};

/// S_b(n) = sum_j sigma_j(a_j(n)) / b^{j+1}, including the constant-digit
/// tail sum. Exact (lo == hi) whenever the rule's tail sums in closed form;
/// a certified enclosure of width <= b^-J otherwise.
Enclosure point(const SigmaSequence& seq, unsigned long long n, int digits_cap = 24);

struct Discrepancies {
    Enclosure dplus, dminus, d, dstar;
};

/// Theoreme-1 series: D_N^± = sum_j psi^{sigma_{j-1},±}(N/b^j); the extreme
/// discrepancy D_N sums psi and its tail is exactly N/b^m regardless of the
/// schedule (slope b-1 near 0). D* = max(D+, D-).
Discrepancies exact_discrepancies(const SigmaSequence& seq, unsigned long long N,
                                  int digits_cap = 24);

/// Brute-force oracles over explicit point sets (unnormalized, Faure's
/// convention). Points must be exact rationals in [0,1).
Rat brute_dplus(const std::vector<Rat>& pts);
Rat brute_dminus(const std::vector<Rat>& pts);
Rat brute_star(const std::vector<Rat>& pts);
Rat brute_extreme(const std::vector<Rat>& pts);

/// D_N^(2) squared: int_0^1 E([0,a))^2 da in closed pairwise (Warnock) form.
Rat brute_l2_sq(const std::vector<Rat>& pts);

/// Diaphony squared as the exact coefficient of 2*pi^2:
/// F_N^2 = 2 pi^2 sum_{i,j} B2({x_i - x_j}), B2(t) = t^2 - t + 1/6.
Rat brute_diaphony_sq(const std::vector<Rat>& pts);

/// First N points {n*alpha}, n = 1..N, for rational alpha (an approximation
/// of the target irrational; the caller controls the quality).
std::vector<Rat> kronecker(const Rat& alpha, long N);

/// Convergent p/q of the golden-ratio conjugate with error < 1/(2 N^2).
Rat golden_ratio_approx(long N);

}  // namespace vdc
