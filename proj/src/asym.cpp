#include "vdc/asym.hpp"

#include <algorithm>
#include <cmath>

namespace vdc {

bool is_id_shift_or_reflect(const Permutation& sigma) {
    const int b = sigma.base();
    bool inc = true, dec = true;
    for (int i = 0; i < b; ++i) {
        if (sigma(i) != (sigma(0) + i) % b) inc = false;
        if (sigma(i) != (sigma(0) - i % b + b) % b) dec = false;
    }
    return inc || dec;
}

IdClosedForm id_closed_form(int b) {
    if (b < 2) throw validation_error("base must be >= 2");
    Rat s = b % 2 ? rat(b - 1, 4) : rat(static_cast<long long>(b) * b, 4L * (b + 1));
    Rat half = s / 2;
    half.canonicalize();
    return {s, half, b};
}

namespace {

/// Best cycle mean of psi_fn over all digit cycles of length <= depth
/// (one representative per rotation class), plus any seeds.
struct CycleBest {
    Rat value{-1};
    std::vector<int> cycle;
};

CycleBest best_cycle(const PiecewiseAffine& psi_fn, int base, int depth,
                     const std::vector<std::vector<int>>& seeds, long long budget) {
    CycleBest best;
    auto consider = [&](const std::vector<int>& cyc) {
        Rat v = f_n_eval_periodic(psi_fn, base, cyc, 1);
        if (v > best.value) {
            best.value = v;
            best.cycle = cyc;
        }
    };
    long long seen = 0;
    for (int q = 1; q <= depth; ++q) {
        double total = std::pow(static_cast<double>(base), q);
        if (total > 2e18) throw resource_error("cycle depth too large");
        const long long D = static_cast<long long>(total) - 1;
        std::vector<int> cyc(static_cast<size_t>(q));
        for (long long C = 0; C < D; ++C) {
            // canonical representative: C minimal among its rotations
            long long Cr = C;
            bool canonical = true;
            for (int r = 1; r < q && canonical; ++r) {
                Cr = Cr * base % D;
                if (Cr < C) canonical = false;
            }
            if (!canonical) continue;
            if (++seen > budget) throw resource_error("cycle enumeration budget exceeded");
            long long t = C;
            for (int i = q - 1; i >= 0; --i) {
                cyc[static_cast<size_t>(i)] = static_cast<int>(t % base);
                t /= base;
            }
            consider(cyc);
        }
    }
    for (const auto& s : seeds)
        if (!s.empty() && static_cast<int>(s.size()) <= 12) consider(s);
    return best;
}

}  // namespace

AlphaBracket alpha_bracket(const Permutation& sigma, int n_max, int cycle_depth, PsiKind kind,
                           const AlphaOptions& opts) {
    if (n_max < 1) throw validation_error("alpha_bracket: n_max >= 1");
    if (cycle_depth < 1) throw validation_error("alpha_bracket: cycle_depth >= 1");
    const int b = sigma.base();
    PsiTriple t = psi(sigma);
    const PiecewiseAffine& f = t.of(kind);

    AlphaBracket out;
    auto seeds = opts.seed_cycles;
    if (b % 2) seeds.push_back({(b - 1) / 2});
    else seeds.push_back({b / 2 - 1, b / 2});
    CycleBest cb = best_cycle(f, b, cycle_depth, seeds, opts.cycle_budget);
    out.lower = cb.value;
    out.lower_cycle = cb.cycle;

    if (f == PiecewiseAffine::constant(Rat(0))) {
        out.upper = Rat(0);
        out.upper_n = 1;
        return out;  // F_n of the zero function vanishes identically
    }
    // alpha for the identity family is known exactly; F_n/n only reaches it
    // in the limit, so pin the upper from the closed form instead of
    // iterating. For the one-sided kinds this applies when the other side
    // vanishes (then F^+ or F^- coincides with F).
    const bool id_family = opts.use_id_closed_form && is_id_shift_or_reflect(sigma);
    const bool closed_ok =
        id_family && (kind == PsiKind::total ||
                      (kind == PsiKind::plus && t.minus == PiecewiseAffine::constant(Rat(0))) ||
                      (kind == PsiKind::minus && t.plus == PiecewiseAffine::constant(Rat(0))));
    if (closed_ok) {
        out.upper = id_closed_form(b).s_coeff;
        out.upper_n = 0;
        out.closed_form = true;
        if (out.lower > out.upper) throw std::logic_error("cycle bound exceeds closed form");
        return out;
    }

    bool have = false;
    for (int n = 1; n <= n_max; ++n) {
        FnMax fm;
        try {
            fm = f_n_max(f, b, n, FnMode::automatic, opts.fn_budget);
        } catch (const resource_error&) {
            out.partial = true;
            break;
        }
        Rat u = fm.value / n;
        u.canonicalize();
        if (!have || u < out.upper) {
            out.upper = u;
            out.upper_n = n;
            have = true;
        }
    }
    if (!have) throw resource_error("alpha_bracket: no F_n fits the budget");
    if (out.lower > out.upper) throw std::logic_error("alpha bracket inverted");
    return out;
}

std::pair<AlphaBracket, AlphaBracket> alpha_pm_bracket(const Permutation& sigma, int n_max,
                                                       int cycle_depth, const AlphaOptions& opts) {
    return {alpha_bracket(sigma, n_max, cycle_depth, PsiKind::plus, opts),
            alpha_bracket(sigma, n_max, cycle_depth, PsiKind::minus, opts)};
}

SBracket s_constant(const Permutation& sigma, int n_max, int cycle_depth,
                    const AlphaOptions& opts) {
    AlphaBracket abr = alpha_bracket(sigma, n_max, cycle_depth, PsiKind::total, opts);
    SBracket s{abr.lower, abr.upper, sigma.base(), over_log(abr.lower, abr.upper, sigma.base())};
    return s;
}

SBracket s_star_swapped(const Permutation& sigma, int n_max, int cycle_depth,
                        const AlphaOptions& opts) {
    auto [p, m] = alpha_pm_bracket(sigma, n_max, cycle_depth, opts);
    Rat lo = (p.lower + m.lower) / 2, hi = (p.upper + m.upper) / 2;
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi, sigma.base(), over_log(lo, hi, sigma.base())};
}

double affine_bound(long p, long a0) {
    ContinuedFraction cf = continued_fraction(a0, p);
    double a = static_cast<double>(cf.alpha_max);
    return (a + 1) / std::log(a + 1);
}

KlpStats klp_stats(const std::vector<Permutation>& prefix, int m) {
    if (m < 1) throw validation_error("klp_stats: m >= 1");
    if (static_cast<int>(prefix.size()) < m) throw validation_error("klp_stats: prefix shorter than m");
    const Permutation id2 = Permutation::identity(2), t2 = tau(2);
    int n_id = 0, n_tau = 0, T = 0;
    for (int j = 0; j < m; ++j) {
        const Permutation& s = prefix[static_cast<size_t>(j)];
        if (s.base() != 2 || (s != id2 && s != t2))
            throw validation_error("klp_stats: entries must be id_2 or tau_2");
        if (s == t2) ++n_tau;
        else ++n_id;
        if (j >= 1 && prefix[static_cast<size_t>(j - 1)] == t2 && s == id2) ++T;
    }
    return {m, std::max(n_id, n_tau), T};
}

KlpReport klp_check(const std::vector<Permutation>& prefix, int m) {
    KlpReport r;
    r.stats = klp_stats(prefix, m);
    SigmaSequence seq = SigmaSequence::explicit_prefix(prefix, Permutation::identity(2));
    Rat best(0);
    for (unsigned long long N = 1; N <= (1ull << m); ++N) {
        Discrepancies d = exact_discrepancies(seq, N);
        if (!d.dstar.exact()) throw std::logic_error("klp_check: expected exact D*");
        if (d.dstar.lo > best) best = d.dstar.lo;
    }
    r.max_dstar = best;
    r.lower = rat(r.stats.S, 3) + rat(r.stats.T, 48) - 4;
    r.upper = rat(r.stats.S, 3) + rat(2 * r.stats.T, 9) + rat(56, 9);
    r.lower.canonicalize();
    r.upper.canonicalize();
    r.lower_ok = r.lower <= r.max_dstar;
    r.upper_ok = r.max_dstar <= r.upper;
    return r;
}

Rat omega_max_psi(int b) { return max_psi(faure_omega(b), PsiKind::total); }

Conj1Result conjecture1_scan(int n) {
    if (n < 2 || n > 16) throw validation_error("conjecture1_scan: 2 <= n <= 16");
    Conj1Result out;
    out.n = n;
    const int lo = 1 << (n - 1), hi = (1 << n) - 1;
    faure_omega(hi);  // warm the cache bottom-up once
    out.rows.resize(static_cast<size_t>(hi - lo + 1));
    for (int b = lo; b <= hi; ++b) {
        Rat d = omega_max_psi(b);
        out.rows[static_cast<size_t>(b - lo)] =
            Conj1Row{b, d, to_double(d) / std::log(static_cast<double>(b))};
    }
    auto cmp = [](const Conj1Row& a, const Conj1Row& b) { return a.d_over_log < b.d_over_log; };
    out.argmin_b = std::min_element(out.rows.begin(), out.rows.end(), cmp)->b;
    out.argmax_b = std::max_element(out.rows.begin(), out.rows.end(), cmp)->b;
    out.d_bn = out.rows.back().d;
    const int bn = hi;
    out.predicted = rat(n, 2) - rat(1, 3);
    if (n % 2) out.predicted -= rat(1, 6L * bn);
    out.predicted.canonicalize();
    out.matches = out.d_bn == out.predicted;
    return out;
}

Conj2Result conjecture2_eval(int n, int reps) {
    if (n < 5 || n > 28) throw validation_error("conjecture2_eval: 5 <= n <= 28");
    Conj2Result out;
    out.n = n;
    mpz_class p_z = fibonacci(n);
    if (!p_z.fits_slong_p()) throw resource_error("fibonacci base too large");
    out.p = p_z.get_si();
    const long mult = fibonacci(n - 1).get_si();
    Permutation mu = affine(out.p, mult, 0);
    PsiTriple t = psi(mu);
    auto [mx, arg] = t.total.max_on_unit();
    out.upper = mx;
    long zc = z_seq(n - 2).get_si();
    long zc1 = z_seq(n - 1).get_si();
    DigitVector cyc{static_cast<int>(out.p), {static_cast<int>(zc)}};
    out.lower = f_n_eval_periodic(t.total, static_cast<int>(out.p), cyc.digits, reps);
    out.argmax_at_z = t.total.eval(rat(zc, out.p)) == mx && t.total.eval(rat(zc1, out.p)) == mx;
    out.s_lower = over_log(out.lower, out.lower, out.p);
    out.s_upper = over_log(out.upper, out.upper, out.p);
    return out;
}

}  // namespace vdc
