#include "vdc/disc.hpp"

#include <algorithm>
#include <map>

namespace vdc {

SwapSchedule SwapSchedule::periodic(std::vector<bool> pattern) {
    if (pattern.empty()) throw validation_error("periodic schedule: empty pattern");
    SwapSchedule s(Kind::periodic);
    s.pattern_ = std::move(pattern);
    return s;
}

SwapSchedule SwapSchedule::explicit_set(std::set<long> members, bool beyond) {
    SwapSchedule s(Kind::explicit_set);
    s.members_ = std::move(members);
    s.beyond_ = beyond;
    return s;
}

bool SwapSchedule::faure_a_member(long j) {
    if (j < 1) return false;
    long h = static_cast<long>(std::sqrt(static_cast<double>(j)));
    while (h * h > j) --h;
    while ((h + 1) * (h + 1) <= j) ++h;  // h = isqrt(j)
    long H = h * h == j ? h : h + 1;     // H = ceil(sqrt(j))
    return j > H * (H - 1);
}

bool SwapSchedule::member(long j) const {
    switch (kind_) {
        case Kind::faure_a: return faure_a_member(j);
        case Kind::periodic:
            return pattern_[static_cast<size_t>(j % static_cast<long>(pattern_.size()))];
        default: {
            if (members_.empty() || j > *members_.rbegin()) return beyond_;
            return members_.count(j) > 0;
        }
    }
}

SigmaSequence SigmaSequence::constant(Permutation sigma) {
    const int b = sigma.base();
    SigmaSequence s(b, std::move(sigma));
    s.kind_ = Kind::constant;
    return s;
}

SigmaSequence SigmaSequence::swapped(Permutation sigma, SwapSchedule schedule) {
    const int b = sigma.base();
    SigmaSequence s(b, std::move(sigma));
    s.kind_ = Kind::swapped;
    s.swapped_ = compose(tau(s.base_), s.sigma_);
    s.schedule_ = std::move(schedule);
    return s;
}

SigmaSequence SigmaSequence::explicit_prefix(std::vector<Permutation> prefix, Permutation fallback) {
    const int b = fallback.base();
    SigmaSequence s(b, std::move(fallback));
    s.kind_ = Kind::explicit_prefix;
    for (const auto& p : prefix)
        if (p.base() != s.base_) throw validation_error("explicit prefix: base mismatch");
    s.prefix_ = std::move(prefix);
    return s;
}

const Permutation& SigmaSequence::sigma_at(long j) const {
    switch (kind_) {
        case Kind::constant: return sigma_;
        case Kind::swapped: return schedule_->member(j) ? sigma_ : swapped_;
        default:
            return j < static_cast<long>(prefix_.size()) ? prefix_[static_cast<size_t>(j)]
                                                         : sigma_;
    }
}

long SigmaSequence::constant_from() const {
    switch (kind_) {
        case Kind::constant: return 0;
        case Kind::explicit_prefix: return static_cast<long>(prefix_.size());
        default:
            if (schedule_->kind() != SwapSchedule::Kind::explicit_set) return -1;
            return schedule_->settled_from();
    }
}

bool SigmaSequence::tail_exact() const {
    return eventually_constant() || schedule_->kind() == SwapSchedule::Kind::periodic;
}

namespace {

/// 1 / b^e as an exact rational (e may exceed 64-bit ranges).
Rat inv_pow(long b, long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    Rat r;
    r.get_num() = 1;
    r.get_den() = p;
    return r;
}

/// sum_{i >= i0} coeff(sigma_i(0)) / b^{i+1}, where coeff is affine in the
/// image of 0 (coeff(c) = c or b-1-c). Exact for constant / periodic /
/// eventually-constant rules; a certified enclosure for the Faure-A set.
Enclosure tail_weighted(const SigmaSequence& seq, long i0, bool complement, int digits_cap) {
    const long b = seq.base();
    auto coeff = [&](long i) -> long {
        long c = seq.sigma_at(i)(0);
        return complement ? b - 1 - c : c;
    };
    if (seq.eventually_constant()) {
        long i1 = std::max(i0, seq.constant_from());
        Rat exact(0);
        for (long i = i0; i < i1; ++i) exact += Rat(coeff(i)) * inv_pow(b, i + 1);
        Rat tail = Rat(coeff(i1)) * inv_pow(b, i1) / Rat(b - 1);
        Rat total = exact + tail;
        total.canonicalize();
        return Enclosure(total);
    }
    if (seq.schedule()->kind() == SwapSchedule::Kind::periodic) {
        const long P = static_cast<long>(seq.schedule()->pattern().size());
        Rat one_period(0);
        for (long r = 0; r < P; ++r) one_period += Rat(coeff(i0 + r)) * inv_pow(b, i0 + r + 1);
        mpz_class bp;
        mpz_ui_pow_ui(bp.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(P));
        Rat geom;  // sum_k b^{-kP} = b^P / (b^P - 1)
        geom.get_num() = bp;
        geom.get_den() = bp - 1;
        Rat total = one_period * geom;
        total.canonicalize();
        return Enclosure(total);
    }
    // Faure-A: sum terms exactly up to i0 + digits_cap, then bracket the
    // remainder by the min/max of the two possible coefficients.
    long J = i0 + digits_cap;
    Rat exact(0);
    for (long i = i0; i < J; ++i) exact += Rat(coeff(i)) * inv_pow(b, i + 1);
    long c_sigma = seq.base_perm()(0);
    long c_swap = b - 1 - c_sigma;
    if (complement) std::swap(c_sigma, c_swap);
    long cmin = std::min(c_sigma, c_swap), cmax = std::max(c_sigma, c_swap);
    Rat unit = inv_pow(b, J) / Rat(b - 1);  // sum_{i>=J} b^{-(i+1)}
    Rat lo = exact + Rat(cmin) * unit, hi = exact + Rat(cmax) * unit;
    lo.canonicalize();
    hi.canonicalize();
    return Enclosure(lo, hi);
}

}  // namespace

Enclosure point(const SigmaSequence& seq, unsigned long long n, int digits_cap) {
    const long b = seq.base();
    DigitVector d = digits(n, static_cast<int>(b));
    Rat head(0);
    for (size_t j = 0; j < d.digits.size(); ++j)
        head += Rat(seq.sigma_at(static_cast<long>(j))(d.digits[j])) *
                inv_pow(b, static_cast<long>(j) + 1);
    Enclosure tail = tail_weighted(seq, static_cast<long>(d.digits.size()), false, digits_cap);
    tail += head;
    return tail;
}

Discrepancies exact_discrepancies(const SigmaSequence& seq, unsigned long long N, int digits_cap) {
    if (N < 1) throw validation_error("exact_discrepancies: N >= 1");
    const long b = seq.base();
    const int m = static_cast<int>(digits(N, static_cast<int>(b)).digits.size());
    // cache psi triples per distinct permutation in the schedule head
    std::map<std::vector<int>, PsiTriple> cache;
    auto triple = [&](const Permutation& s) -> const PsiTriple& {
        auto it = cache.find(s.image());
        if (it == cache.end()) it = cache.emplace(s.image(), psi(s)).first;
        return it->second;
    };
    Rat dplus_head(0), dminus_head(0);
    for (int j = 1; j <= m; ++j) {
        const PsiTriple& t = triple(seq.sigma_at(j - 1));
        Rat x = rat(static_cast<long long>(N)) * inv_pow(b, j);
        dplus_head += t.plus.eval(x);
        dminus_head += t.minus.eval(x);
    }
    // tails: the argument N/b^j < 1/b for j > m, where psi^+ and psi^- are
    // the lines (b-1-sigma(0)) x and sigma(0) x.
    Enclosure tplus = tail_weighted(seq, m, true, digits_cap);
    Enclosure tminus = tail_weighted(seq, m, false, digits_cap);
    Rat Nr = rat(static_cast<long long>(N));
    Discrepancies out;
    out.dplus = Enclosure(dplus_head + Nr * tplus.lo, dplus_head + Nr * tplus.hi);
    out.dminus = Enclosure(dminus_head + Nr * tminus.lo, dminus_head + Nr * tminus.hi);
    out.dplus.lo.canonicalize();
    out.dplus.hi.canonicalize();
    out.dminus.lo.canonicalize();
    out.dminus.hi.canonicalize();
    // D_N = D_N^+ + D_N^-; its tail collapses to exactly N/b^m.
    Rat d_exact = dplus_head + dminus_head + Nr * inv_pow(b, m);
    d_exact.canonicalize();
    out.d = seq.tail_exact() ? Enclosure(Rat(out.dplus.lo + out.dminus.lo)) : Enclosure(d_exact);
    if (seq.tail_exact() && out.d.lo != d_exact)
        throw std::logic_error("discrepancy tails disagree");
    out.dstar = max(out.dplus, out.dminus);
    return out;
}

namespace {
void require_points(const std::vector<Rat>& pts) {
    if (pts.empty()) throw validation_error("empty point set");
    for (const Rat& x : pts)
        if (x < 0 || x >= 1) throw validation_error("points must lie in [0,1)");
}
}  // namespace

Rat brute_dplus(const std::vector<Rat>& pts) {
    require_points(pts);
    std::vector<Rat> s = pts;
    std::sort(s.begin(), s.end());
    const long N = static_cast<long>(s.size());
    Rat best(0);
    for (long i = 0; i < N; ++i) {
        Rat v = Rat(i + 1) - Rat(N) * s[static_cast<size_t>(i)];
        v.canonicalize();
        if (v > best) best = v;
    }
    return best;
}

Rat brute_dminus(const std::vector<Rat>& pts) {
    require_points(pts);
    std::vector<Rat> s = pts;
    std::sort(s.begin(), s.end());
    const long N = static_cast<long>(s.size());
    Rat best(0);
    for (long i = 0; i < N; ++i) {
        Rat v = Rat(N) * s[static_cast<size_t>(i)] - Rat(i);
        v.canonicalize();
        if (v > best) best = v;
    }
    return best;
}

Rat brute_star(const std::vector<Rat>& pts) { return std::max(brute_dplus(pts), brute_dminus(pts)); }

Rat brute_extreme(const std::vector<Rat>& pts) {
    Rat r = brute_dplus(pts) + brute_dminus(pts);
    r.canonicalize();
    return r;
}

Rat brute_l2_sq(const std::vector<Rat>& pts) {
    require_points(pts);
    std::vector<Rat> s = pts;
    std::sort(s.begin(), s.end());
    const long N = static_cast<long>(s.size());
    // int E^2 = sum_{i,j} (1 - max(x_i,x_j)) - N sum_i (1 - x_i^2) + N^2/3
    Rat sum_max(0), sum_sq(0);
    for (long i = 0; i < N; ++i) {
        sum_max += Rat(2 * i + 1) * s[static_cast<size_t>(i)];
        sum_sq += s[static_cast<size_t>(i)] * s[static_cast<size_t>(i)];
    }
    Rat out = Rat(N) * Rat(N) - sum_max - Rat(N) * (Rat(N) - sum_sq) + rat(N * N, 3);
    out.canonicalize();
    return out;
}

Rat brute_diaphony_sq(const std::vector<Rat>& pts) {
    require_points(pts);
    const size_t N = pts.size();
    Rat out(0);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            Rat t = frac1(pts[i] - pts[j]);
            out += t * t - t + rat(1, 6);
        }
    out.canonicalize();
    return out;
}

std::vector<Rat> kronecker(const Rat& alpha, long N) {
    if (N < 1) throw validation_error("kronecker: N >= 1");
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(N));
    for (long n = 1; n <= N; ++n) out.push_back(frac1(Rat(n) * alpha));
    return out;
}

Rat golden_ratio_approx(long N) {
    if (N < 1) throw validation_error("golden_ratio_approx: N >= 1");
    // consecutive Fibonacci convergents: |gamma - F_{k-1}/F_k| < 1/F_k^2
    mpz_class a = 1, b = 1;  // F_1, F_2
    mpz_class bound = 2 * mpz_class(N) * mpz_class(N);
    while (b * b <= bound) {
        mpz_class t = a + b;
        a = b;
        b = t;
    }
    Rat r;
    r.get_num() = a;
    r.get_den() = b;
    r.canonicalize();
    return r;
}

}  // namespace vdc
