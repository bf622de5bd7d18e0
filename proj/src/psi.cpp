#include "vdc/psi.hpp"

#include <algorithm>
#include <cassert>

namespace vdc {

namespace {

/// One interval's lines: phi_h (or -phi_h) restricted to [(k-1)/b, k/b) is
/// the line with these integer coefficients. P = #{i<k : sigma(i) < h}
/// counts over the first k images (including sigma(k-1)).
IntLine phi_line(int b, int k, int h, int sigma_km1, const std::vector<int>& P, int sign) {
    long long sl, ic;
    if (h <= sigma_km1) {
        sl = -h;
        ic = P[static_cast<size_t>(h)];
    } else {
        sl = b - h;
        ic = -(k - P[static_cast<size_t>(h)]);
    }
    return {sign * sl, sign * ic};
}

PiecewiseAffine envelope_over_intervals(const std::vector<int>& img, int b, int k_max, int sign) {
    std::vector<PiecewiseAffine::Piece> pieces;
    std::vector<int> P(static_cast<size_t>(b) + 1, 0);
    std::vector<IntLine> lines(static_cast<size_t>(b));
    for (int k = 1; k <= k_max; ++k) {
        const int s = img[static_cast<size_t>(k - 1)];
        for (int h = s + 1; h <= b; ++h) ++P[static_cast<size_t>(h)];
        for (int h = 0; h < b; ++h) lines[static_cast<size_t>(h)] = phi_line(b, k, h, s, P, sign);
        append_upper_envelope(pieces, lines, rat(k - 1, b), rat(k, b));
    }
    // merge collinear neighbours
    std::vector<PiecewiseAffine::Piece> merged;
    for (auto& p : pieces) {
        if (!merged.empty() && merged.back().slope == p.slope && merged.back().icept == p.icept)
            continue;
        merged.push_back(std::move(p));
    }
    if (k_max == b) return PiecewiseAffine::from_pieces(std::move(merged));
    // partial prefix: hand back through PartialPsi instead
    throw std::logic_error("envelope_over_intervals: full base only");
}

}  // namespace

PiecewiseAffine phi(const Permutation& sigma, int h) {
    const int b = sigma.base();
    if (h < 0 || h >= b) throw validation_error("phi: need 0 <= h < b");
    std::vector<PiecewiseAffine::Piece> pieces;
    std::vector<int> P(static_cast<size_t>(b) + 1, 0);
    for (int k = 1; k <= b; ++k) {
        const int s = sigma(k - 1);
        for (int hh = s + 1; hh <= b; ++hh) ++P[static_cast<size_t>(hh)];
        IntLine l = phi_line(b, k, h, s, P, +1);
        pieces.push_back({rat(k - 1, b), Rat(static_cast<long>(l.slope)),
                          Rat(static_cast<long>(l.icept))});
    }
    return PiecewiseAffine::from_pieces(std::move(pieces));
}

PsiTriple psi(const Permutation& sigma) {
    const int b = sigma.base();
    PsiTriple t{envelope_over_intervals(sigma.image(), b, b, +1),
                envelope_over_intervals(sigma.image(), b, b, -1),
                PiecewiseAffine(), b, sigma};
    t.total = t.plus + t.minus;
    return t;
}

PsiPoint psi_point(const Permutation& sigma, const Rat& x) {
    const int b = sigma.base();
    Rat u = frac1(x);
    // k with u in [(k-1)/b, k/b)
    Rat ub = u * b;
    ub.canonicalize();
    long k = mpz_class(rat_floor(ub)).get_si() + 1;
    std::vector<int> P(static_cast<size_t>(b) + 1, 0);
    for (long i = 0; i < k; ++i)
        for (int h = sigma(static_cast<int>(i)) + 1; h <= b; ++h) ++P[static_cast<size_t>(h)];
    const int s = sigma(static_cast<int>(k - 1));
    Rat plus(0), minus(0);
    for (int h = 0; h < b; ++h) {
        Rat v;
        if (h <= s)
            v = Rat(P[static_cast<size_t>(h)]) - Rat(h) * u;
        else
            v = Rat(b - h) * u - Rat(static_cast<long>(k) - P[static_cast<size_t>(h)]);
        v.canonicalize();
        if (v > plus) plus = v;
        if (-v > minus) minus = Rat(-v);
    }
    Rat total = plus + minus;
    total.canonicalize();
    return {plus, minus, total};
}

std::vector<long long> psi_breakpoints_scaled(const Permutation& sigma, PsiKind kind) {
    const int b = sigma.base();
    std::vector<long long> out(static_cast<size_t>(b), 0);
    std::vector<long long> P(static_cast<size_t>(b) + 1, 0);
    // phi_h(k/b) = P_k(h) - h*k/b for every h, so scaled by b everything is
    // integral: psi^+(k/b)*b = max_h (b*P_k(h) - h*k).
    for (int k = 1; k < b; ++k) {
        for (int h = sigma(k - 1) + 1; h <= b; ++h) ++P[static_cast<size_t>(h)];
        long long mplus = 0, mminus = 0;
        for (int h = 0; h < b; ++h) {
            long long v = static_cast<long long>(b) * P[static_cast<size_t>(h)] -
                          static_cast<long long>(h) * k;
            mplus = std::max(mplus, v);
            mminus = std::max(mminus, -v);
        }
        switch (kind) {
            case PsiKind::plus: out[static_cast<size_t>(k)] = mplus; break;
            case PsiKind::minus: out[static_cast<size_t>(k)] = mminus; break;
            default: out[static_cast<size_t>(k)] = mplus + mminus;
        }
    }
    return out;
}

Rat max_psi(const Permutation& sigma, PsiKind kind) {
    auto v = psi_breakpoints_scaled(sigma, kind);
    return rat(*std::max_element(v.begin(), v.end()), sigma.base());
}

PartialPsi partial_psi(int b, const std::vector<int>& prefix) {
    if (b < 2) throw validation_error("partial_psi: base must be >= 2");
    if (prefix.empty() || static_cast<int>(prefix.size()) > b)
        throw validation_error("partial_psi: prefix size must be in [1, b]");
    std::vector<char> seen(static_cast<size_t>(b), 0);
    for (int v : prefix) {
        if (v < 0 || v >= b) throw validation_error("partial_psi: image out of range");
        if (seen[static_cast<size_t>(v)]) throw validation_error("partial_psi: duplicate image");
        seen[static_cast<size_t>(v)] = 1;
    }
    const int k_max = static_cast<int>(prefix.size());
    PartialPsi out;
    out.end = rat(k_max, b);
    std::vector<int> P(static_cast<size_t>(b) + 1, 0);
    std::vector<IntLine> plus_lines(static_cast<size_t>(b)), minus_lines(static_cast<size_t>(b));
    std::vector<PiecewiseAffine::Piece> plus_pieces, minus_pieces;
    for (int k = 1; k <= k_max; ++k) {
        const int s = prefix[static_cast<size_t>(k - 1)];
        for (int h = s + 1; h <= b; ++h) ++P[static_cast<size_t>(h)];
        long long mplus = 0, mminus = 0;
        for (int h = 0; h < b; ++h) {
            plus_lines[static_cast<size_t>(h)] = phi_line(b, k, h, s, P, +1);
            minus_lines[static_cast<size_t>(h)] = phi_line(b, k, h, s, P, -1);
            long long v = static_cast<long long>(b) * P[static_cast<size_t>(h)] -
                          static_cast<long long>(h) * k;
            mplus = std::max(mplus, v);
            mminus = std::max(mminus, -v);
        }
        out.values.push_back(rat(mplus + mminus, b));
        append_upper_envelope(plus_pieces, plus_lines, rat(k - 1, b), rat(k, b));
        append_upper_envelope(minus_pieces, minus_lines, rat(k - 1, b), rat(k, b));
    }
    // pointwise sum of the two envelopes over [0, k_max/b)
    auto xs_union = [&] {
        std::vector<Rat> xs;
        for (auto& p : plus_pieces) xs.push_back(p.x0);
        for (auto& p : minus_pieces) xs.push_back(p.x0);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        return xs;
    }();
    size_t i = 0, j = 0;
    for (const Rat& x : xs_union) {
        while (i + 1 < plus_pieces.size() && plus_pieces[i + 1].x0 <= x) ++i;
        while (j + 1 < minus_pieces.size() && minus_pieces[j + 1].x0 <= x) ++j;
        PiecewiseAffine::Piece p{x, plus_pieces[i].slope + minus_pieces[j].slope,
                                 plus_pieces[i].icept + minus_pieces[j].icept};
        p.slope.canonicalize();
        p.icept.canonicalize();
        if (!out.pieces.empty() && out.pieces.back().slope == p.slope &&
            out.pieces.back().icept == p.icept)
            continue;
        out.pieces.push_back(std::move(p));
    }
    return out;
}

namespace {

struct ScaledPieces {
    // psi with integer coefficients: breakpoints as rationals, plus
    // (slope, icept) longs; used by the scaled-integer F_n machinery.
    std::vector<Rat> x0;
    std::vector<long long> slope, icept;

    explicit ScaledPieces(const PiecewiseAffine& f) {
        for (const auto& p : f.pieces()) {
            if (p.slope.get_den() != 1 || p.icept.get_den() != 1)
                throw std::logic_error("psi pieces must have integer coefficients");
            x0.push_back(p.x0);
            slope.push_back(p.slope.get_num().get_si());
            icept.push_back(p.icept.get_num().get_si());
        }
    }

    /// f(r/M)*M for one point (binary search).
    long long at(long long r, long long M) const {
        size_t lo = 0, hi = x0.size();
        while (hi - lo > 1) {
            size_t mid = (lo + hi) / 2;
            // x0[mid] <= r/M  <=>  x0num*M <= r*x0den
            if (x0[mid].get_num().get_si() * M <= r * x0[mid].get_den().get_si())
                lo = mid;
            else
                hi = mid;
        }
        return slope[lo] * r + icept[lo] * M;
    }

    /// f(r/M)*M for all r in [0,M) by walking the pieces.
    void grid(long long M, std::vector<long long>& out) const {
        out.assign(static_cast<size_t>(M), 0);
        for (size_t i = 0; i < x0.size(); ++i) {
            // ceil(x0*M)
            mpz_class num = x0[i].get_num() * static_cast<long>(M), q;
            mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x0[i].get_den().get_mpz_t());
            long long r0 = q.get_si();
            long long r1 = M;
            if (i + 1 < x0.size()) {
                mpz_class num2 = x0[i + 1].get_num() * static_cast<long>(M);
                mpz_cdiv_q(q.get_mpz_t(), num2.get_mpz_t(), x0[i + 1].get_den().get_mpz_t());
                r1 = q.get_si();
            }
            for (long long r = r0; r < r1; ++r)
                out[static_cast<size_t>(r)] = slope[i] * r + icept[i] * M;
        }
    }
};

long long ipow(long long b, int n) {
    long long r = 1;
    while (n--) r *= b;
    return r;
}

FnMax fn_max_exhaustive(const ScaledPieces& sp, int base, int n, long long budget) {
    const long long total = ipow(base, n);
    if (total > budget)
        throw resource_error("f_n_max: b^n exceeds the exhaustive budget");
    // S_i(r) = sum_{i'<=i} psi((r mod b^i')/b^i') scaled by b^i;
    // the last level is streamed instead of materialized.
    std::vector<long long> S{0}, z;
    long long Mp = 1;
    for (int i = 1; i < n; ++i) {
        const long long M = Mp * base;
        sp.grid(M, z);
        std::vector<long long> S2(static_cast<size_t>(M));
        for (long long r = 0; r < M; ++r)
            S2[static_cast<size_t>(r)] = base * S[static_cast<size_t>(r % Mp)] +
                                         z[static_cast<size_t>(r)];
        S.swap(S2);
        Mp = M;
    }
    const long long M = Mp * base;
    long long best = -1, arg = 0;
    // stream the last level piece by piece to keep memory at b^{n-1}
    for (size_t i = 0; i < sp.x0.size(); ++i) {
        mpz_class num = sp.x0[i].get_num() * static_cast<long>(M), q;
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), sp.x0[i].get_den().get_mpz_t());
        long long r0 = q.get_si(), r1 = M;
        if (i + 1 < sp.x0.size()) {
            mpz_class num2 = sp.x0[i + 1].get_num() * static_cast<long>(M);
            mpz_cdiv_q(q.get_mpz_t(), num2.get_mpz_t(), sp.x0[i + 1].get_den().get_mpz_t());
            r1 = q.get_si();
        }
        for (long long r = r0; r < r1; ++r) {
            long long v = base * S[static_cast<size_t>(r % Mp)] + sp.slope[i] * r +
                          sp.icept[i] * M;
            if (v > best) {
                best = v;
                arg = r;
            }
        }
    }
    FnMax out;
    out.value = rat(best, M);
    out.nodes = total;
    for (int i = 0; i < n; ++i) {
        out.argmax.push_back(static_cast<int>(arg % base));
        arg /= base;
    }
    std::reverse(out.argmax.begin(), out.argmax.end());  // d_1 first
    return out;
}

struct BnbState {
    const ScaledPieces& sp;
    int base, n;
    long long budget, nodes = 0;
    long long best = -1, best_r = 0;
    std::vector<long long> pow;          // b^i
    std::vector<long long> tail_bound;   // ceil((n-i) * maxpsi * b^n) at level i
};

void bnb_rec(BnbState& st, int level, long long r, long long partial) {
    if (level == st.n) {
        if (partial > st.best) {
            st.best = partial;
            st.best_r = r;
        }
        return;
    }
    if (++st.nodes > st.budget) throw resource_error("f_n_max: node budget exceeded");
    const long long M = st.pow[static_cast<size_t>(level + 1)];
    const long long step = st.pow[static_cast<size_t>(level)];
    // order digits by the incoming term value, best first
    std::vector<std::pair<long long, int>> order;
    order.reserve(static_cast<size_t>(st.base));
    for (int d = 0; d < st.base; ++d) {
        long long r2 = r + step * d;
        order.emplace_back(st.sp.at(r2, M), d);
    }
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [t, d] : order) {
        long long partial2 = st.base * partial + t;
        long long ub = partial2 * st.pow[static_cast<size_t>(st.n - level - 1)] +
                       st.tail_bound[static_cast<size_t>(level + 1)];
        if (st.best >= 0 && ub <= st.best) break;  // ordered: the rest is no better
        bnb_rec(st, level + 1, r + step * d, partial2);
    }
}

FnMax fn_max_bnb(const ScaledPieces& sp, const PiecewiseAffine& f, int base, int n,
                 long long budget) {
    if (std::pow(static_cast<double>(base), n) > 1e14)
        throw resource_error("f_n_max: b^n too large for scaled integers");
    BnbState st{sp, base, n, budget};
    st.pow.resize(static_cast<size_t>(n) + 1);
    st.pow[0] = 1;
    for (int i = 1; i <= n; ++i) st.pow[static_cast<size_t>(i)] = st.pow[static_cast<size_t>(i - 1)] * base;
    // max psi over [0,1): psi is continuous piecewise affine
    auto [mx, arg] = f.max_on_unit();
    st.tail_bound.resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        // ceil((n-i) * mx * b^n)
        Rat v = Rat(n - i) * mx * rat(st.pow[static_cast<size_t>(n)]);
        v.canonicalize();
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        st.tail_bound[static_cast<size_t>(i)] = q.get_si();
    }
    (void)arg;
    bnb_rec(st, 0, 0, 0);
    FnMax out;
    out.value = rat(st.best, st.pow[static_cast<size_t>(n)]);
    out.nodes = st.nodes;
    long long r = st.best_r;
    for (int i = 0; i < n; ++i) {
        out.argmax.push_back(static_cast<int>(r % base));
        r /= base;
    }
    std::reverse(out.argmax.begin(), out.argmax.end());
    return out;
}

}  // namespace

FnMax f_n_max(const PiecewiseAffine& psi_fn, int base, int n, FnMode mode, long long budget) {
    if (n < 1) throw validation_error("f_n_max: n >= 1");
    if (base < 2) throw validation_error("f_n_max: base >= 2");
    ScaledPieces sp(psi_fn);
    const double total = std::pow(static_cast<double>(base), n);
    switch (mode) {
        case FnMode::exhaustive:
            return fn_max_exhaustive(sp, base, n, budget);
        case FnMode::branch_and_bound:
            return fn_max_bnb(sp, psi_fn, base, n, budget);
        default:
            return total <= static_cast<double>(budget)
                       ? fn_max_exhaustive(sp, base, n, budget)
                       : fn_max_bnb(sp, psi_fn, base, n, budget);
    }
}

FnMax f_n_max(const Permutation& sigma, int n, FnMode mode, PsiKind kind, long long budget) {
    return f_n_max(psi(sigma).of(kind), sigma.base(), n, mode, budget);
}

Rat f_n_eval_periodic(const PiecewiseAffine& psi_fn, int base, const std::vector<int>& cycle,
                      int reps) {
    if (cycle.empty()) throw validation_error("f_n_eval_periodic: empty cycle");
    for (int d : cycle)
        if (d < 0 || d >= base) throw validation_error("f_n_eval_periodic: digit out of range");
    const int q = static_cast<int>(cycle.size());
    if (q > 12 || std::pow(static_cast<double>(base), q) > 1e15)
        throw resource_error("f_n_eval_periodic: cycle too long");
    long long D = 1;
    for (int i = 0; i < q; ++i) D *= base;
    D -= 1;
    long long C = 0;
    for (int d : cycle) C = C * base + d;  // xhat = 0.c1 c2 ... repeating
    Rat sum(0);
    long long Cj = C;
    for (int j = 0; j < q; ++j) {
        sum += psi_fn.eval(rat(Cj, D));
        Cj = Cj * base % D;
    }
    sum.canonicalize();
    Rat result = sum / q;
    result.canonicalize();
    for (int r = 2; r <= reps; ++r) {
        Rat s2(0);
        Cj = C;
        for (int j = 0; j < q * r; ++j) {
            s2 += psi_fn.eval(rat(Cj, D));
            Cj = Cj * base % D;
        }
        s2.canonicalize();
        Rat avg = s2 / (q * r);
        avg.canonicalize();
        if (avg != result) throw std::logic_error("periodic evaluation inconsistent");
    }
    return result;
}

Rat f_n_eval_periodic(const Permutation& sigma, const DigitVector& cycle, int reps, PsiKind kind) {
    if (cycle.base != sigma.base()) throw validation_error("f_n_eval_periodic: base mismatch");
    return f_n_eval_periodic(psi(sigma).of(kind), sigma.base(), cycle.digits, reps);
}

}  // namespace vdc
