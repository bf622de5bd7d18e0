#pragma once

// Test-side oracles, deliberately independent of the library's computation
// paths: straight-from-definition enumerations and symbolic integration.

#include <algorithm>
#include <vector>

#include "vdc/rat.hpp"

namespace oracle {

using vdc::Rat;
using vdc::rat;

/// Star discrepancy by direct evaluation of E([0,a]) at every critical a
/// with both one-sided counts (no sorting formula).
inline Rat star_exhaustive(const std::vector<Rat>& pts) {
    const long N = static_cast<long>(pts.size());
    std::vector<Rat> grid = pts;
    grid.push_back(Rat(0));
    grid.push_back(Rat(1));
    Rat best(0);
    for (const Rat& a : grid) {
        long lt = 0, le = 0;
        for (const Rat& x : pts) {
            if (x < a) ++lt;
            if (x <= a) ++le;
        }
        for (long cnt : {lt, le}) {
            Rat v = Rat(cnt) - Rat(N) * a;
            if (v < 0) v = -v;
            if (v > best) best = v;
        }
    }
    return best;
}

/// Extreme discrepancy by enumerating all critical interval pairs.
inline Rat extreme_exhaustive(const std::vector<Rat>& pts) {
    const long N = static_cast<long>(pts.size());
    std::vector<Rat> grid = pts;
    grid.push_back(Rat(0));
    grid.push_back(Rat(1));
    std::sort(grid.begin(), grid.end());
    Rat best(0);
    for (size_t i = 0; i < grid.size(); ++i)
        for (size_t j = i; j < grid.size(); ++j) {
            const Rat &a = grid[i], &b = grid[j];
            // interval [a,b) with each end open or closed (sup side limits)
            for (int ca = 0; ca < 2; ++ca)
                for (int cb = 0; cb < 2; ++cb) {
                    long cnt = 0;
                    for (const Rat& x : pts) {
                        bool lo = ca ? x >= a : x > a;
                        bool hi = cb ? x <= b : x < b;
                        if (lo && hi) ++cnt;
                    }
                    Rat v = Rat(cnt) - Rat(N) * (b - a);
                    if (v < 0) v = -v;
                    if (v > best) best = v;
                }
        }
    return best;
}

/// L2 star discrepancy squared by piecewise symbolic integration of
/// int_0^1 (A([0,a)) - a N)^2 da.
inline Rat l2_sq_symbolic(const std::vector<Rat>& pts) {
    const long N = static_cast<long>(pts.size());
    std::vector<Rat> grid = pts;
    grid.push_back(Rat(0));
    grid.push_back(Rat(1));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    Rat total(0);
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const Rat &a = grid[i], &b = grid[i + 1];
        long A = 0;
        for (const Rat& x : pts)
            if (x <= a) ++A;  // x < alpha for alpha in (a, b)
        // int_a^b (A - N t)^2 dt = [ -(A - N t)^3 / (3N) ]_a^b
        Rat ua = Rat(A) - Rat(N) * a, ub = Rat(A) - Rat(N) * b;
        total += (ua * ua * ua - ub * ub * ub) / (3 * N);
    }
    total.canonicalize();
    return total;
}

/// Diaphony squared (coefficient of 2 pi^2) by symbolic double integration
/// of |E([a,b))|^2 over the unit square, wrapping the interval when a > b.
inline Rat diaphony_sq_symbolic(const std::vector<Rat>& pts) {
    const long N = static_cast<long>(pts.size());
    std::vector<Rat> g = pts;
    g.push_back(Rat(0));
    g.push_back(Rat(1));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    // E = c + N a - N b on each cell; cell integral via the quartic
    // antiderivative of the cubic in a.
    auto cell = [&](const Rat& c, const Rat& a1, const Rat& a2, const Rat& b1, const Rat& b2) {
        auto quart = [&](const Rat& aa, const Rat& bb) {
            Rat u = c + Rat(N) * aa - Rat(N) * bb;
            return Rat(u * u * u * u);
        };
        Rat val = (quart(a2, b1) - quart(a2, b2) - quart(a1, b1) + quart(a1, b2));
        val /= Rat(12) * N * N;
        val.canonicalize();
        return val;
    };
    Rat total(0);
    for (size_t i = 0; i + 1 < g.size(); ++i)
        for (size_t j = 0; j + 1 < g.size(); ++j) {
            long cnt = 0;
            if (i < j) {  // a < b: count points in [g_{i+1}, g_j]
                for (const Rat& x : pts)
                    if (x >= g[i + 1] && x <= g[j]) ++cnt;
                total += cell(Rat(cnt), g[i], g[i + 1], g[j], g[j + 1]);
            } else if (i > j) {  // wrapped interval [a,1) u [0,b)
                for (const Rat& x : pts)
                    if (x >= g[i + 1] || x <= g[j]) ++cnt;
                total += cell(Rat(cnt) - N, g[i], g[i + 1], g[j], g[j + 1]);
            } else {  // diagonal cell: both halves give (N a - N b)^2
                total += cell(Rat(0), g[i], g[i + 1], g[j], g[j + 1]);
            }
        }
    total.canonicalize();
    return total;
}

}  // namespace oracle
