#include "vdc/search.hpp"

#include <algorithm>
#include <unordered_map>

namespace vdc {

namespace {

struct Searcher {
    const SearchConfig& cfg;
    int b;
    long long thr_num, thr_den;        // threshold as long longs (reduced)
    std::vector<int> prefix;           // images chosen so far
    std::vector<char> used;
    std::vector<int> P;                // P[h] = #{i<k : prefix[i] < h}
    uint64_t mask = 0;
    std::unordered_map<uint64_t, long long> memo;  // V_k -> psi(k/b)*b
    SearchResult result;
    std::vector<std::pair<Permutation, long long>> found;  // perm, scaled max

    explicit Searcher(const SearchConfig& c)
        : cfg(c), b(c.base), used(static_cast<size_t>(c.base), 0),
          P(static_cast<size_t>(c.base) + 1, 0) {
        Rat t = cfg.threshold;
        t.canonicalize();
        if (!t.get_num().fits_slong_p() || !t.get_den().fits_slong_p())
            throw validation_error("search: threshold too large");
        thr_num = t.get_num().get_si();
        thr_den = t.get_den().get_si();
        if (thr_num > (1ll << 44) || thr_den > (1ll << 44))
            throw validation_error("search: threshold terms too large for exact comparison");
    }

    /// scaled >= T*b, i.e. psi(k/b) >= T  (the pruning test is strict-keep)
    bool at_or_above_threshold(long long scaled) const {
        return scaled * thr_den >= thr_num * b;
    }

    /// psi^{(+)}(k/b)*b from the current P counts.
    long long breakpoint_scaled(int k) const {
        long long mplus = 0, mminus = 0;
        for (int h = 0; h < b; ++h) {
            long long v = static_cast<long long>(b) * P[static_cast<size_t>(h)] -
                          static_cast<long long>(h) * k;
            mplus = std::max(mplus, v);
            mminus = std::max(mminus, -v);
        }
        return cfg.use_plus ? mplus : mplus + mminus;
    }

    void dfs(int k, long long running_max) {
        if (k == b) {
            found.emplace_back(Permutation(prefix), running_max);
            return;
        }
        for (int v = 0; v < b; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            if (++result.nodes > cfg.node_budget) {
                result.complete = false;
                return;
            }
            prefix.push_back(v);
            used[static_cast<size_t>(v)] = 1;
            if (b <= 64) mask |= 1ull << v;
            for (int h = v + 1; h <= b; ++h) ++P[static_cast<size_t>(h)];

            long long val;
            if (cfg.memoize && b <= 64) {
                auto it = memo.find(mask);
                if (it != memo.end()) {
                    val = it->second;
                    ++result.memo_hits;
                } else {
                    val = breakpoint_scaled(k + 1);
                    memo.emplace(mask, val);
                }
            } else {
                val = breakpoint_scaled(k + 1);
            }

            if (at_or_above_threshold(val)) {
                ++result.pruned;
            } else {
                dfs(k + 1, std::max(running_max, val));
            }

            for (int h = v + 1; h <= b; ++h) --P[static_cast<size_t>(h)];
            if (b <= 64) mask &= ~(1ull << v);
            used[static_cast<size_t>(v)] = 0;
            prefix.pop_back();
            if (!result.complete) return;
        }
    }
};

}  // namespace

SearchResult search(const SearchConfig& cfg) {
    if (cfg.base < 2) throw validation_error("search: base must be >= 2");
    if (cfg.threshold <= 0) throw validation_error("search: threshold must be positive");
    if (cfg.node_budget <= 0) throw validation_error("search: budget must be positive");
    // beyond 64 images the bitmask memo key does not fit; run without memo
    Searcher s(cfg);
    if (cfg.symmetry_reduction) {
        // fix sigma(0) = 0: one representative per shift class
        s.prefix.push_back(0);
        s.used[0] = 1;
        s.mask = 1;
        for (int h = 1; h <= cfg.base; ++h) ++s.P[static_cast<size_t>(h)];
        long long v0 = s.breakpoint_scaled(1);
        if (!s.at_or_above_threshold(v0)) s.dfs(1, v0);
        else ++s.result.pruned;
    } else {
        s.dfs(0, 0);
    }
    SearchResult out = std::move(s.result);
    for (auto& [perm, scaled] : s.found) {
        if (cfg.symmetry_reduction) {
            // keep the lexicographically smaller of {sigma, reflect(sigma)}
            Permutation r = reflect(perm);
            if (r.image() < perm.image()) continue;
        }
        out.survivors.push_back({perm, rat(scaled, cfg.base), std::nullopt});
    }
    if (cfg.stage2) {
        std::vector<Permutation> ps;
        ps.reserve(out.survivors.size());
        for (auto& sv : out.survivors) ps.push_back(sv.perm);
        auto ranked = rank_f2(ps);
        out.survivors.clear();
        for (auto& sv : ranked) {
            long long scaled = 0;  // recompute max psi for the record
            auto vals = psi_breakpoints_scaled(sv.perm, cfg.use_plus ? PsiKind::plus : PsiKind::total);
            scaled = *std::max_element(vals.begin(), vals.end());
            out.survivors.push_back({sv.perm, rat(scaled, cfg.base), sv.f2_half_max});
        }
    } else {
        std::sort(out.survivors.begin(), out.survivors.end(), [](const Survivor& a, const Survivor& o) {
            if (a.max_psi != o.max_psi) return a.max_psi < o.max_psi;
            return a.perm.image() < o.perm.image();
        });
    }
    return out;
}

std::vector<Survivor> rank_f2(const std::vector<Permutation>& perms) {
    std::vector<Survivor> out;
    if (perms.empty()) return out;
    const int b = perms.front().base();
    for (const auto& p : perms) {
        if (p.base() != b) throw validation_error("rank_f2: mixed bases");
        // F_2^sigma is the psi function of the self-intrication in base b^2
        Rat m = max_psi(intricate(p, p), PsiKind::total) / 2;
        m.canonicalize();
        out.push_back({p, Rat(0), m});
    }
    std::stable_sort(out.begin(), out.end(), [](const Survivor& a, const Survivor& o) {
        if (*a.f2_half_max != *o.f2_half_max) return *a.f2_half_max < *o.f2_half_max;
        return a.perm.image() < o.perm.image();
    });
    return out;
}

}  // namespace vdc
