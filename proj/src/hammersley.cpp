#include "vdc/hammersley.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

namespace vdc {

namespace {
std::atomic<int> g_threads{0};
}

void set_max_threads(int n) { g_threads = n; }
int max_threads() {
    int n = g_threads.load();
    if (n > 0) return n;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void HammersleySpec::validate() const {
    if (base < 2) throw validation_error("hammersley: base >= 2");
    if (m < 1) throw validation_error("hammersley: m >= 1");
    if (static_cast<int>(sigma_vec.size()) != m)
        throw validation_error("hammersley: need exactly m permutations");
    for (const auto& s : sigma_vec)
        if (s.base() != base) throw validation_error("hammersley: permutation base mismatch");
    if (std::pow(static_cast<double>(base), m) > 2e7)
        throw resource_error("hammersley: b^m too large");
}

long long HammersleySpec::count() const {
    long long n = 1;
    for (int i = 0; i < m; ++i) n *= base;
    return n;
}

std::vector<std::pair<Rat, Rat>> hammersley_points(const HammersleySpec& spec) {
    spec.validate();
    const long long N = spec.count();
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(static_cast<size_t>(N));
    for (long long k = 0; k < N; ++k) {
        long long t = k;
        Rat x(0);
        long long den = spec.base;
        for (int j = 0; j < spec.m; ++j) {
            int d = static_cast<int>(t % spec.base);
            x += rat(spec.sigma_vec[static_cast<size_t>(j)](d), den);
            t /= spec.base;
            den *= spec.base;
        }
        x.canonicalize();
        pts.emplace_back(x, rat(k, N));
    }
    return pts;
}

Rat star_formula_term(const HammersleySpec& spec) {
    spec.validate();
    const long long N = spec.count();
    std::vector<PsiTriple> triples;
    triples.reserve(static_cast<size_t>(spec.m));
    for (const auto& s : spec.sigma_vec) triples.push_back(psi(s));
    Rat best_plus(0), best_minus(0);
    for (long long n = 1; n <= N; ++n) {
        Rat sp(0), sm(0);
        long long den = spec.base;
        for (int j = 1; j <= spec.m; ++j) {
            Rat x = rat(n, den);
            sp += triples[static_cast<size_t>(j - 1)].plus.eval(x);
            sm += triples[static_cast<size_t>(j - 1)].minus.eval(x);
            den *= spec.base;
        }
        if (sp > best_plus) best_plus = sp;
        if (sm > best_minus) best_minus = sm;
    }
    Rat out = std::max(best_plus, best_minus);
    out.canonicalize();
    return out;
}

Rat brute_star_2d(const std::vector<std::pair<Rat, Rat>>& pts) {
    if (pts.empty()) throw validation_error("brute_star_2d: empty point set");
    const long long N = static_cast<long long>(pts.size());
    if (N > 20000) throw resource_error("brute_star_2d: too many points");
    std::vector<Rat> xs, ys;
    for (auto& [x, y] : pts) {
        if (x < 0 || x >= 1 || y < 0 || y >= 1)
            throw validation_error("brute_star_2d: points must lie in [0,1)^2");
        xs.push_back(x);
        ys.push_back(y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const size_t nx = xs.size(), ny = ys.size();
    // cumulative counts: C[i][j] = #{points with x <= xs[i-1], y <= ys[j-1]}
    std::vector<int> C((nx + 1) * (ny + 1), 0);
    auto at = [&](size_t i, size_t j) -> int& { return C[i * (ny + 1) + j]; };
    for (auto& [x, y] : pts) {
        size_t i = static_cast<size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin()) + 1;
        size_t j = static_cast<size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin()) + 1;
        ++at(i, j);
    }
    for (size_t i = 1; i <= nx; ++i)
        for (size_t j = 1; j <= ny; ++j)
            at(i, j) += at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);

    // candidate corners: alpha in xs u {1}, beta in ys u {1}; at each, the
    // box count as alpha is approached from below (strict: C[i-1]) and from
    // above (weak: C[i]); same per axis for beta.
    auto alpha_of = [&](size_t i) { return i == nx ? Rat(1) : xs[i]; };
    auto beta_of = [&](size_t j) { return j == ny ? Rat(1) : ys[j]; };

    const int workers = std::min(max_threads(), static_cast<int>(nx + 1));
    std::vector<Rat> best_per(static_cast<size_t>(workers), Rat(0));
    auto run = [&](int w) {
        Rat best(0);
        for (size_t i = static_cast<size_t>(w); i <= nx; i += static_cast<size_t>(workers)) {
            Rat a = alpha_of(i);
            for (size_t j = 0; j <= ny; ++j) {
                Rat area = a * beta_of(j) * static_cast<long>(N);
                // counts from below (strict <) and from above (weak <=) per
                // axis; only the two extremes can maximize |count - area|
                int cmin = at(i, j);
                int cmax = at(std::min(i + 1, nx), std::min(j + 1, ny));
                Rat v1 = Rat(cmax) - area, v2 = area - Rat(cmin);
                if (v1 > best) best = v1;
                if (v2 > best) best = v2;
            }
        }
        best_per[static_cast<size_t>(w)] = best;
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> th;
        for (int w = 0; w < workers; ++w) th.emplace_back(run, w);
        for (auto& t : th) t.join();
    }
    Rat out = *std::max_element(best_per.begin(), best_per.end());
    out.canonicalize();
    return out;
}

std::vector<Permutation> itau_vec(int b, int m) {
    if (m < 1) throw validation_error("itau_vec: m >= 1");
    std::vector<Permutation> out;
    const int ids = m % 2 ? (m - 1) / 2 : m / 2;
    for (int i = 0; i < m; ++i)
        out.push_back(i < ids ? Permutation::identity(b) : tau(b));
    return out;
}

std::vector<Permutation> sigma_sbar_vec(const Permutation& sigma, int m) {
    if (m < 1) throw validation_error("sigma_sbar_vec: m >= 1");
    std::vector<Permutation> out;
    const int b = sigma.base();
    Permutation bar = compose(tau(b), sigma);
    const int firsts = m % 2 ? (m - 1) / 2 : m / 2;
    for (int i = 0; i < m; ++i) out.push_back(i < firsts ? sigma : bar);
    return out;
}

ItauReport itau_asymptotic_check(int b, int m_max) {
    if (b < 2 || m_max < 1) throw validation_error("itau_asymptotic_check: bad parameters");
    ItauReport rep;
    rep.base = b;
    const double lg = std::log(static_cast<double>(b));
    rep.limit = b % 2 ? (b - 1) / (8 * lg)
                      : static_cast<double>(b) * b / (8.0 * (b + 1) * lg);
    for (int m = 1; m <= m_max; ++m) {
        HammersleySpec spec{b, m, itau_vec(b, m)};
        Rat term = star_formula_term(spec);
        rep.rows.push_back({m, term, to_double(term) / (m * lg)});
    }
    return rep;
}

}  // namespace vdc
