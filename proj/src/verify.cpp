#include "vdc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "vdc/asym.hpp"
#include "vdc/catalog.hpp"
#include "vdc/disc.hpp"
#include "vdc/hammersley.hpp"
#include "vdc/search.hpp"

namespace vdc::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Suite {
    Profile profile;
    std::ostream* progress;
    std::vector<CheckResult> results;

    bool full() const { return profile == Profile::full; }

    template <typename Fn>
    void check(const std::string& id, int criterion, Fn&& fn) {
        CheckResult r;
        r.id = id;
        r.criterion = criterion;
        auto t0 = Clock::now();
        try {
            fn(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.actual = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (progress) {
            (*progress) << (r.pass ? "PASS " : "FAIL ") << r.id << "  expected=" << r.expected
                        << "  actual=" << r.actual << "  (" << r.seconds << " s)\n";
            progress->flush();
        }
        results.push_back(std::move(r));
    }
};

Permutation random_perm(int b, std::mt19937& rng, bool fix_zero) {
    std::vector<int> img(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = i;
    std::shuffle(img.begin() + (fix_zero ? 1 : 0), img.end(), rng);
    return Permutation(img);
}

std::string enc_str(const Enclosure& e) {
    return e.exact() ? rat_str(e.lo) : "[" + rat_str(e.lo) + ", " + rat_str(e.hi) + "]";
}

std::string bracket_str(const AlphaBracket& b) {
    return "[" + rat_str(b.lower) + ", " + rat_str(b.upper) + "]";
}

/// floor(x * 10^4) / 10^4 rendered as e.g. "0.4269" (outward for a lower
/// bound); the paper prints truncated decimals for its bracket tables.
std::string floor4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", std::floor(x * 10000) / 10000);
    return buf;
}
std::string ceil4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", std::ceil(x * 10000) / 10000);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
void theoreme6(Suite& s) {
    const int b_hi = s.full() ? 40 : 12;
    for (int b = 2; b <= b_hi; ++b) {
        s.check("theoreme6_b" + std::to_string(b), 1, [&](CheckResult& r) {
            IdClosedForm cf = id_closed_form(b);
            r.expected = rat_str(cf.s_coeff) + " / log " + std::to_string(b);
            AlphaBracket br = alpha_bracket(Permutation::identity(b), 6, 2);
            r.actual = bracket_str(br) + " / log " + std::to_string(b);
            r.pass = br.lower == br.upper && br.lower == cf.s_coeff;
        });
    }
}

// ---------------------------------------------------------------- criterion 2
void table1_s2(Suite& s) {
    s.check("table1_s2_constant", 2, [&](CheckResult& r) {
        r.expected = "1/3 / log 2 = 0.4808...";
        AlphaBracket br = alpha_bracket(Permutation::identity(2), 6, 2);
        FloatInterval fi = over_log(br.lower, br.upper, 2);
        r.actual = bracket_str(br) + " -> [" + floor4(fi.lo) + ", " + floor4(fi.hi) + "]";
        r.pass = br.lower == rat(1, 3) && br.upper == rat(1, 3) && floor4(fi.lo) == "0.4808" &&
                 floor4(fi.hi) == "0.4808";
    });
}

// ---------------------------------------------------------------- criterion 3
void oracle_equivalence(Suite& s) {
    const unsigned long long n_max = s.full() ? 500 : 150;
    for (int b : {2, 3, 5, 9, 12}) {
        s.check("oracle_equivalence_b" + std::to_string(b), 3, [&](CheckResult& r) {
            r.expected = "series == brute force for N <= " + std::to_string(n_max);
            std::mt19937 rng(1000u + static_cast<unsigned>(b));
            for (int t = 0; t < 5; ++t) {
                Permutation sigma = random_perm(b, rng, true);
                SigmaSequence seq = SigmaSequence::constant(sigma);
                std::vector<Rat> pts;
                pts.reserve(n_max);
                for (unsigned long long N = 1; N <= n_max; ++N) {
                    pts.push_back(point(seq, N - 1).lo);
                    Discrepancies d = exact_discrepancies(seq, N);
                    if (d.dplus.lo != brute_dplus(pts) || d.dminus.lo != brute_dminus(pts) ||
                        d.d.lo != brute_extreme(pts) || d.dstar.lo != brute_star(pts)) {
                        r.actual = "mismatch at base " + std::to_string(b) + ", N = " +
                                   std::to_string(N) + ", sigma = " + sigma.str();
                        r.pass = false;
                        return;
                    }
                }
            }
            r.actual = "exact agreement";
            r.pass = true;
        });
    }
}

// ---------------------------------------------------------------- criterion 4
void sigma36_bracket(Suite& s) {
    s.check("sigma36_bracket", 4, [&](CheckResult& r) {
        r.expected = "contains 46/35, width <= 1/20, s in 0.3667 +- 0.02";
        AlphaBracket br = alpha_bracket(catalog::sigma36(), 4, 2);
        FloatInterval fi = over_log(br.lower, br.upper, 36);
        r.actual = bracket_str(br) + " -> s in [" + floor4(fi.lo) + ", " + ceil4(fi.hi) + "]";
        r.pass = br.lower <= rat(46, 35) && rat(46, 35) <= br.upper &&
                 br.upper - br.lower <= rat(1, 20) && fi.lo >= 0.3667 - 0.02 &&
                 fi.hi <= 0.3667 + 0.02;
    });
}

// ---------------------------------------------------------------- criterion 5
void sigma60_checks(Suite& s) {
    s.check("ostromoukhov_psi_minus_zero_b60", 5, [&](CheckResult& r) {
        r.expected = "psi^- == 0";
        PsiTriple t = psi(catalog::sigma60());
        bool zero = t.minus == PiecewiseAffine::constant(Rat(0));
        r.actual = zero ? "psi^- == 0" : "psi^- has " + std::to_string(t.minus.piece_count()) +
                                             " pieces";
        r.pass = zero && t.total == t.plus;
    });
    s.check("sigma60_alpha_plus_bracket", 5, [&](CheckResult& r) {
        r.expected = "contains 32209/17700, width <= 1/10";
        auto [p, m] = alpha_pm_bracket(catalog::sigma60(), 3, 2);
        r.actual = bracket_str(p) + "; alpha- = " + bracket_str(m);
        r.pass = p.lower <= rat(32209, 17700) && rat(32209, 17700) <= p.upper &&
                 p.upper - p.lower <= rat(1, 10) && m.lower == 0 && m.upper == 0;
    });
    s.check("sigma60_s_star", 5, [&](CheckResult& r) {
        r.expected = "s* within 0.01 of 0.222223";
        SBracket sb = s_star_swapped(catalog::sigma60(), 3, 2);
        r.actual = "[" + float17(sb.render.lo) + ", " + float17(sb.render.hi) + "]";
        r.pass = sb.render.lo >= 0.222223 - 0.01 && sb.render.hi <= 0.222223 + 0.01;
    });
}

// ---------------------------------------------------------------- criterion 6
void sigma12_bracket(Suite& s) {
    s.check("theoreme4_sigma12_bracket", 6, [&](CheckResult& r) {
        r.expected = "s upper < 0.40, bracket meets (0.375, 0.38)";
        AlphaBracket br = alpha_bracket(catalog::sigma12_extreme(), 6, 3);
        FloatInterval fi = over_log(br.lower, br.upper, 12);
        r.actual = "s in [" + float17(fi.lo) + ", " + float17(fi.hi) + "]";
        // intersects (0.375, 0.38): lo < 0.38 and hi > 0.375
        r.pass = fi.hi < 0.40 && fi.lo < 0.38 && fi.hi > 0.375;
    });
}

// ---------------------------------------------------------------- criterion 7
void omega_construction(Suite& s) {
    s.check("omega_paper_tuples", 7, [&](CheckResult& r) {
        r.expected = "published sigma_3, sigma_7, sigma_15, sigma_31";
        bool ok = faure_omega(3).image() == std::vector<int>{0, 1, 2} &&
                  faure_omega(7).image() == std::vector<int>{0, 4, 1, 3, 5, 2, 6} &&
                  faure_omega(15).image() ==
                      std::vector<int>{0, 8, 4, 12, 1, 9, 3, 7, 11, 5, 13, 2, 10, 6, 14} &&
                  faure_omega(31).image() ==
                      std::vector<int>{0,  16, 8,  24, 4,  20, 12, 28, 1,  17, 9,
                                       25, 3,  19, 7,  15, 23, 11, 27, 5,  21, 13,
                                       29, 2,  18, 10, 26, 6,  22, 14, 30};
        r.actual = ok ? "exact match" : "tuple mismatch";
        r.pass = ok;
    });
    s.check("omega_power_of_two", 7, [&](CheckResult& r) {
        r.expected = "omega_{2^n} = 2^n x first 2^n classical points, n <= 10";
        for (int n = 1; n <= 10; ++n) {
            const int b = 1 << n;
            Permutation om = faure_omega(b);
            for (int k = 0; k < b; ++k) {
                int rev = 0, t = k;
                for (int j = 0; j < n; ++j) {
                    rev = (rev << 1) | (t & 1);
                    t >>= 1;
                }
                if (om(k) != rev) {
                    r.actual = "mismatch at n = " + std::to_string(n) + ", k = " + std::to_string(k);
                    r.pass = false;
                    return;
                }
            }
        }
        r.actual = "exact match";
        r.pass = true;
    });
}

// ---------------------------------------------------------------- criterion 8
void conjecture1(Suite& s) {
    const int n_hi = s.full() ? 10 : 8;
    for (int n = 4; n <= n_hi; ++n) {
        s.check("conjecture1_n" + std::to_string(n), 8, [&](CheckResult& r) {
            Conj1Result res = conjecture1_scan(n);
            r.expected = "d_{b_n} = " + rat_str(res.predicted) + ", argmin b = " +
                         std::to_string(9 << (n - 4));
            r.actual = "d_{b_n} = " + rat_str(res.d_bn) + ", argmin b = " +
                       std::to_string(res.argmin_b);
            r.pass = res.matches && res.argmin_b == (9 << (n - 4));
        });
    }
}

// ---------------------------------------------------------------- criterion 9
void theorem3_values(Suite& s) {
    s.check("theorem3_psi_at_xm", 9, [&](CheckResult& r) {
        r.expected = "psi_{9*2^m}(x_m) = (m+3)/3 for m <= 6";
        for (int m = 0; m <= 6; ++m) {
            const int b = 9 << m;
            Rat x = rat(1, 3);
            for (int i = 1; i <= m; ++i) x += rat(i % 2 ? -1 : 1, 9LL << i);
            Rat v = psi_point(faure_omega(b), x).total;
            if (v != rat(m + 3, 3)) {
                r.actual = "m = " + std::to_string(m) + ": " + rat_str(v);
                r.pass = false;
                return;
            }
        }
        r.actual = "exact match";
        r.pass = true;
    });
}

// --------------------------------------------------------------- criterion 10
void fractional_strict(Suite& s) {
    std::vector<long> primes = s.full() ? std::vector<long>{5, 7, 11, 13}
                                        : std::vector<long>{5, 7};
    for (long p : primes) {
        s.check("fractional_strict_p" + std::to_string(p), 10, [&](CheckResult& r) {
            r.expected = "max_k psi_pi(k/p) < max_k psi_id(k/p), all fractional pi";
            auto idv = psi_breakpoints_scaled(Permutation::identity(static_cast<int>(p)),
                                              PsiKind::total);
            long long id_max = *std::max_element(idv.begin(), idv.end());
            for (long a0 = 1; a0 < p; ++a0)
                for (long a1 = 0; a1 < p; ++a1)
                    for (long a2 = 0; a2 < p; ++a2) {
                        auto v = psi_breakpoints_scaled(fractional_affine(p, a0, a1, a2),
                                                        PsiKind::total);
                        if (*std::max_element(v.begin(), v.end()) >= id_max) {
                            r.actual = "violated at (" + std::to_string(a0) + "," +
                                       std::to_string(a1) + "," + std::to_string(a2) + ")";
                            r.pass = false;
                            return;
                        }
                    }
            r.actual = "strict for all " + std::to_string((p - 1) * p * p) + " members";
            r.pass = true;
        });
    }
}

// --------------------------------------------------------------- criterion 11
void carlitz_partner_check(Suite& s) {
    s.check("carlitz_partner_200", 11, [&](CheckResult& r) {
        r.expected = "pi == tau off {X1, X2}, swapped there; 200 tuples";
        std::mt19937 rng(4242);
        std::vector<long> primes{5, 7, 11, 13, 17, 19, 23, 29, 31};
        for (int t = 0; t < 200; ++t) {
            long p = primes[rng() % primes.size()];
            long a0 = 1 + static_cast<long>(rng() % (p - 1));
            long a1 = static_cast<long>(rng() % p);
            long a2 = 1 + static_cast<long>(rng() % (p - 1));
            auto pr = carlitz_partner(p, a0, a1, a2);
            Permutation pi = fractional_affine(p, a0, a1, a2);
            Permutation ta = carlitz2(p, pr.A0, pr.A1, pr.A2, 0);
            for (long x = 0; x < p; ++x) {
                int want = x == pr.X1   ? ta(static_cast<int>(pr.X2))
                           : x == pr.X2 ? ta(static_cast<int>(pr.X1))
                                        : ta(static_cast<int>(x));
                if (pi(static_cast<int>(x)) != want) {
                    r.actual = "violated for p=" + std::to_string(p) + " (" + std::to_string(a0) +
                               "," + std::to_string(a1) + "," + std::to_string(a2) + ")";
                    r.pass = false;
                    return;
                }
            }
        }
        r.actual = "relation holds";
        r.pass = true;
    });
}

// --------------------------------------------------------------- criterion 12
void klp_bounds(Suite& s) {
    auto run_batch = [&](CheckResult& r, unsigned seed, int count) {
        r.expected = "S/3 + T/48 - 4 <= max D* <= S/3 + 2T/9 + 56/9";
        std::mt19937 rng(seed);
        const Permutation id2 = Permutation::identity(2), t2 = tau(2);
        for (int t = 0; t < count; ++t) {
            std::vector<Permutation> prefix;
            for (int j = 0; j < 10; ++j) prefix.push_back(rng() % 2 ? id2 : t2);
            KlpReport rep = klp_check(prefix, 10);
            if (!rep.lower_ok || !rep.upper_ok) {
                std::string bits;
                for (auto& p : prefix) bits += p == t2 ? 't' : 'i';
                r.actual = "violated for prefix " + bits + ": max D* = " + rat_str(rep.max_dstar);
                r.pass = false;
                return;
            }
        }
        r.actual = "both inequalities hold";
        r.pass = true;
    };
    s.check("klp_bounds_m10", 12, [&](CheckResult& r) { run_batch(r, 777, 25); });
    if (s.full())
        s.check("klp_bounds_m10_extended", 12, [&](CheckResult& r) { run_batch(r, 778, 75); });
}

// --------------------------------------------------------------- criterion 13
void hammersley_cm(Suite& s) {
    const long long cap = s.full() ? 3125 : 625;
    for (int b : {2, 3, 5}) {
        s.check("hammersley_cm_b" + std::to_string(b), 13, [&](CheckResult& r) {
            r.expected = "c_m in [0, 2] for all vectors";
            std::mt19937 rng(9000u + static_cast<unsigned>(b));
            for (int m = 1;; ++m) {
                long long N = 1;
                for (int i = 0; i < m; ++i) N *= b;
                if (N > cap) break;
                std::vector<std::vector<Permutation>> vecs;
                for (int t = 0; t < 3; ++t) {
                    std::vector<Permutation> v;
                    for (int j = 0; j < m; ++j) v.push_back(random_perm(b, rng, false));
                    vecs.push_back(std::move(v));
                }
                vecs.push_back(itau_vec(b, m));
                for (const auto& v : vecs) {
                    HammersleySpec spec{b, m, v};
                    Rat term = star_formula_term(spec);
                    Rat star = brute_star_2d(hammersley_points(spec));
                    Rat cm = star - term;
                    if (cm < 0 || cm > 2) {
                        r.actual = "c_m = " + rat_str(cm) + " at b = " + std::to_string(b) +
                                   ", m = " + std::to_string(m);
                        r.pass = false;
                        return;
                    }
                }
            }
            r.actual = "all gaps inside [0, 2]";
            r.pass = true;
        });
    }
}

// --------------------------------------------------------------- criterion 14
void fibonacci_table(Suite& s) {
    struct Row {
        int n;
        const char *lo, *hi;
    };
    for (const Row& row : {Row{8, "0.4269", "0.4693"}, Row{9, "0.4382", "0.4588"},
                           Row{10, "0.4159", "0.4538"}}) {
        s.check("fibonacci_table_n" + std::to_string(row.n), 14, [&](CheckResult& r) {
            r.expected = std::string(row.lo) + " <= s < " + row.hi;
            Conj2Result res = conjecture2_eval(row.n);
            std::string lo = floor4(res.s_lower.lo), hi = ceil4(res.s_upper.hi);
            r.actual = lo + " <= s <= " + hi + (res.argmax_at_z ? ", argmax at z(n-2)/p"
                                                                : ", argmax NOT at z(n-2)/p");
            r.pass = lo == row.lo && hi == row.hi && res.argmax_at_z;
        });
    }
}

// --------------------------------------------------------------- criterion 15
void search_completeness(Suite& s) {
    std::vector<int> bases = s.full() ? std::vector<int>{5, 6, 7, 8} : std::vector<int>{5, 6};
    for (int b : bases) {
        s.check("search_completeness_b" + std::to_string(b), 15, [&](CheckResult& r) {
            r.expected = "pruned tree == naive filter, 3 thresholds";
            for (const Rat& T : {rat(9, 8), rat(13, 10), rat(3, 2)}) {
                SearchConfig cfg{b, T, false, true, false, 500000000, false};
                SearchResult res = search(cfg);
                std::vector<std::vector<int>> got;
                for (auto& sv : res.survivors) got.push_back(sv.perm.image());
                std::sort(got.begin(), got.end());
                std::vector<std::vector<int>> want;
                std::vector<int> img(static_cast<size_t>(b));
                for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = i;
                do {
                    if (max_psi(Permutation(img)) < T) want.push_back(img);
                } while (std::next_permutation(img.begin(), img.end()));
                if (got != want) {
                    r.actual = "set mismatch at T = " + rat_str(T) + " (" +
                               std::to_string(got.size()) + " vs " + std::to_string(want.size()) +
                               ")";
                    r.pass = false;
                    return;
                }
            }
            r.actual = "exact set equality";
            r.pass = true;
        });
    }
}

// --------------------------------------------------------------- criterion 16
void lemma_identities(Suite& s) {
    s.check("intrication_identity", 16, [&](CheckResult& r) {
        r.expected = "psi_{bc}(x) = psi_b(cx) + psi_c(x), >= 100 cases";
        std::mt19937 rng(31337);
        for (auto [b, c] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{2, 9}}) {
            for (int t = 0; t < 34; ++t) {
                Permutation sb = random_perm(b, rng, false), sc = random_perm(c, rng, false);
                PsiTriple big = psi(intricate(sb, sc)), pb = psi(sb), pc = psi(sc);
                for (int k = 0; k < b * c; ++k) {
                    Rat x = rat(k, static_cast<long long>(b) * c);
                    if (big.total.eval(x) != pb.total.eval(Rat(c) * x) + pc.total.eval(x)) {
                        r.actual = "violated at bases (" + std::to_string(b) + "," +
                                   std::to_string(c) + ")";
                        r.pass = false;
                        return;
                    }
                }
            }
        }
        r.actual = "exact at every breakpoint";
        r.pass = true;
    });
    s.check("symmetry_identity", 16, [&](CheckResult& r) {
        r.expected = "psi invariant under shift/reflect, >= 100 cases";
        std::mt19937 rng(606);
        for (int t = 0; t < 100; ++t) {
            int b = 2 + static_cast<int>(rng() % 11);
            Permutation sigma = random_perm(b, rng, false);
            PsiTriple base = psi(sigma);
            int a = 1 + static_cast<int>(rng() % (b - 1));
            if (psi(shift(sigma, a)).total != base.total ||
                psi(reflect(sigma)).total != base.total) {
                r.actual = "violated for " + sigma.str();
                r.pass = false;
                return;
            }
        }
        r.actual = "piece lists identical";
        r.pass = true;
    });
    s.check("swapping_identity", 16, [&](CheckResult& r) {
        r.expected = "psi^{tau o sigma, +-} = psi^{sigma, -+}, >= 100 cases";
        std::mt19937 rng(707);
        for (int b : {3, 5, 12}) {
            for (int t = 0; t < 34; ++t) {
                Permutation sigma = random_perm(b, rng, false);
                PsiTriple a = psi(sigma), c = psi(compose(tau(b), sigma));
                if (c.plus != a.minus || c.minus != a.plus) {
                    r.actual = "violated for " + sigma.str();
                    r.pass = false;
                    return;
                }
            }
        }
        r.actual = "piece lists swap exactly";
        r.pass = true;
    });
}

}  // namespace

std::vector<CheckResult> run(const Options& opts) {
    Suite s{opts.profile, opts.progress, {}};
    theoreme6(s);
    table1_s2(s);
    oracle_equivalence(s);
    sigma36_bracket(s);
    sigma60_checks(s);
    sigma12_bracket(s);
    omega_construction(s);
    conjecture1(s);
    theorem3_values(s);
    fractional_strict(s);
    carlitz_partner_check(s);
    klp_bounds(s);
    hammersley_cm(s);
    fibonacci_table(s);
    search_completeness(s);
    lemma_identities(s);
    return std::move(s.results);
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::string criterion_summary(const std::vector<CheckResult>& results) {
    std::map<int, std::pair<int, int>> agg;  // criterion -> (pass, total)
    std::map<int, double> secs;
    for (const auto& r : results) {
        agg[r.criterion].second++;
        if (r.pass) agg[r.criterion].first++;
        secs[r.criterion] += r.seconds;
    }
    std::ostringstream out;
    for (const auto& [crit, pt] : agg) {
        out << (pt.first == pt.second ? "PASS" : "FAIL") << " criterion " << crit << "  ("
            << pt.first << "/" << pt.second << " checks, " << secs[crit] << " s)\n";
    }
    return out.str();
}

std::string to_json(const std::vector<CheckResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"criterion", r.criterion},
                       {"expected", r.expected},
                       {"actual", r.actual},
                       {"pass", r.pass},
                       {"seconds", r.seconds}});
    }
    return nlohmann::json{{"checks", arr}, {"all_pass", all_pass(results)}}.dump(2);
}

}  // namespace vdc::verify
