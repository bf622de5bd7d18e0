#include <random>

#include "doctest.h"
#include "vdc/asym.hpp"
#include "vdc/catalog.hpp"

using namespace vdc;

TEST_SUITE_BEGIN("asym");

TEST_CASE("identity closed forms") {
    CHECK(id_closed_form(3).s_coeff == rat(1, 2));
    CHECK(id_closed_form(2).s_coeff == rat(1, 3));
    CHECK(id_closed_form(12).s_coeff == rat(36, 13));
    CHECK(id_closed_form(3).s_star_swapped_coeff == rat(1, 4));
    CHECK(is_id_shift_or_reflect(Permutation::identity(9)));
    CHECK(is_id_shift_or_reflect(shift(Permutation::identity(9), 4)));
    CHECK(is_id_shift_or_reflect(reflect(shift(Permutation::identity(9), 4))));
    CHECK(is_id_shift_or_reflect(tau(7)));  // tau is a shifted reflection
    CHECK_FALSE(is_id_shift_or_reflect(catalog::sigma12_extreme()));
}

TEST_CASE("identity brackets collapse from cycles and the closed form") {
    for (int b = 2; b <= 14; ++b) {
        AlphaBracket br = alpha_bracket(Permutation::identity(b), 3, 2);
        REQUIRE(br.closed_form);
        REQUIRE(br.lower == br.upper);
        REQUIRE(br.lower == id_closed_form(b).s_coeff);
    }
}

TEST_CASE("bracket upper bounds decrease with n and enclose the lower") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        int b = 3 + static_cast<int>(rng() % 6);
        std::vector<int> img(static_cast<size_t>(b));
        for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = i;
        std::shuffle(img.begin(), img.end(), rng);
        Permutation s(img);
        PsiTriple t = psi(s);
        Rat prev;
        for (int n = 1; n <= 5; ++n) {
            Rat u = f_n_max(t.total, b, n).value / n;
            u.canonicalize();
            if (n > 1) REQUIRE(u <= prev);
            prev = u;
        }
        AlphaBracket br = alpha_bracket(s, 4, 2);
        REQUIRE(br.lower <= br.upper);
    }
}

TEST_CASE("alpha plus/minus brackets") {
    // identity: psi^- vanishes so alpha^- is exactly zero
    auto [p, m] = alpha_pm_bracket(Permutation::identity(5), 3, 2);
    CHECK(m.lower == Rat(0));
    CHECK(m.upper == Rat(0));
    CHECK(p.lower <= p.upper);
    // alpha <= alpha^+ + alpha^- at matched n (subadditivity of sup)
    std::mt19937 rng(37);
    for (int trial = 0; trial < 8; ++trial) {
        int b = 3 + static_cast<int>(rng() % 5);
        std::vector<int> img(static_cast<size_t>(b));
        for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = i;
        std::shuffle(img.begin(), img.end(), rng);
        Permutation s(img);
        PsiTriple t = psi(s);
        for (int n = 1; n <= 3; ++n) {
            Rat tot = f_n_max(t.total, b, n).value;
            Rat pl = f_n_max(t.plus, b, n).value;
            Rat mi = f_n_max(t.minus, b, n).value;
            REQUIRE(tot <= pl + mi);
        }
    }
}

TEST_CASE("star constant of the swapped identity schedule") {
    // s*(Sigma_A^id, b = 3) = (b-1)/(8 log b)
    SBracket sb = s_star_swapped(Permutation::identity(3), 4, 2);
    CHECK(sb.lo == rat(1, 4));
    CHECK(sb.hi == rat(1, 4));
    CHECK(sb.render.lo == doctest::Approx(0.22754).epsilon(1e-4));
}

TEST_CASE("affine discrepancy bound") {
    CHECK(affine_bound(21, 13) == doctest::Approx(3.0 / std::log(3.0)).epsilon(1e-12));
    CHECK(affine_bound(12, 7) == doctest::Approx(3.0 / std::log(3.0)).epsilon(1e-12));
    // 1/p: alpha_max = p
    CHECK(affine_bound(7, 1) == doctest::Approx(8.0 / std::log(8.0)).epsilon(1e-12));
}

TEST_CASE("klp statistics and bounds") {
    const Permutation id2 = Permutation::identity(2), t2 = tau(2);
    std::vector<Permutation> v{t2, id2, t2, id2};
    KlpStats st = klp_stats(v, 4);
    CHECK(st.S == 2);
    CHECK(st.T == 2);
    std::vector<Permutation> all_id(6, id2);
    st = klp_stats(all_id, 6);
    CHECK(st.S == 6);
    CHECK(st.T == 0);
    CHECK_THROWS_AS(klp_stats(std::vector<Permutation>{Permutation::identity(3)}, 1),
                    validation_error);

    std::mt19937 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Permutation> prefix;
        for (int j = 0; j < 8; ++j) prefix.push_back(rng() % 2 ? id2 : t2);
        KlpReport rep = klp_check(prefix, 8);
        REQUIRE(rep.lower_ok);
        REQUIRE(rep.upper_ok);
    }
}

TEST_CASE("conjecture-1 scan rows") {
    Conj1Result r4 = conjecture1_scan(4);
    CHECK(r4.d_bn == rat(5, 3));
    CHECK(r4.matches);
    CHECK(r4.argmin_b == 9);
    CHECK(r4.argmax_b == 15);
    Conj1Result r5 = conjecture1_scan(5);
    CHECK(r5.d_bn == rat(67, 31));
    CHECK(r5.matches);
    CHECK(r5.argmin_b == 18);
    Conj1Result r6 = conjecture1_scan(6);
    CHECK(r6.d_bn == rat(8, 3));
    CHECK(r6.argmin_b == 36);
}

TEST_CASE("theorem-3 bases keep the classical constant") {
    for (int m = 0; m <= 4; ++m) {
        const int b = 9 << m;
        Rat d = omega_max_psi(b);
        CHECK(d == rat(m + 3, 3));
        // (m+3)/(3 log(9 2^m)) <= 1/(3 log 2)
        CHECK(to_double(d) / std::log(static_cast<double>(b)) <= 1.0 / (3 * std::log(2.0)) + 1e-12);
    }
}

TEST_CASE("conjecture-2 evaluation matches the published table") {
    struct Row {
        int n;
        long p;
        double lo, hi;
    };
    for (const Row& row : {Row{8, 21, 0.4269, 0.4693}, Row{9, 34, 0.4382, 0.4588},
                           Row{10, 55, 0.4159, 0.4538}}) {
        Conj2Result r = conjecture2_eval(row.n);
        REQUIRE(r.p == row.p);
        REQUIRE(r.argmax_at_z);
        // outward-rounded 4-decimal renderings match the table
        CHECK(std::floor(r.s_lower.lo * 10000) / 10000 == doctest::Approx(row.lo));
        CHECK(std::ceil(r.s_upper.hi * 10000) / 10000 == doctest::Approx(row.hi));
    }
    // cycle-length-1 consistency F_2q/2q = F_q/q is checked inside (reps=2)
    CHECK_NOTHROW(conjecture2_eval(8, 3));
}

TEST_CASE("record permutations: brackets around the published constants") {
    // base 36: best single cycle hits 46/35 exactly
    Permutation s36 = catalog::sigma36();
    AlphaBracket br = alpha_bracket(s36, 2, 1);
    CHECK(br.lower == rat(46, 35));
    CHECK(br.upper >= rat(46, 35));
}

TEST_SUITE_END();
