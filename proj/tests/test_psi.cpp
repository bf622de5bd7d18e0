#include <random>

#include "doctest.h"
#include "vdc/catalog.hpp"
#include "vdc/psi.hpp"

using namespace vdc;

namespace {
Permutation random_perm(int b, std::mt19937& rng) {
    std::vector<int> img(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}
}  // namespace

TEST_SUITE_BEGIN("psi");

TEST_CASE("phi values against the published base-9 table") {
    Permutation om9 = faure_omega(9);
    REQUIRE(om9.image() == std::vector<int>{0, 5, 2, 7, 4, 1, 6, 3, 8});
    // phi_{9,3} on [2/9,3/9) is 6x-1
    PiecewiseAffine f3 = phi(om9, 3);
    CHECK(f3.eval(rat(5, 18)) == Rat(6) * rat(5, 18) - 1);
    // phi_{9,0} == 0, phi_{b,0} == 0 for arbitrary permutations
    CHECK(phi(om9, 0) == PiecewiseAffine::constant(Rat(0)));
    std::mt19937 rng(1);
    for (int t = 0; t < 10; ++t)
        CHECK(phi(random_perm(5, rng), 0) == PiecewiseAffine::constant(Rat(0)));
    // phi_{9,8} = x on [0,1/2]
    PiecewiseAffine f8 = phi(om9, 8);
    for (int k = 0; k <= 4; ++k) CHECK(f8.eval(rat(k, 9)) == rat(k, 9));
    CHECK(f8.eval(rat(1, 2)) == rat(1, 2));
    // canonical form merges collinear pieces; breakpoints stay on the k/b grid
    PiecewiseAffine f1 = phi(om9, 1);
    CHECK(f1.piece_count() <= 9);
    for (auto& pc : f1.pieces()) CHECK(Rat(pc.x0 * 9).get_den() == 1);
    CHECK(f1.eval(rat(1, 18)) == rat(8, 18));
    CHECK(f1.eval(rat(1, 4)) == rat(3, 4));
    CHECK_THROWS_AS(phi(om9, 9), validation_error);
    // phi is continuous but psi's components need not wrap with it
    CHECK(f8.continuous_on_interior());
}

TEST_CASE("psi of omega_9 matches the published pieces") {
    PsiTriple t = psi(faure_omega(9));
    CHECK(t.total.eval(rat(1, 3)) == Rat(1));
    // 3x on [1/4,3/9), -3x+2 on [3/9,2/5)
    CHECK(t.total.eval(rat(7, 24)) == rat(7, 8));
    CHECK(t.total.eval(rat(3, 8)) == rat(7, 8));
    bool seen_quarter = false, seen_twofifth = false;
    for (auto& p : t.total.pieces()) {
        if (p.x0 == rat(1, 4)) seen_quarter = p.slope == 3 && p.icept == 0;
        if (p.x0 == rat(1, 3)) seen_twofifth = p.slope == -3 && p.icept == 2;
    }
    CHECK(seen_quarter);
    CHECK(seen_twofifth);
    auto [mx, arg] = t.total.max_on_unit();
    CHECK(mx == Rat(1));
    CHECK(arg == rat(1, 3));
}

TEST_CASE("identity breakpoint law psi(k/b) = k(b-k)/b") {
    for (int b = 2; b <= 50; ++b) {
        PsiTriple t = psi(Permutation::identity(b));
        for (int k = 1; k < b; ++k)
            REQUIRE(t.total.eval(rat(k, b)) == rat(static_cast<long long>(k) * (b - k), b));
        REQUIRE(t.minus == PiecewiseAffine::constant(Rat(0)));
    }
}

TEST_CASE("sigma60 has vanishing psi minus") {
    PsiTriple t = psi(catalog::sigma60());
    CHECK(t.minus == PiecewiseAffine::constant(Rat(0)));
    CHECK(t.total == t.plus);
}

TEST_CASE("psi triple invariants") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int b = 2 + static_cast<int>(rng() % 11);
        Permutation sigma = random_perm(b, rng);
        PsiTriple t = psi(sigma);
        // total = plus + minus at breakpoints and midpoints
        const auto& ps = t.total.pieces();
        for (size_t i = 0; i < ps.size(); ++i) {
            Rat x = ps[i].x0;
            Rat xm = i + 1 < ps.size() ? Rat((ps[i].x0 + ps[i + 1].x0) / 2)
                                       : Rat((ps[i].x0 + 1) / 2);
            for (const Rat& u : {x, xm}) {
                REQUIRE(t.total.eval(u) == t.plus.eval(u) + t.minus.eval(u));
                REQUIRE(t.plus.eval(u) >= 0);
                REQUIRE(t.minus.eval(u) >= 0);
            }
        }
        REQUIRE(t.total.continuous_on_interior());
        REQUIRE(t.total.wraps_continuously());
        REQUIRE(t.plus.wraps_continuously());
        // near zero: slopes b-1-sigma(0), sigma(0), b-1
        REQUIRE(t.plus.pieces().front().slope == Rat(b - 1 - sigma(0)));
        REQUIRE(t.minus.pieces().front().slope == Rat(sigma(0)));
        REQUIRE(t.total.pieces().front().slope == Rat(b - 1));
        // direct evaluation agrees with the envelope route
        for (int k = 0; k < 2 * b; ++k) {
            Rat x = rat(k, 2 * b);
            PsiPoint pt = psi_point(sigma, x);
            REQUIRE(pt.plus == t.plus.eval(x));
            REQUIRE(pt.minus == t.minus.eval(x));
            REQUIRE(pt.total == t.total.eval(x));
        }
    }
}

TEST_CASE("periodic evaluation of psi") {
    PsiTriple t2 = psi(Permutation::identity(2));
    CHECK(t2.total.eval(rat(5, 4)) == rat(1, 4));
    CHECK(t2.total.eval(rat(1, 2)) == rat(1, 2));
    CHECK(psi(faure_omega(9)).total.eval(Rat(0)) == Rat(0));
}

TEST_CASE("max psi examples") {
    auto [m2, a2] = psi(Permutation::identity(2)).total.max_on_unit();
    CHECK(m2 == rat(1, 2));
    CHECK(a2 == rat(1, 2));
    CHECK(max_psi(faure_omega(7)) == rat(8, 7));
    CHECK(max_psi(faure_omega(9)) == Rat(1));
    // breakpoint scan agrees with the envelope maximum
    std::mt19937 rng(29);
    for (int t = 0; t < 20; ++t) {
        int b = 2 + static_cast<int>(rng() % 11);
        Permutation s = random_perm(b, rng);
        CHECK(max_psi(s) == psi(s).total.max_on_unit().first);
    }
}

TEST_CASE("theorem-3 points: psi at x_m is (m+3)/3") {
    for (int m = 0; m <= 3; ++m) {
        const int b = 9 << m;
        Rat x = rat(1, 3);
        for (int i = 1; i <= m; ++i) x += rat(i % 2 ? -1 : 1, 9LL << i);
        x.canonicalize();
        CHECK(psi_point(faure_omega(b), x).total == rat(m + 3, 3));
    }
}

TEST_CASE("f_n_max") {
    Permutation id2 = Permutation::identity(2);
    SUBCASE("n = 1 reduces to max psi") {
        auto r = f_n_max(id2, 1);
        CHECK(r.value == rat(1, 2));
        CHECK(r.argmax == std::vector<int>{1});
    }
    SUBCASE("base-2 identity F_2") {
        auto r = f_n_max(id2, 2);
        CHECK(r.value == rat(3, 2) / 2);  // max F_2 = 3/4
        CHECK(r.argmax == std::vector<int>{0, 1});  // smallest argmax 1/4
    }
    SUBCASE("monotone deflation of max F_n / n, base-3 identity") {
        Permutation id3 = Permutation::identity(3);
        Rat prev;
        for (int n = 1; n <= 6; ++n) {
            Rat v = f_n_max(id3, n).value / n;
            v.canonicalize();
            if (n > 1) REQUIRE(v <= prev);
            prev = v;
        }
    }
    SUBCASE("branch and bound equals exhaustive") {
        std::mt19937 rng(5);
        for (int t = 0; t < 8; ++t) {
            int b = 2 + static_cast<int>(rng() % 4);
            Permutation s = random_perm(b, rng);
            for (int n = 1; n <= 3; ++n) {
                auto ex = f_n_max(s, n, FnMode::exhaustive);
                auto bb = f_n_max(s, n, FnMode::branch_and_bound);
                REQUIRE(ex.value == bb.value);
            }
        }
    }
    SUBCASE("budget errors") {
        CHECK_THROWS_AS(f_n_max(id2, 10, FnMode::exhaustive, PsiKind::total, 100),
                        resource_error);
    }
}

TEST_CASE("f_n_eval_periodic") {
    Permutation id2 = Permutation::identity(2);
    CHECK(f_n_eval_periodic(id2, DigitVector{2, {0, 1}}, 3) == rat(1, 3));
    Permutation id3 = Permutation::identity(3);
    // the half-point digit (b-1)/2 pins alpha for odd bases
    CHECK(f_n_eval_periodic(id3, DigitVector{3, {1}}, 4) == rat(1, 2));
    CHECK(f_n_eval_periodic(id3, DigitVector{3, {0, 0, 0}}, 2) == Rat(0));
    CHECK_THROWS_AS(f_n_eval_periodic(id3, DigitVector{3, {3}}, 1), validation_error);
}

TEST_CASE("partial psi") {
    SUBCASE("prefix {0} has slope b-1 on [0,1/b)") {
        for (int b : {3, 7, 12}) {
            auto pp = partial_psi(b, {0});
            REQUIRE(pp.pieces.size() == 1);
            CHECK(pp.pieces.front().slope == Rat(b - 1));
            CHECK(pp.values.back() == rat(b - 1, b));
        }
    }
    SUBCASE("full prefix agrees with psi everywhere") {
        std::mt19937 rng(41);
        for (int t = 0; t < 10; ++t) {
            int b = 2 + static_cast<int>(rng() % 8);
            Permutation s = random_perm(b, rng);
            auto pp = partial_psi(b, s.image());
            PsiTriple ps = psi(s);
            REQUIRE(pp.pieces == ps.total.pieces());
            for (int k = 1; k <= b; ++k) REQUIRE(pp.values[static_cast<size_t>(k - 1)] ==
                                                 psi_point(s, rat(k, b)).total);
        }
    }
    SUBCASE("the end value depends only on the prefix set") {
        std::mt19937 rng(43);
        const int b = 12;
        for (int t = 0; t < 100; ++t) {
            int k = 1 + static_cast<int>(rng() % b);
            std::vector<int> all(b);
            for (int i = 0; i < b; ++i) all[static_cast<size_t>(i)] = i;
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> pref(all.begin(), all.begin() + k);
            std::vector<int> shuf = pref;
            std::shuffle(shuf.begin(), shuf.end(), rng);
            REQUIRE(partial_psi(b, pref).values.back() == partial_psi(b, shuf).values.back());
        }
    }
    CHECK_THROWS_AS(partial_psi(5, {1, 1}), validation_error);
}

TEST_CASE("intrication identity for psi") {
    std::mt19937 rng(53);
    for (auto [b, c] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{2, 9}}) {
        for (int t = 0; t < 34; ++t) {
            Permutation s = random_perm(b, rng), u = random_perm(c, rng);
            PsiTriple big = psi(intricate(s, u));
            PsiTriple ps = psi(s), pu = psi(u);
            for (int k = 0; k < b * c; ++k) {
                Rat x = rat(k, b * c);
                REQUIRE(big.total.eval(x) == ps.total.eval(Rat(c) * x) + pu.total.eval(x));
            }
        }
    }
}

TEST_CASE("swapping identity: composition with tau on the left swaps psi+-") {
    std::mt19937 rng(59);
    for (int b : {3, 5, 12}) {
        for (int t = 0; t < 34; ++t) {
            Permutation s = random_perm(b, rng);
            Permutation swapped = compose(tau(b), s);  // tau_b o sigma, as in the swap schedule
            PsiTriple a = psi(s), c = psi(swapped);
            REQUIRE(c.plus == a.minus);
            REQUIRE(c.minus == a.plus);
        }
    }
    // the other composition order does not satisfy the identity in general
    Permutation s0({0, 2, 1});
    CHECK(psi(compose(s0, tau(3))).plus != psi(s0).minus);
}

TEST_CASE("symmetry: shift and reflect leave psi unchanged as a function") {
    std::mt19937 rng(61);
    for (int t = 0; t < 100; ++t) {
        int b = 2 + static_cast<int>(rng() % 11);
        Permutation s = random_perm(b, rng);
        PsiTriple base = psi(s);
        int a = 1 + static_cast<int>(rng() % (b - 1));
        REQUIRE(psi(shift(s, a)).total == base.total);
        REQUIRE(psi(reflect(s)).total == base.total);
    }
}

TEST_CASE("identity dominates all permutations pointwise") {
    std::mt19937 rng(67);
    for (int b = 2; b <= 12; ++b) {
        PsiTriple id = psi(Permutation::identity(b));
        for (int t = 0; t < 10; ++t) {
            Permutation s = random_perm(b, rng);
            PsiTriple ps = psi(s);
            for (const auto& piece : ps.total.pieces())
                REQUIRE(ps.total.eval(piece.x0) <= id.total.eval(piece.x0));
            for (int k = 0; k < b; ++k)
                REQUIRE(ps.total.eval(rat(k, b)) <= id.total.eval(rat(k, b)));
        }
    }
}

TEST_CASE("breakpoint bound k(1-k/b) with equality iff a circular run") {
    // exhaustive over all permutations for b <= 8
    for (int b = 2; b <= 8; ++b) {
        std::vector<int> img(static_cast<size_t>(b));
        for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = i;
        do {
            Permutation s(img);
            auto vals = psi_breakpoints_scaled(s, PsiKind::total);
            for (int k = 1; k < b; ++k) {
                long long bound = static_cast<long long>(k) * (b - k);
                REQUIRE(vals[static_cast<size_t>(k)] <= bound);
                // circular run test: {sigma(0..k-1)} == {a+1,...,a+k} mod b
                std::vector<char> in(static_cast<size_t>(b), 0);
                for (int i = 0; i < k; ++i) in[static_cast<size_t>(s(i))] = 1;
                bool run = false;
                for (int a = 0; a < b && !run; ++a) {
                    bool ok = true;
                    for (int j = 1; j <= k; ++j) ok &= in[static_cast<size_t>((a + j) % b)];
                    run = ok;
                }
                REQUIRE((vals[static_cast<size_t>(k)] == bound) == run);
            }
        } while (std::next_permutation(img.begin(), img.end()));
    }
}

TEST_SUITE_END();
