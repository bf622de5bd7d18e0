#include <algorithm>
#include <random>

#include "doctest.h"
#include "vdc/catalog.hpp"
#include "vdc/search.hpp"

using namespace vdc;

namespace {
/// reference: filter all b! permutations by max psi < T
std::vector<Permutation> naive_survivors(int b, const Rat& T, bool symmetry) {
    std::vector<int> img(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = i;
    std::vector<Permutation> out;
    do {
        Permutation s(img);
        if (symmetry) {
            if (s(0) != 0) continue;
            if (reflect(s).image() < s.image()) continue;
        }
        if (max_psi(s) < T) out.push_back(s);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<Permutation> perms_of(const SearchResult& r) {
    std::vector<Permutation> out;
    for (const auto& s : r.survivors) out.push_back(s.perm);
    std::sort(out.begin(), out.end(),
              [](const Permutation& a, const Permutation& b) { return a.image() < b.image(); });
    return out;
}
}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("base 3 with T = 1 keeps every permutation") {
    SearchConfig cfg{3, Rat(1), false, true, false, 1000000, false};
    SearchResult r = search(cfg);
    CHECK(r.survivors.size() == 6);
    for (const auto& s : r.survivors) CHECK(s.max_psi == rat(2, 3));
}

TEST_CASE("thresholds at or below (b-1)/b give an empty result") {
    // psi(1/b) = (b-1)/b for every permutation, so nothing survives
    for (int b : {3, 5, 8}) {
        SearchConfig cfg{b, rat(b - 1, b), false, true, false, 1000000, false};
        CHECK(search(cfg).survivors.empty());
    }
}

TEST_CASE("search equals naive enumeration, with and without symmetry") {
    for (int b : {4, 5, 6}) {
        for (Rat T : {rat(9, 8), rat(4, 3), rat(3, 2)}) {
            for (bool sym : {false, true}) {
                SearchConfig cfg{b, T, sym, true, false, 10000000, false};
                auto got = perms_of(search(cfg));
                auto want = naive_survivors(b, T, sym);
                REQUIRE(got.size() == want.size());
                for (size_t i = 0; i < got.size(); ++i) REQUIRE(got[i] == want[i]);
            }
        }
    }
}

TEST_CASE("memoization does not change the survivor set") {
    for (int b : {5, 6, 7}) {
        SearchConfig on{b, rat(7, 5), true, true, false, 50000000, false};
        SearchConfig off = on;
        off.memoize = false;
        SearchResult r_on = search(on), r_off = search(off);
        REQUIRE(perms_of(r_on) == perms_of(r_off));
        CHECK(r_on.memo_hits > 0);
    }
}

TEST_CASE("monotone thresholds nest the survivor sets") {
    SearchConfig small{6, rat(13, 10), true, true, false, 10000000, false};
    SearchConfig big = small;
    big.threshold = rat(3, 2);
    auto s1 = perms_of(search(small)), s2 = perms_of(search(big));
    CHECK(s1.size() <= s2.size());
    CHECK(std::includes(s2.begin(), s2.end(), s1.begin(), s1.end(),
                        [](const Permutation& a, const Permutation& b) {
                            return a.image() < b.image();
                        }));
}

TEST_CASE("survivors never prune a valid prefix") {
    // replay prefixes of every survivor: all running values below threshold
    SearchConfig cfg{6, rat(27, 20), true, true, false, 10000000, false};
    for (const auto& sv : search(cfg).survivors) {
        for (int k = 1; k <= 6; ++k) {
            std::vector<int> pref(sv.perm.image().begin(), sv.perm.image().begin() + k);
            auto pp = partial_psi(6, pref);
            for (const Rat& v : pp.values) REQUIRE(v < cfg.threshold);
        }
    }
}

TEST_CASE("the theorem-4 permutation survives a tight base-12 search") {
    Permutation sf = catalog::sigma12_extreme();
    Rat T = max_psi(sf) + rat(1, 100);
    SearchConfig cfg{12, T, true, true, false, 100000000, false};
    SearchResult r = search(cfg);
    REQUIRE(r.complete);
    bool found = false;
    for (const auto& sv : r.survivors) {
        Permutation canon = sv.perm;  // survivors are sigma(0)=0 lex-min reps
        if (canon == sf || reflect(canon) == sf) found = true;
    }
    // sigma_F itself has sigma(0)=0; its class representative must be there
    Permutation rf = reflect(sf);
    Permutation rep = sf.image() < rf.image() ? sf : rf;
    for (const auto& sv : r.survivors) found |= sv.perm == rep;
    CHECK(found);
}

TEST_CASE("budget exhaustion flags the result incomplete") {
    SearchConfig cfg{8, rat(12, 8), true, true, false, 50, false};
    CHECK_FALSE(search(cfg).complete);
}

TEST_CASE("stage-2 ranking via self-intrication") {
    // F_2 via intrication equals the direct two-term sum at every k/b^2
    std::mt19937 rng(47);
    for (int b : {3, 5, 9}) {
        std::vector<int> img(static_cast<size_t>(b));
        for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = i;
        std::shuffle(img.begin(), img.end(), rng);
        Permutation s(img);
        PsiTriple big = psi(intricate(s, s));
        PsiTriple one = psi(s);
        for (int k = 0; k < b * b; ++k) {
            Rat x = rat(k, static_cast<long long>(b) * b);
            REQUIRE(big.total.eval(x) == one.total.eval(x) + one.total.eval(Rat(b) * x));
        }
    }
    // id base 2: max F_2 / 2 = 3/8
    auto ranked = rank_f2({Permutation::identity(2), tau(2)});
    CHECK(*ranked[0].f2_half_max == rat(3, 8));
    CHECK(*ranked[1].f2_half_max == rat(3, 8));
    // ranking is invariant under shift/reflect
    std::vector<int> img{0, 3, 1, 4, 2};
    Permutation s5(img);
    auto a = rank_f2({s5});
    auto b5 = rank_f2({shift(s5, 2)});
    auto c = rank_f2({reflect(s5)});
    CHECK(*a[0].f2_half_max == *b5[0].f2_half_max);
    CHECK(*a[0].f2_half_max == *c[0].f2_half_max);
}

TEST_CASE("stage-2 search output is sorted by the F_2 score") {
    SearchConfig cfg{5, rat(7, 5), true, true, false, 1000000, true};
    SearchResult r = search(cfg);
    REQUIRE(!r.survivors.empty());
    for (size_t i = 1; i < r.survivors.size(); ++i)
        CHECK(*r.survivors[i - 1].f2_half_max <= *r.survivors[i].f2_half_max);
}

TEST_SUITE_END();
