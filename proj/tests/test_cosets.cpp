#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cyclotome/cosets.hpp"
#include "test_util.hpp"

using namespace cyclotome;
using std::uint32_t;
using std::uint64_t;
using std::vector;

TEST_CASE("cosets partition [0, n) and sizes divide m") {
    for (const auto& [p, m] : {std::pair<uint32_t, uint32_t>{5, 2}, {5, 3}, {5, 4}, {7, 4}}) {
        uint64_t n = 1;
        for (uint32_t i = 0; i < m; ++i) n *= p;
        n -= 1;
        std::set<uint64_t> covered;
        uint64_t total = 0;
        for (uint64_t u = 0; u < n; ++u) {
            const CosetView cv = coset(u, p, n);
            REQUIRE(m % cv.size() == 0);
            REQUIRE(cv.rep == cv.members.front());
            REQUIRE(std::is_sorted(cv.members.begin(), cv.members.end()));
            if (u == cv.rep) {
                for (uint64_t v : cv.members) {
                    REQUIRE(covered.insert(v).second); // no overlap between cosets
                }
                total += cv.size();
            } else {
                REQUIRE(covered.count(u) == 1); // already claimed by its rep
            }
        }
        REQUIRE(total == n);
        CHECK(coset(0, p, n).members == vector<uint64_t>{0});
    }
}

TEST_CASE("frozen coset facts at (5, 4) and small n") {
    const CosetView c313 = coset(313, 5, 624);
    CHECK(c313.members == vector<uint64_t>{313, 317, 337, 437});
    CHECK(c313.rep == 313);
    const CosetView c619 = coset(619, 5, 624);
    CHECK(c619.members == vector<uint64_t>{499, 599, 619, 623});
    CHECK(c619.rep == 499);
    CHECK(same_coset(619, 623, 5, 624));
    CHECK(!same_coset(313, 318, 5, 624));
    CHECK(!same_coset(155, 467, 5, 624));
    CHECK(coset(12, 5, 24).members == vector<uint64_t>{12});
    CHECK(coset(630, 5, 624).rep == 6); // u reduced mod n
    CHECK(thrown_code([] { coset(3, 5, 23); }) == errc::bad_modulus);
}

TEST_CASE("size-m criteria never contradict the orbit") {
    for (uint32_t m : {1u, 2u, 3u, 4u}) {
        Field F(5, m);
        for (uint64_t t = 1; t + 1 <= F.n(); ++t) {
            const CosetSizeResult r = coset_size_is_m(t, F);
            const CosetView cv = coset(t, 5, F.n());
            REQUIRE(r.orbit_size == cv.size());
            REQUIRE(r.is_m == (cv.size() == m));
            if (r.reason != SizeReason::direct) {
                // A criterion fired; it must only ever certify the truth.
                REQUIRE(r.is_m);
            }
        }
    }
    Field F(5, 3);
    CHECK(thrown_code([&] { coset_size_is_m(0, F); }) == errc::out_of_range);
    CHECK(thrown_code([&] { coset_size_is_m(F.n(), F); }) == errc::out_of_range);
}

TEST_CASE("gcd closed forms: frozen values and random cross-check") {
    CHECK(gcd_pp1(4, 2, 5) == 26);
    CHECK(gcd_pm1(6, 4, 5) == 24);
    CHECK(gcd_pp1(3, 1, 5) == 2);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<uint64_t> pick(1, 10);
    const uint32_t primes[] = {3, 5, 7};
    for (int trial = 0; trial < 200; ++trial) {
        const uint32_t p = primes[trial % 3];
        const uint64_t h = pick(rng), r = pick(rng), l = pick(rng);
        uint64_t ph = 1, pr = 1, pl = 1;
        for (uint64_t i = 0; i < h; ++i) ph *= p;
        for (uint64_t i = 0; i < r; ++i) pr *= p;
        for (uint64_t i = 0; i < l; ++i) pl *= p;
        CHECK(gcd_pm1(h, r, p) == std::gcd(ph - 1, pr - 1));
        CHECK(gcd_pp1(h, l, p) == std::gcd(ph - 1, pl + 1));
    }
}

TEST_CASE("linear congruence solver") {
    // (p^m - 2) t = p^r (mod n) at (5, 4), r = 1: t = 619.
    const CongruenceSolution s = solve_congruence(623, 5, 624);
    CHECK(s.t == 619);
    CHECK(!s.multiple);
    CHECK(thrown_code([] { solve_congruence(2, 1, 4); }) == errc::no_solution);
    const CongruenceSolution s2 = solve_congruence(2, 2, 4);
    CHECK(s2.t == 1);
    CHECK(s2.multiple);
    // Negative inputs reduce mod n: -1 * t = 5 (mod 624) has t = 619.
    const CongruenceSolution s3 = solve_congruence(-1, 5, 624);
    CHECK(s3.t == 619);
    // Verify a batch of random solvable instances.
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int64_t> pick(-1000, 1000);
    std::uniform_int_distribution<uint64_t> npick(2, 2000);
    for (int trial = 0; trial < 200; ++trial) {
        const uint64_t n = npick(rng);
        const int64_t a = pick(rng);
        const int64_t t_true = pick(rng);
        const int64_t b = static_cast<int64_t>((static_cast<__int128>(a) * t_true) % static_cast<int64_t>(n));
        const CongruenceSolution sol = solve_congruence(a, b, n);
        const uint64_t ua = static_cast<uint64_t>(((a % static_cast<int64_t>(n)) + static_cast<int64_t>(n))) % n;
        const uint64_t ub = static_cast<uint64_t>(((b % static_cast<int64_t>(n)) + static_cast<int64_t>(n))) % n;
        CHECK(static_cast<unsigned __int128>(ua) * sol.t % n == ub);
    }
}

TEST_CASE("s = (p^m + 1)/2 is a self-inverse unit when p^m = 1 (mod 4)") {
    for (const auto& [p, m] : {std::pair<uint32_t, uint32_t>{5, 1},
                               {5, 2},
                               {5, 3},
                               {5, 4},
                               {5, 5},
                               {7, 2},
                               {7, 4}}) {
        Field F(p, m);
        CHECK(s_self_inverse_check(F));
    }
    Field F71(7, 1); // 7 = 3 (mod 4)
    CHECK(thrown_code([&] { s_self_inverse_check(F71); }) == errc::precondition_violated);
    Field F73(7, 3);
    CHECK(thrown_code([&] { s_self_inverse_check(F73); }) == errc::precondition_violated);
}

TEST_CASE("parity screen: even/odd t excluded from C_s by residue class") {
    // Over GF(5^m) with s = (5^m + 1)/2: every member of C_s is odd and is
    // 1 (mod 4) for even m, 3 (mod 4) for odd m.  So: even t is never in C_s;
    // t = 3 (mod 4) is excluded for even m; t = 1 (mod 4) for odd m.
    for (uint32_t m : {2u, 3u, 4u}) {
        Field F(5, m);
        const uint64_t s = (static_cast<uint64_t>(F.q()) + 1) / 2;
        for (uint64_t t = 1; t < F.n(); ++t) {
            const bool screened_even = t % 2 == 0;
            const bool screened_res =
                (m % 2 == 0 && t % 4 == 3) || (m % 2 == 1 && t % 4 == 1);
            if (screened_even || screened_res) REQUIRE(!same_coset(s, t, 5, F.n()));
        }
    }
}
