#include "cyclotome/cosets.hpp"

#include <algorithm>
#include <numeric>

namespace cyclotome {
namespace {

// n + 1 must be a power of p for the orbit u -> u*p mod n to be well-behaved
// (p invertible mod n guarantees the walk returns to its start).
void require_power_modulus(std::uint32_t p, std::uint64_t n) {
    if (p < 2 || n == 0) fail(errc::bad_modulus, "need p >= 2 and n >= 1");
    std::uint64_t v = n + 1;
    while (v % p == 0) v /= p;
    if (v != 1)
        fail(errc::bad_modulus,
             "n = " + std::to_string(n) + " is not p^m - 1 for p = " + std::to_string(p));
}

} // namespace

CosetView coset(std::uint64_t u, std::uint32_t p, std::uint64_t n) {
    require_power_modulus(p, n);
    u %= n;
    CosetView view;
    std::uint64_t v = u;
    do {
        view.members.push_back(v);
        v = v * p % n;
    } while (v != u);
    std::sort(view.members.begin(), view.members.end());
    view.rep = view.members.front();
    return view;
}

CosetSizeResult coset_size_is_m(std::uint64_t t, const Field& F) {
    const std::uint64_t n = F.n();
    if (t < 1 || t > n - 1)
        fail(errc::out_of_range, "t = " + std::to_string(t) + " outside [1, p^m - 2]");
    CosetSizeResult res;
    res.orbit_size = coset(t, F.p(), n).size();
    res.is_m = res.orbit_size == F.m();

    const std::uint64_t g = std::gcd(t, n);
    if (g > 0 && g < F.p()) {
        res.reason = SizeReason::cond1;
        return res;
    }
    bool cond2 = true;
    std::uint64_t pi = 1;
    for (std::uint32_t i = 1; i < F.m(); ++i) {
        pi *= F.p();
        if (g * std::gcd(pi - 1, n) % n == 0) {
            cond2 = false;
            break;
        }
    }
    res.reason = cond2 ? SizeReason::cond2 : SizeReason::direct;
    return res;
}

bool same_coset(std::uint64_t a, std::uint64_t b, std::uint32_t p, std::uint64_t n) {
    b %= n;
    const CosetView ca = coset(a, p, n);
    return std::binary_search(ca.members.begin(), ca.members.end(), b);
}

std::uint64_t gcd_pm1(std::uint64_t h, std::uint64_t r, std::uint32_t p) {
    std::uint64_t g = std::gcd(h, r);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < g; ++i) v *= p;
    return v - 1;
}

std::uint64_t gcd_pp1(std::uint64_t h, std::uint64_t l, std::uint32_t p) {
    std::uint64_t g = std::gcd(h, l);
    if ((h / g) % 2 == 1) return 2;
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < g; ++i) v *= p;
    return v + 1;
}

CongruenceSolution solve_congruence(std::int64_t a, std::int64_t b, std::uint64_t n) {
    if (n == 0) fail(errc::out_of_range, "modulus must be positive");
    const std::int64_t sn = static_cast<std::int64_t>(n);
    std::uint64_t ua = static_cast<std::uint64_t>((a % sn + sn) % sn);
    std::uint64_t ub = static_cast<std::uint64_t>((b % sn + sn) % sn);
    const std::uint64_t g = std::gcd(ua == 0 ? n : ua, n);
    if (ub % g != 0)
        fail(errc::no_solution, "gcd(a, n) = " + std::to_string(g) + " does not divide b");
    const std::uint64_t n2 = n / g;
    // extended Euclid for (a/g)^{-1} mod n2
    std::int64_t r0 = static_cast<std::int64_t>(n2), r1 = static_cast<std::int64_t>(ua / g % n2);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t qt = r0 / r1;
        std::int64_t r2 = r0 - qt * r1;
        std::int64_t s2 = s0 - qt * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    std::int64_t inv = n2 == 1 ? 0 : ((s0 % static_cast<std::int64_t>(n2)) + static_cast<std::int64_t>(n2)) % static_cast<std::int64_t>(n2);
    CongruenceSolution sol;
    sol.t = n2 == 1 ? 0
                    : static_cast<std::uint64_t>(
                          static_cast<unsigned __int128>(ub / g) * static_cast<std::uint64_t>(inv) % n2);
    sol.multiple = g > 1;
    return sol;
}

bool s_self_inverse_check(const Field& F) {
    if (F.q() % 4 != 1)
        fail(errc::precondition_violated,
             "s^2 = 1 requires p^m = 1 (mod 4), but q = " + std::to_string(F.q()));
    const std::uint64_t n = F.n();
    const std::uint64_t s = (static_cast<std::uint64_t>(F.q()) + 1) / 2;
    return s * s % n == 1 && std::gcd(s, n) == 1;
}

} // namespace cyclotome
