#pragma once

#include <cstdint>
#include <vector>

#include "cyclotome/gf.hpp"

namespace cyclotome {

// p-cyclotomic coset of u modulo n: the orbit of u under multiplication by p.
struct CosetView {
    std::uint64_t rep = 0;                // smallest member
    std::vector<std::uint64_t> members;   // sorted ascending, pairwise distinct
    std::size_t size() const { return members.size(); }
};

// Which criterion established (or failed to establish) the size-m verdict.
enum class SizeReason { cond1, cond2, direct };

struct CosetSizeResult {
    bool is_m = false;          // truth: orbit length == m
    SizeReason reason = SizeReason::direct; // cond1/cond2 when a criterion fired
    std::size_t orbit_size = 0; // the directly computed |C_t|
};

// Orbit of u (taken mod n) under multiplication by p mod n.  n + 1 must be a
// power of p; throws bad_modulus otherwise.
CosetView coset(std::uint64_t u, std::uint32_t p, std::uint64_t n);

// Size-m criteria for C_t, 1 <= t <= p^m - 2 (out_of_range otherwise):
// condition (1) is 0 < gcd(t, n) < p; condition (2) is
// gcd(t,n) * gcd(p^i - 1, n) != 0 (mod n) for all 0 < i < m.  The criteria
// are sufficient, not necessary, so is_m always reports the direct orbit
// length and reason records which criterion fired (direct = neither).
CosetSizeResult coset_size_is_m(std::uint64_t t, const Field& F);

// Whether b lies in the coset of a (both taken mod n).
bool same_coset(std::uint64_t a, std::uint64_t b, std::uint32_t p, std::uint64_t n);

// Closed forms for gcds of p-power combinations: gcd(p^h - 1, p^r - 1) and
// gcd(p^h - 1, p^l + 1).
std::uint64_t gcd_pm1(std::uint64_t h, std::uint64_t r, std::uint32_t p);
std::uint64_t gcd_pp1(std::uint64_t h, std::uint64_t l, std::uint32_t p);

struct CongruenceSolution {
    std::uint64_t t = 0;   // smallest nonnegative solution
    bool multiple = false; // gcd(a, n) > 1: the solution is not unique mod n
};

// Solves a * t = b (mod n); a and b may be negative and are reduced mod n
// first.  Throws no_solution when gcd(a, n) does not divide b.
CongruenceSolution solve_congruence(std::int64_t a, std::int64_t b, std::uint64_t n);

// For p^m = 1 (mod 4): whether s = (p^m + 1)/2 satisfies s^2 = 1 (mod n) and
// gcd(s, n) = 1.  Throws precondition_violated when p^m = 3 (mod 4).
bool s_self_inverse_check(const Field& F);

} // namespace cyclotome
