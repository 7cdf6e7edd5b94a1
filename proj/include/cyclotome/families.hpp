#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclotome/code.hpp"
#include "cyclotome/gf.hpp"

namespace cyclotome {

// The seven t-families.  Each fixes t (and its preconditions on p, m, r) so
// that C_p(0, s, t) with s = (p^m + 1)/2 has parameters
// [p^m - 1, p^m - 2m - 2, 4].
enum class FamilyId { T34, T37, T311, T43, T45, T47, T49 };

std::string family_id_name(FamilyId id);
std::optional<FamilyId> family_id_from_name(const std::string& name);

struct FamilySpec {
    FamilyId id;
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::optional<std::uint32_t> r; // absent where the family has no r
    std::uint64_t s = 0;            // (p^m + 1) / 2
    std::uint64_t t = 0;            // per-family derivation
    bool remark2 = false;           // T37: t lies in C_{p^m-2} (must be true)
};

// t formulas, each gated by the family's preconditions
// (precondition_violated names the failing clause):
//   T34: t = (p^m-1)/2 + p^r + 1; p >= 5, m = 0 (mod 4), r = 0 or gcd(r,m) = 1
//   T37: t solves (p^m-2) t = p^r (mod p^m-1); m = 0 (mod 4)
//   T311: t = r (p^m-1)/4 - 1, r in {1, 3};
//         (p = 1 mod 4, m = 0 mod 4) or (p = 3 mod 4, m = 0 mod 8)
//   T43: t solves 7t = -2*5^r (mod 5^m-1); p = 5, m >= 3 odd; t = 2 (mod 4)
//   T45: t = 5^{m-1} - 3; p = 5, m >= 3 odd, 9 does not divide m
//   T47: t = 5^{(m+1)/2} - 5^{(m-1)/2} + 1; p = 5, m >= 3 odd, gcd(5, m) = 1
//   T49: t = 5^{(m+1)/2} - 3; p = 5, m >= 3 odd, gcd(7, m) = 1
std::uint64_t t_T34(std::uint32_t p, std::uint32_t m, std::uint32_t r);
std::uint64_t t_T37(std::uint32_t p, std::uint32_t m, std::uint32_t r);
std::uint64_t t_T311(std::uint32_t p, std::uint32_t m, std::uint32_t r);
std::uint64_t t_T43(std::uint32_t m, std::uint32_t r);
std::uint64_t t_T45(std::uint32_t m);
std::uint64_t t_T47(std::uint32_t m);
std::uint64_t t_T49(std::uint32_t m);

// Builds a FamilySpec, running the family's precondition gates and deriving
// s and t.  r is required exactly for T34, T37, T311, T43.
FamilySpec make_family(FamilyId id, std::uint32_t p, std::uint32_t m,
                       std::optional<std::uint32_t> r);

// One condition of the three-part criterion for d = 4 over GF(5^m).
struct ConditionVerdict {
    bool holds = false;
    // every solution x (element key) meeting the condition's equation and
    // character constraints; for C1 a solution x = 1 is permitted
    std::vector<Field::elem> solutions;
};

struct ConditionReport {
    ConditionVerdict c1, c2, c3;
    bool all_hold() const { return c1.holds && c2.holds && c3.holds; }
};

// Exhaustive scan of F*_{5^m} for the three character-constrained equations:
//   C1: x^t + (-1)^t (x+3)^t + 3 = 0 with mu(x) = mu(x+3) = +1
//       (holds iff the only solution is x = 1)
//   C2: x^t + (x+3)^t + 3 = 0 with mu(x) = +1, mu(x+3) = -1 (no solution)
//   C3: x^t + (-1)^t (x-3)^t + 3 = 0 with mu(x) = mu(x-3) = -1 (no solution)
// Points with x +- 3 = 0 are excluded from the respective condition (mu = 0
// matches neither constraint).  Requires p = 5 and 1 <= t <= n-1; refuses
// t = 0 (mod 4), for which the criterion is not stated.
ConditionReport check_theorem42(std::uint64_t t, const Field& F, const SearchConfig& cfg = {});

// One pipeline step of verify_family.
struct VerifyStep {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FamilyVerification {
    FamilySpec spec;
    std::vector<VerifyStep> steps;
    DistanceReport distance;
    std::string generator;  // canonical text of g(x)
    std::uint32_t n = 0, k = 0;
    std::uint32_t hamming_bound_d = 0; // diagnostic only
    bool optimal_claim = false;        // d = 4 and (n, k) = (p^m-1, p^m-2m-2)
    bool all_pass = false;
};

// Full pipeline: |C_t| = m, t not in C_s, build C_p(0, s, t) with the
// expected (n, k), distance exactly 4, and (for p = 5) the three-condition
// check.  Any step failure is recorded, never swallowed.
FamilyVerification verify_family(const FamilySpec& spec, const Field& F,
                                 const SearchConfig& cfg = {});

struct FamilyInfo {
    FamilyId id;
    std::string name;
    std::string hypotheses;
    std::string t_formula;
};

std::vector<FamilyInfo> list_families();

} // namespace cyclotome
