#include "cyclotome/families.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "cyclotome/cosets.hpp"
#include "cyclotome/kernels.hpp"

namespace cyclotome {
namespace {

bool is_prime_u32(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint32_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t e) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < e; ++i) v *= base;
    return v;
}

[[noreturn]] void gate(const std::string& family, const std::string& clause) {
    fail(errc::precondition_violated, family + ": " + clause);
}

// Common gates for the section-4 families: p = 5 implicitly, m odd and at
// least 3 (t formulas degenerate below that).
void gate_sec4(const std::string& family, std::uint32_t m) {
    if (m % 2 != 1) gate(family, "m must be odd, got m = " + std::to_string(m));
    if (m < 3) gate(family, "m must be >= 3, got m = " + std::to_string(m));
}

} // namespace

std::string family_id_name(FamilyId id) {
    switch (id) {
        case FamilyId::T34: return "T34";
        case FamilyId::T37: return "T37";
        case FamilyId::T311: return "T311";
        case FamilyId::T43: return "T43";
        case FamilyId::T45: return "T45";
        case FamilyId::T47: return "T47";
        case FamilyId::T49: return "T49";
    }
    return "?";
}

std::optional<FamilyId> family_id_from_name(const std::string& name) {
    for (FamilyId id : {FamilyId::T34, FamilyId::T37, FamilyId::T311, FamilyId::T43, FamilyId::T45,
                        FamilyId::T47, FamilyId::T49})
        if (family_id_name(id) == name) return id;
    return std::nullopt;
}

std::uint64_t t_T34(std::uint32_t p, std::uint32_t m, std::uint32_t r) {
    if (!is_prime_u32(p) || p < 5) gate("T34", "p must be a prime >= 5");
    if (m % 4 != 0) gate("T34", "m must be divisible by 4, got m = " + std::to_string(m));
    if (r > m - 1) gate("T34", "r must lie in [0, m-1]");
    if (r != 0 && std::gcd(r, m) != 1) gate("T34", "r must be 0 or coprime to m");
    const std::uint64_t q = pow_u64(p, m);
    return (q - 1) / 2 + pow_u64(p, r) + 1;
}

std::uint64_t t_T37(std::uint32_t p, std::uint32_t m, std::uint32_t r) {
    if (!is_prime_u32(p) || p < 3) gate("T37", "p must be an odd prime");
    if (m % 4 != 0) gate("T37", "m must be divisible by 4, got m = " + std::to_string(m));
    if (r > m - 1) gate("T37", "r must lie in [0, m-1]");
    const std::uint64_t n = pow_u64(p, m) - 1;
    // (p^m - 2) t = p^r (mod p^m - 1); the coefficient is -1 mod n, so the
    // solution is unique.
    return solve_congruence(static_cast<std::int64_t>(n - 1),
                            static_cast<std::int64_t>(pow_u64(p, r) % n), n)
        .t;
}

std::uint64_t t_T311(std::uint32_t p, std::uint32_t m, std::uint32_t r) {
    if (!is_prime_u32(p) || p < 3) gate("T311", "p must be an odd prime");
    if (r != 1 && r != 3) gate("T311", "r must be 1 or 3, got r = " + std::to_string(r));
    const bool ok = (p % 4 == 1 && m % 4 == 0) || (p % 4 == 3 && m % 8 == 0);
    if (!ok)
        gate("T311",
             "need p = 1 (mod 4) with m = 0 (mod 4), or p = 3 (mod 4) with m = 0 (mod 8)");
    const std::uint64_t n = pow_u64(p, m) - 1;
    return static_cast<std::uint64_t>(r) * (n / 4) - 1;
}

std::uint64_t t_T43(std::uint32_t m, std::uint32_t r) {
    gate_sec4("T43", m);
    if (r > m - 1) gate("T43", "r must lie in [0, m-1]");
    const std::uint64_t n = pow_u64(5, m) - 1;
    const std::uint64_t t =
        solve_congruence(7, -2 * static_cast<std::int64_t>(pow_u64(5, r) % n), n).t;
    if (t % 4 != 2)
        gate("T43", "solved t = " + std::to_string(t) + " is not 2 (mod 4) — internal inconsistency");
    return t;
}

std::uint64_t t_T45(std::uint32_t m) {
    gate_sec4("T45", m);
    if (m % 9 == 0) gate("T45", "9 must not divide m");
    return pow_u64(5, m - 1) - 3;
}

std::uint64_t t_T47(std::uint32_t m) {
    gate_sec4("T47", m);
    if (m % 5 == 0) gate("T47", "m must be coprime to 5");
    return pow_u64(5, (m + 1) / 2) - pow_u64(5, (m - 1) / 2) + 1;
}

std::uint64_t t_T49(std::uint32_t m) {
    gate_sec4("T49", m);
    if (m % 7 == 0) gate("T49", "m must be coprime to 7");
    return pow_u64(5, (m + 1) / 2) - 3;
}

FamilySpec make_family(FamilyId id, std::uint32_t p, std::uint32_t m,
                       std::optional<std::uint32_t> r) {
    const bool needs_r =
        id == FamilyId::T34 || id == FamilyId::T37 || id == FamilyId::T311 || id == FamilyId::T43;
    if (needs_r && !r) gate(family_id_name(id), "this family requires r");
    if (!needs_r && r) gate(family_id_name(id), "this family takes no r");

    FamilySpec spec;
    spec.id = id;
    spec.m = m;
    spec.r = r;
    switch (id) {
        case FamilyId::T34:
            spec.p = p;
            spec.t = t_T34(p, m, *r);
            break;
        case FamilyId::T37:
            spec.p = p;
            spec.t = t_T37(p, m, *r);
            break;
        case FamilyId::T311:
            spec.p = p;
            spec.t = t_T311(p, m, *r);
            break;
        case FamilyId::T43:
            spec.p = 5;
            spec.t = t_T43(m, *r);
            break;
        case FamilyId::T45:
            spec.p = 5;
            spec.t = t_T45(m);
            break;
        case FamilyId::T47:
            spec.p = 5;
            spec.t = t_T47(m);
            break;
        case FamilyId::T49:
            spec.p = 5;
            spec.t = t_T49(m);
            break;
    }
    if (spec.p == 5 && p != 0 && p != 5 &&
        (id == FamilyId::T43 || id == FamilyId::T45 || id == FamilyId::T47 || id == FamilyId::T49))
        gate(family_id_name(id),
             "this family is stated for p = 5 only, got p = " + std::to_string(p));

    const std::uint64_t q = pow_u64(spec.p, m);
    spec.s = (q + 1) / 2;
    if (id == FamilyId::T37) spec.remark2 = same_coset(q - 2, spec.t, spec.p, q - 1);
    return spec;
}

ConditionReport check_theorem42(std::uint64_t t, const Field& F, const SearchConfig& cfg) {
    if (F.p() != 5)
        fail(errc::precondition_violated, "the three-condition criterion is stated over GF(5^m)");
    const std::uint32_t n = F.n();
    if (t < 1 || t > n - 1) fail(errc::out_of_range, "t must lie in [1, n-1]");
    if (t % 4 == 0)
        fail(errc::precondition_violated,
             "criterion is stated for t = 1, 2 or 3 (mod 4); t = " + std::to_string(t) +
                 " = 0 (mod 4) is outside it");

    const bool t_odd = (t % 2) == 1;
    // x^t over all x = omega^i, and the shifted arguments x + 3, x - 3
    // (x - 3 = x + 2 over GF(5)).
    const std::vector<std::uint32_t> xt = power_column(F, static_cast<std::uint32_t>(t % n), 0, cfg);
    auto add_const = kernels::get_add_base_const(cfg.force_scalar_kernels);
    auto gather = kernels::get_gather(cfg.force_scalar_kernels);
    std::vector<std::uint32_t> xp3(n), xm3(n), lp3(n), lm3(n);
    add_const(F.antilog_table(), 3, 5, xp3.data(), n);
    add_const(F.antilog_table(), 2, 5, xm3.data(), n);
    // log gathers hit the sentinel at the single index where x +- 3 = 0;
    // those indices are skipped below before the logs are used.
    gather(F.log_table(), xp3.data(), lp3.data(), n);
    gather(F.log_table(), xm3.data(), lm3.data(), n);

    const Field::elem three = 3;
    const std::uint32_t workers =
        cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<Field::elem>> sol1(workers), sol2(workers), sol3(workers);

    auto scan = [&](std::uint32_t worker, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint32_t i = static_cast<std::uint32_t>(lo); i < hi; ++i) {
            const Field::elem x = F.antilog_table()[i];
            const bool mu_x_plus = (i & 1u) == 0;
            const Field::elem xt_i = xt[i];
            // C1 / C2: argument x + 3
            if (xp3[i] != 0) {
                const bool mu_p3_plus = (lp3[i] & 1u) == 0;
                const std::uint64_t e = static_cast<std::uint64_t>(lp3[i]) * t % n;
                const Field::elem p3t = F.antilog_table()[e];
                if (mu_x_plus && mu_p3_plus) {
                    const Field::elem signed_p3t = t_odd ? F.neg(p3t) : p3t;
                    if (F.add(F.add(xt_i, signed_p3t), three) == 0) sol1[worker].push_back(x);
                }
                if (mu_x_plus && !mu_p3_plus) {
                    if (F.add(F.add(xt_i, p3t), three) == 0) sol2[worker].push_back(x);
                }
            }
            // C3: argument x - 3
            if (xm3[i] != 0 && !mu_x_plus) {
                const bool mu_m3_plus = (lm3[i] & 1u) == 0;
                if (!mu_m3_plus) {
                    const std::uint64_t e = static_cast<std::uint64_t>(lm3[i]) * t % n;
                    const Field::elem m3t = F.antilog_table()[e];
                    const Field::elem signed_m3t = t_odd ? F.neg(m3t) : m3t;
                    if (F.add(F.add(xt_i, signed_m3t), three) == 0) sol3[worker].push_back(x);
                }
            }
        }
    };
    if (workers <= 1) {
        scan(0, 0, n);
    } else {
        std::vector<std::thread> pool;
        for (std::uint32_t w = 0; w < workers; ++w) {
            std::uint64_t lo = static_cast<std::uint64_t>(n) * w / workers;
            std::uint64_t hi = static_cast<std::uint64_t>(n) * (w + 1) / workers;
            pool.emplace_back(scan, w, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    ConditionReport rep;
    auto collect = [&](std::vector<std::vector<Field::elem>>& per_worker) {
        std::vector<Field::elem> all;
        for (auto& v : per_worker) all.insert(all.end(), v.begin(), v.end());
        std::sort(all.begin(), all.end());
        return all;
    };
    rep.c1.solutions = collect(sol1);
    rep.c2.solutions = collect(sol2);
    rep.c3.solutions = collect(sol3);
    rep.c1.holds = std::all_of(rep.c1.solutions.begin(), rep.c1.solutions.end(),
                               [](Field::elem x) { return x == 1; });
    rep.c2.holds = rep.c2.solutions.empty();
    rep.c3.holds = rep.c3.solutions.empty();
    return rep;
}

FamilyVerification verify_family(const FamilySpec& spec, const Field& F, const SearchConfig& cfg) {
    if (F.p() != spec.p || F.m() != spec.m)
        fail(errc::precondition_violated, "field does not match the family's (p, m)");
    FamilyVerification out;
    out.spec = spec;
    const std::uint32_t n = F.n();
    const std::uint32_t m = F.m();

    {
        VerifyStep step{"coset-size", false, ""};
        const CosetSizeResult rs = coset_size_is_m(spec.t, F);
        step.pass = rs.is_m;
        step.detail = "|C_t| = " + std::to_string(rs.orbit_size) + " (criterion: " +
                      (rs.reason == SizeReason::cond1   ? "cond1"
                       : rs.reason == SizeReason::cond2 ? "cond2"
                                                        : "direct") +
                      ")";
        out.steps.push_back(step);
    }
    {
        VerifyStep step{"t-not-in-Cs", false, ""};
        step.pass = !same_coset(spec.s, spec.t, spec.p, n);
        step.detail = step.pass ? "t lies outside C_s" : "t lies inside C_s";
        out.steps.push_back(step);
    }

    CyclicCode code = build_code(F, {0, spec.s, spec.t});
    out.n = code.n;
    out.k = code.k;
    out.generator = format_poly(code.gen.g);
    {
        VerifyStep step{"parameters", false, ""};
        const std::uint64_t expect_k = static_cast<std::uint64_t>(F.q()) - 2 * m - 2;
        step.pass = code.k == expect_k && code.gen.collapsed.empty();
        step.detail = "[" + std::to_string(code.n) + ", " + std::to_string(code.k) +
                      "], expected k = " + std::to_string(expect_k);
        out.steps.push_back(step);
    }
    {
        VerifyStep step{"distance", false, ""};
        out.distance = min_distance_upto4(code, cfg);
        const bool valid_witness = out.distance.witness &&
                                   witness_is_valid(code, *out.distance.witness);
        step.pass = out.distance.exact && out.distance.d == 4 && valid_witness;
        step.detail = "d = " + out.distance.verdict() +
                      (valid_witness ? ", witness re-verified" : "");
        out.steps.push_back(step);
    }
    if (spec.p == 5) {
        VerifyStep step{"theorem42", false, ""};
        const ConditionReport rep = check_theorem42(spec.t, F, cfg);
        step.pass = rep.all_hold();
        step.detail = std::string("C1 ") + (rep.c1.holds ? "holds" : "fails") + ", C2 " +
                      (rep.c2.holds ? "holds" : "fails") + ", C3 " +
                      (rep.c3.holds ? "holds" : "fails");
        out.steps.push_back(step);
    }
    if (spec.id == FamilyId::T37) {
        VerifyStep step{"remark2", spec.remark2, spec.remark2 ? "t lies in C_{p^m-2}" : "t escapes C_{p^m-2}"};
        out.steps.push_back(step);
    }

    out.hamming_bound_d = sphere_packing_max_d(code.n, code.k, spec.p);
    out.optimal_claim = out.distance.exact && out.distance.d == 4 &&
                        code.k == static_cast<std::uint64_t>(F.q()) - 2 * m - 2;
    out.all_pass = std::all_of(out.steps.begin(), out.steps.end(),
                               [](const VerifyStep& s) { return s.pass; });
    return out;
}

std::vector<FamilyInfo> list_families() {
    return {
        {FamilyId::T34, "T34", "p >= 5 prime, m = 0 (mod 4), r = 0 or gcd(r, m) = 1",
         "t = (p^m-1)/2 + p^r + 1"},
        {FamilyId::T37, "T37", "p odd prime, m = 0 (mod 4), 0 <= r <= m-1",
         "t solves (p^m-2) t = p^r (mod p^m-1)"},
        {FamilyId::T311, "T311",
         "r in {1, 3}; p = 1 (mod 4) with m = 0 (mod 4), or p = 3 (mod 4) with m = 0 (mod 8)",
         "t = r (p^m-1)/4 - 1"},
        {FamilyId::T43, "T43", "p = 5, m >= 3 odd, 0 <= r <= m-1",
         "t solves 7t = -2*5^r (mod 5^m-1)"},
        {FamilyId::T45, "T45", "p = 5, m >= 3 odd, 9 does not divide m", "t = 5^{m-1} - 3"},
        {FamilyId::T47, "T47", "p = 5, m >= 3 odd, gcd(5, m) = 1",
         "t = 5^{(m+1)/2} - 5^{(m-1)/2} + 1"},
        {FamilyId::T49, "T49", "p = 5, m >= 3 odd, gcd(7, m) = 1", "t = 5^{(m+1)/2} - 3"},
    };
}

} // namespace cyclotome
