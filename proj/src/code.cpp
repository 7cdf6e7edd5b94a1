#include "cyclotome/code.hpp"

#include <algorithm>
#include <thread>

#include "cyclotome/kernels.hpp"

namespace cyclotome {
namespace {

// ---------------------------------------------------------------------------
// shared search plumbing

// Zero pattern (0, s[, t]) extracted from a code's requested exponents.  A
// missing t is modeled as exponent 0, whose parity-check column x^0 = 1 is
// constant and drops out of every condition.
struct ZeroPattern {
    std::uint32_t s = 0;
    std::uint32_t t = 0;
    bool has_t = false;
};

ZeroPattern zero_pattern(const CyclicCode& code) {
    const auto& z = code.zeros;
    if (z.size() < 1 || z.size() > 3 || std::find(z.begin(), z.end(), 0u) == z.end())
        fail(errc::wrong_zero_pattern,
             "search requires zeros (0), (0, s) or (0, s, t); got " + std::to_string(z.size()) +
                 " zero cosets" + (std::find(z.begin(), z.end(), 0u) == z.end()
                                       ? " without exponent 0"
                                       : ""));
    ZeroPattern pat;
    std::vector<std::uint64_t> rest;
    for (std::uint64_t e : z)
        if (e != 0) rest.push_back(e);
    if (rest.size() >= 1) pat.s = static_cast<std::uint32_t>(rest[0]);
    if (rest.size() >= 2) {
        pat.t = static_cast<std::uint32_t>(rest[1]);
        pat.has_t = true;
    }
    return pat;
}

bool witness_less(const Witness& a, const Witness& b) {
    if (a.supports != b.supports) return a.supports < b.supports;
    return a.coeffs < b.coeffs;
}

// Sorts (support, coeff) pairs by support and scales so the first coefficient
// is 1.  Coefficients are base-field residues.
Witness canonical_witness(const Field& F, std::vector<std::pair<std::uint32_t, std::uint32_t>> terms) {
    std::sort(terms.begin(), terms.end());
    const std::uint32_t p = F.p();
    const std::uint32_t scale = F.inv(terms.front().second % p); // base-field key == residue
    Witness w;
    for (const auto& [idx, coeff] : terms) {
        w.supports.push_back(idx);
        w.coeffs.push_back(static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(coeff) * scale % p));
    }
    return w;
}

void consider(std::optional<Witness>& best, Witness cand) {
    if (!best || witness_less(cand, *best)) best = std::move(cand);
}

// Runs fn(worker, lo, hi) over a contiguous partition of [begin, end).
template <typename Fn>
std::uint32_t parallel_ranges(std::uint32_t workers, std::uint64_t begin, std::uint64_t end, Fn fn) {
    std::uint32_t w = workers != 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
    if (end <= begin) return w;
    w = static_cast<std::uint32_t>(std::min<std::uint64_t>(w, end - begin));
    if (w <= 1) {
        fn(0, begin, end);
        return 1;
    }
    std::vector<std::thread> pool;
    const std::uint64_t span = end - begin;
    for (std::uint32_t i = 0; i < w; ++i) {
        std::uint64_t lo = begin + span * i / w;
        std::uint64_t hi = begin + span * (i + 1) / w;
        pool.emplace_back([=] { fn(i, lo, hi); });
    }
    for (auto& th : pool) th.join();
    return w;
}

std::optional<Witness> reduce_best(const std::vector<std::optional<Witness>>& per_worker) {
    std::optional<Witness> best;
    for (const auto& cand : per_worker)
        if (cand) consider(best, *cand);
    return best;
}

// ---------------------------------------------------------------------------
// weight-2 and weight-3 searches

// Shared value map: entries (x^s key * q + x^t key, log index), sorted.
struct ValueMap {
    std::vector<std::uint32_t> sval, tval;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> sorted; // (combined key, index)
    std::uint64_t q = 0;

    std::uint64_t key_at(std::uint32_t i) const {
        return static_cast<std::uint64_t>(sval[i]) * q + tval[i];
    }
};

ValueMap build_value_map(const CyclicCode& code, const ZeroPattern& pat, const SearchConfig& cfg) {
    const Field& F = *code.field;
    ValueMap vm;
    vm.q = F.q();
    vm.sval = power_column(F, pat.s, 0, cfg);
    vm.tval = power_column(F, pat.t, 0, cfg);
    vm.sorted.reserve(F.n());
    for (std::uint32_t i = 0; i < F.n(); ++i) vm.sorted.emplace_back(vm.key_at(i), i);
    std::sort(vm.sorted.begin(), vm.sorted.end());
    return vm;
}

std::optional<Witness> weight2_search(const CyclicCode& code, const ValueMap& vm) {
    const Field& F = *code.field;
    // c = (1, -1) forced by the exponent-0 check; need x1^s = x2^s and
    // x1^t = x2^t, i.e. two indices sharing a combined key.  The two smallest
    // members of a key bucket lex-dominate every other pair in that bucket.
    std::optional<Witness> best;
    const auto& s = vm.sorted;
    for (std::size_t i = 0; i + 1 < s.size();) {
        std::size_t j = i;
        while (j + 1 < s.size() && s[j + 1].first == s[i].first) ++j;
        if (j > i)
            consider(best, canonical_witness(F, {{s[i].second, 1}, {s[i + 1].second, F.p() - 1}}));
        i = j + 1;
    }
    return best;
}

std::optional<Witness> weight3_search(const CyclicCode& code, const ValueMap& vm,
                                      const SearchConfig& cfg) {
    const Field& F = *code.field;
    const std::uint32_t n = F.n();
    const std::uint32_t p = F.p();
    std::vector<std::optional<Witness>> best;
    std::vector<std::uint32_t> d2_list;
    for (std::uint32_t d2 = 1; d2 + 1 < p; ++d2) d2_list.push_back(d2);

    // Per (d2, i2 < i3): solve for x1 with x1^s = -(d2 x2^s + d3 x3^s) and
    // likewise for t, via the value map.  d3 = -1 - d2 is nonzero by the d2
    // range.  Smallest preimage index wins lexicographically.
    std::vector<std::optional<Witness>> locals(
        cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency()));
    parallel_ranges(cfg.workers, 0, n, [&](std::uint32_t worker, std::uint64_t lo, std::uint64_t hi) {
        std::optional<Witness>& mine = locals[worker];
        for (std::uint32_t d2 : d2_list) {
            const std::uint32_t d3 = p - 1 - d2;
            const Field::elem d2k = d2, d3k = d3; // base-field keys == residues
            for (std::uint32_t i2 = static_cast<std::uint32_t>(lo); i2 < hi; ++i2) {
                const Field::elem a_s = F.mul(d2k, vm.sval[i2]);
                const Field::elem a_t = F.mul(d2k, vm.tval[i2]);
                for (std::uint32_t i3 = i2 + 1; i3 < n; ++i3) {
                    const Field::elem ts = F.neg(F.add(a_s, F.mul(d3k, vm.sval[i3])));
                    if (ts == 0) continue; // x1 would be 0, not in F*
                    const Field::elem tt = F.neg(F.add(a_t, F.mul(d3k, vm.tval[i3])));
                    if (tt == 0) continue;
                    const std::uint64_t key = static_cast<std::uint64_t>(ts) * vm.q + tt;
                    auto it = std::lower_bound(vm.sorted.begin(), vm.sorted.end(),
                                               std::make_pair(key, 0u));
                    for (; it != vm.sorted.end() && it->first == key; ++it) {
                        const std::uint32_t i1 = it->second;
                        if (i1 == i2 || i1 == i3) continue;
                        consider(mine, canonical_witness(F, {{i1, 1}, {i2, d2}, {i3, d3}}));
                        break; // later preimages lex-dominate
                    }
                }
            }
        }
    });
    return reduce_best(locals);
}

// ---------------------------------------------------------------------------
// weight-4 meet-in-the-middle

struct PairEntry {
    std::uint64_t key;
    std::uint32_t i1, i2;
};

bool pair_entry_less(const PairEntry& a, const PairEntry& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.i1 != b.i1) return a.i1 < b.i1;
    return a.i2 < b.i2;
}

std::optional<Witness> weight4_pass(const CyclicCode& code, const ZeroPattern& pat,
                                    const ValueMap& vm, const SearchConfig& cfg,
                                    std::uint32_t n_buckets, std::uint32_t bucket) {
    const Field& F = *code.field;
    const std::uint32_t n = F.n();
    const std::uint32_t p = F.p();
    std::optional<Witness> best;

    for (std::uint32_t a2 = 1; a2 < p; ++a2) {
        // left sweep: pairs (i1 < i2) with coefficients (1, a2);
        // key = (x1^s + a2 x2^s, x1^t + a2 x2^t).  The column a2 * x^e over
        // all x = omega^i is the e-ladder shifted by log(a2).
        const std::vector<std::uint32_t> a2s = power_column(F, pat.s, F.log(a2), cfg);
        const std::vector<std::uint32_t> a2t = power_column(F, pat.t, F.log(a2), cfg);

        std::vector<PairEntry> left;
        left.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 / n_buckets + n);
        for (std::uint32_t i1 = 0; i1 < n; ++i1) {
            const Field::elem s1 = vm.sval[i1];
            const Field::elem t1 = vm.tval[i1];
            for (std::uint32_t i2 = i1 + 1; i2 < n; ++i2) {
                const std::uint64_t key =
                    static_cast<std::uint64_t>(F.add(s1, a2s[i2])) * vm.q + F.add(t1, a2t[i2]);
                if (n_buckets > 1 && key % n_buckets != bucket) continue;
                left.push_back({key, i1, i2});
            }
        }
        std::sort(left.begin(), left.end(), pair_entry_less);

        // probe sweep: pairs (i3 < i4) with coefficients (a3, a4),
        // a4 = -1 - a2 - a3, both nonzero; matching keys give
        // 1 + a2 + a3 + a4 = 0 plus vanishing s- and t-checks.
        for (std::uint32_t a3 = 1; a3 < p; ++a3) {
            const std::uint32_t a4 = (3 * p - 1 - a2 - a3) % p;
            if (a4 == 0) continue;
            const std::vector<std::uint32_t> a3s = power_column(F, pat.s, F.log(a3), cfg);
            const std::vector<std::uint32_t> a3t = power_column(F, pat.t, F.log(a3), cfg);
            const std::vector<std::uint32_t> a4s = power_column(F, pat.s, F.log(a4), cfg);
            const std::vector<std::uint32_t> a4t = power_column(F, pat.t, F.log(a4), cfg);

            std::vector<std::optional<Witness>> locals(
                cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency()));
            parallel_ranges(cfg.workers, 0, n,
                            [&](std::uint32_t worker, std::uint64_t lo, std::uint64_t hi) {
                std::optional<Witness>& mine = locals[worker];
                for (std::uint32_t i3 = static_cast<std::uint32_t>(lo); i3 < hi; ++i3) {
                    const Field::elem s3 = a3s[i3];
                    const Field::elem t3 = a3t[i3];
                    for (std::uint32_t i4 = i3 + 1; i4 < n; ++i4) {
                        const std::uint64_t key =
                            static_cast<std::uint64_t>(F.neg(F.add(s3, a4s[i4]))) * vm.q +
                            F.neg(F.add(t3, a4t[i4]));
                        if (n_buckets > 1 && key % n_buckets != bucket) continue;
                        auto it = std::lower_bound(left.begin(), left.end(),
                                                   PairEntry{key, 0, 0}, pair_entry_less);
                        for (; it != left.end() && it->key == key; ++it) {
                            const std::uint32_t i1 = it->i1, i2 = it->i2;
                            if (i1 == i3 || i1 == i4 || i2 == i3 || i2 == i4) continue;
                            consider(mine, canonical_witness(
                                               F, {{i1, 1}, {i2, a2}, {i3, a3}, {i4, a4}}));
                            break; // first matching left pair lex-dominates the rest
                        }
                    }
                }
            });
            if (auto cand = reduce_best(locals)) consider(best, *cand);
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// naive oracle helpers

// Direct parity-check evaluation of a sparse word at one zero exponent.
bool oracle_word_ok(const Field& F, const std::vector<std::vector<std::uint32_t>>& columns,
                    const std::uint32_t* supports, const std::uint32_t* coeffs, int w) {
    for (const auto& col : columns) {
        Field::elem acc = 0;
        for (int j = 0; j < w; ++j) acc = F.add(acc, F.mul(coeffs[j], col[supports[j]]));
        if (acc != 0) return false;
    }
    return true;
}

// Enumerates supports of size w in lex order and coefficient patterns
// (1, c2, ..., cw) in lex order; the first hit is the lex-least witness.
std::optional<Witness> oracle_weight_search(const CyclicCode& code, int w,
                                            const std::vector<std::vector<std::uint32_t>>& columns) {
    const Field& F = *code.field;
    const std::uint32_t n = F.n();
    const std::uint32_t p = F.p();
    std::vector<std::uint32_t> sup(w), coeff(w, 1);
    for (int j = 0; j < w; ++j) sup[j] = j;
    while (true) {
        // coefficient loops, c1 fixed at 1
        for (int j = 1; j < w; ++j) coeff[j] = 1;
        while (true) {
            if (oracle_word_ok(F, columns, sup.data(), coeff.data(), w)) {
                Witness wit;
                wit.supports.assign(sup.begin(), sup.end());
                wit.coeffs.assign(coeff.begin(), coeff.end());
                return wit;
            }
            int j = w - 1;
            for (; j >= 1; --j) {
                if (coeff[j] + 1 < p) {
                    ++coeff[j];
                    break;
                }
                coeff[j] = 1;
            }
            if (j < 1) break;
        }
        // next support combination in lex order
        int j = w - 1;
        while (j >= 0 && sup[j] == n - static_cast<std::uint32_t>(w - j)) --j;
        if (j < 0) return std::nullopt;
        ++sup[j];
        for (int i = j + 1; i < w; ++i) sup[i] = sup[i - 1] + 1;
    }
}

// ---------------------------------------------------------------------------
// minimal big unsigned integer for the sphere-packing diagnostic

struct BigUint {
    std::vector<std::uint32_t> limb; // little-endian base 2^32

    static BigUint from(std::uint64_t v) {
        BigUint b;
        while (v) {
            b.limb.push_back(static_cast<std::uint32_t>(v));
            v >>= 32;
        }
        return b;
    }
    void mul_small(std::uint64_t f) {
        std::uint64_t carry = 0;
        for (auto& l : limb) {
            unsigned __int128 v = static_cast<unsigned __int128>(l) * f + carry;
            l = static_cast<std::uint32_t>(v);
            carry = static_cast<std::uint64_t>(v >> 32);
        }
        while (carry) {
            limb.push_back(static_cast<std::uint32_t>(carry));
            carry >>= 32;
        }
        if (f == 0) limb.clear();
    }
    void div_small(std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = limb.size(); i-- > 0;) {
            std::uint64_t v = (rem << 32) | limb[i];
            limb[i] = static_cast<std::uint32_t>(v / d);
            rem = v % d;
        }
        while (!limb.empty() && limb.back() == 0) limb.pop_back();
    }
    void add(const BigUint& o) {
        if (o.limb.size() > limb.size()) limb.resize(o.limb.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limb.size(); ++i) {
            std::uint64_t v = carry + limb[i] + (i < o.limb.size() ? o.limb[i] : 0);
            limb[i] = static_cast<std::uint32_t>(v);
            carry = v >> 32;
        }
        if (carry) limb.push_back(static_cast<std::uint32_t>(carry));
    }
    // <0, 0, >0 as -1/0/1
    int cmp(const BigUint& o) const {
        if (limb.size() != o.limb.size()) return limb.size() < o.limb.size() ? -1 : 1;
        for (std::size_t i = limb.size(); i-- > 0;)
            if (limb[i] != o.limb[i]) return limb[i] < o.limb[i] ? -1 : 1;
        return 0;
    }
};

} // namespace

std::vector<std::uint32_t> power_column(const Field& F, std::uint32_t e, std::uint32_t log_shift,
                                        const SearchConfig& cfg) {
    const std::uint32_t n = F.n();
    std::vector<std::uint32_t> exps(n), out(n);
    kernels::get_exp_map(cfg.force_scalar_kernels)(log_shift % n, e % n, n, exps.data(), n);
    kernels::get_gather(cfg.force_scalar_kernels)(F.antilog_table(), exps.data(), out.data(), n);
    return out;
}

CyclicCode build_code(const Field& F, const std::vector<std::uint64_t>& exponents) {
    CyclicCode code;
    code.field = &F;
    code.gen = generator_polynomial(exponents, F);
    code.n = F.n();
    code.k = code.n - static_cast<std::uint32_t>(code.gen.g.degree());
    for (std::uint64_t e : exponents)
        if (std::find(code.gen.collapsed.begin(), code.gen.collapsed.end(), e) ==
            code.gen.collapsed.end())
            code.zeros.push_back(e);
    return code;
}

std::optional<Witness> has_weight_leq(const CyclicCode& code, int w, const SearchConfig& cfg) {
    const ZeroPattern pat = zero_pattern(code);
    if (w < 1 || w > 3) fail(errc::out_of_range, "has_weight_leq handles w in {1, 2, 3}");
    if (w == 1) return std::nullopt; // exponent 0 is a zero: c1 * 1 = 0 forces c1 = 0
    const ValueMap vm = build_value_map(code, pat, cfg);
    if (w == 2) return weight2_search(code, vm);
    return weight3_search(code, vm, cfg);
}

std::optional<Witness> find_weight4(const CyclicCode& code, const SearchConfig& cfg) {
    const ZeroPattern pat = zero_pattern(code);
    const ValueMap vm = build_value_map(code, pat, cfg);
    const std::uint64_t n = code.n;
    const std::uint64_t pairs = n * (n - 1) / 2;
    std::uint32_t n_buckets = 1;
    if (pairs > cfg.weight4_budget)
        n_buckets = static_cast<std::uint32_t>((pairs + cfg.weight4_budget - 1) / cfg.weight4_budget);
    std::optional<Witness> best;
    for (std::uint32_t b = 0; b < n_buckets; ++b)
        if (auto cand = weight4_pass(code, pat, vm, cfg, n_buckets, b)) consider(best, *cand);
    return best;
}

DistanceReport min_distance_upto4(const CyclicCode& code, const SearchConfig& cfg) {
    DistanceReport rep;
    rep.method = "fast-search";
    for (int w = 1; w <= 3; ++w)
        if (auto wit = has_weight_leq(code, w, cfg)) {
            rep.d = w;
            rep.exact = true;
            rep.witness = std::move(wit);
            return rep;
        }
    if (auto wit = find_weight4(code, cfg)) {
        rep.d = 4;
        rep.exact = true;
        rep.witness = std::move(wit);
        return rep;
    }
    rep.d = 5;
    return rep;
}

DistanceReport oracle_distance(const CyclicCode& code, int max_w, const SearchConfig& cfg) {
    const Field& F = *code.field;
    if (code.n > cfg.oracle_limit)
        fail(errc::too_large, "oracle limited to n <= " + std::to_string(cfg.oracle_limit) +
                                  ", got n = " + std::to_string(code.n));
    if (max_w < 1 || max_w > 4) fail(errc::out_of_range, "oracle handles max_w in [1, 4]");
    std::vector<std::vector<std::uint32_t>> columns;
    for (std::uint64_t e : code.zeros)
        columns.push_back(power_column(F, static_cast<std::uint32_t>(e), 0, cfg));
    DistanceReport rep;
    rep.method = "oracle";
    for (int w = 1; w <= max_w; ++w)
        if (auto wit = oracle_weight_search(code, w, columns)) {
            rep.d = w;
            rep.exact = true;
            rep.witness = std::move(wit);
            return rep;
        }
    rep.d = max_w + 1;
    return rep;
}

std::uint32_t sphere_packing_max_d(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    if (k < 1 || k > n) fail(errc::out_of_range, "need 1 <= k <= n");
    BigUint rhs = BigUint::from(1);
    for (std::uint64_t i = 0; i < n - k; ++i) rhs.mul_small(p);
    BigUint sum = BigUint::from(1); // radius-0 ball
    BigUint binom = BigUint::from(1);
    const std::uint32_t singleton = static_cast<std::uint32_t>(n - k + 1);
    std::uint32_t d = 1;
    std::uint64_t radius = 0;
    while (d < singleton) {
        const std::uint64_t next_radius = d / 2; // floor((d+1-1)/2) for candidate d+1
        if (next_radius > radius) {
            // add C(n, next_radius) * (p-1)^next_radius
            binom.mul_small(n - next_radius + 1);
            binom.div_small(static_cast<std::uint32_t>(next_radius));
            BigUint term = binom;
            for (std::uint64_t i = 0; i < next_radius; ++i) term.mul_small(p - 1);
            sum.add(term);
            radius = next_radius;
        }
        if (sum.cmp(rhs) > 0) break;
        ++d;
    }
    return d;
}

std::vector<std::uint32_t> encode(const CyclicCode& code, const PolyFp& message) {
    const Field& F = *code.field;
    if (message.p != F.p()) fail(errc::precondition_violated, "message is over the wrong prime field");
    if (message.degree() >= static_cast<int>(code.k))
        fail(errc::message_too_long, "message degree " + std::to_string(message.degree()) +
                                         " exceeds k - 1 = " + std::to_string(code.k - 1));
    PolyFp word = poly_mul(message, code.gen.g);
    std::vector<std::uint32_t> out(code.n, 0);
    for (std::size_t i = 0; i < word.c.size(); ++i) out[i] = word.c[i];
    return out;
}

std::vector<Field::elem> syndrome(const CyclicCode& code, const std::vector<std::uint32_t>& word) {
    const Field& F = *code.field;
    if (word.size() != code.n) fail(errc::out_of_range, "word length must equal n");
    std::vector<Field::elem> out;
    for (std::uint64_t e : code.zeros) {
        const Field::elem x = F.antilog(e);
        Field::elem acc = 0;
        for (std::size_t i = word.size(); i-- > 0;) acc = F.add(F.mul(acc, x), F.from_int(word[i]));
        out.push_back(acc);
    }
    return out;
}

bool witness_is_valid(const CyclicCode& code, const Witness& w) {
    const Field& F = *code.field;
    if (w.supports.empty() || w.supports.size() != w.coeffs.size()) return false;
    for (std::size_t i = 0; i + 1 < w.supports.size(); ++i)
        if (w.supports[i] >= w.supports[i + 1]) return false;
    if (w.supports.back() >= code.n) return false;
    for (std::uint32_t c : w.coeffs)
        if (c == 0 || c >= F.p()) return false;
    if (w.coeffs.front() != 1) return false;
    for (std::uint64_t e : code.zeros) {
        Field::elem acc = 0;
        for (std::size_t j = 0; j < w.supports.size(); ++j) {
            const std::uint64_t exp = e * w.supports[j] % code.n;
            acc = F.add(acc, F.mul(w.coeffs[j], F.antilog(exp)));
        }
        if (acc != 0) return false;
    }
    return true;
}

} // namespace cyclotome
