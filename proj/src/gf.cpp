#include "cyclotome/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace cyclotome {
namespace {

constexpr std::uint32_t kLogSentinel = 0xFFFFFFFFu;
// Hard ceiling on q independent of the configured budget: keys must stay
// comfortably inside uint32 and the two tables inside real memory.
constexpr std::uint64_t kHardTableCap = 1u << 30;

bool is_prime(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint32_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// --- base-field polynomial helpers (ascending coefficient vectors mod p) ---
// Only what modulus validation needs; general arithmetic lives in the poly
// module, which depends on this one.

using BPoly = std::vector<std::uint32_t>;

void bp_trim(BPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, in place; f monic.
void bp_mod(BPoly& a, const BPoly& f, std::uint32_t p) {
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (lead != 0)
            for (std::size_t i = 0; i <= df; ++i) {
                std::uint64_t sub = static_cast<std::uint64_t>(lead) * f[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        a.pop_back();
        while (!a.empty() && a.back() == 0 && a.size() > df) a.pop_back();
    }
    bp_trim(a);
}

BPoly bp_mulmod(const BPoly& a, const BPoly& b, const BPoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    BPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    bp_mod(prod, f, p);
    return prod;
}

// x^e mod f by square-and-multiply.
BPoly bp_xpow(std::uint64_t e, const BPoly& f, std::uint32_t p) {
    BPoly base{0, 1};
    bp_mod(base, f, p);
    BPoly acc{1};
    while (e > 0) {
        if (e & 1) acc = bp_mulmod(acc, base, f, p);
        base = bp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

BPoly bp_gcd(BPoly a, BPoly b, std::uint32_t p) {
    bp_trim(a);
    bp_trim(b);
    while (!b.empty()) {
        // reduce a mod b after scaling b monic
        std::uint32_t lead = b.back();
        if (lead != 1) {
            // multiply b by lead^{-1}
            std::uint32_t inv = 1;
            for (std::uint32_t c = 1; c < p; ++c)
                if (c * static_cast<std::uint64_t>(lead) % p == 1) { inv = c; break; }
            for (auto& c : b) c = static_cast<std::uint32_t>(c * static_cast<std::uint64_t>(inv) % p);
        }
        bp_mod(a, b, p);
        std::swap(a, b);
    }
    return a;
}

std::uint32_t bp_eval(const BPoly& f, std::uint32_t x, std::uint32_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return static_cast<std::uint32_t>(acc);
}

// Irreducibility over GF(p): trivially true for degree 1; root search settles
// degrees 2 and 3; higher degrees use gcd(f, x^{p^k} - x) = const for all
// k <= deg/2.
bool bp_irreducible(const BPoly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    if (deg <= 3) {
        for (std::uint32_t x = 0; x < p; ++x)
            if (bp_eval(f, x, p) == 0) return false;
        return true;
    }
    std::uint64_t pk = 1;
    for (std::size_t k = 1; k <= deg / 2; ++k) {
        pk *= p;
        BPoly frob = bp_xpow(pk, f, p); // x^{p^k} mod f
        // frob - x
        if (frob.size() < 2) frob.resize(2, 0);
        frob[1] = (frob[1] + p - 1) % p;
        bp_trim(frob);
        BPoly g = bp_gcd(f, frob, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    if (v > 1) out.push_back(v);
    return out;
}

// Whether the class of x generates the full multiplicative group, i.e. has
// order exactly n = p^deg(f) - 1.  Assumes f irreducible.
bool bp_primitive(const BPoly& f, std::uint32_t p, std::uint64_t n) {
    BPoly one{1};
    if (bp_xpow(n, f, p) != one) return false;
    for (std::uint64_t ell : prime_divisors(n))
        if (bp_xpow(n / ell, f, p) == one) return false;
    return true;
}

} // namespace

std::uint64_t Field::table_budget_from_env() {
    if (const char* env = std::getenv("CYCLOTOME_TABLE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultTableBudget;
}

Field::Field(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus,
             std::uint64_t table_budget) {
    p_ = p;
    m_ = m;
    validate_and_build(modulus, table_budget);
}

Field::Field(std::uint32_t p, std::uint32_t m, std::uint64_t table_budget) {
    p_ = p;
    m_ = m;
    if (!is_prime(p) || p == 2)
        fail(errc::non_prime_p, "p must be an odd prime, got " + std::to_string(p));
    if (m < 1) fail(errc::out_of_range, "m must be >= 1");
    // Lexicographically smallest candidate wins, comparing coefficients from
    // the constant term upward: c0 is the most significant position, so it is
    // decoded from the top digit of the counter and c_{m-1} varies fastest.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        BPoly f(m + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = m; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        f[m] = 1;
        if (f[0] == 0) continue; // divisible by x, or omega = 0 when m = 1
        if (!bp_irreducible(f, p)) continue;
        if (!bp_primitive(f, p, count - 1)) continue;
        validate_and_build(f, table_budget);
        return;
    }
    fail(errc::modulus_not_primitive,
         "no primitive polynomial of degree " + std::to_string(m) + " over GF(" +
             std::to_string(p) + ") — unreachable for valid p, m");
}

void Field::validate_and_build(const std::vector<std::uint32_t>& modulus, std::uint64_t table_budget) {
    if (!is_prime(p_) || p_ == 2)
        fail(errc::non_prime_p, "p must be an odd prime, got " + std::to_string(p_));
    if (m_ < 1) fail(errc::out_of_range, "m must be >= 1");
    if (modulus.size() != m_ + 1)
        fail(errc::precondition_violated,
             "modulus must have degree m = " + std::to_string(m_) + ", got degree " +
                 std::to_string(modulus.empty() ? 0 : modulus.size() - 1));
    if (modulus.back() != 1) fail(errc::precondition_violated, "modulus must be monic");
    for (std::uint32_t c : modulus)
        if (c >= p_)
            fail(errc::precondition_violated,
                 "modulus coefficient " + std::to_string(c) + " not in [0, p-1]");

    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        q64 *= p_;
        if (q64 > kHardTableCap) break;
    }
    if (q64 > table_budget || q64 > kHardTableCap)
        fail(errc::table_budget_exceeded,
             "q = " + std::to_string(p_) + "^" + std::to_string(m_) +
                 " exceeds the log-table budget of " +
                 std::to_string(std::min<std::uint64_t>(table_budget, kHardTableCap)) +
                 " (set CYCLOTOME_TABLE_BUDGET to raise it)");

    if (!bp_irreducible(modulus, p_))
        fail(errc::modulus_not_irreducible, "modulus is reducible over GF(" + std::to_string(p_) + ")");
    q_ = static_cast<std::uint32_t>(q64);
    n_ = q_ - 1;
    if (!bp_primitive(modulus, p_, n_))
        fail(errc::modulus_not_primitive,
             "modulus is irreducible but not primitive: omega does not generate the group of order " +
                 std::to_string(n_));

    modulus_ = modulus;
    antilog_.assign(n_, 0);
    log_.assign(q_, kLogSentinel);

    // Walk omega^j for j = 0..n-1 by repeated multiplication by x, reducing
    // with x^m = -(c_{m-1} x^{m-1} + ... + c_0).
    std::vector<std::uint32_t> state(m_, 0);
    state[0] = 1;
    for (std::uint32_t j = 0; j < n_; ++j) {
        std::uint32_t key = 0;
        std::uint32_t mult = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            key += state[i] * mult;
            mult *= p_;
        }
        antilog_[j] = key;
        log_[key] = j;
        std::uint32_t carry = state[m_ - 1];
        for (std::uint32_t i = m_; i-- > 1;) state[i] = state[i - 1];
        state[0] = 0;
        if (carry != 0)
            for (std::uint32_t i = 0; i < m_; ++i)
                state[i] = static_cast<std::uint32_t>(
                    (state[i] + static_cast<std::uint64_t>(carry) * (p_ - modulus_[i])) % p_);
    }
}

Field::elem Field::add(elem a, elem b) const {
    elem out = 0;
    elem mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

Field::elem Field::neg(elem a) const {
    elem out = 0;
    elem mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

Field::elem Field::mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= n_) s -= n_;
    return antilog_[s];
}

Field::elem Field::inv(elem a) const {
    if (a == 0) fail(errc::division_by_zero, "inv(0)");
    std::uint32_t l = log_[a];
    return antilog_[l == 0 ? 0 : n_ - l];
}

Field::elem Field::div(elem a, elem b) const {
    if (b == 0) fail(errc::division_by_zero, "division by zero");
    if (a == 0) return 0;
    std::uint32_t d = log_[a] + n_ - log_[b];
    if (d >= n_) d -= n_;
    return antilog_[d];
}

Field::elem Field::pow(elem a, std::int64_t e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        fail(errc::division_by_zero, "pow(0, negative)");
    }
    std::int64_t r = e % static_cast<std::int64_t>(n_);
    if (r < 0) r += n_;
    std::uint64_t idx = static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r) % n_;
    return antilog_[idx];
}

std::uint32_t Field::log(elem a) const {
    if (a == 0) fail(errc::zero_argument, "log(0) is undefined");
    return log_[a];
}

int Field::quadratic_character(elem a) const {
    if (a == 0) return 0;
    return (log_[a] & 1u) ? -1 : 1;
}

std::uint32_t Field::quartic_class(elem y) const {
    if (n_ % 4 != 0)
        fail(errc::four_does_not_divide_order,
             "quartic character needs 4 | q-1, but q-1 = " + std::to_string(n_));
    if (y == 0) fail(errc::zero_argument, "quartic character of 0 is undefined");
    return log_[y] & 3u;
}

Field::elem Field::zeta() const {
    if (n_ % 4 != 0)
        fail(errc::four_does_not_divide_order,
             "zeta needs 4 | q-1, but q-1 = " + std::to_string(n_));
    return antilog_[n_ / 4];
}

std::vector<std::uint32_t> Field::digits(elem a) const {
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Field::elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
    if (d.size() > m_) fail(errc::out_of_range, "too many digits for GF(p^m)");
    elem out = 0;
    elem mult = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] >= p_) fail(errc::out_of_range, "digit not in [0, p-1]");
        out += d[i] * mult;
        mult *= p_;
    }
    return out;
}

} // namespace cyclotome
