#include "cyclotome/poly.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cyclotome {
namespace {

std::uint32_t require_same_p(const PolyFp& a, const PolyFp& b) {
    if (a.p != b.p)
        fail(errc::precondition_violated, "polynomials over different prime fields");
    return a.p;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    a %= p;
    for (std::uint32_t c = 1; c < p; ++c)
        if (static_cast<std::uint64_t>(a) * c % p == 1) return c;
    fail(errc::division_by_zero, "no inverse mod p");
}

void trim(PolyFp& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

// x^{p^k} mod f by repeated squaring, for the irreducibility sieve.
PolyFp xpow_mod(std::uint64_t e, const PolyFp& f) {
    PolyFp base{f.p, {0, 1}};
    base = poly_divmod(base, f).second;
    PolyFp acc{f.p, {1}};
    while (e > 0) {
        if (e & 1) acc = poly_divmod(poly_mul(acc, base), f).second;
        base = poly_divmod(poly_mul(base, base), f).second;
        e >>= 1;
    }
    return acc;
}

std::uint32_t eval_base(const PolyFp& f, std::uint32_t x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.c.size(); i-- > 0;) acc = (acc * x + f.c[i]) % f.p;
    return static_cast<std::uint32_t>(acc);
}

} // namespace

PolyFp poly_add(const PolyFp& a, const PolyFp& b) {
    const std::uint32_t p = require_same_p(a, b);
    PolyFp out{p, {}};
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        std::uint32_t s = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
        out.c[i] = s >= p ? s - p : s;
    }
    trim(out);
    return out;
}

PolyFp poly_sub(const PolyFp& a, const PolyFp& b) {
    const std::uint32_t p = require_same_p(a, b);
    PolyFp out{p, {}};
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        std::uint32_t av = i < a.c.size() ? a.c[i] : 0;
        std::uint32_t bv = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = (av + p - bv) % p;
    }
    trim(out);
    return out;
}

PolyFp poly_mul(const PolyFp& a, const PolyFp& b) {
    const std::uint32_t p = require_same_p(a, b);
    if (a.is_zero() || b.is_zero()) return PolyFp{p, {}};
    PolyFp out{p, std::vector<std::uint32_t>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = static_cast<std::uint32_t>(
                (out.c[i + j] + static_cast<std::uint64_t>(a.c[i]) * b.c[j]) % p);
    }
    trim(out);
    return out;
}

PolyFp poly_scale(const PolyFp& a, std::uint32_t s) {
    PolyFp out{a.p, a.c};
    s %= a.p;
    for (auto& c : out.c) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * s % a.p);
    trim(out);
    return out;
}

std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b) {
    const std::uint32_t p = require_same_p(a, b);
    if (b.is_zero()) fail(errc::division_by_zero_poly, "polynomial division by zero");
    PolyFp rem{p, a.c};
    if (a.c.size() < b.c.size()) return {PolyFp{p, {}}, rem};
    PolyFp quot{p, std::vector<std::uint32_t>(a.c.size() - b.c.size() + 1, 0)};
    const std::uint32_t lead_inv = inv_mod_p(b.c.back(), p);
    for (std::size_t shift = quot.c.size(); shift-- > 0;) {
        const std::size_t top = shift + b.c.size() - 1;
        if (top >= rem.c.size() || rem.c[top] == 0) continue;
        const std::uint32_t q = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(rem.c[top]) * lead_inv % p);
        quot.c[shift] = q;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(q) * b.c[i] % p;
            rem.c[shift + i] = static_cast<std::uint32_t>((rem.c[shift + i] + p - sub) % p);
        }
    }
    trim(quot);
    trim(rem);
    return {quot, rem};
}

PolyFp poly_gcd(PolyFp a, PolyFp b) {
    require_same_p(a, b);
    trim(a);
    trim(b);
    while (!b.is_zero()) {
        PolyFp r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.c.back() != 1) a = poly_scale(a, inv_mod_p(a.c.back(), a.p));
    return a;
}

bool poly_divides(const PolyFp& d, const PolyFp& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_divmod(a, d).second.is_zero();
}

PolyFp poly_xpow(std::uint32_t p, std::size_t e) {
    PolyFp out{p, std::vector<std::uint32_t>(e + 1, 0)};
    out.c[e] = 1;
    return out;
}

Field::elem poly_eval(const PolyFp& f, const Field& F, Field::elem x) {
    Field::elem acc = 0;
    for (std::size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), F.from_int(f.c[i]));
    return acc;
}

PolyExt ext_mul(const PolyExt& a, const PolyExt& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    PolyExt out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Field::elem ext_eval(const PolyExt& f, const Field& F, Field::elem x) {
    Field::elem acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

bool poly_is_irreducible(const PolyFp& f) {
    const int deg = f.degree();
    if (deg <= 0) return false;
    if (deg == 1) return true;
    if (deg <= 3) {
        for (std::uint32_t x = 0; x < f.p; ++x)
            if (eval_base(f, x) == 0) return false;
        return true;
    }
    std::uint64_t pk = 1;
    for (int k = 1; k <= deg / 2; ++k) {
        pk *= f.p;
        PolyFp frob = xpow_mod(pk, f);
        PolyFp x1{f.p, {0, 1}};
        PolyFp g = poly_gcd(f, poly_sub(frob, x1));
        if (g.degree() > 0) return false;
    }
    return true;
}

PolyFp minimal_polynomial(std::uint64_t j, const Field& F) {
    const CosetView cs = coset(j, F.p(), F.n());
    PolyExt prod{1};
    for (std::uint64_t i : cs.members) {
        PolyExt factor{F.neg(F.antilog(i)), 1};
        prod = ext_mul(prod, factor, F);
    }
    PolyFp out{F.p(), {}};
    out.c.reserve(prod.size());
    for (Field::elem coeff : prod) {
        if (coeff >= F.p())
            fail(errc::coefficient_not_in_base_field,
                 "minimal polynomial coefficient escaped GF(p) — field construction bug");
        out.c.push_back(coeff);
    }
    return out;
}

GeneratorResult generator_polynomial(const std::vector<std::uint64_t>& exponents, const Field& F) {
    if (exponents.empty()) fail(errc::precondition_violated, "need at least one zero exponent");
    GeneratorResult res;
    res.g = PolyFp{F.p(), {1}};
    std::vector<std::uint64_t> seen_reps;
    for (std::uint64_t e : exponents) {
        if (e > F.n() - 1)
            fail(errc::out_of_range, "exponent " + std::to_string(e) + " outside [0, n-1]");
        CosetView cs = coset(e, F.p(), F.n());
        if (std::find(seen_reps.begin(), seen_reps.end(), cs.rep) != seen_reps.end()) {
            res.collapsed.push_back(e);
            continue;
        }
        seen_reps.push_back(cs.rep);
        res.g = poly_mul(res.g, minimal_polynomial(e, F));
        res.cosets.push_back(std::move(cs));
    }
    return res;
}

FactorizationCheck verify_factorization(std::uint32_t scalar,
                                        const std::vector<std::pair<PolyFp, std::uint32_t>>& factors,
                                        const PolyFp& target) {
    FactorizationCheck out;
    PolyFp prod{target.p, {scalar % target.p}};
    for (const auto& [f, mult] : factors) {
        for (std::uint32_t i = 0; i < mult; ++i) prod = poly_mul(prod, f);
        out.factor_irreducible.push_back(poly_is_irreducible(f));
        out.factor_divides_target.push_back(poly_divides(f, target));
    }
    out.product_matches = prod == target;
    return out;
}

std::string format_poly(const PolyFp& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        const std::uint32_t coeff = f.c[i];
        if (coeff == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(coeff);
            continue;
        }
        if (coeff != 1) out += std::to_string(coeff);
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

PolyFp parse_poly(const std::string& text, std::uint32_t p) {
    auto bad = [&](std::size_t pos, const std::string& why) -> void {
        fail(errc::parse_error,
             "bad polynomial at position " + std::to_string(pos) + ": " + why + " in \"" + text + "\"");
    };
    std::size_t i = 0;
    const std::size_t len = text.size();
    auto skip_ws = [&] { while (i < len && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    PolyFp out{p, {}};
    long prev_exp = -1;
    bool first = true;
    skip_ws();
    if (i == len) bad(i, "empty polynomial");
    while (true) {
        skip_ws();
        const std::size_t term_pos = i;
        std::uint64_t coeff = 1;
        bool have_digits = false;
        std::uint64_t num = 0;
        while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
            num = num * 10 + (text[i] - '0');
            if (num > 1000000) bad(term_pos, "coefficient too large");
            have_digits = true;
            ++i;
        }
        std::uint64_t exp = 0;
        if (i < len && text[i] == 'x') {
            ++i;
            coeff = have_digits ? num : 1;
            exp = 1;
            if (i < len && text[i] == '^') {
                ++i;
                if (i >= len || !std::isdigit(static_cast<unsigned char>(text[i])))
                    bad(i, "missing exponent after '^'");
                std::uint64_t e = 0;
                while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    e = e * 10 + (text[i] - '0');
                    if (e > 1000000) bad(i, "exponent too large");
                    ++i;
                }
                exp = e;
            }
        } else {
            if (!have_digits) bad(term_pos, "expected a term");
            coeff = num;
        }
        if (coeff >= p)
            bad(term_pos, "coefficient " + std::to_string(coeff) + " not in [0, " +
                              std::to_string(p - 1) + "]");
        if (!first || len > 1 || coeff != 0) {
            if (coeff == 0 && !(first && exp == 0))
                bad(term_pos, "zero term");
        }
        if (!first && static_cast<long>(exp) >= prev_exp)
            bad(term_pos, "exponents must be strictly descending");
        prev_exp = static_cast<long>(exp);
        if (out.c.size() < exp + 1) out.c.resize(exp + 1, 0);
        out.c[exp] = static_cast<std::uint32_t>((out.c[exp] + coeff) % p);
        first = false;
        skip_ws();
        if (i == len) break;
        if (text[i] != '+') bad(i, "expected '+'");
        ++i;
        skip_ws();
        if (i == len) bad(i, "trailing '+'");
    }
    trim(out);
    return out;
}

std::vector<FixtureBlock> parse_fixture_file(const std::string& path, std::uint32_t p) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open fixture file: " + path);
    std::vector<FixtureBlock> blocks;
    FixtureBlock cur;
    bool open = false;
    std::string line;
    std::size_t lineno = 0;
    auto bad = [&](const std::string& why) -> void {
        fail(errc::parse_error, path + ":" + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line.front() == '[') {
            if (line.back() != ']') bad("unterminated block name");
            if (open) bad("previous block \"" + cur.name + "\" has no '=' target line");
            cur = FixtureBlock{};
            cur.name = line.substr(1, line.size() - 2);
            open = true;
            continue;
        }
        if (!open) bad("content before first [block]");
        if (line == "mode divides") {
            cur.divides_only = true;
            continue;
        }
        if (line.rfind("scalar ", 0) == 0) {
            cur.scalar = static_cast<std::uint32_t>(std::stoul(line.substr(7)));
            if (cur.scalar >= p) bad("scalar not in [0, p-1]");
            continue;
        }
        if (line.front() == '=') {
            cur.target = parse_poly(line.substr(1), p);
            blocks.push_back(std::move(cur));
            cur = FixtureBlock{};
            open = false;
            continue;
        }
        // factor line: "<poly> ^ <mult>", multiplicity optional
        std::uint32_t mult = 1;
        std::string poly_text = line;
        if (auto caret = line.rfind('^'); caret != std::string::npos) {
            // distinguish the multiplicity caret from exponent carets: the
            // multiplicity form has whitespace before '^'
            auto before = line.find_last_not_of(" \t", caret == 0 ? 0 : caret - 1);
            if (before != std::string::npos && before < caret - 1) {
                mult = static_cast<std::uint32_t>(std::stoul(line.substr(caret + 1)));
                poly_text = line.substr(0, before + 1);
            }
        }
        cur.factors.emplace_back(parse_poly(poly_text, p), mult);
    }
    if (open) bad("block \"" + cur.name + "\" has no '=' target line");
    return blocks;
}

} // namespace cyclotome
