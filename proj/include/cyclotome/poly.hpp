#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclotome/cosets.hpp"
#include "cyclotome/gf.hpp"

namespace cyclotome {

// Dense polynomial over GF(p), ascending coefficients, no trailing zeros
// (the zero polynomial has an empty vector).
struct PolyFp {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> c;

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const PolyFp&) const = default;
};

// Polynomial over GF(p^m), ascending packed-key coefficients, no trailing
// zeros.  Always paired with the Field it lives in.
using PolyExt = std::vector<Field::elem>;

PolyFp poly_add(const PolyFp& a, const PolyFp& b);
PolyFp poly_sub(const PolyFp& a, const PolyFp& b);
PolyFp poly_mul(const PolyFp& a, const PolyFp& b);
PolyFp poly_scale(const PolyFp& a, std::uint32_t s);
// a = q*b + r with deg r < deg b; throws division_by_zero_poly for b = 0.
std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b);
// Monic gcd; poly_gcd(f, 0) is the monic scaling of f.
PolyFp poly_gcd(PolyFp a, PolyFp b);
// Whether d divides a exactly.
bool poly_divides(const PolyFp& d, const PolyFp& a);
// x^e as a PolyFp over GF(p).
PolyFp poly_xpow(std::uint32_t p, std::size_t e);
Field::elem poly_eval(const PolyFp& f, const Field& F, Field::elem x);

PolyExt ext_mul(const PolyExt& a, const PolyExt& b, const Field& F);
Field::elem ext_eval(const PolyExt& f, const Field& F, Field::elem x);

// Pinned irreducibility test over GF(p): degree 1 is irreducible, degrees 2-3
// by root search, degrees >= 4 by gcd(f, x^{p^k} - x) = const for k <= deg/2.
bool poly_is_irreducible(const PolyFp& f);

// Minimal polynomial of beta^j over GF(p): prod over the coset of j of
// (x - beta^i), computed in the extension, coefficients projected back to the
// base field.  Throws coefficient_not_in_base_field if any product
// coefficient fails to land in GF(p) (a field-construction bug, not a user
// error).
PolyFp minimal_polynomial(std::uint64_t j, const Field& F);

struct GeneratorResult {
    PolyFp g;
    std::vector<CosetView> cosets;         // one per distinct coset, in first-seen order
    std::vector<std::uint64_t> collapsed;  // exponents dropped as duplicates of an earlier coset
};

// Product of the distinct minimal polynomials of the given exponents.
// Exponents in the same coset collapse with a warning entry, not an error.
GeneratorResult generator_polynomial(const std::vector<std::uint64_t>& exponents, const Field& F);

struct FactorizationCheck {
    bool product_matches = false;            // scalar * prod factor^mult == target
    std::vector<bool> factor_irreducible;    // per listed factor
    std::vector<bool> factor_divides_target; // per listed factor
};

// Multiply-back verification of a stated factorization over GF(p).
FactorizationCheck verify_factorization(std::uint32_t scalar,
                                        const std::vector<std::pair<PolyFp, std::uint32_t>>& factors,
                                        const PolyFp& target);

// Canonical text form: descending powers, zero terms omitted, coefficient 1
// and exponents 0/1 written conventionally (e.g. "x^9+3x^8+...+6x+1", "0").
std::string format_poly(const PolyFp& f);
// Parses the canonical form; coefficients must lie in [0, p-1].  Throws
// parse_error with the offending position in the message.
PolyFp parse_poly(const std::string& text, std::uint32_t p);

// One block of the factorization fixture file.
struct FixtureBlock {
    std::string name;
    bool divides_only = false; // "mode divides": check factor | target only
    std::uint32_t scalar = 1;
    std::vector<std::pair<PolyFp, std::uint32_t>> factors;
    PolyFp target;
};

// Fixture file: blocks introduced by "[name]", optionally "mode divides",
// then "scalar <c>", factor lines "<poly> ^ <mult>", and a final
// "= <target>" line.  '#' starts a comment.  All polynomials share one p.
std::vector<FixtureBlock> parse_fixture_file(const std::string& path, std::uint32_t p);

} // namespace cyclotome
