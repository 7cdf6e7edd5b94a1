#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclotome/gf.hpp"
#include "cyclotome/poly.hpp"

namespace cyclotome {

// Knobs shared by the search operations.  Defaults match the CLI defaults so
// library users and CLI runs agree byte-for-byte.
struct SearchConfig {
    std::uint32_t workers = 0;                 // 0 = hardware concurrency
    std::uint64_t weight4_budget = 1ull << 26; // max in-memory pair-map entries
    std::uint32_t oracle_limit = 300;          // max n for the naive oracle
    bool force_scalar_kernels = false;         // pin the scalar kernel variants
};

// Cyclic code over GF(p) of length n = p^m - 1 with the given zero exponents:
// g(x) is the product of the distinct minimal polynomials of beta^e.
struct CyclicCode {
    const Field* field = nullptr;
    std::vector<std::uint64_t> zeros; // requested exponents, deduplicated by coset, in order
    GeneratorResult gen;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
};

CyclicCode build_code(const Field& F, const std::vector<std::uint64_t>& exponents);

// A low-weight codeword: coefficient coeffs[i] at position supports[i]
// (exponent of beta), supports strictly ascending, coeffs nonzero, and the
// coefficient at the smallest support normalized to 1.
struct Witness {
    std::vector<std::uint32_t> supports;
    std::vector<std::uint32_t> coeffs;
};

struct DistanceReport {
    int d = 0;                      // the distance (exact) or a lower bound
    bool exact = false;             // false: no witness found, d means ">= d"
    std::optional<Witness> witness; // present iff exact
    std::string method;             // "fast-search" or "oracle"

    std::string verdict() const { return exact ? std::to_string(d) : ">=" + std::to_string(d); }
};

// Weight-w codeword search for codes whose zeros are exponent 0 plus one or
// two further exponents — the (0, s) and (0, s, t) shapes.  Returns
// the lexicographically smallest witness (sorted supports, then coefficient
// vector) or nullopt.  Throws wrong_zero_pattern for other zero sets.
std::optional<Witness> has_weight_leq(const CyclicCode& code, int w,
                                      const SearchConfig& cfg = {});

// Meet-in-the-middle weight-4 search under the same zero-pattern contract.
// Falls back to a streamed key-range partition when the pair map would
// exceed cfg.weight4_budget entries.
std::optional<Witness> find_weight4(const CyclicCode& code, const SearchConfig& cfg = {});

// Runs the weight-1..3 exclusions then the weight-4 search; d = 5 means no
// codeword of weight <= 4 exists.
DistanceReport min_distance_upto4(const CyclicCode& code, const SearchConfig& cfg = {});

// Naive oracle: enumerates every support set of size <= max_w and every
// coefficient pattern (first coefficient normalized to 1), checking all
// parity equations by direct field evaluation.  Works for any zero set.
// Throws too_large when n exceeds cfg.oracle_limit.
DistanceReport oracle_distance(const CyclicCode& code, int max_w = 4,
                               const SearchConfig& cfg = {});

// Largest d whose sphere-packing (Hamming) bound is consistent with an
// (n, k) p-ary code, additionally capped by the Singleton bound
// d <= n - k + 1.  Diagnostic only; never used to assert optimality.
std::uint32_t sphere_packing_max_d(std::uint64_t n, std::uint64_t k, std::uint32_t p);

// codeword = message * g, as a length-n coefficient vector.  Throws
// message_too_long when deg(message) >= k.
std::vector<std::uint32_t> encode(const CyclicCode& code, const PolyFp& message);

// Evaluations of the word polynomial at each zero beta^e; all-zero exactly
// for codewords.
std::vector<Field::elem> syndrome(const CyclicCode& code, const std::vector<std::uint32_t>& word);

// Whether a witness's codeword really lies in the code (checks every zero).
bool witness_is_valid(const CyclicCode& code, const Witness& w);

// values[i] = key of omega^(log_shift + i*e) for i in [0, n): the column of
// c * x^e swept over the whole group when log_shift = log(c).  Built with the
// bulk kernels; shared by the searches and the condition checker.
std::vector<std::uint32_t> power_column(const Field& F, std::uint32_t e, std::uint32_t log_shift,
                                        const SearchConfig& cfg);

} // namespace cyclotome
