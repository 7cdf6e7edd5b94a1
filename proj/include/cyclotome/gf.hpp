#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotome/errors.hpp"

namespace cyclotome {

// Finite field GF(p^m) for odd prime p, realized with full log/antilog tables.
//
// Elements are packed base-p digit keys: the element sum d_i * omega^i (digits
// ascending) has key sum d_i * p^i, a dense bijection with [0, q-1].  Key 0 is
// the zero element, keys 1..p-1 are the base field, and omega itself is key p.
// The modulus must be primitive, so omega (the class of the indeterminate)
// generates the multiplicative group of order n = q - 1.
//
// Immutable after construction; all methods are const and safe to call from
// any number of threads concurrently.
class Field {
  public:
    using elem = std::uint32_t;

    static constexpr std::uint64_t kDefaultTableBudget = 1u << 22;

    // Effective table cap: CYCLOTOME_TABLE_BUDGET from the environment when
    // set to a positive integer, else kDefaultTableBudget.
    static std::uint64_t table_budget_from_env();

    // Builds GF(p^m) from an explicit modulus given as ascending coefficients
    // (size m+1, monic).  Throws non_prime_p, precondition_violated (modulus
    // shape), modulus_not_irreducible, modulus_not_primitive, or
    // table_budget_exceeded.
    Field(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus,
          std::uint64_t table_budget = table_budget_from_env());

    // Builds GF(p^m) with the default modulus: the lexicographically smallest
    // monic primitive polynomial of degree m, comparing coefficient vectors
    // from the constant term upward.
    Field(std::uint32_t p, std::uint32_t m, std::uint64_t table_budget = table_budget_from_env());

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    // Field size q = p^m.
    std::uint32_t q() const { return q_; }
    // Multiplicative group order n = q - 1.
    std::uint32_t n() const { return n_; }
    // Ascending modulus coefficients, size m+1, monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    // The field generator: class of the indeterminate, key p.
    elem omega() const { return antilog_[1]; }

    elem add(elem a, elem b) const;
    elem neg(elem a) const;
    elem sub(elem a, elem b) const { return add(a, neg(b)); }
    elem mul(elem a, elem b) const;
    // Throws division_by_zero for a = 0.
    elem inv(elem a) const;
    // Throws division_by_zero for b = 0; div(0, b) = 0.
    elem div(elem a, elem b) const;
    // Any integer exponent; negative means inverse.  pow(0, 0) = 1,
    // pow(0, e>0) = 0, pow(0, e<0) throws division_by_zero.
    elem pow(elem a, std::int64_t e) const;

    // Embeds an integer into the base field: v mod p.
    elem from_int(std::uint64_t v) const { return static_cast<elem>(v % p_); }
    // omega^i with i reduced mod n.
    elem antilog(std::uint64_t i) const { return antilog_[i % n_]; }
    // Discrete log base omega, in [0, n-1].  Throws zero_argument for 0.
    std::uint32_t log(elem a) const;

    // Quadratic character mu: 0 for the zero element, +1 for nonzero squares
    // (even log), -1 for nonsquares (odd log).
    int quadratic_character(elem a) const;
    // Exponent class k in {0,1,2,3} with eta(y) = zeta^k, i.e. log(y) mod 4.
    // Requires 4 | n (four_does_not_divide_order) and y != 0 (zero_argument).
    std::uint32_t quartic_class(elem y) const;
    // zeta = omega^(n/4), a primitive fourth root of unity; requires 4 | n.
    elem zeta() const;

    // Base-p digits of a key, ascending, length m.
    std::vector<std::uint32_t> digits(elem a) const;
    // Packs ascending digits (each < p, at most m of them) into a key.
    elem from_digits(const std::vector<std::uint32_t>& d) const;

    // Raw table access for bulk kernels: antilog_table()[i] = key of omega^i
    // (length n), log_table()[key] = log for nonzero keys (length q, entry 0
    // is an unused sentinel).
    const std::uint32_t* antilog_table() const { return antilog_.data(); }
    const std::uint32_t* log_table() const { return log_.data(); }

  private:
    void validate_and_build(const std::vector<std::uint32_t>& modulus, std::uint64_t table_budget);

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> log_;
};

} // namespace cyclotome
