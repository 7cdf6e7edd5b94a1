#pragma once

#include <stdexcept>
#include <string>

namespace cyclotome {

// Every failure the library can signal, one enumerator per distinct condition.
// CLI layers map these onto exit codes; tests match on the enumerator instead
// of parsing message text.
enum class errc {
    non_prime_p,
    modulus_not_irreducible,
    modulus_not_primitive,
    table_budget_exceeded,
    division_by_zero,
    four_does_not_divide_order,
    zero_argument,
    bad_modulus,
    out_of_range,
    no_solution,
    division_by_zero_poly,
    coefficient_not_in_base_field,
    parse_error,
    wrong_zero_pattern,
    too_large,
    message_too_long,
    precondition_violated,
};

// Exception carrying a machine-checkable code alongside the human message.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace cyclotome
