#pragma once

#include <cstddef>
#include <cstdint>

namespace cyclotome::kernels {

// Bulk array primitives behind the search loops.  Each has a scalar reference
// implementation and, on x86-64 builds, an AVX2 variant; get_* returns the
// best available at runtime (or the scalar one when force_scalar is set, so
// equivalence tests can compare the two on identical inputs).

struct CpuCapabilities {
    bool avx2 = false;
};

// Queries the running CPU once per call; cheap enough to call freely.
CpuCapabilities detect_cpu();

// out[i] = (start + i * step) mod n, for i in [0, count).  Computes the
// exponent ladder i -> i*t mod n that turns a discrete-log index into the
// index of x^t.  Requires 0 < n, start < n, step < n.
using exp_map_fn = void (*)(std::uint32_t start, std::uint32_t step, std::uint32_t n,
                            std::uint32_t* out, std::size_t count);

// out[i] = table[idx[i]].  Table lookups over precomputed index arrays
// (antilog of an exponent ladder, log of a shifted-element array).
using gather_fn = void (*)(const std::uint32_t* table, const std::uint32_t* idx,
                           std::uint32_t* out, std::size_t count);

// out[i] = keys[i] with its base-p digit 0 replaced by (digit0 + c) mod p —
// packed-key addition of the base-field constant c (e.g. x -> x + 3 over a
// whole table).  Requires 0 < p < 2^11, c < p, keys < 2^22.
using add_base_const_fn = void (*)(const std::uint32_t* keys, std::uint32_t c, std::uint32_t p,
                                   std::uint32_t* out, std::size_t count);

exp_map_fn get_exp_map(bool force_scalar = false);
gather_fn get_gather(bool force_scalar = false);
add_base_const_fn get_add_base_const(bool force_scalar = false);

// Scalar reference implementations, exposed directly for equivalence tests.
void exp_map_scalar(std::uint32_t start, std::uint32_t step, std::uint32_t n, std::uint32_t* out,
                    std::size_t count);
void gather_scalar(const std::uint32_t* table, const std::uint32_t* idx, std::uint32_t* out,
                   std::size_t count);
void add_base_const_scalar(const std::uint32_t* keys, std::uint32_t c, std::uint32_t p,
                           std::uint32_t* out, std::size_t count);

#if defined(CYCLOTOME_HAVE_AVX2)
void exp_map_avx2(std::uint32_t start, std::uint32_t step, std::uint32_t n, std::uint32_t* out,
                  std::size_t count);
void gather_avx2(const std::uint32_t* table, const std::uint32_t* idx, std::uint32_t* out,
                 std::size_t count);
void add_base_const_avx2(const std::uint32_t* keys, std::uint32_t c, std::uint32_t p,
                         std::uint32_t* out, std::size_t count);
#endif

} // namespace cyclotome::kernels
