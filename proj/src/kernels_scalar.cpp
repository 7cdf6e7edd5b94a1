#include "cyclotome/kernels.hpp"

namespace cyclotome::kernels {

void exp_map_scalar(std::uint32_t start, std::uint32_t step, std::uint32_t n, std::uint32_t* out,
                    std::size_t count) {
    std::uint32_t v = start;
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = v;
        v += step;
        if (v >= n) v -= n;
    }
}

void gather_scalar(const std::uint32_t* table, const std::uint32_t* idx, std::uint32_t* out,
                   std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) out[i] = table[idx[i]];
}

void add_base_const_scalar(const std::uint32_t* keys, std::uint32_t c, std::uint32_t p,
                           std::uint32_t* out, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        std::uint32_t k = keys[i];
        std::uint32_t d0 = k % p;
        std::uint32_t nd = d0 + c;
        if (nd >= p) nd -= p;
        out[i] = k - d0 + nd;
    }
}

} // namespace cyclotome::kernels
