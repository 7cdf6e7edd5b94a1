#include "cyclotome/kernels.hpp"

namespace cyclotome::kernels {

CpuCapabilities detect_cpu() {
    CpuCapabilities caps;
#if defined(CYCLOTOME_HAVE_AVX2)
    caps.avx2 = __builtin_cpu_supports("avx2");
#endif
    return caps;
}

exp_map_fn get_exp_map(bool force_scalar) {
#if defined(CYCLOTOME_HAVE_AVX2)
    if (!force_scalar && detect_cpu().avx2) return exp_map_avx2;
#endif
    (void)force_scalar;
    return exp_map_scalar;
}

gather_fn get_gather(bool force_scalar) {
#if defined(CYCLOTOME_HAVE_AVX2)
    if (!force_scalar && detect_cpu().avx2) return gather_avx2;
#endif
    (void)force_scalar;
    return gather_scalar;
}

add_base_const_fn get_add_base_const(bool force_scalar) {
#if defined(CYCLOTOME_HAVE_AVX2)
    if (!force_scalar && detect_cpu().avx2) return add_base_const_avx2;
#endif
    (void)force_scalar;
    return add_base_const_scalar;
}

} // namespace cyclotome::kernels
