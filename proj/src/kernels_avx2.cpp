#include "simplexopt/kernels.hpp"

#include <immintrin.h>

namespace simplexopt {

// Four points per vector, one lane per point. Plain mul/add only: each lane
// runs the same IEEE operation sequence as eval_block_scalar, so results are
// bit-identical to the scalar kernel.
void eval_block_avx2(const CompiledPolynomial& cp, const double* xs,
                     std::size_t stride, std::size_t count, double* out) {
    const std::size_t n_terms = cp.coeffs.size();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t t = 0; t < n_terms; ++t) {
            __m256d m = _mm256_set1_pd(cp.coeffs[t]);
            for (std::uint32_t f = cp.term_offsets[t];
                 f < cp.term_offsets[t + 1]; ++f) {
                const double* col =
                    xs + static_cast<std::size_t>(cp.factors[f]) * stride + i;
                m = _mm256_mul_pd(m, _mm256_loadu_pd(col));
            }
            acc = _mm256_add_pd(acc, m);
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (i < count) eval_block_scalar(cp, xs + i, stride, count - i, out + i);
}

}  // namespace simplexopt
