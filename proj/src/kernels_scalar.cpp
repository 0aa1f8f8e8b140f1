#include "simplexopt/kernels.hpp"

namespace simplexopt {

void eval_block_scalar(const CompiledPolynomial& cp, const double* xs,
                       std::size_t stride, std::size_t count, double* out) {
    const std::size_t n_terms = cp.coeffs.size();
    for (std::size_t i = 0; i < count; ++i) {
        double acc = 0.0;
        for (std::size_t t = 0; t < n_terms; ++t) {
            double m = cp.coeffs[t];
            for (std::uint32_t f = cp.term_offsets[t];
                 f < cp.term_offsets[t + 1]; ++f)
                m *= xs[static_cast<std::size_t>(cp.factors[f]) * stride + i];
            acc += m;
        }
        out[i] = acc;
    }
}

}  // namespace simplexopt
