#include "simplexopt/kernels.hpp"

#include <stdexcept>

namespace simplexopt {

CompiledPolynomial CompiledPolynomial::from(const Polynomial& p) {
    CompiledPolynomial cp;
    cp.n_vars = p.n_vars();
    cp.term_offsets.push_back(0);
    for (const auto& [e, c] : p.terms()) {
        cp.coeffs.push_back(c);
        for (std::uint32_t v = 0; v < e.size(); ++v)
            for (std::uint32_t k = 0; k < e[v]; ++k) cp.factors.push_back(v);
        cp.term_offsets.push_back(static_cast<std::uint32_t>(cp.factors.size()));
    }
    return cp;
}

bool avx2_available() {
#if SIMPLEXOPT_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

KernelKind resolve_kernel(KernelKind kind) {
    switch (kind) {
        case KernelKind::Auto:
            return avx2_available() ? KernelKind::Avx2 : KernelKind::Scalar;
        case KernelKind::Avx2:
            if (!avx2_available())
                throw std::runtime_error("AVX2 kernel requested but unavailable");
            return KernelKind::Avx2;
        case KernelKind::Scalar:
            return KernelKind::Scalar;
    }
    return KernelKind::Scalar;
}

EvalBlockFn select_kernel(KernelKind kind) {
    switch (resolve_kernel(kind)) {
        case KernelKind::Avx2:
#if SIMPLEXOPT_HAVE_AVX2
            return &eval_block_avx2;
#else
            break;
#endif
        default:
            break;
    }
    return &eval_block_scalar;
}

const char* kernel_name(KernelKind kind) {
    switch (kind) {
        case KernelKind::Auto:
            return "auto";
        case KernelKind::Scalar:
            return "scalar";
        case KernelKind::Avx2:
            return "avx2";
    }
    return "scalar";
}

KernelKind parse_kernel_name(const std::string& name) {
    if (name == "auto") return KernelKind::Auto;
    if (name == "scalar") return KernelKind::Scalar;
    if (name == "avx2") return KernelKind::Avx2;
    throw std::invalid_argument("unknown kernel name: " + name);
}

}  // namespace simplexopt
