#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "simplexopt/polynomial.hpp"

namespace simplexopt {

/// Flattened evaluation form of a sparse polynomial.
///
/// Term t covers factors[term_offsets[t] .. term_offsets[t+1]); each entry is
/// a variable index, repeated exponent-many times, in ascending variable
/// order. Evaluation of one point is
///
///   acc = 0; for t: m = coeffs[t]; for f in term t: m *= x[factors[f]];
///   acc += m
///
/// Every kernel performs exactly this operation sequence per point, so
/// scalar and SIMD variants produce bit-identical values lane for lane.
struct CompiledPolynomial {
    int n_vars = 0;
    std::vector<double> coeffs;
    std::vector<std::uint32_t> term_offsets;
    std::vector<std::uint32_t> factors;

    static CompiledPolynomial from(const Polynomial& p);
};

/// Evaluates `count` points stored column-major: xs[v * stride + i] is
/// coordinate v of point i. Results go to out[0..count).
using EvalBlockFn = void (*)(const CompiledPolynomial& cp, const double* xs,
                             std::size_t stride, std::size_t count,
                             double* out);

void eval_block_scalar(const CompiledPolynomial& cp, const double* xs,
                       std::size_t stride, std::size_t count, double* out);

#if SIMPLEXOPT_HAVE_AVX2
void eval_block_avx2(const CompiledPolynomial& cp, const double* xs,
                     std::size_t stride, std::size_t count, double* out);
#endif

enum class KernelKind { Auto, Scalar, Avx2 };

/// True when the AVX2 variant is both compiled in and supported by the CPU.
bool avx2_available();

/// Resolves Auto to the widest available variant at runtime. Requesting
/// Avx2 on a machine without it throws.
EvalBlockFn select_kernel(KernelKind kind);
KernelKind resolve_kernel(KernelKind kind);

const char* kernel_name(KernelKind kind);
KernelKind parse_kernel_name(const std::string& name);

}  // namespace simplexopt
