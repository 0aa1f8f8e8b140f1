#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplexopt/kernels.hpp"
#include "simplexopt/polynomial.hpp"

namespace simplexopt {

/// A point of the rational grid: integer counts summing to `denominator`,
/// representing counts / denominator on the simplex.
struct GridPoint {
    std::vector<std::uint32_t> counts;
    std::uint32_t denominator = 1;

    std::vector<double> coords() const;
    /// Renders as "a1/r a2/r ... an/r".
    std::string to_string() const;
};

/// Number of grid points with denominator r in n variables,
/// binomial(n + r - 1, r). Throws std::overflow_error beyond 64 bits.
std::uint64_t grid_size(int n, int r);

/// Enumerates the compositions of r into n nonnegative parts in ascending
/// lexicographic order: (0,...,0,r) first, (r,0,...,0) last.
class CompositionEnumerator {
public:
    CompositionEnumerator(int n, int r);
    bool done() const { return done_; }
    const std::vector<std::uint32_t>& current() const { return counts_; }
    void advance();

private:
    std::vector<std::uint32_t> counts_;
    bool done_ = false;
};

void for_each_grid_point(
    int n, int r, const std::function<void(const GridPoint&)>& fn);

struct GridOptimum {
    double value = 0.0;
    GridPoint argmin;  // lexicographically smallest counts among ties
    std::uint64_t evaluations = 0;
};

struct GridSearchOptions {
    std::uint64_t eval_budget = 100'000'000;
    int threads = 0;  // 0 = hardware concurrency
    KernelKind kernel = KernelKind::Auto;
};

/// Raised when a scan would exceed the evaluation budget; carries the exact
/// number of evaluations the refused scan would need.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(std::uint64_t required, std::uint64_t budget);
    std::uint64_t required;
    std::uint64_t budget;
};

/// Exact minimum of p over the grid with denominator r, by exhaustive
/// evaluation. The scan is partitioned over worker threads by leading
/// coordinate; the reduction's total order (value, then lexicographic
/// counts) makes the result identical for any worker count.
GridOptimum grid_min(const Polynomial& p, int r,
                     const GridSearchOptions& opts = {});
GridOptimum grid_max(const Polynomial& p, int r,
                     const GridSearchOptions& opts = {});

/// Rounds a simplex point to a grid point with denominator r by largest
/// remainder on the support of x: the result keeps support(x) and satisfies
/// max-norm error <= (1/r) * (1 - 1/|support|). Coordinates at or below
/// kSupportTol count as zero; throws if x is not on the simplex within
/// kSimplexSumTol.
GridPoint nearest_grid_point(std::span<const double> x, int r);

}  // namespace simplexopt
