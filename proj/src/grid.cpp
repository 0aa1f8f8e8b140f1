#include "simplexopt/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <thread>

namespace simplexopt {

std::vector<double> GridPoint::coords() const {
    std::vector<double> x(counts.size());
    const double r = static_cast<double>(denominator);
    for (std::size_t i = 0; i < counts.size(); ++i)
        x[i] = static_cast<double>(counts[i]) / r;
    return x;
}

std::string GridPoint::to_string() const {
    std::string s;
    char buf[32];
    for (std::size_t i = 0; i < counts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%u/%u", i ? " " : "", counts[i],
                      denominator);
        s += buf;
    }
    return s;
}

std::uint64_t grid_size(int n, int r) {
    if (n < 1 || r < 1)
        throw std::invalid_argument("grid_size requires n >= 1 and r >= 1");
    // binomial(n + r - 1, r), exact at every step.
    const std::uint64_t m = static_cast<std::uint64_t>(n) + r - 1;
    std::uint64_t k = std::min<std::uint64_t>(r, m - r);
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t next;
        if (__builtin_mul_overflow(c, m - k + i, &next))
            throw std::overflow_error("grid size exceeds 64-bit range");
        c = next / i;
    }
    return c;
}

CompositionEnumerator::CompositionEnumerator(int n, int r) {
    if (n < 1 || r < 0)
        throw std::invalid_argument("composition enumeration needs n >= 1, r >= 0");
    counts_.assign(n, 0);
    counts_.back() = static_cast<std::uint32_t>(r);
}

void CompositionEnumerator::advance() {
    // Lexicographic successor: bump the rightmost position (excluding the
    // last) that has mass strictly to its right, then push the remaining
    // mass all the way right.
    const int n = static_cast<int>(counts_.size());
    std::uint32_t suffix = 0;
    for (int i = n - 1; i >= 1; --i) {
        suffix += counts_[i];
        if (suffix > 0) {
            counts_[i - 1] += 1;
            for (int j = i; j < n; ++j) counts_[j] = 0;
            counts_[n - 1] = suffix - 1;
            return;
        }
    }
    done_ = true;
}

void for_each_grid_point(int n, int r,
                         const std::function<void(const GridPoint&)>& fn) {
    if (r < 1) throw std::invalid_argument("grid denominator must be >= 1");
    GridPoint gp;
    gp.denominator = static_cast<std::uint32_t>(r);
    for (CompositionEnumerator e(n, r); !e.done(); e.advance()) {
        gp.counts = e.current();
        fn(gp);
    }
}

BudgetExceededError::BudgetExceededError(std::uint64_t required_,
                                         std::uint64_t budget_)
    : std::runtime_error("grid scan needs " + std::to_string(required_) +
                         " evaluations, budget is " + std::to_string(budget_)),
      required(required_),
      budget(budget_) {}

namespace {

struct BestPoint {
    double value = 0.0;
    std::vector<std::uint32_t> counts;
    bool valid = false;

    // Total order: value first, then lexicographic counts. `sign` is +1 for
    // minimization, -1 for maximization; ties always keep the
    // lexicographically smallest counts.
    void consider(double v, const std::vector<std::uint32_t>& c, double sign) {
        if (!valid || sign * v < sign * value ||
            (v == value && c < counts)) {
            value = v;
            counts = c;
            valid = true;
        }
    }
    void merge(const BestPoint& other, double sign) {
        if (other.valid) consider(other.value, other.counts, sign);
    }
};

constexpr std::size_t kBlockSize = 256;

// Scans all compositions with a fixed leading coordinate, batching points
// into a column-major block for the evaluation kernel.
void scan_leading_block(const CompiledPolynomial& cp, EvalBlockFn kernel,
                        int n, int r, std::uint32_t leading, double sign,
                        BestPoint& best) {
    const double rd = static_cast<double>(r);
    std::vector<double> xs(static_cast<std::size_t>(n) * kBlockSize);
    std::vector<double> vals(kBlockSize);
    std::vector<std::vector<std::uint32_t>> pts(kBlockSize);

    std::size_t filled = 0;
    auto flush = [&] {
        if (filled == 0) return;
        kernel(cp, xs.data(), kBlockSize, filled, vals.data());
        for (std::size_t i = 0; i < filled; ++i)
            best.consider(vals[i], pts[i], sign);
        filled = 0;
    };

    auto emit = [&](const std::vector<std::uint32_t>& counts) {
        for (int v = 0; v < n; ++v)
            xs[static_cast<std::size_t>(v) * kBlockSize + filled] =
                static_cast<double>(counts[v]) / rd;
        pts[filled] = counts;
        if (++filled == kBlockSize) flush();
    };

    if (n == 1) {
        emit({static_cast<std::uint32_t>(r)});
    } else {
        std::vector<std::uint32_t> counts(n);
        counts[0] = leading;
        const int rest = r - static_cast<int>(leading);
        for (CompositionEnumerator e(n - 1, rest); !e.done(); e.advance()) {
            std::copy(e.current().begin(), e.current().end(),
                      counts.begin() + 1);
            emit(counts);
        }
    }
    flush();
}

GridOptimum grid_extremum(const Polynomial& p, int r,
                          const GridSearchOptions& opts, double sign) {
    const int n = p.n_vars();
    const std::uint64_t total = grid_size(n, r);
    if (total > opts.eval_budget)
        throw BudgetExceededError(total, opts.eval_budget);

    const CompiledPolynomial cp = CompiledPolynomial::from(p);
    const EvalBlockFn kernel = select_kernel(opts.kernel);

    unsigned hw = std::thread::hardware_concurrency();
    unsigned want = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                     : (hw ? hw : 1u);
    const unsigned n_blocks = (n == 1) ? 1u : static_cast<unsigned>(r) + 1u;
    const unsigned n_threads = std::max(1u, std::min(want, n_blocks));

    std::vector<BestPoint> bests(n_blocks);
    if (n_threads == 1) {
        for (unsigned b = 0; b < n_blocks; ++b)
            scan_leading_block(cp, kernel, n, r, b, sign, bests[b]);
    } else {
        std::atomic<unsigned> next{0};
        auto worker = [&] {
            for (unsigned b = next.fetch_add(1); b < n_blocks;
                 b = next.fetch_add(1))
                scan_leading_block(cp, kernel, n, r, b, sign, bests[b]);
        };
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    BestPoint best;
    for (const auto& b : bests) best.merge(b, sign);

    GridOptimum out;
    out.value = best.value;
    out.argmin.counts = std::move(best.counts);
    out.argmin.denominator = static_cast<std::uint32_t>(r);
    out.evaluations = total;
    return out;
}

}  // namespace

GridOptimum grid_min(const Polynomial& p, int r, const GridSearchOptions& opts) {
    if (r < 1) throw std::invalid_argument("grid denominator must be >= 1");
    return grid_extremum(p, r, opts, +1.0);
}

GridOptimum grid_max(const Polynomial& p, int r, const GridSearchOptions& opts) {
    if (r < 1) throw std::invalid_argument("grid denominator must be >= 1");
    return grid_extremum(p, r, opts, -1.0);
}

GridPoint nearest_grid_point(std::span<const double> x, int r) {
    if (r < 1) throw std::invalid_argument("grid denominator must be >= 1");
    double sum = 0.0;
    for (double xi : x) {
        if (xi < -kSupportTol)
            throw std::invalid_argument("point has a negative coordinate");
        sum += xi;
    }
    if (std::abs(sum - 1.0) > kSimplexSumTol)
        throw std::invalid_argument("point coordinates do not sum to 1");

    const int n = static_cast<int>(x.size());
    const double rd = static_cast<double>(r);
    GridPoint gp;
    gp.denominator = static_cast<std::uint32_t>(r);
    gp.counts.assign(n, 0);

    std::vector<std::pair<double, int>> fracs;  // (fractional part, index)
    std::uint32_t assigned = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] <= kSupportTol) continue;  // off-support stays exactly zero
        const double scaled = rd * x[i];
        double fl = std::floor(scaled);
        if (fl > rd) fl = rd;
        gp.counts[i] = static_cast<std::uint32_t>(fl);
        assigned += gp.counts[i];
        fracs.emplace_back(scaled - fl, i);
    }
    if (fracs.empty())
        throw std::invalid_argument("point has empty support");
    if (assigned > static_cast<std::uint32_t>(r))
        throw std::invalid_argument("point is too far off the simplex to round");

    // Hand the deficit to the largest fractional parts, smallest index first
    // on ties.
    std::uint32_t deficit = static_cast<std::uint32_t>(r) - assigned;
    if (deficit > fracs.size())
        throw std::invalid_argument("point is too far off the simplex to round");
    std::sort(fracs.begin(), fracs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (std::uint32_t k = 0; k < deficit; ++k) gp.counts[fracs[k].second] += 1;
    return gp;
}

}  // namespace simplexopt
