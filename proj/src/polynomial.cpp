#include "simplexopt/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace simplexopt {

namespace {

std::uint32_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

void check_dimension(const Polynomial& p, std::span<const double> x) {
    if (static_cast<int>(x.size()) != p.n_vars())
        throw std::invalid_argument("point dimension " +
                                    std::to_string(x.size()) +
                                    " does not match polynomial with " +
                                    std::to_string(p.n_vars()) + " variables");
}

// p * coeff * x^shift, appended into out.
void add_shifted(Polynomial& out, const Polynomial& p, const Exponents& shift,
                 double coeff) {
    for (const auto& [e, c] : p.terms()) {
        Exponents merged(e);
        for (std::size_t i = 0; i < merged.size(); ++i) merged[i] += shift[i];
        out.add_term(merged, c * coeff);
    }
}

// Exact factorials up to 20! (the largest that fits in 64 bits).
std::uint64_t factorial_u64(int k) {
    if (k < 0 || k > 20)
        throw std::invalid_argument("factorial argument out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t binomial_u64(std::uint64_t m, std::uint64_t k) {
    if (k > m) return 0;
    k = std::min(k, m - k);
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // Exact at every step: c * (m-k+i) is divisible by i here.
        std::uint64_t next;
        if (__builtin_mul_overflow(c, m - k + i, &next))
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        c = next / i;
    }
    return c;
}

}  // namespace

Polynomial::Polynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1)
        throw std::invalid_argument("polynomial needs at least one variable");
}

Polynomial::Polynomial(int n_vars,
                       std::initializer_list<std::pair<Exponents, double>> terms)
    : Polynomial(n_vars) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

int Polynomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return static_cast<int>(d);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

void Polynomial::add_term(const Exponents& exps, double coeff) {
    if (static_cast<int>(exps.size()) != n_vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (coeff == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0) terms_.erase(it);
    }
}

double Polynomial::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::operator()(std::span<const double> x) const {
    check_dimension(*this, x);
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            for (std::uint32_t k = 0; k < e[v]; ++k) m *= x[v];
        acc += m;
    }
    return acc;
}

double eval(const Polynomial& p, std::span<const double> x) { return p(x); }

Polynomial derivative(const Polynomial& p, int var) {
    if (var < 0 || var >= p.n_vars())
        throw std::invalid_argument("derivative variable index out of range");
    Polynomial out(p.n_vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        Exponents de(e);
        de[var] -= 1;
        out.add_term(de, c * static_cast<double>(e[var]));
    }
    return out;
}

std::vector<double> gradient(const Polynomial& p, std::span<const double> x) {
    check_dimension(p, x);
    const int n = p.n_vars();
    std::vector<double> g(n, 0.0);
    for (const auto& [e, c] : p.terms()) {
        for (int v = 0; v < n; ++v) {
            if (e[v] == 0) continue;
            double m = c * static_cast<double>(e[v]);
            for (int u = 0; u < n; ++u) {
                const std::uint32_t pow = e[u] - (u == v ? 1u : 0u);
                for (std::uint32_t k = 0; k < pow; ++k) m *= x[u];
            }
            g[v] += m;
        }
    }
    return g;
}

std::vector<double> hessian(const Polynomial& p, std::span<const double> x) {
    check_dimension(p, x);
    const int n = p.n_vars();
    std::vector<double> h(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const double factor =
                    (i == j) ? static_cast<double>(e[i]) * (e[i] - 1.0)
                             : static_cast<double>(e[i]) * e[j];
                if (factor == 0.0) continue;
                double m = c * factor;
                for (int u = 0; u < n; ++u) {
                    std::uint32_t pow = e[u];
                    if (u == i) pow -= 1;
                    if (u == j) pow -= 1;
                    for (std::uint32_t k = 0; k < pow; ++k) m *= x[u];
                }
                h[static_cast<std::size_t>(i) * n + j] += m;
                if (i != j) h[static_cast<std::size_t>(j) * n + i] += m;
            }
        }
    }
    return h;
}

Polynomial homogenize(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("cannot homogenize the zero polynomial");
    const int n = p.n_vars();
    const int d = p.degree();

    // Powers of the linear form x_1 + ... + x_n up to d.
    std::vector<Polynomial> sum_pow;
    sum_pow.emplace_back(n, std::initializer_list<std::pair<Exponents, double>>{
                                {Exponents(n, 0), 1.0}});
    Polynomial lin(n);
    for (int v = 0; v < n; ++v) {
        Exponents e(n, 0);
        e[v] = 1;
        lin.add_term(e, 1.0);
    }
    for (int k = 1; k <= d; ++k) {
        Polynomial next(n);
        for (const auto& [e, c] : sum_pow.back().terms())
            add_shifted(next, lin, e, c);
        sum_pow.push_back(std::move(next));
    }

    Polynomial out(n);
    for (const auto& [e, c] : p.terms()) {
        const int gap = d - static_cast<int>(total_degree(e));
        add_shifted(out, sum_pow[gap], e, c);
    }
    return out;
}

Polynomial restrict_to_support(const Polynomial& p,
                               std::span<const int> support) {
    if (support.empty())
        throw std::invalid_argument("support set must be nonempty");
    std::vector<int> var_of(p.n_vars(), -1);
    int prev = -1;
    for (std::size_t k = 0; k < support.size(); ++k) {
        const int i = support[k];
        if (i <= prev || i >= p.n_vars())
            throw std::invalid_argument(
                "support must be strictly increasing indices in [0, n)");
        var_of[i] = static_cast<int>(k);
        prev = i;
    }

    Polynomial out(static_cast<int>(support.size()));
    for (const auto& [e, c] : p.terms()) {
        Exponents re(support.size(), 0);
        bool vanishes = false;
        for (int v = 0; v < p.n_vars(); ++v) {
            if (e[v] == 0) continue;
            if (var_of[v] < 0) {
                vanishes = true;  // substituting 0 kills the term
                break;
            }
            re[var_of[v]] = e[v];
        }
        if (!vanishes) out.add_term(re, c);
    }
    return out;
}

Polynomial eliminate_last(const Polynomial& p) {
    const int n = p.n_vars();
    if (n < 2)
        throw std::invalid_argument(
            "eliminate_last needs at least two variables");
    const int m = n - 1;

    // Powers of 1 - (x_1 + ... + x_{n-1}) in the reduced variables.
    std::uint32_t max_last = 0;
    for (const auto& [e, c] : p.terms()) max_last = std::max(max_last, e[m]);
    Polynomial lin(m, {{Exponents(m, 0), 1.0}});
    for (int v = 0; v < m; ++v) {
        Exponents e(m, 0);
        e[v] = 1;
        lin.add_term(e, -1.0);
    }
    std::vector<Polynomial> lin_pow;
    lin_pow.emplace_back(m, std::initializer_list<std::pair<Exponents, double>>{
                                {Exponents(m, 0), 1.0}});
    for (std::uint32_t k = 1; k <= max_last; ++k) {
        Polynomial next(m);
        for (const auto& [e, c] : lin_pow.back().terms())
            add_shifted(next, lin, e, c);
        lin_pow.push_back(std::move(next));
    }

    Polynomial out(m);
    for (const auto& [e, c] : p.terms()) {
        Exponents head(e.begin(), e.end() - 1);
        add_shifted(out, lin_pow[e[m]], head, c);
    }
    return out;
}

double coeff_l1(const Polynomial& p) {
    double s = 0.0;
    for (const auto& [e, c] : p.terms()) s += std::abs(c);
    return s;
}

std::pair<double, double> bernstein_range(const Polynomial& p) {
    if (!p.is_homogeneous() || p.is_zero() || p.degree() < 1)
        throw std::invalid_argument(
            "bernstein_range requires a nonzero homogeneous polynomial of "
            "degree >= 1");
    const int d = p.degree();
    const double d_fact = static_cast<double>(factorial_u64(d));

    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        double alpha_fact = 1.0;
        for (auto a : e) alpha_fact *= static_cast<double>(factorial_u64(a));
        const double b = c * (alpha_fact / d_fact);
        if (first) {
            lo = hi = b;
            first = false;
        } else {
            lo = std::min(lo, b);
            hi = std::max(hi, b);
        }
    }
    // Monomials of total degree d that are not stored have coefficient 0 and
    // still belong to the basis the extrema range over.
    const std::uint64_t basis_size =
        binomial_u64(static_cast<std::uint64_t>(p.n_vars()) + d - 1, d);
    if (p.term_count() < basis_size) {
        lo = std::min(lo, 0.0);
        hi = std::max(hi, 0.0);
    }
    return {lo, hi};
}

namespace {

double euler_sum(const Polynomial& p, std::span<const double> x, int k) {
    if (k == 0) return p(x);
    double acc = 0.0;
    for (int v = 0; v < p.n_vars(); ++v) {
        const Polynomial dp = derivative(p, v);
        if (dp.is_zero()) continue;
        acc += x[v] * euler_sum(dp, x, k - 1);
    }
    return acc;
}

}  // namespace

double euler_lhs(const Polynomial& p, std::span<const double> x, int k) {
    check_dimension(p, x);
    if (!p.is_homogeneous())
        throw std::invalid_argument("euler_lhs requires a homogeneous polynomial");
    if (k < 1 || k > p.degree())
        throw std::invalid_argument("euler_lhs order k must satisfy 1 <= k <= d");
    return euler_sum(p, x, k);
}

std::string to_text(const Polynomial& p) {
    std::ostringstream os;
    os << "n " << p.n_vars() << "\n";
    char buf[64];
    for (const auto& [e, c] : p.terms()) {
        std::snprintf(buf, sizeof buf, "%.17g", c);
        os << buf;
        for (auto a : e) os << ' ' << a;
        os << "\n";
    }
    return os.str();
}

Polynomial parse_polynomial(std::istream& in) {
    std::string line;
    int n_vars = -1;
    Polynomial p;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n_vars < 0) {
            std::string tag;
            ls >> tag >> n_vars;
            if (tag != "n" || ls.fail() || n_vars < 1)
                throw std::runtime_error(
                    "polynomial text: expected 'n <n_vars>' at line " +
                    std::to_string(lineno));
            p = Polynomial(n_vars);
            continue;
        }
        double c;
        ls >> c;
        Exponents e(n_vars, 0);
        for (int v = 0; v < n_vars; ++v) ls >> e[v];
        if (ls.fail())
            throw std::runtime_error("polynomial text: malformed term at line " +
                                     std::to_string(lineno));
        p.add_term(e, c);
    }
    if (n_vars < 0)
        throw std::runtime_error("polynomial text: missing 'n <n_vars>' header");
    return p;
}

Polynomial parse_polynomial(const std::string& text) {
    std::istringstream is(text);
    return parse_polynomial(is);
}

}  // namespace simplexopt
