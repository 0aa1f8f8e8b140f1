#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace simplexopt {

/// Absolute-plus-relative tolerance used for floating-point equality checks
/// throughout the library.
inline constexpr double kEvalTol = 1e-9;

/// Tolerance on |sum(x) - 1| when a point is required to lie on the simplex.
inline constexpr double kSimplexSumTol = 1e-9;

/// A coordinate below this threshold counts as zero for support detection.
inline constexpr double kSupportTol = 1e-12;

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with real coefficients.
///
/// Terms are stored as a map from exponent vector to coefficient, keyed in
/// lexicographic order so iteration, serialization and the compiled kernel
/// form are all deterministic. Zero coefficients are never stored; the zero
/// polynomial has no terms and degree 0.
class Polynomial {
public:
    Polynomial() : n_vars_(1) {}
    explicit Polynomial(int n_vars);
    Polynomial(int n_vars,
               std::initializer_list<std::pair<Exponents, double>> terms);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, double>& terms() const { return terms_; }

    /// Max total degree over stored terms, 0 for the zero polynomial.
    int degree() const;

    /// True when every stored term has total degree == degree().
    bool is_homogeneous() const;

    /// Adds coeff * x^exps, merging with an existing term. Terms whose
    /// merged coefficient becomes zero are removed.
    void add_term(const Exponents& exps, double coeff);

    double coeff(const Exponents& exps) const;

    /// Evaluates at x with the 0^0 = 1 monomial convention. The term order
    /// and per-term multiplication order match the compiled evaluation
    /// kernels bit for bit.
    double operator()(std::span<const double> x) const;

private:
    int n_vars_;
    std::map<Exponents, double> terms_;
};

double eval(const Polynomial& p, std::span<const double> x);

/// Partial derivative with respect to variable `var` (0-based).
Polynomial derivative(const Polynomial& p, int var);

std::vector<double> gradient(const Polynomial& p, std::span<const double> x);

/// Dense symmetric Hessian, row-major n x n.
std::vector<double> hessian(const Polynomial& p, std::span<const double> x);

/// Multiplies each term by (x_1 + ... + x_n)^(d - |alpha|) so the result is
/// homogeneous of degree deg(p) and agrees with p everywhere on the simplex.
/// Requires p nonzero.
Polynomial homogenize(const Polynomial& p);

/// Substitutes 0 at every position outside `support` and renumbers the
/// surviving variables; the result has |support| variables. `support` must
/// be a nonempty, strictly increasing list of 0-based indices.
Polynomial restrict_to_support(const Polynomial& p,
                               std::span<const int> support);

/// Substitutes x_last = 1 - sum of the remaining variables and expands.
/// Requires at least two variables.
Polynomial eliminate_last(const Polynomial& p);

/// Sum of absolute coefficients over stored terms.
double coeff_l1(const Polynomial& p);

/// Min and max of f_alpha * alpha! / d! over the full degree-d monomial
/// basis of a homogeneous polynomial of degree d >= 1. Monomials absent
/// from the sparse representation contribute 0 to the candidate set.
std::pair<double, double> bernstein_range(const Polynomial& p);

/// k-th order derivative contraction sum_{i_1..i_k} d^k f(x) * x_{i_1}..x_{i_k},
/// computed recursively from partial derivatives (independently of the
/// closed form d!/(d-k)! * f(x) it is tested against). Requires p
/// homogeneous and 1 <= k <= deg(p).
double euler_lhs(const Polynomial& p, std::span<const double> x, int k);

/// Text format: comment lines start with '#', the first data line is
/// "n <n_vars>", then one term per line as "<coeff> <a1> ... <an>".
/// Coefficients are printed with 17 significant digits so the round trip
/// is exact.
std::string to_text(const Polynomial& p);
Polynomial parse_polynomial(std::istream& in);
Polynomial parse_polynomial(const std::string& text);

}  // namespace simplexopt
