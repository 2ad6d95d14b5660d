#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "twinlcs/rng.hpp"
#include "twinlcs/types.hpp"

namespace twinlcs {

/// Terms of the exponent bounding (1/n) log Pr[LT(w) >= alpha n] for w
/// uniform in [k]^n. Natural logarithms.
struct ThetaBreakdown {
    long double entropy = 0;    ///< (1-2a) log(1/(1-2a)), 0 at a = 1/2
    long double alpha_term = 0; ///< -a log(a^2 k)
    long double pairing = 0;    ///< -2a log(2/(1+sqrt(1-1/k)))
    long double zeros = 0;      ///< (1-2a) log(1-1/k)
    long double total = 0;
};

/// Requires k >= 2 and 1/k <= alpha <= 1/2 (invalid_argument otherwise).
ThetaBreakdown theta_expression(long double alpha, std::uint64_t k);

/// Smallest alpha in [1/k, 1/2] with negative theta, located by scanning
/// at `scan_step` and bisecting the first + to - transition down to `tol`.
/// The returned point is the negative end of the final bracket.
std::optional<double> alpha_threshold(std::uint64_t k, double tol = 1e-12, double scan_step = 1e-3);

BigInt binomial(std::uint64_t n, std::uint64_t r);

/// binom(n-z, 2m) binom(m, p)^2: role words with m ones, m twos, p
/// occurrences of 2 0* 1 and at least z leading zeros. 0 out of range.
BigInt role_count(std::uint64_t n, std::uint64_t m, std::uint64_t p, std::uint64_t z);
/// Same classes with exactly z leading zeros.
BigInt role_count_exact(std::uint64_t n, std::uint64_t m, std::uint64_t p, std::uint64_t z);

/// (1/k)^m (1-1/k)^{p+n-2m-z}: probability that a uniform word carries a
/// regular pair with a fixed monotone role word of these statistics.
Rational role_prob(std::uint64_t k, std::uint64_t n, std::uint64_t m, std::uint64_t p, std::uint64_t z);

/// Sum over p, z of role_count * role_prob. Bounds Pr[LT(w) >= m] from above.
Rational union_bound(std::uint64_t k, std::uint64_t n, std::uint64_t m);

/// Largest (p, z) term of the union bound. z = 0 and p is the better of the
/// two integers around m / (1 + (1-1/k)^{-1/2}).
struct DominantTerm {
    std::uint64_t p = 0;
    std::uint64_t z = 0;
    Rational value;
};
DominantTerm union_dominant_term(std::uint64_t k, std::uint64_t n, std::uint64_t m);

struct LowerBoundValues {
    std::uint64_t k = 0;
    double trivial = 0;              ///< 1/k
    std::optional<double> improved;  ///< 1.02/k, k >= 3
    double slope = 0;                ///< 3^{-4/3} k^{-2/3}
    double offset = 0;               ///< 3^{-1/3} k^{1/3}
    double minmax_closed = 0;        ///< (4 - sqrt 11)/2
    double minmax_numeric = 0;       ///< min over [0,1] of max(1/3 + x^2/12, 1/2 - x/2)
    double minmax_argmin = 0;
    bool minmax_beats_improved = false; ///< (4 - sqrt 11)/2 > 1.02/3
};
LowerBoundValues lower_bound_values(std::uint64_t k);

struct AsymptoticUpper {
    double app_form = 0;  ///< e/sqrt k - e^2/k
    double refined_form = 0; ///< e/sqrt k - (e^2 + 1/2)/k
};
AsymptoticUpper asymptotic_upper(std::uint64_t k);

/// s x s table, indexed [x][y] with 0-based coordinates.
using MonotoneTable = std::vector<std::vector<std::int64_t>>;

/// Nondecreasing in each coordinate and strictly increasing when both grow.
bool is_strongly_monotone(const MonotoneTable& f);

/// Number of distinct (f1(x,y), f2(x,z), f3(y,z)) over [s]^3. Throws
/// invalid_argument naming the violating cells when a table is not
/// strongly monotone or the shapes disagree.
std::size_t monotone_image(const MonotoneTable& f1, const MonotoneTable& f2, const MonotoneTable& f3);

/// Random strongly monotone table: each cell is the least admissible value
/// given its left, lower and diagonal neighbours plus a draw from [0, spread].
MonotoneTable random_strongly_monotone(std::size_t s, CounterRng& rng, std::uint64_t spread = 2);

} // namespace twinlcs
