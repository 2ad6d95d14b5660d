#include "twinlcs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

namespace twinlcs {

ThetaBreakdown theta_expression(long double alpha, std::uint64_t k)
{
    if (k < 2)
        throw std::invalid_argument("theta_expression: k must be at least 2");
    const long double kk = static_cast<long double>(k);
    if (!(alpha >= 1.0L / kk && alpha <= 0.5L))
        throw std::invalid_argument("theta_expression: alpha must lie in [1/k, 1/2]");
    const long double q = 1.0L - 1.0L / kk;
    const long double rest = 1.0L - 2.0L * alpha;
    ThetaBreakdown t;
    t.entropy = rest > 0 ? -rest * std::log(rest) : 0.0L;
    t.alpha_term = -alpha * std::log(alpha * alpha * kk);
    t.pairing = -2.0L * alpha * std::log(2.0L / (1.0L + std::sqrt(q)));
    t.zeros = rest * std::log(q);
    t.total = t.entropy + t.alpha_term + t.pairing + t.zeros;
    return t;
}

std::optional<double> alpha_threshold(std::uint64_t k, double tol, double scan_step)
{
    if (k < 2)
        throw std::invalid_argument("alpha_threshold: k must be at least 2");
    if (!(tol > 0) || !(scan_step > 0))
        throw std::invalid_argument("alpha_threshold: tol and step must be positive");
    const long double lo_end = 1.0L / static_cast<long double>(k);
    auto theta = [k](long double a) { return theta_expression(a, k).total; };

    if (theta(lo_end) < 0)
        return static_cast<double>(lo_end);
    long double prev = lo_end;
    for (std::size_t i = 1;; ++i) {
        long double a = std::min(0.5L, lo_end + static_cast<long double>(i) * scan_step);
        if (theta(a) < 0) {
            long double lo = prev, hi = a;
            while (hi - lo > tol) {
                long double mid = (lo + hi) / 2;
                if (theta(mid) < 0)
                    hi = mid;
                else
                    lo = mid;
            }
            return static_cast<double>(hi);
        }
        if (a >= 0.5L)
            return std::nullopt;
        prev = a;
    }
}

BigInt binomial(std::uint64_t n, std::uint64_t r)
{
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    BigInt c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        c *= n - r + i;
        c /= i;
    }
    return c;
}

BigInt role_count(std::uint64_t n, std::uint64_t m, std::uint64_t p, std::uint64_t z)
{
    if (z > n || p > m || 2 * m > n - z)
        return 0;
    BigInt c = binomial(m, p);
    return binomial(n - z, 2 * m) * c * c;
}

BigInt role_count_exact(std::uint64_t n, std::uint64_t m, std::uint64_t p, std::uint64_t z)
{
    return role_count(n, m, p, z) - role_count(n, m, p, z + 1);
}

namespace {

BigInt power(std::uint64_t base, std::uint64_t e)
{
    BigInt b = base;
    return boost::multiprecision::pow(b, static_cast<unsigned>(e));
}

void check_range(std::uint64_t k, std::uint64_t n, std::uint64_t m, std::uint64_t p, std::uint64_t z, const char* who)
{
    if (k == 0 || p > m || 2 * m > n || z > n - 2 * m)
        throw std::invalid_argument(std::string(who) + ": parameters out of range");
}

} // namespace

Rational role_prob(std::uint64_t k, std::uint64_t n, std::uint64_t m, std::uint64_t p, std::uint64_t z)
{
    check_range(k, n, m, p, z, "role_prob");
    const std::uint64_t red = p + n - 2 * m - z;
    return Rational(power(k - 1, red), power(k, m + red));
}

Rational union_bound(std::uint64_t k, std::uint64_t n, std::uint64_t m)
{
    if (k == 0)
        throw std::invalid_argument("union_bound: k must be positive");
    if (2 * m > n)
        return 0;
    // Over the common denominator k^n the sum factors into a p-part and a z-part.
    BigInt p_sum = 0;
    for (std::uint64_t p = 0; p <= m; ++p) {
        BigInt c = binomial(m, p);
        p_sum += c * c * power(k - 1, p) * power(k, m - p);
    }
    BigInt z_sum = 0;
    for (std::uint64_t z = 0; z <= n - 2 * m; ++z)
        z_sum += binomial(n - z, 2 * m) * power(k - 1, n - 2 * m - z) * power(k, z);
    return Rational(p_sum * z_sum, power(k, n));
}

DominantTerm union_dominant_term(std::uint64_t k, std::uint64_t n, std::uint64_t m)
{
    if (k < 2)
        throw std::invalid_argument("union_dominant_term: k must be at least 2");
    if (2 * m > n)
        throw std::invalid_argument("union_dominant_term: m exceeds n/2");
    const double q = 1.0 - 1.0 / static_cast<double>(k);
    const double centre = static_cast<double>(m) / (1.0 + 1.0 / std::sqrt(q));
    const auto below = static_cast<std::uint64_t>(std::floor(centre));
    DominantTerm best;
    bool first = true;
    for (std::uint64_t p : {below, below + 1}) {
        if (p > m)
            continue;
        Rational v = Rational(role_count(n, m, p, 0)) * role_prob(k, n, m, p, 0);
        if (first || v > best.value)
            best = {p, 0, v};
        first = false;
    }
    return best;
}

LowerBoundValues lower_bound_values(std::uint64_t k)
{
    if (k < 2)
        throw std::invalid_argument("lower_bound_values: k must be at least 2");
    const double kk = static_cast<double>(k);
    LowerBoundValues v;
    v.k = k;
    v.trivial = 1.0 / kk;
    if (k >= 3)
        v.improved = 1.02 / kk;
    v.slope = std::pow(3.0, -4.0 / 3.0) * std::pow(kk, -2.0 / 3.0);
    v.offset = std::pow(3.0, -1.0 / 3.0) * std::cbrt(kk);
    v.minmax_closed = (4.0 - std::sqrt(11.0)) / 2.0;

    auto f = [](double x) { return std::max(1.0 / 3.0 + x * x / 12.0, 0.5 - 0.5 * x); };
    constexpr int grid = 1000;
    int best = 0;
    for (int i = 1; i <= grid; ++i)
        if (f(double(i) / grid) < f(double(best) / grid))
            best = i;
    double a = double(std::max(best - 1, 0)) / grid;
    double b = double(std::min(best + 1, grid)) / grid;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-14) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    v.minmax_argmin = (a + b) / 2;
    v.minmax_numeric = f(v.minmax_argmin);
    v.minmax_beats_improved = v.minmax_closed > 1.02 / 3.0;
    return v;
}

AsymptoticUpper asymptotic_upper(std::uint64_t k)
{
    if (k < 2)
        throw std::invalid_argument("asymptotic_upper: k must be at least 2");
    const double kk = static_cast<double>(k);
    const double e = std::numbers::e;
    return {e / std::sqrt(kk) - e * e / kk, e / std::sqrt(kk) - (e * e + 0.5) / kk};
}

namespace {

std::optional<std::string> monotone_violation(const MonotoneTable& f)
{
    const std::size_t s = f.size();
    auto cell = [](std::size_t x, std::size_t y) {
        return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    };
    for (std::size_t x = 0; x < s; ++x) {
        if (f[x].size() != s)
            return "row " + std::to_string(x) + " has wrong length";
        for (std::size_t y = 0; y < s; ++y) {
            if (x + 1 < s && f[x + 1].size() == s && f[x][y] > f[x + 1][y])
                return cell(x, y) + " > " + cell(x + 1, y);
            if (y + 1 < s && f[x][y] > f[x][y + 1])
                return cell(x, y) + " > " + cell(x, y + 1);
            if (x + 1 < s && y + 1 < s && f[x + 1].size() == s && f[x][y] >= f[x + 1][y + 1])
                return cell(x, y) + " >= " + cell(x + 1, y + 1);
        }
    }
    return std::nullopt;
}

} // namespace

bool is_strongly_monotone(const MonotoneTable& f) { return !monotone_violation(f); }

std::size_t monotone_image(const MonotoneTable& f1, const MonotoneTable& f2, const MonotoneTable& f3)
{
    const std::size_t s = f1.size();
    if (f2.size() != s || f3.size() != s)
        throw std::invalid_argument("monotone_image: tables differ in size");
    const MonotoneTable* tables[] = {&f1, &f2, &f3};
    for (int i = 0; i < 3; ++i)
        if (auto bad = monotone_violation(*tables[i]))
            throw std::invalid_argument("monotone_image: f" + std::to_string(i + 1) + " not strongly monotone: " + *bad);

    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> image;
    image.reserve(s * s * s);
    for (std::size_t x = 0; x < s; ++x)
        for (std::size_t y = 0; y < s; ++y)
            for (std::size_t z = 0; z < s; ++z)
                image.emplace_back(f1[x][y], f2[x][z], f3[y][z]);
    std::sort(image.begin(), image.end());
    return static_cast<std::size_t>(std::unique(image.begin(), image.end()) - image.begin());
}

MonotoneTable random_strongly_monotone(std::size_t s, CounterRng& rng, std::uint64_t spread)
{
    MonotoneTable f(s, std::vector<std::int64_t>(s, 0));
    for (std::size_t x = 0; x < s; ++x)
        for (std::size_t y = 0; y < s; ++y) {
            std::int64_t v = 0;
            if (x > 0)
                v = std::max(v, f[x - 1][y]);
            if (y > 0)
                v = std::max(v, f[x][y - 1]);
            if (x > 0 && y > 0)
                v = std::max(v, f[x - 1][y - 1] + 1);
            f[x][y] = v + static_cast<std::int64_t>(rng.below(spread + 1));
        }
    return f;
}

} // namespace twinlcs
