#include "twinlcs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "twinlcs/lcs.hpp"

namespace twinlcs {

Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z)
{
    if (trials == 0 || hits > trials)
        throw std::invalid_argument("wilson_interval: need 0 <= hits <= trials, trials > 0");
    const double t = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / t;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double centre = (p + z2 / (2 * t)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / t + z2 / (4 * t * t)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

namespace {

std::size_t twin_target(double alpha, std::size_t n)
{
    if (!(alpha >= 0) || !std::isfinite(alpha))
        throw std::invalid_argument("estimate_lt_tail: alpha must be a non-negative number");
    const double x = alpha * static_cast<double>(n);
    return static_cast<std::size_t>(std::ceil(x - 1e-12 * std::max(1.0, x)));
}

// k^n, or nullopt past `limit`.
std::optional<std::uint64_t> bounded_power(std::size_t k, std::size_t n, std::uint64_t limit)
{
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (k != 0 && v > limit / k)
            return std::nullopt;
        v *= k;
    }
    if (v > limit)
        return std::nullopt;
    return v;
}

} // namespace

TailEstimate estimate_lt_tail(std::size_t k, std::size_t n, double alpha, const ExperimentConfig& config)
{
    if (k == 0)
        throw std::invalid_argument("estimate_lt_tail: k must be positive");
    TailEstimate est;
    est.k = k;
    est.n = n;
    est.alpha = alpha;
    est.m = twin_target(alpha, n);
    if (n > config.search.max_length)
        throw ResourceLimitError("estimate_lt_tail: n exceeds the exact search length limit");

    auto hit = [&](const Word& w) { return est.m == 0 || lt_exact(w, config.search).length() >= est.m; };

    if (auto total = bounded_power(k, n, config.exhaustive_limit)) {
        est.exhaustive = true;
        est.trials = *total;
        std::vector<Letter> letters(n, 1);
        for (std::uint64_t idx = 0; idx < *total; ++idx) {
            est.hits += hit(Word(letters, k));
            for (std::size_t i = n; i-- > 0;) {
                if (letters[i] < k) {
                    ++letters[i];
                    break;
                }
                letters[i] = 1;
            }
        }
        est.exact = Rational(est.hits, est.trials);
    } else {
        if (config.trials == 0)
            throw std::invalid_argument("estimate_lt_tail: trials must be positive");
        est.trials = config.trials;
        for (std::uint64_t t = 0; t < config.trials; ++t)
            est.hits += hit(sample_word(k, n, config.seed, t));
    }
    est.fraction = static_cast<double>(est.hits) / static_cast<double>(est.trials);
    est.interval = est.exhaustive ? Interval{est.fraction, est.fraction} : wilson_interval(est.hits, est.trials, config.z);
    return est;
}

LcsTable build_lcs_table(std::size_t k, std::size_t max_k)
{
    if (k == 0)
        throw std::invalid_argument("build_lcs_table: k must be positive");
    if (k > max_k)
        throw ResourceLimitError("build_lcs_table: k! permutations exceed the table limit");
    LcsTable table;
    table.k = k;
    std::vector<Letter> p(k);
    std::iota(p.begin(), p.end(), Letter{1});
    do
        table.perms.emplace_back(p, k);
    while (std::next_permutation(p.begin(), p.end()))
        ;
    const std::size_t N = table.perms.size();
    table.lcs.assign(N * N, 0);
    for (std::size_t i = 0; i < N; ++i) {
        table.lcs[i * N + i] = static_cast<std::uint32_t>(k);
        for (std::size_t j = i + 1; j < N; ++j) {
            auto v = static_cast<std::uint32_t>(lcs_length(table.perms[i], table.perms[j]));
            table.lcs[i * N + j] = table.lcs[j * N + i] = v;
        }
    }
    return table;
}

void validate(const PermutationDistribution& dist)
{
    if (dist.perms.size() != dist.weights.size())
        throw std::invalid_argument("distribution: support and weights differ in size");
    double sum = 0;
    for (double w : dist.weights) {
        if (!(w >= 0))
            throw std::invalid_argument("distribution: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("distribution: weights do not sum to 1");
    for (const Word& p : dist.perms) {
        std::vector<Letter> sorted(p.begin(), p.end());
        std::sort(sorted.begin(), sorted.end());
        bool ok = sorted.size() == dist.k;
        for (std::size_t i = 0; ok && i < sorted.size(); ++i)
            ok = sorted[i] == i + 1;
        if (!ok)
            throw std::invalid_argument("distribution: support element is not a permutation of 1..k");
    }
}

double expected_lcs(const PermutationDistribution& dist)
{
    validate(dist);
    double e = 0;
    for (std::size_t i = 0; i < dist.perms.size(); ++i) {
        e += dist.weights[i] * dist.weights[i] * static_cast<double>(dist.k);
        for (std::size_t j = i + 1; j < dist.perms.size(); ++j)
            e += 2 * dist.weights[i] * dist.weights[j] * static_cast<double>(lcs_length(dist.perms[i], dist.perms[j]));
    }
    return e;
}

double expected_lcs(const LcsTable& table, const std::vector<double>& weights)
{
    const std::size_t N = table.perms.size();
    if (weights.size() != N)
        throw std::invalid_argument("expected_lcs: weight vector does not match the table");
    double e = 0;
    for (std::size_t i = 0; i < N; ++i) {
        if (weights[i] == 0)
            continue;
        double row = 0;
        for (std::size_t j = 0; j < N; ++j)
            row += table.at(i, j) * weights[j];
        e += weights[i] * row;
    }
    return e;
}

namespace {

struct Descent {
    std::vector<double> w;
    double value = 0;
    double gap = 0;
};

std::vector<double> times_table(const LcsTable& t, const std::vector<double>& w)
{
    const std::size_t N = w.size();
    std::vector<double> h(N, 0.0);
    for (std::size_t j = 0; j < N; ++j)
        if (w[j] != 0)
            for (std::size_t i = 0; i < N; ++i)
                h[i] += t.at(i, j) * w[j];
    return h;
}

// h = A w; gradient is 2h.
double kkt_gap(const std::vector<double>& w, const std::vector<double>& h)
{
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 0)
            hi = std::max(hi, h[i]);
        lo = std::min(lo, h[i]);
    }
    return 2 * std::max(0.0, hi - lo);
}

Descent descend(const LcsTable& t, std::vector<double> w, std::size_t max_iterations)
{
    const std::size_t N = w.size();
    std::vector<double> h = times_table(t, w);
    for (std::size_t it = 0; it < max_iterations; ++it) {
        std::size_t i = N, j = 0;
        for (std::size_t a = 0; a < N; ++a) {
            if (w[a] > 0 && (i == N || h[a] > h[i]))
                i = a;
            if (h[a] < h[j])
                j = a;
        }
        if (i == N || h[i] - h[j] <= 1e-13)
            break;
        const double curvature = 2.0 * static_cast<double>(t.k) - 2.0 * t.at(i, j);
        double step = (h[i] - h[j]) / curvature;
        if (step >= w[i]) {
            step = w[i];
            w[i] = 0;
        } else {
            w[i] -= step;
        }
        w[j] += step;
        for (std::size_t a = 0; a < N; ++a)
            h[a] += step * (static_cast<double>(t.at(a, j)) - static_cast<double>(t.at(a, i)));
    }
    Descent d;
    h = times_table(t, w);
    d.value = 0;
    for (std::size_t a = 0; a < N; ++a)
        d.value += w[a] * h[a];
    d.gap = kkt_gap(w, h);
    d.w = std::move(w);
    return d;
}

std::vector<double> random_start(std::size_t N, std::size_t k, CounterRng& rng, bool sparse)
{
    std::vector<double> w(N, 0.0);
    std::vector<std::size_t> idx(N);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::size_t support = N;
    if (sparse) {
        support = 1 + rng.below(std::min<std::size_t>(N, 2 * k));
        for (std::size_t a = 0; a < support; ++a)
            std::swap(idx[a], idx[a + rng.below(N - a)]);
    }
    double sum = 0;
    for (std::size_t a = 0; a < support; ++a) {
        double e = -std::log(1.0 - rng.uniform01());
        w[idx[a]] = e;
        sum += e;
    }
    for (double& x : w)
        x /= sum;
    return w;
}

} // namespace

ConjectureResult minimize_expected_lcs(std::size_t k, const ConjectureConfig& config)
{
    const LcsTable table = build_lcs_table(k, config.max_k);
    const std::size_t N = table.perms.size();

    ConjectureResult res;
    res.k = k;
    res.sqrt_k = std::sqrt(static_cast<double>(k));
    const std::vector<double> uniform(N, 1.0 / static_cast<double>(N));
    res.uniform = expected_lcs(table, uniform);

    std::vector<double> best_w = uniform;
    res.value = res.uniform;
    res.kkt_gap = kkt_gap(uniform, times_table(table, uniform));
    res.best_start = 0;

    for (std::size_t s = 0; s <= config.starts; ++s) {
        std::vector<double> start;
        if (s == 0) {
            start = uniform;
        } else {
            CounterRng rng(config.seed, s);
            start = random_start(N, k, rng, s % 2 == 0);
        }
        Descent d = descend(table, std::move(start), config.max_iterations);
        ++res.starts_run;
        if (d.value < res.value) {
            res.value = d.value;
            res.kkt_gap = d.gap;
            res.best_start = s;
            best_w = std::move(d.w);
        }
    }

    res.distribution.k = k;
    double sum = 0;
    for (std::size_t a = 0; a < N; ++a)
        if (best_w[a] > 0) {
            res.distribution.perms.push_back(table.perms[a]);
            res.distribution.weights.push_back(best_w[a]);
            sum += best_w[a];
        }
    for (double& x : res.distribution.weights)
        x /= sum;
    return res;
}

TwinCertificate random_monotone_certificate(std::size_t k, std::size_t n, CounterRng& rng)
{
    std::vector<Letter> letters(n);
    for (auto& a : letters)
        a = static_cast<Letter>(1 + rng.below(k));
    const Word v(letters, k);
    std::vector<std::uint8_t> roles(n, 0);
    std::vector<Letter> queue;
    std::size_t head = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = rng.below(3);
        if (c == 2 && head < queue.size() && queue[head] == v[i]) {
            roles[i] = 2;
            ++head;
        } else if (c >= 1) {
            roles[i] = 1;
            queue.push_back(v[i]);
        }
    }
    std::size_t unmatched = queue.size() - head;
    for (std::size_t i = n; i-- > 0 && unmatched > 0;)
        if (roles[i] == 1) {
            roles[i] = 0;
            --unmatched;
        }
    auto c = extract(v, RoleWord(std::move(roles)));
    if (!c)
        throw std::logic_error("random_monotone_certificate: inconsistent roles");
    return *c;
}

} // namespace twinlcs
