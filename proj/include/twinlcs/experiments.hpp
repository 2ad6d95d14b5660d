#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "twinlcs/rng.hpp"
#include "twinlcs/twins.hpp"
#include "twinlcs/types.hpp"

namespace twinlcs {

struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000;
    /// Enumerate every word when k^n is at most this.
    std::uint64_t exhaustive_limit = 1u << 16;
    /// Normal quantile of the Wilson interval.
    double z = 1.96;
    TwinSearchOptions search = {};
};

struct Interval {
    double lo = 0;
    double hi = 1;
};

/// Wilson score interval for hits out of trials (trials > 0).
Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = 1.96);

struct TailEstimate {
    std::size_t k = 0;
    std::size_t n = 0;
    double alpha = 0;
    std::size_t m = 0; ///< ceil(alpha n)
    bool exhaustive = false;
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double fraction = 0;
    Interval interval;
    /// hits / k^n in exhaustive mode.
    std::optional<Rational> exact;
};

/// Pr[LT(w) >= ceil(alpha n)] for w uniform in [k]^n. Trial i of a Monte
/// Carlo run uses sample_word(k, n, seed, i).
TailEstimate estimate_lt_tail(std::size_t k, std::size_t n, double alpha, const ExperimentConfig& config = {});

/// All permutations of 1..k in lexicographic order with their pairwise LCS.
struct LcsTable {
    std::size_t k = 0;
    std::vector<Word> perms;
    std::vector<std::uint32_t> lcs; ///< row-major perms.size()^2

    std::uint32_t at(std::size_t i, std::size_t j) const { return lcs[i * perms.size() + j]; }
};

/// Throws `ResourceLimitError` when k > max_k.
LcsTable build_lcs_table(std::size_t k, std::size_t max_k = 6);

struct PermutationDistribution {
    std::size_t k = 0;
    std::vector<Word> perms;
    std::vector<double> weights;
};

/// Throws `std::invalid_argument` unless the weights are non-negative and
/// sum to 1 within 1e-12, and every support element is a permutation of 1..k.
void validate(const PermutationDistribution& dist);

/// sum_{s,t} p_s p_t LCS(s, t).
double expected_lcs(const PermutationDistribution& dist);
/// Same quadratic form over the full table.
double expected_lcs(const LcsTable& table, const std::vector<double>& weights);

struct ConjectureConfig {
    std::uint64_t seed = 1;
    /// Random starts after the uniform one.
    std::size_t starts = 100;
    std::size_t max_iterations = 100000;
    std::size_t max_k = 6;
};

struct ConjectureResult {
    std::size_t k = 0;
    double value = 0;      ///< best local minimum found
    double uniform = 0;    ///< expected LCS under the uniform distribution
    double sqrt_k = 0;
    /// Largest gradient spread over the support at the reported point; 0 at a
    /// KKT point.
    double kkt_gap = 0;
    std::size_t best_start = 0; ///< 0 is the uniform start
    std::size_t starts_run = 0;
    PermutationDistribution distribution; ///< support of the best point
    bool counterexample() const { return value < sqrt_k - 1e-9; }
};

/// Local search for the minimum of E[LCS(pi_1, pi_2)] over distributions on
/// the k! permutations: from each start, repeatedly move mass between the
/// pair of coordinates with the largest gradient difference using an exact
/// line search. Reports local minima only.
ConjectureResult minimize_expected_lcs(std::size_t k, const ConjectureConfig& config = {});

/// Random monotone twins: a uniform word of length n over [k] with roles
/// assigned by a random first-in first-out pass.
TwinCertificate random_monotone_certificate(std::size_t k, std::size_t n, CounterRng& rng);

} // namespace twinlcs
