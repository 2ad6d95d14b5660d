#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "twinlcs/word.hpp"

namespace twinlcs {

struct LcsOptions {
    /// Upper bound on the number of alignment cells (product of len + 1)
    /// a table-based computation may touch.
    std::uint64_t budget_cells = 100'000'000;
    /// Words in which no letter repeats are aligned as a longest chain in the
    /// product of position orders instead of a full table.
    bool distinct_letter_path = true;
};

/// One longest common subsequence: `positions[t]` lists the (0-based,
/// strictly increasing) positions used in word t. Among all optimal
/// alignments it is the lexicographically smallest index vector.
struct LcsResult {
    std::size_t length = 0;
    std::vector<std::vector<std::size_t>> positions;
};

/// Bit-parallel LCS length, O(len(a) * len(b) / 64) time, linear memory.
std::size_t lcs_length(const Word& a, const Word& b);

/// Quadratic dynamic programme with a single rolling row.
std::size_t lcs_length_dp(const Word& a, const Word& b);

/// Length and leftmost witness. The suffix table is materialized, so the
/// cell budget applies.
LcsResult lcs_pair(const Word& a, const Word& b, const LcsOptions& options = {});

struct ReversibleLcs {
    std::size_t lcs = 0;
    std::size_t lcs_reversed = 0; ///< LCS(a, reverse b)
    std::size_t max = 0;
};

ReversibleLcs lcs_reversible(const Word& a, const Word& b);

/// Exact LCS of several words with witness. Throws `std::invalid_argument`
/// for an empty list and `ResourceLimitError` when the alignment table
/// exceeds the budget.
LcsResult lcs_multi(std::span<const Word> words, const LcsOptions& options = {});

/// Length only; keeps two slabs of the table instead of all of it.
std::size_t lcs_multi_length(std::span<const Word> words, const LcsOptions& options = {});

struct SetLcsStats {
    /// Symmetric; the diagonal holds the word lengths.
    std::vector<std::vector<std::size_t>> pairs;
    std::size_t tuple_size = 2;
    /// max over all subsets of `tuple_size` words of their common LCS.
    std::size_t lcs_tuple = 0;
    /// Indices of the first subset (in lexicographic order) attaining it.
    std::vector<std::size_t> best_subset;
};

/// Pairwise table plus LCS_T over every T-subset. Requires 2 <= T <= |words|.
SetLcsStats set_lcs_stats(std::span<const Word> words, std::size_t tuple_size, const LcsOptions& options = {});

} // namespace twinlcs
