#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twinlcs/word.hpp"

namespace twinlcs {

/// Roles of the letters of a word with respect to a pair of twins:
/// 0 = unused, 1 = in the first twin, 2 = in the second twin.
class RoleWord {
public:
    RoleWord() = default;
    /// Throws `std::invalid_argument` for values above 2.
    explicit RoleWord(std::vector<std::uint8_t> roles);
    /// Digit string over 0/1/2.
    static RoleWord parse(std::string_view digits);

    std::size_t size() const noexcept { return roles_.size(); }
    std::uint8_t operator[](std::size_t i) const { return roles_[i]; }
    const std::vector<std::uint8_t>& roles() const noexcept { return roles_; }
    std::size_t count(std::uint8_t role) const;

    /// As many 1s as 2s.
    bool balanced() const;
    /// Balanced and every prefix has at least as many 1s as 2s.
    bool monotone() const;

    std::string str() const;

    friend bool operator==(const RoleWord&, const RoleWord&) = default;
    friend auto operator<=>(const RoleWord& a, const RoleWord& b) { return a.roles_ <=> b.roles_; }

private:
    std::vector<std::uint8_t> roles_;
};

/// A pair of twins in `word`: the i-th 1 of the role word is paired with its
/// i-th 2. `first` and `second` list the (0-based) positions of the 1s and 2s.
struct TwinCertificate {
    Word word;
    RoleWord roles;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;

    std::size_t length() const noexcept { return first.size(); }
    /// The common subsequence spelled by both twins.
    Word twin() const;
    bool monotone() const { return roles.monotone(); }
};

/// Validates a role word against w. Throws `std::invalid_argument` when the
/// lengths differ; returns nullopt when the two subsequences differ.
std::optional<TwinCertificate> extract(const Word& w, const RoleWord& roles);

/// Certificate from explicit position lists (first[i] paired with
/// second[i], both increasing). Throws `std::invalid_argument` if invalid.
TwinCertificate certificate_from_positions(const Word& w, std::vector<std::size_t> first,
                                           std::vector<std::size_t> second);

inline const RoleWord& role_word(const TwinCertificate& cert) { return cert.roles; }

struct RoleStats {
    std::size_t m = 0; ///< twin length
    std::size_t p = 0; ///< occurrences of the pattern 2 0* 1
    std::size_t z = 0; ///< length of the all-zero prefix
};

/// Throws `std::invalid_argument` for an unbalanced role word.
RoleStats role_stats(const RoleWord& roles);

/// Rewrites every pair (p_i, p'_i) as (min, max). The result is checked;
/// a rewrite that fails to give disjoint twins raises `std::logic_error`.
TwinCertificate monotonize(const TwinCertificate& cert);

/// Conditions for a regular pair: no 2 0* 1 over the same letter (a), and no
/// nonzero 0* 0 over the same letter (b). Returns false for non-monotone input.
bool is_regular_pair(const TwinCertificate& cert);

/// First violated condition as (i, j), or nullopt when regular.
std::optional<std::pair<std::size_t, std::size_t>> regularity_violation(const TwinCertificate& cert);

struct TwinSearchOptions {
    std::size_t max_length = 40;
    std::uint64_t max_nodes = 200'000'000;
};

/// Swap loop only: repairs (a) by exchanging the roles and (b) by moving
/// the role onto the 0, until regular. Each step decreases the role word.
TwinCertificate regularize_local(const TwinCertificate& cert);

/// Lexicographically smallest role word among monotone twins of the
/// certificate's length. Starts from the swap loop and finishes with an exact
/// search; if that search runs out of nodes the swap-loop result is returned.
/// Throws `std::invalid_argument` for non-monotone input.
TwinCertificate regularize(const TwinCertificate& cert, const TwinSearchOptions& options = {.max_length = 64, .max_nodes = 2'000'000});

/// Lexicographically smallest monotone role word with exactly m pairs, or
/// nullopt if w has no twins of length m.
std::optional<TwinCertificate> lexmin_monotone_twins(const Word& w, std::size_t m, const TwinSearchOptions& options = {});

/// Longest twins; among all longest monotone twins the one with the
/// lexicographically smallest role word (which is therefore regular).
/// Throws `ResourceLimitError` past max_length or max_nodes.
TwinCertificate lt_exact(const Word& w, const TwinSearchOptions& options = {});

struct OracleOptions {
    /// Cap on (T + 1)^n role assignments; the default admits n = 14 for twins.
    std::uint64_t max_assignments = 4'782'969;
};

/// LT(w) by enumerating role words with prefix-consistency pruning.
std::size_t lt_oracle(const Word& w, const OracleOptions& options = {});

/// Longest T-tuplets: T disjoint subsequences equal as words. T = 1 gives len(w).
std::size_t lt_tuplets(const Word& w, std::size_t T, const OracleOptions& options = {});

/// Inside every maximal run of length L the roles 1212... give floor(L/2) pairs.
TwinCertificate twins_via_runs(const Word& w);

struct BlockTwins {
    TwinCertificate cert;
    /// Best pairwise LCS of the three subsequences of each full block.
    std::vector<std::size_t> block_lcs;
    std::size_t full_blocks = 0;
    /// (k/3)^{1/3}, the guaranteed value per full block.
    double per_block_floor = 0.0;
    bool meets_floor() const;
};

/// Blocks of 3k letters (the trailing partial block is dropped); in each
/// block copy j of a letter goes to subsequence j mod 3, keeping the first
/// 3 * floor(C_l / 3) copies, and the best of the three pairs becomes twins.
BlockTwins twins_via_blocks(const Word& w);

} // namespace twinlcs
