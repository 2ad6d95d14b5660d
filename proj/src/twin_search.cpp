// Exact longest twins by depth-first search over role words.
//
// A monotone pair is read left to right as a FIFO queue: a 1 pushes its
// letter, a 2 must match and pop the front. Children are tried in the order
// 0, 1, 2, so the first complete assignment found for a fixed number of
// pairs is the lexicographically smallest role word with that many pairs.

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>

#include "twinlcs/twins.hpp"

namespace twinlcs {

namespace {

class TwinSolver {
public:
    TwinSolver(const Word& w, std::uint64_t max_nodes) : n_(w.size()), max_nodes_(max_nodes)
    {
        std::unordered_map<Letter, std::uint32_t> dense;
        for (Letter l : w)
            dense.emplace(l, static_cast<std::uint32_t>(dense.size()));
        d_ = dense.size();
        letters_.reserve(n_);
        for (Letter l : w)
            letters_.push_back(dense.at(l));

        suffix_count_.assign((n_ + 1) * d_, 0);
        for (std::size_t i = n_; i-- > 0;) {
            std::copy_n(&suffix_count_[(i + 1) * d_], d_, &suffix_count_[i * d_]);
            ++suffix_count_[i * d_ + letters_[i]];
        }
        suffix_lt_.resize(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i)
            suffix_lt_[i] = (n_ - i) / 2;
        queue_count_.assign(d_, 0);
        roles_.assign(n_, 0);
    }

    /// Exact LT of the suffix starting at i, used as a bound from then on.
    void set_suffix_lt(std::size_t i, std::size_t value) { suffix_lt_[i] = value; }

    /// Lexicographically smallest monotone role word for the suffix starting
    /// at `start` with exactly `pairs` pairs (roles before `start` are 0).
    std::optional<std::vector<std::uint8_t>> solve(std::size_t start, std::size_t pairs)
    {
        queue_.clear();
        head_ = 0;
        std::fill(queue_count_.begin(), queue_count_.end(), 0);
        std::fill(roles_.begin(), roles_.end(), 0);
        if (!dfs(start, pairs))
            return std::nullopt;
        return roles_;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::size_t pending() const noexcept { return queue_.size() - head_; }

    /// Upper bound on the new pairs that can still be opened at position i
    /// with the current queue, or nullopt if the queue cannot be drained.
    std::optional<std::size_t> bound(std::size_t i) const
    {
        const std::uint32_t* suf = &suffix_count_[i * d_];
        std::size_t spare = 0;
        for (std::size_t a = 0; a < d_; ++a) {
            if (queue_count_[a] > suf[a])
                return std::nullopt;
            spare += (suf[a] - queue_count_[a]) / 2;
        }
        // The pending letters must appear in order in the suffix.
        std::size_t q = head_;
        for (std::size_t j = i; j < n_ && q < queue_.size(); ++j)
            if (letters_[j] == queue_[q])
                ++q;
        if (q < queue_.size())
            return std::nullopt;
        return std::min(spare, suffix_lt_[i]);
    }

    std::u32string key(std::size_t i) const
    {
        std::u32string k;
        k.reserve(pending() + 1);
        k.push_back(static_cast<char32_t>(i));
        for (std::size_t q = head_; q < queue_.size(); ++q)
            k.push_back(static_cast<char32_t>(queue_[q]));
        return k;
    }

    bool dfs(std::size_t i, std::size_t open)
    {
        if (i == n_)
            return open == 0 && pending() == 0;
        const auto ub = bound(i);
        if (!ub || *ub < open)
            return false;
        auto k = key(i);
        if (auto it = memo_.find(k); it != memo_.end() && it->second < static_cast<std::int64_t>(open))
            return false;
        if (++nodes_ > max_nodes_)
            throw ResourceLimitError("twin search exceeded " + std::to_string(max_nodes_) +
                                     " nodes; use twins_via_runs or twins_via_blocks for a lower bound");

        const std::uint32_t x = letters_[i];
        roles_[i] = 0;
        if (dfs(i + 1, open))
            return true;
        if (open > 0) {
            roles_[i] = 1;
            queue_.push_back(x);
            ++queue_count_[x];
            const bool ok = dfs(i + 1, open - 1);
            if (ok)
                return true;
            queue_.pop_back();
            --queue_count_[x];
        }
        if (pending() > 0 && queue_[head_] == x) {
            roles_[i] = 2;
            ++head_;
            --queue_count_[x];
            const bool ok = dfs(i + 1, open);
            if (ok)
                return true;
            --head_;
            ++queue_count_[x];
        }
        roles_[i] = 0;
        // At most open - 1 new pairs are reachable from this state (-1: the
        // queue cannot even be drained).
        const std::int64_t reachable = static_cast<std::int64_t>(open) - 1;
        auto [it, inserted] = memo_.emplace(std::move(k), reachable);
        if (!inserted)
            it->second = std::min(it->second, reachable);
        return false;
    }

    std::size_t n_;
    std::size_t d_ = 0;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint32_t> letters_;
    std::vector<std::uint32_t> suffix_count_;
    std::vector<std::size_t> suffix_lt_;
    std::vector<std::uint32_t> queue_;
    std::size_t head_ = 0;
    std::vector<std::uint32_t> queue_count_;
    std::vector<std::uint8_t> roles_;
    std::unordered_map<std::u32string, std::int64_t> memo_;
};

void check_length(const Word& w, const TwinSearchOptions& options)
{
    if (w.size() > options.max_length)
        throw ResourceLimitError("twin search is limited to words of length " + std::to_string(options.max_length) +
                                 " (got " + std::to_string(w.size()) +
                                 "); use twins_via_runs or twins_via_blocks for a lower bound");
}

TwinCertificate to_certificate(const Word& w, std::vector<std::uint8_t> roles)
{
    auto cert = extract(w, RoleWord(std::move(roles)));
    if (!cert)
        throw std::logic_error("twin search produced an invalid role word");
    return std::move(*cert);
}

} // namespace

std::optional<TwinCertificate> lexmin_monotone_twins(const Word& w, std::size_t m, const TwinSearchOptions& options)
{
    check_length(w, options);
    TwinSolver solver(w, options.max_nodes);
    auto roles = solver.solve(0, m);
    if (!roles)
        return std::nullopt;
    return to_certificate(w, std::move(*roles));
}

TwinCertificate lt_exact(const Word& w, const TwinSearchOptions& options)
{
    check_length(w, options);
    const std::size_t n = w.size();
    if (n < 2)
        return to_certificate(w, std::vector<std::uint8_t>(n, 0));

    // LT of each suffix is LT of the next suffix or one more; the values found
    // so far bound the search for the longer suffixes.
    TwinSolver solver(w, options.max_nodes);
    std::vector<std::size_t> lt(n + 1, 0);
    for (std::size_t i = n - 1; i-- > 1;) {
        lt[i] = solver.solve(i, lt[i + 1] + 1) ? lt[i + 1] + 1 : lt[i + 1];
        solver.set_suffix_lt(i, lt[i]);
    }
    if (auto roles = solver.solve(0, lt[1] + 1))
        return to_certificate(w, std::move(*roles));
    auto roles = solver.solve(0, lt[1]);
    if (!roles)
        throw std::logic_error("twin search lost a known solution");
    return to_certificate(w, std::move(*roles));
}

} // namespace twinlcs
