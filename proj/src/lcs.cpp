#include "twinlcs/lcs.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace twinlcs {

namespace {

using PositionIndex = std::unordered_map<Letter, std::vector<std::size_t>>;

PositionIndex index_positions(const Word& w)
{
    PositionIndex idx;
    for (std::size_t j = 0; j < w.size(); ++j)
        idx[w[j]].push_back(j);
    return idx;
}

/// First position >= from holding `letter`, or npos.
std::size_t next_occurrence(const PositionIndex& idx, Letter letter, std::size_t from)
{
    auto it = idx.find(letter);
    if (it == idx.end())
        return std::numeric_limits<std::size_t>::max();
    auto pos = std::lower_bound(it->second.begin(), it->second.end(), from);
    return pos == it->second.end() ? std::numeric_limits<std::size_t>::max() : *pos;
}

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::uint64_t cell_count(std::span<const Word> words)
{
    std::uint64_t cells = 1;
    for (const Word& w : words) {
        const std::uint64_t dim = w.size() + 1;
        if (cells > std::numeric_limits<std::uint64_t>::max() / dim)
            return std::numeric_limits<std::uint64_t>::max();
        cells *= dim;
    }
    return cells;
}

void check_budget(std::uint64_t cells, const LcsOptions& options)
{
    if (cells > options.budget_cells)
        throw ResourceLimitError("LCS alignment needs " + std::to_string(cells) + " cells, budget is " +
                                 std::to_string(options.budget_cells) + "; subsample the words or raise the budget");
}

bool letters_distinct(const Word& w)
{
    std::vector<Letter> sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool all_distinct(std::span<const Word> words)
{
    return std::all_of(words.begin(), words.end(), letters_distinct);
}

// Each letter occurs at most once per word, so a common subsequence is a
// chain of letters whose position vectors increase in every coordinate.
LcsResult distinct_letter_lcs(std::span<const Word> words, bool want_witness)
{
    const std::size_t t_count = words.size();
    std::vector<std::unordered_map<Letter, std::size_t>> pos(t_count);
    for (std::size_t t = 0; t < t_count; ++t)
        for (std::size_t j = 0; j < words[t].size(); ++j)
            pos[t][words[t][j]] = j;

    // Common letters, in order of their position in the first word.
    std::vector<std::vector<std::size_t>> points;
    for (std::size_t j = 0; j < words[0].size(); ++j) {
        std::vector<std::size_t> p(t_count);
        bool common = true;
        for (std::size_t t = 0; t < t_count && common; ++t) {
            auto it = pos[t].find(words[0][j]);
            if (it == pos[t].end())
                common = false;
            else
                p[t] = it->second;
        }
        if (common)
            points.push_back(std::move(p));
    }

    const std::size_t n = points.size();
    auto dominates = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t t = 0; t < t_count; ++t)
            if (points[hi][t] <= points[lo][t])
                return false;
        return true;
    };
    // best[e] = longest chain starting at e.
    std::vector<std::size_t> best(n, 1);
    std::size_t length = 0;
    for (std::size_t e = n; e-- > 0;) {
        for (std::size_t f = e + 1; f < n; ++f)
            if (best[f] + 1 > best[e] && dominates(e, f))
                best[e] = best[f] + 1;
        length = std::max(length, best[e]);
    }

    LcsResult result;
    result.length = length;
    result.positions.assign(t_count, {});
    if (!want_witness)
        return result;
    std::size_t remaining = length;
    std::size_t prev = npos;
    for (std::size_t e = 0; e < n && remaining > 0; ++e) {
        if (best[e] != remaining || (prev != npos && !dominates(prev, e)))
            continue;
        for (std::size_t t = 0; t < t_count; ++t)
            result.positions[t].push_back(points[e][t]);
        prev = e;
        --remaining;
    }
    return result;
}

template <typename Cell>
LcsResult table_lcs(std::span<const Word> words)
{
    const std::size_t t_count = words.size();
    std::vector<std::size_t> dims(t_count), stride(t_count);
    for (std::size_t t = 0; t < t_count; ++t)
        dims[t] = words[t].size() + 1;
    std::size_t total = 1;
    for (std::size_t t = t_count; t-- > 0;) {
        stride[t] = total;
        total *= dims[t];
    }
    std::size_t diag = 0;
    for (std::size_t s : stride)
        diag += s;

    // Suffix table: S[i_1..i_T] = LCS of the suffixes starting at i_t.
    std::vector<Cell> table(total, 0);
    std::vector<std::size_t> idx(t_count);
    for (std::size_t t = 0; t < t_count; ++t)
        idx[t] = dims[t] - 1;
    for (std::size_t cell = total; cell-- > 0;) {
        bool boundary = false;
        bool equal = true;
        for (std::size_t t = 0; t < t_count; ++t) {
            if (idx[t] == dims[t] - 1) {
                boundary = true;
                break;
            }
            if (words[t][idx[t]] != words[0][idx[0]])
                equal = false;
        }
        if (!boundary) {
            if (equal) {
                table[cell] = static_cast<Cell>(table[cell + diag] + 1);
            } else {
                Cell best = 0;
                for (std::size_t t = 0; t < t_count; ++t)
                    best = std::max(best, table[cell + stride[t]]);
                table[cell] = best;
            }
        }
        // Odometer step towards lower linear indices.
        for (std::size_t t = t_count; t-- > 0;) {
            if (idx[t] > 0) {
                --idx[t];
                break;
            }
            idx[t] = dims[t] - 1;
        }
    }

    LcsResult result;
    result.length = table[0];
    result.positions.assign(t_count, {});
    std::vector<PositionIndex> occurrences;
    occurrences.reserve(t_count);
    for (const Word& w : words)
        occurrences.push_back(index_positions(w));

    std::vector<std::size_t> cur(t_count, 0);
    std::size_t remaining = result.length;
    std::vector<std::size_t> next(t_count);
    while (remaining > 0) {
        bool advanced = false;
        for (std::size_t i = cur[0]; i < words[0].size() && !advanced; ++i) {
            const Letter x = words[0][i];
            next[0] = i;
            bool present = true;
            for (std::size_t t = 1; t < t_count && present; ++t) {
                next[t] = next_occurrence(occurrences[t], x, cur[t]);
                present = next[t] != npos;
            }
            if (!present)
                continue;
            std::size_t after = 0;
            for (std::size_t t = 0; t < t_count; ++t)
                after += (next[t] + 1) * stride[t];
            if (static_cast<std::size_t>(table[after]) + 1 == remaining) {
                for (std::size_t t = 0; t < t_count; ++t) {
                    result.positions[t].push_back(next[t]);
                    cur[t] = next[t] + 1;
                }
                --remaining;
                advanced = true;
            }
        }
        if (!advanced)
            throw std::logic_error("LCS witness recovery lost the optimum");
    }
    return result;
}

std::size_t rolling_table_length(std::span<const Word> words)
{
    const std::size_t t_count = words.size();
    std::vector<std::size_t> dims(t_count), stride(t_count);
    for (std::size_t t = 0; t < t_count; ++t)
        dims[t] = words[t].size() + 1;
    std::size_t slab = 1;
    for (std::size_t t = t_count; t-- > 1;) {
        stride[t] = slab;
        slab *= dims[t];
    }
    std::size_t diag = 0;
    for (std::size_t t = 1; t < t_count; ++t)
        diag += stride[t];

    std::vector<std::uint32_t> next(slab, 0), cur(slab, 0);
    std::vector<std::size_t> idx(t_count);
    for (std::size_t i0 = words[0].size(); i0-- > 0;) {
        const Letter x = words[0][i0];
        for (std::size_t t = 1; t < t_count; ++t)
            idx[t] = dims[t] - 1;
        for (std::size_t cell = slab; cell-- > 0;) {
            bool boundary = false;
            bool equal = true;
            for (std::size_t t = 1; t < t_count; ++t) {
                if (idx[t] == dims[t] - 1) {
                    boundary = true;
                    break;
                }
                if (words[t][idx[t]] != x)
                    equal = false;
            }
            if (boundary) {
                cur[cell] = 0;
            } else if (equal) {
                cur[cell] = next[cell + diag] + 1;
            } else {
                std::uint32_t best = next[cell];
                for (std::size_t t = 1; t < t_count; ++t)
                    best = std::max(best, cur[cell + stride[t]]);
                cur[cell] = best;
            }
            for (std::size_t t = t_count; t-- > 1;) {
                if (idx[t] > 0) {
                    --idx[t];
                    break;
                }
                idx[t] = dims[t] - 1;
            }
        }
        std::swap(cur, next);
    }
    return next[0];
}

} // namespace

std::size_t lcs_length(const Word& a, const Word& b)
{
    if (a.empty() || b.empty())
        return 0;
    const std::size_t m = b.size();
    const std::size_t blocks = (m + 63) / 64;

    std::unordered_map<Letter, std::size_t> slot;
    std::vector<std::uint64_t> masks;
    for (std::size_t j = 0; j < m; ++j) {
        auto [it, inserted] = slot.emplace(b[j], slot.size());
        if (inserted)
            masks.resize(masks.size() + blocks, 0);
        masks[it->second * blocks + j / 64] |= std::uint64_t{1} << (j % 64);
    }

    // Hyyrö's formulation: V <- (V + (V & M)) | (V & ~M); zero bits of V
    // count the matched columns.
    std::vector<std::uint64_t> v(blocks, ~std::uint64_t{0});
    for (Letter x : a) {
        auto it = slot.find(x);
        if (it == slot.end())
            continue;
        const std::uint64_t* mask = &masks[it->second * blocks];
        std::uint64_t carry = 0;
        for (std::size_t w = 0; w < blocks; ++w) {
            const std::uint64_t old = v[w];
            const std::uint64_t u = old & mask[w];
            const std::uint64_t s = old + u;
            const std::uint64_t c1 = s < old;
            const std::uint64_t s2 = s + carry;
            const std::uint64_t c2 = s2 < s;
            carry = c1 | c2;
            v[w] = s2 | (old & ~mask[w]);
        }
    }
    std::size_t ones = 0;
    for (std::size_t w = 0; w < blocks; ++w) {
        std::uint64_t word = v[w];
        if (w == blocks - 1 && m % 64 != 0)
            word &= (std::uint64_t{1} << (m % 64)) - 1;
        ones += static_cast<std::size_t>(std::popcount(word));
    }
    return m - ones;
}

std::size_t lcs_length_dp(const Word& a, const Word& b)
{
    std::vector<std::size_t> row(b.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t diag = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::size_t up = row[j + 1];
            row[j + 1] = a[i] == b[j] ? diag + 1 : std::max(up, row[j]);
            diag = up;
        }
    }
    return row[b.size()];
}

LcsResult lcs_pair(const Word& a, const Word& b, const LcsOptions& options)
{
    const Word pair[] = {a, b};
    return lcs_multi(pair, options);
}

ReversibleLcs lcs_reversible(const Word& a, const Word& b)
{
    ReversibleLcs r;
    r.lcs = lcs_length(a, b);
    r.lcs_reversed = lcs_length(a, b.reversed());
    r.max = std::max(r.lcs, r.lcs_reversed);
    return r;
}

LcsResult lcs_multi(std::span<const Word> words, const LcsOptions& options)
{
    if (words.empty())
        throw std::invalid_argument("lcs_multi: need at least one word");
    if (words.size() == 1) {
        LcsResult r;
        r.length = words[0].size();
        r.positions.emplace_back(words[0].size());
        for (std::size_t i = 0; i < words[0].size(); ++i)
            r.positions[0][i] = i;
        return r;
    }
    if (options.distinct_letter_path && all_distinct(words))
        return distinct_letter_lcs(words, true);
    check_budget(cell_count(words), options);
    std::size_t shortest = words[0].size();
    for (const Word& w : words)
        shortest = std::min(shortest, w.size());
    if (shortest < std::numeric_limits<std::uint16_t>::max())
        return table_lcs<std::uint16_t>(words);
    return table_lcs<std::uint32_t>(words);
}

std::size_t lcs_multi_length(std::span<const Word> words, const LcsOptions& options)
{
    if (words.empty())
        throw std::invalid_argument("lcs_multi_length: need at least one word");
    if (words.size() == 1)
        return words[0].size();
    if (words.size() == 2)
        return lcs_length(words[0], words[1]);
    if (options.distinct_letter_path && all_distinct(words))
        return distinct_letter_lcs(words, false).length;
    check_budget(cell_count(words), options);
    return rolling_table_length(words);
}

SetLcsStats set_lcs_stats(std::span<const Word> words, std::size_t tuple_size, const LcsOptions& options)
{
    if (tuple_size < 2 || tuple_size > words.size())
        throw std::invalid_argument("set_lcs_stats: need 2 <= T <= number of words");
    SetLcsStats stats;
    stats.tuple_size = tuple_size;
    const std::size_t n = words.size();
    stats.pairs.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        stats.pairs[i][i] = words[i].size();
        for (std::size_t j = i + 1; j < n; ++j)
            stats.pairs[i][j] = stats.pairs[j][i] = lcs_length(words[i], words[j]);
    }

    std::vector<std::size_t> subset(tuple_size);
    for (std::size_t t = 0; t < tuple_size; ++t)
        subset[t] = t;
    bool first = true;
    std::vector<Word> chosen(tuple_size);
    while (true) {
        std::size_t value;
        if (tuple_size == 2) {
            value = stats.pairs[subset[0]][subset[1]];
        } else {
            for (std::size_t t = 0; t < tuple_size; ++t)
                chosen[t] = words[subset[t]];
            value = lcs_multi_length(chosen, options);
        }
        if (first || value > stats.lcs_tuple) {
            stats.lcs_tuple = value;
            stats.best_subset = subset;
            first = false;
        }
        // Next combination in lexicographic order.
        std::size_t t = tuple_size;
        while (t > 0 && subset[t - 1] == n - tuple_size + t - 1)
            --t;
        if (t == 0)
            break;
        ++subset[t - 1];
        for (std::size_t u = t; u < tuple_size; ++u)
            subset[u] = subset[u - 1] + 1;
    }
    return stats;
}

} // namespace twinlcs
